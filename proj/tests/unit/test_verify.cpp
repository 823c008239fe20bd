#include <doctest.h>

#include "singular/builders.hpp"
#include "singular/verify.hpp"

using namespace singular;

TEST_CASE("predictions") {
  CHECK(predict_chi(3, 5, 0, 0) == -4);
  CHECK(predict_chi(2, 0, 1, 0) == 5);
  CHECK(predict_chi(1, 0, 4, 1) == 7);
  CHECK(predict_genus(4, 3, 3) == 5);
  CHECK(predict_genus(1, 0, 1) == 1);
  try {
    predict_genus(0, 1, 3);
    FAIL("expected an error");
  } catch (const TopologyError& e) {
    CHECK(e.kind() == ErrorKind::CannotBeConnected);
  }
}

TEST_CASE("check_theorems on a smooth torus") {
  SingularizationReport r = check_theorems(SingularComplex(build_torus(4, 4)), PlanMetadata{1, 1, {}, {}});
  CHECK(r.chi_total == 0);
  CHECK(r.connected);
  CHECK(r.genus_formula == 1);
  CHECK(r.theorem1_ok);
  CHECK(r.theorem2_ok == true);
  CHECK_FALSE(r.lemma_checks.zip_equals_collapse.has_value());
  CHECK(r.all_ok());
}

TEST_CASE("check_theorems on two components") {
  SurfaceBundle two{{{"a", build_sphere(1), 0}, {"b", build_sphere(1), 0}}};
  DisjointUnion u = disjoint_union(two);
  SingularizationReport r = check_theorems(SingularComplex(u.complex), PlanMetadata{2, 0, {}, {}});
  CHECK_FALSE(r.connected);
  CHECK_FALSE(r.genus_formula.has_value());
  CHECK_FALSE(r.theorem2_ok.has_value());
  CHECK(r.components.size() == 2);
  CHECK(r.theorem1_ok);
}

TEST_CASE("check_theorems flags a wrong plan") {
  SingularizationReport r = check_theorems(SingularComplex(build_torus(4, 4)), PlanMetadata{1, 0, {}, {}});
  CHECK_FALSE(r.theorem1_ok);
  CHECK_FALSE(r.all_ok());
  CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("zip agrees with collapse") {
  CellComplex t = build_torus(4, 6);
  LoopMarking m = validate_simple_cycle(t, {VertexId(0), VertexId(1), VertexId(2), VertexId(3), VertexId(4), VertexId(5)});
  CHECK(zip_matches_collapse(SingularComplex(t), m, VertexId(1), VertexId(4)));
}

TEST_CASE("cycle enumeration") {
  // Octahedron: 4 triangles per pole pair plus the three 4-cycle equators.
  auto cycles = enumerate_nonsingular_cycles(build_sphere(0), 3, 1000);
  CHECK(cycles.size() == 8);
  auto up_to_4 = enumerate_nonsingular_cycles(build_sphere(0), 4, 1000);
  CHECK(up_to_4.size() == 8 + 15);
  for (const EdgeCycle& c : up_to_4) validate_simple_cycle(build_sphere(0), c.vertices, c.edges);
}

TEST_CASE("genus oracle small cases") {
  CHECK(genus_oracle(build_sphere(0), OracleOptions{6, 100000}) == 0);
  CHECK(genus_oracle(build_torus(3, 3), OracleOptions{3, 100000}) == 1);
  try {
    genus_oracle(build_torus(4, 4), OracleOptions{8, 10});
    FAIL("expected a timeout");
  } catch (const TopologyError& e) {
    CHECK(e.kind() == ErrorKind::OracleTimeout);
  }
}
