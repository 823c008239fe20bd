#include <doctest.h>

#include "naive_homology.hpp"
#include "singular/builders.hpp"
#include "singular/surgery.hpp"

using namespace singular;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const TopologyError& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::MalformedInput;
}

std::vector<VertexId> ids(std::initializer_list<int> list) {
  std::vector<VertexId> out;
  for (int v : list) out.emplace_back(v);
  return out;
}

std::vector<VertexId> row(int r, int n) {
  std::vector<VertexId> out;
  for (int j = 0; j < n; ++j) out.emplace_back(r * n + j);
  return out;
}

void same_as_naive(const CellComplex& c, long b0, long b1, long b2) {
  naive::Betti b = naive::betti(c);
  CHECK(b.b0 == b0);
  CHECK(b.b1 == b1);
  CHECK(b.b2 == b2);
  CHECK(betti_numbers(c) == HomologyProfile(b0, b1, b2));
  CHECK(euler_count(c) == b0 - b1 + b2);
}

bool tracked_matches_recomputed(const SingularComplex& s) {
  SingularSet fresh = singular_set(s);
  return fresh.vertices == s.singular_vertices() && fresh.edges == s.singular_edges();
}

}  // namespace

TEST_CASE("collapse: eight surface and pinched torus") {
  CellComplex s = build_sphere(1);
  LoopMarking eq = validate_simple_cycle(s, ids({2, 7, 3, 9, 4, 11, 5, 13}));
  SingularComplex eight = collapse(SingularComplex(s), eq);
  CHECK(euler_count(eight.carrier()) == 3);
  same_as_naive(eight.carrier(), 1, 0, 2);
  CHECK(eight.collapses() == 1);
  REQUIRE(eight.op_log().size() == 1);
  CHECK(eight.op_log()[0].delta_chi() == 1);

  SingularSet set = singular_set(eight);
  CHECK(set.cone_points.size() == 1);
  CHECK(set.edges.empty());
  CHECK(tracked_matches_recomputed(eight));

  CellComplex t = build_torus(4, 4);
  SingularComplex horn = collapse(SingularComplex(t), validate_simple_cycle(t, row(0, 4)));
  CHECK(euler_count(horn.carrier()) == 1);
  same_as_naive(horn.carrier(), 1, 1, 1);
}

TEST_CASE("collapse: two cobordant meridians") {
  CellComplex t = build_torus(4, 4);
  SingularComplex s(t);
  SingularComplex once = collapse(s, validate_simple_cycle(t, row(0, 4)));
  SingularComplex twice = collapse(once, validate_simple_cycle(t, row(2, 4)));
  same_as_naive(twice.carrier(), 1, 1, 2);
  const auto& log = twice.op_log();
  CHECK(log[0].after.beta1 - log[0].before.beta1 == -1);
  CHECK(log[1].after.beta2 - log[1].before.beta2 == 1);
}

TEST_CASE("collapse: three meridians") {
  CellComplex t = build_torus(6, 4);
  SingularComplex s(t);
  for (int r : {0, 2, 4}) s = collapse(s, validate_simple_cycle(t, row(r, 4)));
  same_as_naive(s.carrier(), 1, 1, 3);
}

TEST_CASE("collapse: separating loop on a genus-2 surface") {
  GenusChain g2 = build_genus_chain(2);
  SingularComplex s = collapse(SingularComplex(g2.complex), canonical_loop(g2, CanonicalKind::Separating, 1));
  const OperationRecord& op = s.op_log().front();
  CHECK(op.after.beta0 == op.before.beta0);
  CHECK(op.after.beta1 == op.before.beta1);
  CHECK(op.after.beta2 == op.before.beta2 + 1);
}

TEST_CASE("collapse refuses overlap") {
  CellComplex t = build_torus(4, 4);
  SingularComplex s = collapse(SingularComplex(t), validate_simple_cycle(t, row(0, 4)));
  LoopMarking tunnel = validate_simple_cycle(t, ids({0, 4, 8, 12}));
  CHECK(kind_of([&] { collapse(s, tunnel); }) == ErrorKind::Overlap);
}

TEST_CASE("zip") {
  CellComplex t = build_torus(4, 4);
  LoopMarking m = validate_simple_cycle(t, row(0, 4));
  SingularComplex z = zip(SingularComplex(t), m, VertexId(0), VertexId(2));
  CHECK(euler_count(z.carrier()) == 1);
  same_as_naive(z.carrier(), 1, 1, 1);
  CHECK(z.zips() == 1);
  SingularSet set = singular_set(z);
  CHECK(set.pinch_points.size() == 2);
  REQUIRE(set.double_curves.size() == 1);
  CHECK_FALSE(set.double_curves[0].closed);
  CHECK(set.edges.size() == 2);
  for (EdgeId e : set.edges) CHECK(z.carrier().incidence_count(e) == 4);
  CHECK(tracked_matches_recomputed(z));

  SingularComplex two = zip(z, validate_simple_cycle(t, row(2, 4)), VertexId(9), VertexId(11));
  CHECK(euler_count(two.carrier()) == 2);

  CHECK(kind_of([&] { zip(SingularComplex(t), m, VertexId(0), VertexId(0)); }) == ErrorKind::DegenerateArc);
  CHECK(kind_of([&] { zip(SingularComplex(t), m, VertexId(0), VertexId(1)); }) == ErrorKind::ArcMismatch);
  CHECK(kind_of([&] { zip(SingularComplex(t), m, VertexId(0), VertexId(5)); }) == ErrorKind::ArcMismatch);
}

TEST_CASE("identify") {
  SurfaceBundle two{{{"A", build_torus(4, 4), 1}, {"B", build_torus(4, 4), 1}}};
  DisjointUnion u = disjoint_union(two);
  LoopMarking a = validate_simple_cycle(u.complex, row(0, 4), "A");
  LoopMarking b = validate_simple_cycle(u.complex, ids({16, 17, 18, 19}), "B");
  for (bool reversed : {false, true}) {
    for (int offset = 0; offset < 4; ++offset) {
      SingularComplex glued = identify(SingularComplex(u.complex), a, b, offset, reversed);
      CHECK(euler_count(glued.carrier()) == 0);
      CHECK(component_count(glued.carrier()) == 1);
      CHECK(glued.op_log()[0].delta_chi() == 0);
      SingularSet set = singular_set(glued);
      CHECK(set.vertices.size() == 4);
      CHECK(set.edges.size() == 4);
      REQUIRE(set.double_curves.size() == 1);
      CHECK(set.double_curves[0].closed);
      CHECK(tracked_matches_recomputed(glued));
      naive::Betti nb = naive::betti(glued.carrier());
      CHECK(betti_numbers(glued.carrier()) == HomologyProfile(nb.b0, nb.b1, nb.b2));
    }
  }

  CellComplex t = build_torus(4, 4);
  SingularComplex cob = identify(SingularComplex(t), validate_simple_cycle(t, row(0, 4)),
                                 validate_simple_cycle(t, row(2, 4)), 0, false);
  CHECK(euler_count(cob.carrier()) == 0);

  LoopMarking r0 = validate_simple_cycle(t, row(0, 4));
  CHECK(kind_of([&] { identify(SingularComplex(t), r0, r0, 0, false); }) == ErrorKind::SelfIdentification);
  CellComplex wide = build_torus(4, 6);
  CHECK(kind_of([&] {
          identify(SingularComplex(wide), validate_simple_cycle(wide, row(0, 6)),
                   validate_simple_cycle(wide, ids({0, 6, 12, 18})), 0, false);
        }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([&] {
          identify(SingularComplex(t), r0, validate_simple_cycle(t, ids({0, 4, 8, 12})), 0, false);
        }) == ErrorKind::Overlap);
}

TEST_CASE("smooth torus has no singular set") {
  SingularSet set = singular_set(SingularComplex(build_torus(4, 4)));
  CHECK(set.vertices.empty());
  CHECK(set.edges.empty());
  CHECK(set.double_curves.empty());
}
