#include <doctest.h>

#include "singular/builders.hpp"
#include "singular/loops.hpp"

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

}  // namespace

TEST_CASE("simple cycle validation") {
  CellComplex t = build_torus(4, 4);
  LoopMarking m = validate_simple_cycle(t, ids({0, 1, 2, 3}), "T");
  CHECK(m.length() == 4);
  CHECK(m.surface == "T");
  CHECK(m.index_of(VertexId(2)) == 2);
  CHECK_FALSE(m.contains(VertexId(4)));
  for (std::size_t i = 0; i < 4; ++i) {
    const Edge& e = t.edge(m.edges[i]);
    bool joins = (e.tail == m.cycle[i] && e.head == m.cycle[(i + 1) % 4]) ||
                 (e.head == m.cycle[i] && e.tail == m.cycle[(i + 1) % 4]);
    CHECK(joins);
  }
  CHECK(kind_of([&] { validate_simple_cycle(t, ids({0, 1, 2, 1})); }) == ErrorKind::NotSimple);
  CHECK(kind_of([&] { validate_simple_cycle(t, ids({0, 2, 3})); }) == ErrorKind::NotACycle);
  CHECK(kind_of([&] { validate_simple_cycle(t, ids({0, 1})); }) == ErrorKind::NotACycle);
}

TEST_CASE("separating loops") {
  CellComplex s = build_sphere(1);
  CHECK(is_separating(s, validate_simple_cycle(s, ids({2, 7, 3, 9, 4, 11, 5, 13}))));
  CellComplex t = build_torus(4, 4);
  CHECK_FALSE(is_separating(t, validate_simple_cycle(t, ids({0, 1, 2, 3}))));
  GenusChain g2 = build_genus_chain(2);
  CHECK(is_separating(g2.complex, canonical_loop(g2, CanonicalKind::Separating, 1)));
}

TEST_CASE("pairwise disjointness") {
  SurfaceBundle two{{{"A", build_torus(4, 4), 1}, {"B", build_torus(4, 4), 1}}};
  GenusChain a{two.surfaces[0].complex, 1, 4, 4};
  LoopMarking ma = canonical_loop(a, CanonicalKind::Handle, 1, "A");
  LoopMarking mb = canonical_loop(a, CanonicalKind::Handle, 1, "B");
  CHECK(check_pairwise_disjoint({ma, mb}).ok());

  LoopMarking ta = canonical_loop(a, CanonicalKind::Tunnel, 1, "A");
  DisjointnessReport r = check_pairwise_disjoint({ma, ta});
  CHECK_FALSE(r.ok());
  REQUIRE(r.conflicts.size() == 1);
  CHECK(r.conflicts[0] == std::pair<std::size_t, std::size_t>{0, 1});

  CHECK(check_pairwise_disjoint({}).ok());
}

TEST_CASE("cobordance") {
  CellComplex t = build_torus(4, 4);
  LoopMarking r0 = validate_simple_cycle(t, ids({0, 1, 2, 3}));
  LoopMarking r2 = validate_simple_cycle(t, ids({8, 9, 10, 11}));
  CHECK(are_cobordant(t, r0, r2));

  GenusChain g2 = build_genus_chain(2);
  LoopMarking h1 = canonical_loop(g2, CanonicalKind::Handle, 1);
  LoopMarking h2 = canonical_loop(g2, CanonicalKind::Handle, 2);
  CHECK_FALSE(are_cobordant(g2.complex, h1, h2));
}

TEST_CASE("loop marking follows edge splits") {
  CellComplex t = build_torus(4, 4);
  LoopMarking row = validate_simple_cycle(t, ids({0, 1, 2, 3}));
  SubdivisionResult r = subdivide_edge(t, row.edges[3]);
  LoopMarking moved = row;
  moved.apply(r.split);
  CHECK(moved.length() == 5);
  CHECK(moved.cycle.front() == VertexId(0));
  validate_simple_cycle(r.complex, moved.cycle, moved.edges);

  LoopMarking other = validate_simple_cycle(t, ids({8, 9, 10, 11}));
  LoopMarking untouched = other;
  untouched.apply(r.split);
  CHECK(untouched.cycle == other.cycle);
}
