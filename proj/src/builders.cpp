#include "singular/builders.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace singular {

namespace {

template <class... Args>
std::string concat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

constexpr double kMajorRadius = 3.0;
constexpr double kMinorRadius = 1.0;
constexpr double kTorusSpacing = 2 * (kMajorRadius + kMinorRadius);

Point3 normalized(const Point3& p) {
  double len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  return {p[0] / len, p[1] / len, p[2] / len};
}

void append_torus(int m, int n, int base, double shift, std::vector<Point3>& positions,
                  std::vector<std::array<int, 3>>& triangles,
                  const std::set<std::array<int, 3>>& skip) {
  auto id = [&](int i, int j) { return base + ((i % m + m) % m) * n + ((j % n + n) % n); };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      double u = 2 * std::numbers::pi * i / m;
      double v = 2 * std::numbers::pi * j / n;
      double ring = kMajorRadius + kMinorRadius * std::cos(v);
      positions.push_back({shift + ring * std::cos(u), ring * std::sin(u), kMinorRadius * std::sin(v)});
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> lower{id(i, j), id(i + 1, j), id(i + 1, j + 1)};
      std::array<int, 3> upper{id(i, j), id(i + 1, j + 1), id(i, j + 1)};
      if (!skip.contains(lower)) triangles.push_back(lower);
      if (!skip.contains(upper)) triangles.push_back(upper);
    }
  }
}

}  // namespace

CellComplex build_sphere(int refinement) {
  std::vector<Point3> positions = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0},
                                   {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  std::vector<std::array<int, 3>> triangles = {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 2},
                                               {1, 3, 2}, {1, 4, 3}, {1, 5, 4}, {1, 2, 5}};
  for (int round = 0; round < refinement; ++round) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Point3& pa = positions[a];
      const Point3& pb = positions[b];
      positions.push_back(normalized({pa[0] + pb[0], pa[1] + pb[1], pa[2] + pb[2]}));
      int id = static_cast<int>(positions.size()) - 1;
      midpoint.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> finer;
    for (const auto& [a, b, c] : triangles) {
      int ab = mid(a, b);
      int bc = mid(b, c);
      int ca = mid(c, a);
      finer.push_back({a, ab, ca});
      finer.push_back({ab, b, bc});
      finer.push_back({ca, bc, c});
      finer.push_back({ab, bc, ca});
    }
    triangles = std::move(finer);
  }
  return CellComplex::from_triangles(static_cast<int>(positions.size()), triangles, positions);
}

CellComplex build_torus(int m, int n) {
  if (m < 3 || n < 3)
    throw TopologyError(ErrorKind::DegenerateGrid,
                        concat("torus grid ", m, "x", n, " needs both sides >= 3"));
  std::vector<Point3> positions;
  std::vector<std::array<int, 3>> triangles;
  append_torus(m, n, 0, 0.0, positions, triangles, {});
  return CellComplex::from_triangles(m * n, triangles, positions);
}

VertexId GenusChain::grid_vertex(int t, int i, int j) const {
  return VertexId(t * m * n + ((i % m + m) % m) * n + ((j % n + n) % n));
}

GenusChain build_genus_chain(int g, int m, int n) {
  if (g < 0) throw TopologyError(ErrorKind::DegenerateGrid, "genus must be non-negative");
  if (g == 0) return GenusChain{build_sphere(1), 0, 0, 0};
  if (m < 3 || n < 3)
    throw TopologyError(ErrorKind::DegenerateGrid,
                        concat("torus grid ", m, "x", n, " needs both sides >= 3"));
  if (g >= 2 && n < 4)
    throw TopologyError(ErrorKind::DegenerateGrid,
                        concat("chained tori need n >= 4 (got ", n, ")"));

  GenusChain chain;
  chain.genus = g;
  chain.m = m;
  chain.n = n;
  auto vid = [&](int t, int i, int j) { return chain.grid_vertex(t, i, j).value; };

  // Openings: toward the next torus at square (1,1) lower triangle, toward the
  // previous torus at square (1,2) upper triangle. Both miss row 0 and column 0.
  auto exit_opening = [&](int t) {
    return std::array<int, 3>{vid(t, 1, 1), vid(t, 2, 1), vid(t, 2, 2)};
  };
  auto entry_opening = [&](int t) {
    return std::array<int, 3>{vid(t, 1, 2), vid(t, 2, 3), vid(t, 1, 3)};
  };

  std::vector<Point3> positions;
  std::vector<std::array<int, 3>> triangles;
  for (int t = 0; t < g; ++t) {
    std::set<std::array<int, 3>> skip;
    if (t + 1 < g) skip.insert(exit_opening(t));
    if (t > 0) skip.insert(entry_opening(t));
    append_torus(m, n, t * m * n, t * kTorusSpacing, positions, triangles, skip);
  }
  for (int t = 0; t + 1 < g; ++t) {
    auto a = exit_opening(t);
    auto b = entry_opening(t + 1);
    // Run the b rim backwards so each prism side pairs a_k a_{k+1} with the
    // matching b edge walked in its removed triangle's direction.
    std::array<int, 3> rb{b[0], b[2], b[1]};
    for (int k = 0; k < 3; ++k) {
      int k1 = (k + 1) % 3;
      triangles.push_back({a[k], a[k1], rb[k1]});
      triangles.push_back({a[k], rb[k1], rb[k]});
    }
  }
  chain.complex = CellComplex::from_triangles(g * m * n, triangles, positions);
  return chain;
}

LoopMarking canonical_loop(const GenusChain& chain, CanonicalKind kind, int index,
                           std::string surface) {
  const int g = chain.genus;
  std::vector<VertexId> cycle;
  LoopClass cls = LoopClass::Unclassified;
  switch (kind) {
    case CanonicalKind::Handle:
      if (index < 1 || index > g)
        throw TopologyError(ErrorKind::NoSuchLoop, concat("handle(", index, ") needs 1 <= index <= ", g));
      for (int j = 0; j < chain.n; ++j) cycle.push_back(chain.grid_vertex(index - 1, 0, j));
      cls = LoopClass::Handle;
      break;
    case CanonicalKind::Tunnel:
      if (index < 1 || index > g)
        throw TopologyError(ErrorKind::NoSuchLoop, concat("tunnel(", index, ") needs 1 <= index <= ", g));
      for (int i = 0; i < chain.m; ++i) cycle.push_back(chain.grid_vertex(index - 1, i, 0));
      cls = LoopClass::Tunnel;
      break;
    case CanonicalKind::Separating:
      if (index < 1 || index > g - 1)
        throw TopologyError(ErrorKind::NoSuchLoop,
                            concat("separating(", index, ") needs 1 <= index <= ", g - 1));
      cycle = {chain.grid_vertex(index - 1, 1, 1), chain.grid_vertex(index - 1, 2, 1),
               chain.grid_vertex(index - 1, 2, 2)};
      cls = LoopClass::Separating;
      break;
  }
  LoopMarking loop = validate_simple_cycle(chain.complex, std::move(cycle), std::move(surface));
  loop.kind = cls;
  return loop;
}

LoopMarking star_boundary(const CellComplex& c, VertexId v, std::string surface) {
  v = c.find(v);
  std::map<VertexId, std::pair<VertexId, EdgeId>> next;
  for (const auto& [fid, f] : c.faces()) {
    for (int k = 0; k < 3; ++k) {
      if (c.head(f.sides[k]) != v) continue;
      const Side& opposite = f.sides[(k + 2) % 3];
      VertexId from = c.tail(f.sides[(k + 2) % 3]);
      VertexId to = c.head(opposite);
      if (from == v || to == v || !next.emplace(from, std::pair{to, opposite.edge}).second)
        throw TopologyError(ErrorKind::NotACycle, concat("star of vertex ", v, " is not simplicial"));
    }
  }
  if (next.empty()) throw TopologyError(ErrorKind::NotACycle, concat("vertex ", v, " has no faces"));
  std::vector<VertexId> cycle;
  std::vector<EdgeId> edges;
  VertexId at = next.begin()->first;
  for (std::size_t guard = 0; guard < next.size(); ++guard) {
    cycle.push_back(at);
    auto [to, e] = next.at(at);
    edges.push_back(e);
    at = to;
  }
  if (at != cycle.front())
    throw TopologyError(ErrorKind::NotACycle, concat("star of vertex ", v, " is not a disk"));
  return validate_simple_cycle(c, std::move(cycle), std::move(edges), std::move(surface));
}

int SurfaceBundle::total_genus() const {
  int total = 0;
  for (const auto& s : surfaces) total += s.genus;
  return total;
}

DisjointUnion disjoint_union(const SurfaceBundle& bundle) {
  DisjointUnion out;
  IdOffsets next;
  for (const NamedSurface& s : bundle.surfaces) {
    if (out.offsets.contains(s.name))
      throw TopologyError(ErrorKind::NameClash, concat("surface name '", s.name, "' is used twice"));
    out.offsets.emplace(s.name, next);
    out.complex.absorb(s.complex.shifted(next.vertex, next.edge, next.face));
    next.vertex += s.complex.vertex_id_bound();
    next.edge += s.complex.edge_id_bound();
    next.face += s.complex.face_id_bound();
  }
  return out;
}

VertexId shift_vertex(VertexId v, const IdOffsets& offsets) {
  return VertexId(v.value + offsets.vertex);
}

LoopMarking shift_loop(const LoopMarking& loop, const IdOffsets& offsets) {
  LoopMarking out = loop;
  for (VertexId& v : out.cycle) v = shift_vertex(v, offsets);
  for (EdgeId& e : out.edges) e = EdgeId(e.value + offsets.edge);
  if (auto* zip = std::get_if<ZipOp>(&out.operation); zip && zip->p.valid()) {
    zip->p = shift_vertex(zip->p, offsets);
    zip->q = shift_vertex(zip->q, offsets);
  }
  return out;
}

RefinedLoop refine_loop_to_length(const CellComplex& c, const LoopMarking& loop, std::size_t k) {
  if (k < loop.length())
    throw TopologyError(ErrorKind::CannotCoarsen,
                        concat("loop has ", loop.length(), " edges; cannot refine to ", k));
  RefinedLoop out{c, loop, {}};
  std::size_t at = 0;
  while (out.loop.length() < k) {
    at %= out.loop.length();
    SubdivisionResult step = subdivide_edge(out.complex, out.loop.edges[at]);
    out.complex = std::move(step.complex);
    out.loop.apply(step.split);
    out.splits.push_back(step.split);
    at += 2;
  }
  return out;
}

}  // namespace singular
