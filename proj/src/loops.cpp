#include "singular/loops.hpp"

#include <algorithm>
#include <map>
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

}  // namespace

const char* to_string(LoopClass kind) {
  switch (kind) {
    case LoopClass::Handle: return "handle";
    case LoopClass::Tunnel: return "tunnel";
    case LoopClass::Separating: return "separating";
    case LoopClass::Unclassified: return "unclassified";
  }
  return "unclassified";
}

bool LoopMarking::contains(VertexId v) const { return index_of(v) >= 0; }

int LoopMarking::index_of(VertexId v) const {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

void LoopMarking::apply(const EdgeSplit& split) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] != split.original) continue;
    const bool along = cycle[i] == split.tail;
    edges[i] = along ? split.first : split.second;
    edges.insert(edges.begin() + static_cast<long>(i) + 1, along ? split.second : split.first);
    cycle.insert(cycle.begin() + static_cast<long>(i) + 1, split.midpoint);
    return;
  }
}

LoopMarking validate_simple_cycle(const CellComplex& c, std::vector<VertexId> cycle,
                                  std::string surface) {
  std::vector<EdgeId> edges;
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    auto between = c.edges_between(cycle[i], cycle[(i + 1) % k]);
    if (between.empty())
      throw TopologyError(ErrorKind::NotACycle, concat("no edge joins vertices ", cycle[i],
                                                       " and ", cycle[(i + 1) % k]));
    edges.push_back(between.front());
  }
  return validate_simple_cycle(c, std::move(cycle), std::move(edges), std::move(surface));
}

LoopMarking validate_simple_cycle(const CellComplex& c, std::vector<VertexId> cycle,
                                  std::vector<EdgeId> edges, std::string surface) {
  const std::size_t k = cycle.size();
  if (k < 3) throw TopologyError(ErrorKind::NotACycle, "a loop needs at least 3 vertices");
  if (edges.size() != k) throw TopologyError(ErrorKind::NotACycle, "edge count differs from vertex count");

  std::set<VertexId> seen;
  for (VertexId v : cycle) {
    if (!c.has_vertex(v)) throw TopologyError(ErrorKind::NotACycle, concat("unknown vertex ", v));
    if (!seen.insert(c.find(v)).second)
      throw TopologyError(ErrorKind::NotSimple, concat("vertex ", v, " repeats"));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!c.has_edge(edges[i]) || c.is_deleted(edges[i]))
      throw TopologyError(ErrorKind::NotACycle, concat("edge ", edges[i], " is not live"));
    const Edge& e = c.edge(edges[i]);
    VertexId u = c.find(cycle[i]);
    VertexId w = c.find(cycle[(i + 1) % k]);
    if (!((e.tail == u && e.head == w) || (e.tail == w && e.head == u)))
      throw TopologyError(ErrorKind::NotACycle,
                          concat("edge ", edges[i], " does not join ", cycle[i], " and ",
                                 cycle[(i + 1) % k]));
  }
  LoopMarking loop;
  loop.surface = std::move(surface);
  loop.cycle = std::move(cycle);
  loop.edges = std::move(edges);
  return loop;
}

bool is_separating(const CellComplex& c, const LoopMarking& loop) {
  return component_count(cut_along_cycle(c, loop)) > component_count(c);
}

DisjointnessReport check_pairwise_disjoint(const std::vector<LoopMarking>& loops) {
  DisjointnessReport report;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    std::set<VertexId> mine(loops[i].cycle.begin(), loops[i].cycle.end());
    for (std::size_t j = i + 1; j < loops.size(); ++j) {
      if (loops[i].surface != loops[j].surface) continue;
      bool shared = std::any_of(loops[j].cycle.begin(), loops[j].cycle.end(),
                                [&](VertexId v) { return mine.contains(v); });
      if (shared) report.conflicts.emplace_back(i, j);
    }
  }
  return report;
}

bool are_cobordant(const CellComplex& c, const LoopMarking& a, const LoopMarking& b) {
  CellComplex once = cut_along_cycle(c, a);
  CellComplex twice = cut_along_cycle(once, b);
  const std::int32_t a_copies = c.edge_id_bound();
  const std::int32_t b_copies = once.edge_id_bound();
  const EdgeId a_edge = c.find(a.edges.front()).first;
  const EdgeId b_edge = c.find(b.edges.front()).first;

  // The cut leaves four boundary circles: a, b and one fresh copy of each.
  for (const CellComplex& piece : connected_components(twice)) {
    int a_sides = piece.edges().contains(a_edge) ? 1 : 0;
    int b_sides = piece.edges().contains(b_edge) ? 1 : 0;
    bool a_copy = false;
    bool b_copy = false;
    for (const auto& [id, e] : piece.edges()) {
      if (id.value >= b_copies)
        b_copy = true;
      else if (id.value >= a_copies)
        a_copy = true;
    }
    a_sides += a_copy ? 1 : 0;
    b_sides += b_copy ? 1 : 0;
    if (a_sides == 1 && b_sides == 1) return true;
  }
  return false;
}

}  // namespace singular
