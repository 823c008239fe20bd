#include "singular/link.hpp"

#include <queue>

namespace singular {

namespace {

std::map<EdgeEnd, std::vector<std::size_t>> adjacency(const Link& link) {
  std::map<EdgeEnd, std::vector<std::size_t>> adj;
  for (std::size_t i = 0; i < link.corners.size(); ++i) {
    adj[link.corners[i].in].push_back(i);
    adj[link.corners[i].out].push_back(i);
  }
  return adj;
}

}  // namespace

int Link::piece_count() const {
  auto adj = adjacency(*this);
  std::set<EdgeEnd> seen;
  int pieces = free_circles;
  for (const EdgeEnd& start : nodes) {
    if (seen.contains(start)) continue;
    ++pieces;
    std::queue<EdgeEnd> pending;
    pending.push(start);
    seen.insert(start);
    while (!pending.empty()) {
      EdgeEnd n = pending.front();
      pending.pop();
      for (std::size_t ci : adj[n]) {
        for (const EdgeEnd& m : {corners[ci].in, corners[ci].out}) {
          if (seen.insert(m).second) pending.push(m);
        }
      }
    }
  }
  return pieces;
}

bool Link::is_single_cycle() const {
  if (nodes.empty() || free_circles != 0) return false;
  auto adj = adjacency(*this);
  for (const EdgeEnd& n : nodes) {
    auto it = adj.find(n);
    if (it == adj.end() || it->second.size() != 2) return false;
  }
  return piece_count() == 1;
}

std::optional<Link::Walk> Link::walk(EdgeEnd from, Incidence via, EdgeEnd to) const {
  auto adj = adjacency(*this);
  auto uses = [&](std::size_t ci, EdgeEnd node, Incidence inc) {
    const Corner& c = corners[ci];
    return (c.in == node && c.arriving == inc) || (c.out == node && c.leaving == inc);
  };
  std::optional<std::size_t> current;
  for (std::size_t ci : adj[from])
    if (uses(ci, from, via)) current = ci;
  if (!current) return std::nullopt;

  Walk result;
  EdgeEnd node = from;
  bool first = true;
  for (std::size_t guard = 0; guard <= corners.size(); ++guard) {
    const Corner& c = corners[*current];
    bool entered_by_in = first ? (c.in == node && c.arriving == via) : c.in == node;
    first = false;
    EdgeEnd next = entered_by_in ? c.out : c.in;
    Incidence next_inc = entered_by_in ? c.leaving : c.arriving;
    if (next == to) {
      result.last = next_inc;
      return result;
    }
    result.interior.push_back(next);
    const auto& around = adj[next];
    if (around.size() != 2) return std::nullopt;
    std::size_t other = around[0] == *current ? around[1] : around[0];
    node = next;
    current = other;
  }
  return std::nullopt;
}

std::map<VertexId, Link> compute_links(const CellComplex& c,
                                       const std::optional<std::set<VertexId>>& only) {
  std::map<VertexId, Link> links;
  auto wanted = [&](VertexId v) { return !only || only->contains(v); };
  for (const auto& [v, p] : c.vertices())
    if (wanted(v)) links[v];

  for (const auto& [id, e] : c.edges()) {
    if (c.deleted_edges().contains(id)) continue;
    if (wanted(e.tail)) links[e.tail].nodes.insert(EdgeEnd{id, false});
    if (wanted(e.head)) links[e.head].nodes.insert(EdgeEnd{id, true});
  }

  for (const auto& [fid, f] : c.faces()) {
    std::vector<int> kept;
    for (int k = 0; k < 3; ++k)
      if (!c.deleted_edges().contains(f.sides[k].edge)) kept.push_back(k);
    if (kept.empty()) {
      VertexId w = c.tail(f.sides[0]);
      if (wanted(w)) ++links[w].free_circles;
      continue;
    }
    for (std::size_t j = 0; j < kept.size(); ++j) {
      int si = kept[j];
      int ti = kept[(j + 1) % kept.size()];
      const Side& s = f.sides[si];
      const Side& t = f.sides[ti];
      VertexId w = c.head(s);
      if (!wanted(w)) continue;
      links[w].corners.push_back(Corner{Incidence{fid, si}, Incidence{fid, ti},
                                        EdgeEnd{s.edge, s.forward}, EdgeEnd{t.edge, !t.forward}});
    }
  }
  return links;
}

}  // namespace singular
