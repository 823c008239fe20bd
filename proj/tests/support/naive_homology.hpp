#pragma once

// Test-only reference: Betti numbers from byte matrices and plain elimination,
// built straight from the cell lists without the library's chain complex.

#include <map>
#include <vector>

#include "singular/cell_complex.hpp"

namespace naive {

struct Betti {
  long b0, b1, b2;
  long chi() const { return b0 - b1 + b2; }
};

inline std::size_t rank_mod2(std::vector<std::vector<char>> m) {
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot][col]) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][col])
        for (std::size_t c = col; c < cols; ++c) m[r][c] ^= m[rank][c];
    ++rank;
  }
  return rank;
}

inline Betti betti(const singular::CellComplex& c) {
  using namespace singular;
  std::map<VertexId, std::size_t> vi;
  for (const auto& [v, p] : c.vertices()) vi.emplace(v, vi.size());
  std::map<EdgeId, std::size_t> ei;
  for (const auto& [e, ed] : c.edges())
    if (!c.deleted_edges().contains(e)) ei.emplace(e, ei.size());

  std::vector<std::vector<char>> d1(vi.size(), std::vector<char>(ei.size(), 0));
  for (const auto& [e, col] : ei) {
    const Edge& ed = c.edges().at(e);
    d1[vi.at(ed.tail)][col] ^= 1;
    d1[vi.at(ed.head)][col] ^= 1;
  }
  std::vector<std::vector<char>> d2(ei.size(), std::vector<char>(c.faces().size(), 0));
  std::size_t col = 0;
  for (const auto& [f, face] : c.faces()) {
    for (const Side& s : face.sides) {
      EdgeId rep = c.find(s.edge).first;
      auto it = ei.find(rep);
      if (it != ei.end()) d2[it->second][col] ^= 1;
    }
    ++col;
  }
  long r1 = static_cast<long>(rank_mod2(d1));
  long r2 = static_cast<long>(rank_mod2(d2));
  long V = static_cast<long>(vi.size());
  long E = static_cast<long>(ei.size());
  long F = static_cast<long>(c.faces().size());
  return {V - r1, E - r1 - r2, F - r2};
}

// Components by graph search over vertices and live edges.
inline long components(const singular::CellComplex& c) {
  using namespace singular;
  std::map<VertexId, VertexId> parent;
  for (const auto& [v, p] : c.vertices()) parent[v] = v;
  auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (const auto& [e, ed] : c.edges()) parent[root(ed.tail)] = root(ed.head);
  long count = 0;
  for (const auto& [v, p] : parent)
    if (root(v) == v) ++count;
  return count;
}

}  // namespace naive
