#pragma once

#include <string>
#include <variant>
#include <vector>

#include "singular/cell_complex.hpp"

namespace singular {

enum class LoopClass { Handle, Tunnel, Separating, Unclassified };

const char* to_string(LoopClass kind);

struct CollapseOp {
  bool operator==(const CollapseOp&) const = default;
};
struct ZipOp {
  VertexId p;
  VertexId q;
  bool operator==(const ZipOp&) const = default;
};
struct IdentifyOp {
  std::string partner;
  int offset = 0;
  bool reversed = false;
  bool operator==(const IdentifyOp&) const = default;
};
using LoopOperation = std::variant<std::monostate, CollapseOp, ZipOp, IdentifyOp>;

// A simple edge-cycle on a named surface. edges[i] joins cycle[i] to
// cycle[(i + 1) % size].
struct LoopMarking {
  std::string surface;
  std::vector<VertexId> cycle;
  std::vector<EdgeId> edges;
  LoopClass kind = LoopClass::Unclassified;
  LoopOperation operation;

  std::size_t length() const { return cycle.size(); }
  bool contains(VertexId v) const;
  // Position of v on the cycle, or -1.
  int index_of(VertexId v) const;
  // Rewrites the loop through the two halves of a split edge (no-op when the
  // loop does not use it).
  void apply(const EdgeSplit& split);
};

// Checks that consecutive vertices are joined by live edges and no vertex
// repeats. Parallel edges resolve to the lowest id.
LoopMarking validate_simple_cycle(const CellComplex& c, std::vector<VertexId> cycle,
                                  std::string surface = {});

// Same, with the edges given explicitly.
LoopMarking validate_simple_cycle(const CellComplex& c, std::vector<VertexId> cycle,
                                  std::vector<EdgeId> edges, std::string surface = {});

bool is_separating(const CellComplex& c, const LoopMarking& loop);

struct DisjointnessReport {
  // Index pairs (into the input list) of loops sharing a vertex.
  std::vector<std::pair<std::size_t, std::size_t>> conflicts;
  bool ok() const { return conflicts.empty(); }
};

// Loops on different surfaces never conflict.
DisjointnessReport check_pairwise_disjoint(const std::vector<LoopMarking>& loops);

// True when cutting along both loops leaves a piece bounded by exactly one
// copy of each.
bool are_cobordant(const CellComplex& c, const LoopMarking& a, const LoopMarking& b);

}  // namespace singular
