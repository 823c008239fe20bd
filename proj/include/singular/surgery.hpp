#pragma once

#include <set>
#include <string>
#include <vector>

#include "singular/cell_complex.hpp"
#include "singular/homology.hpp"
#include "singular/loops.hpp"

namespace singular {

enum class OperationKind { Collapse, Zip, Identify };

const char* to_string(OperationKind kind);

struct OperationRecord {
  OperationKind kind;
  std::vector<std::string> loops;  // surface names of the operated loops
  HomologyProfile before;
  HomologyProfile after;

  long delta_chi() const { return after.chi - before.chi; }
};

// Carrier of a singularization in progress: the quotient complex plus the
// operations applied so far and the singular cells they created.
class SingularComplex {
 public:
  SingularComplex() = default;
  explicit SingularComplex(CellComplex carrier) : carrier_(std::move(carrier)) {}

  const CellComplex& carrier() const { return carrier_; }
  const std::vector<OperationRecord>& op_log() const { return log_; }

  int collapses() const { return count(OperationKind::Collapse); }
  int zips() const { return count(OperationKind::Zip); }
  int identifications() const { return count(OperationKind::Identify); }

  // Tracked incrementally, as class representatives.
  std::set<VertexId> singular_vertices() const;
  std::set<EdgeId> singular_edges() const;
  // Vertices of every loop operated on so far.
  const std::set<VertexId>& operated_vertices() const { return operated_; }

  // Same history on a refined carrier (subdivision never touches operated cells).
  SingularComplex with_carrier(CellComplex carrier) const;

 private:
  friend SingularComplex collapse(const SingularComplex&, const LoopMarking&);
  friend SingularComplex zip(const SingularComplex&, const LoopMarking&, VertexId, VertexId);
  friend SingularComplex identify(const SingularComplex&, const LoopMarking&, const LoopMarking&,
                                  int, bool);

  int count(OperationKind kind) const;

  CellComplex carrier_;
  std::vector<OperationRecord> log_;
  std::set<VertexId> singular_vertices_;
  std::set<EdgeId> singular_edges_;
  std::set<VertexId> operated_;
};

// Contracts the loop to one vertex; loop edges are tombstoned.
SingularComplex collapse(const SingularComplex& s, const LoopMarking& loop);

// Folds the loop onto the arc between antipodal p and q: the two arcs from p
// to q are glued with p and q fixed.
SingularComplex zip(const SingularComplex& s, const LoopMarking& loop, VertexId p, VertexId q);

// Glues vertex i of a to vertex (offset + i) mod k of b, or (offset - i) when
// reversed, together with the edges between them.
SingularComplex identify(const SingularComplex& s, const LoopMarking& a, const LoopMarking& b,
                         int offset, bool reversed);

struct DoubleCurve {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool closed = false;
};

struct SingularSet {
  std::set<VertexId> vertices;
  std::set<EdgeId> edges;
  std::vector<VertexId> cone_points;    // singular vertices off every singular edge
  std::vector<VertexId> pinch_points;   // ends of open double-crossing curves
  std::vector<DoubleCurve> double_curves;
};

// Recomputed from scratch: vertices whose link is not one cycle and edges not
// lying in exactly two face sides.
SingularSet singular_set(const CellComplex& c);
SingularSet singular_set(const SingularComplex& s);

}  // namespace singular
