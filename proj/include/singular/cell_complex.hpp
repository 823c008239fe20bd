#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "singular/types.hpp"

namespace singular {

struct Edge {
  VertexId tail;
  VertexId head;
};

// One side of a triangle walk. `forward` means the face runs tail -> head.
struct Side {
  EdgeId edge;
  bool forward = true;

  bool operator==(const Side&) const = default;
};

struct Face {
  std::array<Side, 3> sides;
};

// An edge end at a vertex; the nodes of a vertex link.
struct EdgeEnd {
  EdgeId edge;
  bool at_head = false;

  auto operator<=>(const EdgeEnd&) const = default;
};

// A side of a face as it sits in the face's walk (index into Face::sides).
struct Incidence {
  FaceId face;
  int side = 0;

  auto operator<=>(const Incidence&) const = default;
};

// Identification request for CellComplex::quotient. Edge pairs carry whether
// the two edges are glued tail-to-tail (same direction) or tail-to-head.
struct QuotientSpec {
  std::vector<std::pair<VertexId, VertexId>> vertex_pairs;
  struct EdgePair {
    EdgeId a;
    EdgeId b;
    bool same_direction = true;
  };
  std::vector<EdgePair> edge_pairs;
  // Edges contracted to a point. Both ends must be glued before this applies.
  std::vector<EdgeId> tombstone;
};

// Result of splitting an edge at its midpoint.
struct EdgeSplit {
  EdgeId original;
  VertexId tail;  // endpoints of the original edge
  VertexId head;
  VertexId midpoint;
  EdgeId first;   // original tail -> midpoint
  EdgeId second;  // midpoint -> original head
};

class CellComplex;

struct SubdivisionResult;

// Two-dimensional Delta-style complex: triangles glued along edge walks, with
// multi-edges and self-loops allowed. Quotient classes are stored materialized:
// every live cell is the lowest id of its class and merged ids resolve through
// alias tables.
class CellComplex {
 public:
  CellComplex() = default;

  static CellComplex from_cells(std::span<const VertexId> vertices,
                                std::span<const std::pair<EdgeId, Edge>> edges,
                                std::span<const std::pair<FaceId, Face>> faces);

  // Builds edges and sides from oriented vertex triples. Triangles sharing an
  // unordered vertex pair share the edge.
  static CellComplex from_triangles(int vertex_count,
                                    std::span<const std::array<int, 3>> triangles,
                                    std::span<const Point3> positions = {});

  const std::map<VertexId, std::optional<Point3>>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const std::map<FaceId, Face>& faces() const { return faces_; }
  const std::set<EdgeId>& deleted_edges() const { return deleted_edges_; }

  bool has_vertex(VertexId v) const { return vertices_.contains(find(v)); }
  bool has_edge(EdgeId e) const { return edges_.contains(find(e).first); }
  bool is_deleted(EdgeId e) const { return deleted_edges_.contains(find(e).first); }
  const Edge& edge(EdgeId e) const;
  const Face& face(FaceId f) const;
  std::optional<Point3> position(VertexId v) const;
  bool has_geometry() const;

  // Class representative. Unknown ids map to themselves.
  VertexId find(VertexId v) const;
  // Representative plus whether the id runs in the representative's direction.
  std::pair<EdgeId, bool> find(EdgeId e) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t live_edge_count() const { return edges_.size() - deleted_edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  VertexId head(const Side& s) const;
  VertexId tail(const Side& s) const;

  // Sides of a face with tombstoned edges dropped.
  std::vector<Side> reduced_boundary(FaceId f) const;

  // Every (face, side) traversing each live undeleted edge.
  std::map<EdgeId, std::vector<Incidence>> incidences() const;
  std::size_t incidence_count(EdgeId e) const;

  // Undeleted live edges joining u and v (either direction), lowest id first.
  std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

  bool link_is_single_cycle(VertexId v) const;

  CellComplex quotient(const QuotientSpec& spec) const;
  SubdivisionResult subdivide(EdgeId e) const;

  // Copy with all ids shifted by the given amounts (used by disjoint unions).
  CellComplex shifted(std::int32_t vertex_offset, std::int32_t edge_offset,
                      std::int32_t face_offset) const;
  // Adds every cell of `other`; ids must not collide.
  void absorb(const CellComplex& other);
  // Sub-complex containing only the given vertex classes and the edges/faces
  // attached to them.
  CellComplex restricted_to(const std::set<VertexId>& vertex_classes) const;

  std::int32_t vertex_id_bound() const { return next_vertex_; }
  std::int32_t edge_id_bound() const { return next_edge_; }
  std::int32_t face_id_bound() const { return next_face_; }

  // Low-level mutation used by cutting; keeps id counters in sync.
  VertexId add_vertex(std::optional<Point3> position);
  EdgeId add_edge(VertexId tail, VertexId head);
  FaceId add_face(const Face& face);
  void set_edge(EdgeId e, Edge endpoints);
  void set_face(FaceId f, const Face& face);

 private:
  std::map<VertexId, std::optional<Point3>> vertices_;
  std::map<EdgeId, Edge> edges_;
  std::map<FaceId, Face> faces_;
  std::set<EdgeId> deleted_edges_;
  std::map<VertexId, VertexId> vertex_alias_;
  std::map<EdgeId, std::pair<EdgeId, bool>> edge_alias_;
  std::int32_t next_vertex_ = 0;
  std::int32_t next_edge_ = 0;
  std::int32_t next_face_ = 0;
};

struct SubdivisionResult {
  CellComplex complex;
  EdgeSplit split;
};

CellComplex build_from_cells(std::span<const VertexId> vertices,
                             std::span<const std::pair<EdgeId, Edge>> edges,
                             std::span<const std::pair<FaceId, Face>> faces);

// Checks that a deletion-free complex is a connected closed orientable surface
// and returns its genus.
int validate_closed_orientable_surface(const CellComplex& c);
// Per-component variant; returns one genus per component in component order.
std::vector<int> validate_surface_components(const CellComplex& c);

// V - E + F over quotient classes, excluding tombstoned edges.
long euler_count(const CellComplex& c);

std::vector<CellComplex> connected_components(const CellComplex& c);
std::size_t component_count(const CellComplex& c);

SubdivisionResult subdivide_edge(const CellComplex& c, EdgeId e);

struct LoopMarking;

// Cuts along a simple cycle through nonsingular cells. Faces on one side keep
// the original vertices and edges; faces on the other side get fresh copies.
CellComplex cut_along_cycle(const CellComplex& c, const LoopMarking& cycle);
CellComplex cut_along_cycle(const CellComplex& c, std::span<const VertexId> cycle,
                            std::span<const EdgeId> edges);

}  // namespace singular
