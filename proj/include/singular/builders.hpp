#pragma once

#include <map>
#include <string>
#include <vector>

#include "singular/cell_complex.hpp"
#include "singular/loops.hpp"

namespace singular {

// Octahedron with `refinement` rounds of 1-to-4 subdivision, projected to the
// unit sphere. Vertices 0..5 are the octahedron corners (0 and 1 the poles,
// 2..5 the equator in order).
CellComplex build_sphere(int refinement);

// m x n grid torus with one diagonal per square. Vertex (i, j) has id i*n + j;
// i runs along the core circle, j around the tube.
CellComplex build_torus(int m, int n);

// Genus-g surface as a row of g grid tori joined by triangular-prism tubes.
struct GenusChain {
  CellComplex complex;
  int genus = 0;
  int m = 0;
  int n = 0;

  // Id of grid vertex (i, j) on torus t (0-based).
  VertexId grid_vertex(int t, int i, int j) const;
};

// g = 0 yields build_sphere(1). Tori need m, n >= 3, and n >= 4 once tubes
// are present so the tube openings stay clear of row 0 and column 0.
GenusChain build_genus_chain(int g, int m = 4, int n = 4);

enum class CanonicalKind { Handle, Tunnel, Separating };

// handle(i): meridian (row 0) of torus i; tunnel(i): longitude (column 0) of
// torus i; separating(k): rim of the k-th tube opening.
LoopMarking canonical_loop(const GenusChain& chain, CanonicalKind kind, int index,
                           std::string surface = {});

// Boundary of the star of v, in cyclic order. Needs a simplicial neighbourhood.
LoopMarking star_boundary(const CellComplex& c, VertexId v, std::string surface = {});

struct NamedSurface {
  std::string name;
  CellComplex complex;
  int genus = 0;
};

struct SurfaceBundle {
  std::vector<NamedSurface> surfaces;

  int n() const { return static_cast<int>(surfaces.size()); }
  int total_genus() const;
};

struct IdOffsets {
  std::int32_t vertex = 0;
  std::int32_t edge = 0;
  std::int32_t face = 0;
};

struct DisjointUnion {
  CellComplex complex;
  std::map<std::string, IdOffsets> offsets;
};

DisjointUnion disjoint_union(const SurfaceBundle& bundle);

// Moves a loop expressed in a member surface's ids into the union's ids.
LoopMarking shift_loop(const LoopMarking& loop, const IdOffsets& offsets);
VertexId shift_vertex(VertexId v, const IdOffsets& offsets);

struct RefinedLoop {
  CellComplex complex;
  LoopMarking loop;
  std::vector<EdgeSplit> splits;
};

// Subdivides loop edges round-robin until the loop has exactly k edges.
RefinedLoop refine_loop_to_length(const CellComplex& c, const LoopMarking& loop, std::size_t k);

}  // namespace singular
