#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "singular/cell_complex.hpp"

namespace singular {

// A face corner at a vertex: the face arrives along `arriving` and leaves
// along `leaving`. In the link graph it joins the two edge ends it touches.
struct Corner {
  Incidence arriving;
  Incidence leaving;
  EdgeEnd in;   // end of the arriving edge at the vertex
  EdgeEnd out;  // end of the leaving edge at the vertex
};

// Link of a vertex in a Delta-complex: nodes are edge ends, arcs are corners.
// Faces whose every edge was collapsed contribute a closed circle of their own.
struct Link {
  std::set<EdgeEnd> nodes;
  std::vector<Corner> corners;
  int free_circles = 0;

  bool is_single_cycle() const;
  // Number of connected pieces (free circles included).
  int piece_count() const;

  struct Walk {
    std::vector<EdgeEnd> interior;
    Incidence last;  // incidence on `to` of the final corner
  };
  // Walks from `from` starting with the corner that uses incidence `via`,
  // stopping at `to`. Requires a single-cycle link.
  std::optional<Walk> walk(EdgeEnd from, Incidence via, EdgeEnd to) const;
};

// Links of every vertex class, or only of the vertices in `only` when given.
std::map<VertexId, Link> compute_links(const CellComplex& c,
                                       const std::optional<std::set<VertexId>>& only = std::nullopt);

}  // namespace singular
