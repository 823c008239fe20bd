#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singular/homology.hpp"
#include "singular/surgery.hpp"

namespace singular {

// Sum of component Euler characteristics after C collapses and Z zips on n
// closed surfaces of total genus G. Independent of identifications.
long predict_chi(int n, int G, int C, int Z);

// Genus of a connected singularization: G + D - (n - 1). Throws
// CannotBeConnected when D < n - 1.
int predict_genus(int G, int D, int n);

struct ComponentSummary {
  HomologyProfile betti;
  std::size_t singular_vertices = 0;
  std::size_t singular_edges = 0;
};

struct LemmaChecks {
  std::vector<long> per_op_delta_chi;
  // Null when no zip was performed.
  std::optional<bool> zip_equals_collapse;
  // Collapses and zips change (b0, b1, b2) by (0, -1, 0) or (0, 0, +1).
  bool betti_deltas_ok = true;
  bool delta_chi_ok = true;
};

struct SingularizationReport {
  int n = 0;
  int G = 0;
  int C = 0;
  int Z = 0;
  int D = 0;
  long predicted_chi = 0;
  long chi_total = 0;
  std::vector<ComponentSummary> components;
  bool connected = false;
  std::optional<int> genus_formula;
  bool theorem1_ok = false;
  // Null when the result is disconnected (the genus formula does not apply).
  std::optional<bool> theorem2_ok;
  LemmaChecks lemma_checks;
  std::vector<std::string> warnings;
  std::vector<std::string> diagnostics;

  bool all_ok() const;
};

struct PlanMetadata {
  int n = 0;
  int G = 0;
  // One entry per zip, in order: did zip and collapse give equal Betti numbers.
  std::vector<bool> zip_checks;
  std::vector<std::string> warnings;
};

SingularizationReport check_theorems(const SingularComplex& s, const PlanMetadata& plan);

// Applies both zip and collapse to the same carrier and compares homology.
bool zip_matches_collapse(const SingularComplex& s, const LoopMarking& loop, VertexId p, VertexId q);

struct OracleOptions {
  std::size_t max_cycle_length = 8;
  // Work limit: one unit per path extension during enumeration, plus the face
  // count of the complex for every cut test.
  std::size_t budget = 20'000'000;
};

// Largest number of pairwise vertex-disjoint simple edge-cycles (length <=
// max_cycle_length, avoiding singular cells) whose removal does not increase
// the component count. Exact within the length bound.
int genus_oracle(const CellComplex& c, const OracleOptions& options = {});
int genus_oracle(const SingularComplex& s, const OracleOptions& options = {});

struct EdgeCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Simple cycles of length 3..max_length through nonsingular vertices and
// edges, each listed once. Throws OracleTimeout after `budget` path steps.
std::vector<EdgeCycle> enumerate_nonsingular_cycles(const CellComplex& c, std::size_t max_length,
                                                    std::size_t budget);

}  // namespace singular
