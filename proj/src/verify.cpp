#include "singular/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "singular/link.hpp"

namespace singular {

namespace {

template <class... Args>
std::string concat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

}  // namespace

long predict_chi(int n, int G, int C, int Z) { return 2L * n - 2L * G + C + Z; }

int predict_genus(int G, int D, int n) {
  if (D < n - 1)
    throw TopologyError(ErrorKind::CannotBeConnected,
                        concat(D, " identifications cannot connect ", n, " surfaces"));
  return G + D - (n - 1);
}

bool SingularizationReport::all_ok() const {
  return theorem1_ok && theorem2_ok.value_or(true) && lemma_checks.delta_chi_ok &&
         lemma_checks.betti_deltas_ok && lemma_checks.zip_equals_collapse.value_or(true);
}

SingularizationReport check_theorems(const SingularComplex& s, const PlanMetadata& plan) {
  SingularizationReport r;
  r.n = plan.n;
  r.G = plan.G;
  r.C = s.collapses();
  r.Z = s.zips();
  r.D = s.identifications();
  r.predicted_chi = predict_chi(r.n, r.G, r.C, r.Z);
  r.warnings = plan.warnings;

  for (const CellComplex& part : connected_components(s.carrier())) {
    SingularSet sing = singular_set(part);
    ComponentSummary summary{betti_numbers(part), sing.vertices.size(), sing.edges.size()};
    r.chi_total += summary.betti.chi;
    r.components.push_back(summary);
  }
  r.connected = r.components.size() == 1;
  r.theorem1_ok = r.chi_total == r.predicted_chi;
  if (!r.theorem1_ok)
    r.diagnostics.push_back(concat("component chi sum ", r.chi_total, " != predicted ", r.predicted_chi));

  if (r.connected) {
    r.genus_formula = predict_genus(r.G, r.D, r.n);
    long expected = 2L - 2L * *r.genus_formula + 2L * r.D + r.C + r.Z;
    r.theorem2_ok = r.chi_total == expected;
    if (!*r.theorem2_ok)
      r.diagnostics.push_back(concat("chi ", r.chi_total, " != 2 - 2g + 2D + C + Z = ", expected));
  }

  for (const OperationRecord& op : s.op_log()) {
    long delta = op.delta_chi();
    r.lemma_checks.per_op_delta_chi.push_back(delta);
    long wanted = op.kind == OperationKind::Identify ? 0 : 1;
    if (delta != wanted) {
      r.lemma_checks.delta_chi_ok = false;
      r.diagnostics.push_back(concat(to_string(op.kind), " changed chi by ", delta));
    }
    if (op.kind != OperationKind::Identify) {
      long d0 = op.after.beta0 - op.before.beta0;
      long d1 = op.after.beta1 - op.before.beta1;
      long d2 = op.after.beta2 - op.before.beta2;
      bool ok = d0 == 0 && ((d1 == -1 && d2 == 0) || (d1 == 0 && d2 == 1));
      if (!ok) {
        r.lemma_checks.betti_deltas_ok = false;
        r.diagnostics.push_back(concat(to_string(op.kind), " changed Betti numbers by (", d0, ", ",
                                       d1, ", ", d2, ")"));
      }
    }
  }
  if (!plan.zip_checks.empty())
    r.lemma_checks.zip_equals_collapse =
        std::all_of(plan.zip_checks.begin(), plan.zip_checks.end(), [](bool b) { return b; });
  return r;
}

bool zip_matches_collapse(const SingularComplex& s, const LoopMarking& loop, VertexId p, VertexId q) {
  SingularComplex zipped = zip(s, loop, p, q);
  SingularComplex collapsed = collapse(s, loop);
  return betti_numbers(zipped.carrier()) == betti_numbers(collapsed.carrier());
}

std::vector<EdgeCycle> enumerate_nonsingular_cycles(const CellComplex& c, std::size_t max_length,
                                                    std::size_t budget) {
  std::set<VertexId> smooth;
  for (const auto& [v, link] : compute_links(c))
    if (link.is_single_cycle()) smooth.insert(v);

  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
  for (const auto& [e, list] : c.incidences()) {
    const Edge& ed = c.edge(e);
    if (list.size() != 2 || ed.tail == ed.head) continue;
    if (!smooth.contains(ed.tail) || !smooth.contains(ed.head)) continue;
    adj[ed.tail].emplace_back(ed.head, e);
    adj[ed.head].emplace_back(ed.tail, e);
  }

  std::vector<EdgeCycle> cycles;
  std::size_t steps = 0;
  EdgeCycle path;
  std::set<VertexId> on_path;

  // Cycles are rooted at their smallest vertex; the two traversal directions
  // are told apart by comparing first and closing edge ids.
  auto extend = [&](auto&& self, VertexId root, VertexId at) -> void {
    for (const auto& [next, e] : adj[at]) {
      if (next == root) {
        if (path.edges.size() + 1 >= 3 && path.edges.front() < e) {
          EdgeCycle found = path;
          found.edges.push_back(e);
          cycles.push_back(std::move(found));
        }
        continue;
      }
      if (next < root || on_path.contains(next) || path.edges.size() + 1 >= max_length) continue;
      if (++steps > budget) throw TopologyError(ErrorKind::OracleTimeout, "cycle enumeration exceeded its budget");
      path.vertices.push_back(next);
      path.edges.push_back(e);
      on_path.insert(next);
      self(self, root, next);
      on_path.erase(next);
      path.edges.pop_back();
      path.vertices.pop_back();
    }
  };

  for (const auto& [root, list] : adj) {
    path = EdgeCycle{{root}, {}};
    on_path = {root};
    extend(extend, root, root);
  }
  return cycles;
}

int genus_oracle(const CellComplex& c, const OracleOptions& options) {
  std::vector<EdgeCycle> cycles = enumerate_nonsingular_cycles(c, options.max_cycle_length, options.budget);
  std::size_t spent = 0;
  const std::size_t base = component_count(c);
  const std::size_t cut_cost = std::max<std::size_t>(1, c.face_count());

  auto charge = [&]() {
    spent += cut_cost;
    if (spent > options.budget)
      throw TopologyError(ErrorKind::OracleTimeout, "genus search exceeded its budget");
  };

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    charge();
    if (component_count(cut_along_cycle(c, cycles[i].vertices, cycles[i].edges)) <= base)
      candidates.push_back(i);
  }

  int best = 0;
  std::set<VertexId> used;
  auto search = [&](auto&& self, const CellComplex& current, std::size_t from, int size) -> void {
    best = std::max(best, size);
    for (std::size_t ci = from; ci < candidates.size(); ++ci) {
      if (size + static_cast<int>(candidates.size() - ci) <= best) return;
      const EdgeCycle& cyc = cycles[candidates[ci]];
      if (std::any_of(cyc.vertices.begin(), cyc.vertices.end(),
                      [&](VertexId v) { return used.contains(v); }))
        continue;
      charge();
      CellComplex cut = cut_along_cycle(current, cyc.vertices, cyc.edges);
      if (component_count(cut) > base) continue;
      used.insert(cyc.vertices.begin(), cyc.vertices.end());
      self(self, cut, ci + 1, size + 1);
      for (VertexId v : cyc.vertices) used.erase(v);
    }
  };
  search(search, c, 0, 0);
  return best;
}

int genus_oracle(const SingularComplex& s, const OracleOptions& options) {
  return genus_oracle(s.carrier(), options);
}

}  // namespace singular
