#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "singular/pipeline.hpp"

namespace singular {

namespace {

template <class... Args>
std::string concat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

std::size_t wrap(long i, std::size_t k) {
  long m = static_cast<long>(k);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

// Carrier plus every named loop, kept in step across subdivisions.
struct Workspace {
  SingularComplex s;
  std::map<std::string, LoopMarking> loops;
  std::vector<CellComplex>* snapshots = nullptr;
  std::vector<std::string> warnings;

  void snapshot() {
    if (snapshots) snapshots->push_back(s.carrier());
  }

  void split(EdgeId e) {
    SubdivisionResult r = subdivide_edge(s.carrier(), e);
    s = s.with_carrier(std::move(r.complex));
    for (auto& [name, loop] : loops) loop.apply(r.split);
    snapshot();
  }

  void refine(const std::string& name, std::size_t k) {
    std::size_t before = loops.at(name).length();
    if (before >= k) return;
    std::size_t at = 0;
    while (loops.at(name).length() < k) {
      const LoopMarking& loop = loops.at(name);
      at %= loop.length();
      split(loop.edges[at]);
      at += 2;
    }
    warnings.push_back(concat("refined loop '", name, "' from ", before, " to ", k, " edges"));
  }

  // Splits edges of the shorter p-q arc until both arcs match.
  void balance_arcs(const std::string& name, VertexId p, VertexId q) {
    std::size_t before = loops.at(name).length();
    std::size_t turn = 0;
    for (;;) {
      const LoopMarking& loop = loops.at(name);
      std::size_t k = loop.length();
      std::size_t ip = static_cast<std::size_t>(loop.index_of(p));
      std::size_t m = wrap(static_cast<long>(loop.index_of(q)) - static_cast<long>(ip), k);
      if (2 * m == k) break;
      std::size_t start = 2 * m < k ? ip : ip + m;
      std::size_t len = 2 * m < k ? m : k - m;
      split(loop.edges[wrap(static_cast<long>(start + turn % len), k)]);
      turn += 2;
    }
    if (loops.at(name).length() != before)
      warnings.push_back(concat("refined loop '", name, "' from ", before, " to ",
                                loops.at(name).length(), " edges to balance the zip arcs"));
  }
};

}  // namespace

RunResult run(const SingularizationPlan& plan, const RunOptions& options) {
  RunResult out;
  DisjointUnion merged = disjoint_union(plan.bundle);
  std::mt19937_64 rng(options.seed.value_or(0));

  Workspace ws;
  ws.s = SingularComplex(merged.complex);
  if (options.keep_snapshots) ws.snapshots = &out.snapshots;
  ws.snapshot();
  for (const auto& [name, loop] : plan.loops) ws.loops.emplace(name, shift_loop(loop, merged.offsets.at(loop.surface)));

  for (const OpStmt& op : plan.operations) {
    for (const std::string* name : {&op.loop, &op.partner}) {
      if (name->empty()) continue;
      const LoopMarking& loop = ws.loops.at(*name);
      if (loop.kind == LoopClass::Unclassified && !is_separating(ws.s.carrier(), loop))
        ws.warnings.push_back(concat("loop '", *name, "' is unclassified and non-separating"));
    }
  }

  std::vector<bool> zip_checks;
  for (const OpStmt& op : plan.operations) {
    try {
      if (op.kind == OperationKind::Collapse) {
        ws.s = collapse(ws.s, ws.loops.at(op.loop));
      } else if (op.kind == OperationKind::Zip) {
        VertexId p;
        VertexId q;
        if (const auto* z = std::get_if<ZipOp>(&ws.loops.at(op.loop).operation); z && z->p.valid()) {
          p = z->p;
          q = z->q;
          ws.balance_arcs(op.loop, p, q);
        } else {
          std::size_t k = ws.loops.at(op.loop).length();
          if (k % 2 == 1) ws.refine(op.loop, k + 1);
          const LoopMarking& loop = ws.loops.at(op.loop);
          k = loop.length();
          std::size_t ip = 0;
          if (options.seed) {
            ip = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
          } else {
            for (std::size_t i = 1; i < k; ++i)
              if (loop.cycle[i] < loop.cycle[ip]) ip = i;
          }
          p = loop.cycle[ip];
          q = loop.cycle[(ip + k / 2) % k];
        }
        const LoopMarking& loop = ws.loops.at(op.loop);
        zip_checks.push_back(zip_matches_collapse(ws.s, loop, p, q));
        ws.s = zip(ws.s, loop, p, q);
      } else {
        const VertexId a0 = ws.loops.at(op.loop).cycle.front();
        const std::size_t kb0 = ws.loops.at(op.partner).length();
        int offset = op.offset.value_or(0);
        bool reversed = op.reverse;
        if (options.seed && !op.offset) {
          offset = std::uniform_int_distribution<int>(0, static_cast<int>(kb0) - 1)(rng);
          reversed = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        }
        const VertexId target = ws.loops.at(op.partner).cycle[wrap(offset, kb0)];
        std::size_t k = std::lcm(ws.loops.at(op.loop).length(), kb0);
        ws.refine(op.loop, k);
        ws.refine(op.partner, k);
        const LoopMarking& a = ws.loops.at(op.loop);
        const LoopMarking& b = ws.loops.at(op.partner);
        long i0 = a.index_of(a0);
        long j0 = b.index_of(target);
        int adjusted = static_cast<int>(wrap(reversed ? j0 + i0 : j0 - i0, k));
        ws.s = identify(ws.s, a, b, adjusted, reversed);
      }
      ws.snapshot();
    } catch (const ScriptError&) {
      throw;
    } catch (const TopologyError& e) {
      throw ScriptError(e.kind(), op.line, 1, concat(to_string(op.kind), " failed: ", e.what()));
    }
  }

  PlanMetadata meta;
  meta.n = plan.bundle.n();
  meta.G = plan.bundle.total_genus();
  meta.zip_checks = std::move(zip_checks);
  meta.warnings = std::move(ws.warnings);
  out.report = check_theorems(ws.s, meta);
  out.result = std::move(ws.s);
  return out;
}

std::string report_json(const SingularizationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n"] = r.n;
  j["G"] = r.G;
  j["C"] = r.C;
  j["Z"] = r.Z;
  j["D"] = r.D;
  j["predicted_chi"] = r.predicted_chi;
  j["chi_total"] = r.chi_total;
  ordered_json comps = ordered_json::array();
  for (const ComponentSummary& c : r.components) {
    ordered_json item;
    item["betti"] = {c.betti.beta0, c.betti.beta1, c.betti.beta2};
    item["chi"] = c.betti.chi;
    item["singular_vertices"] = c.singular_vertices;
    item["singular_edges"] = c.singular_edges;
    comps.push_back(std::move(item));
  }
  j["components"] = std::move(comps);
  j["connected"] = r.connected;
  j["genus_formula"] = r.genus_formula ? ordered_json(*r.genus_formula) : ordered_json(nullptr);
  j["theorem1_ok"] = r.theorem1_ok;
  j["theorem2_ok"] = r.theorem2_ok ? ordered_json(*r.theorem2_ok) : ordered_json(nullptr);
  ordered_json lemma;
  lemma["per_op_delta_chi"] = r.lemma_checks.per_op_delta_chi;
  lemma["zip_equals_collapse"] = r.lemma_checks.zip_equals_collapse
                                     ? ordered_json(*r.lemma_checks.zip_equals_collapse)
                                     : ordered_json(nullptr);
  lemma["betti_deltas_ok"] = r.lemma_checks.betti_deltas_ok;
  j["lemma_checks"] = std::move(lemma);
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string cells_json(const CellComplex& c) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (const auto& [v, pos] : c.vertices()) {
    ordered_json item;
    item["id"] = v.value;
    item["position"] = pos ? ordered_json(*pos) : ordered_json(nullptr);
    verts.push_back(std::move(item));
  }
  ordered_json edges = ordered_json::array();
  ordered_json collapsed = ordered_json::array();
  for (const auto& [e, ed] : c.edges()) {
    if (c.deleted_edges().contains(e)) {
      collapsed.push_back(e.value);
      continue;
    }
    edges.push_back(ordered_json{{"id", e.value}, {"tail", ed.tail.value}, {"head", ed.head.value}});
  }
  ordered_json faces = ordered_json::array();
  for (const auto& [f, face] : c.faces()) {
    ordered_json sides = ordered_json::array();
    for (const Side& s : face.sides) {
      auto [rep, same] = c.find(s.edge);
      sides.push_back(ordered_json{{"edge", rep.value}, {"forward", s.forward == same}});
    }
    faces.push_back(ordered_json{{"id", f.value}, {"sides", std::move(sides)}});
  }
  j["vertices"] = std::move(verts);
  j["edges"] = std::move(edges);
  j["collapsed_edges"] = std::move(collapsed);
  j["faces"] = std::move(faces);
  return j.dump(2) + "\n";
}

std::string off_mesh(const CellComplex& c) {
  if (c.vertex_count() == 0 || !c.has_geometry())
    throw TopologyError(ErrorKind::NoGeometry, "complex has vertices without coordinates");
  std::map<VertexId, std::size_t> index;
  std::ostringstream out;
  out << "OFF\n" << c.vertex_count() << ' ' << c.face_count() << " 0\n";
  char buf[96];
  for (const auto& [v, pos] : c.vertices()) {
    index.emplace(v, index.size());
    std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f\n", (*pos)[0], (*pos)[1], (*pos)[2]);
    out << buf;
  }
  for (const auto& [f, face] : c.faces()) {
    out << 3;
    for (const Side& s : face.sides) out << ' ' << index.at(c.tail(s));
    out << '\n';
  }
  return out.str();
}

}  // namespace singular
