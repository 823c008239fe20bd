#include "singular/surgery.hpp"

#include <algorithm>
#include <map>
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

std::size_t wrap(long i, std::size_t k) {
  long m = static_cast<long>(k);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

// Loop must still be a simple cycle on the carrier, away from earlier loops
// and from singular cells.
void require_operable(const SingularComplex& s, const LoopMarking& loop) {
  const CellComplex& c = s.carrier();
  validate_simple_cycle(c, loop.cycle, loop.edges, loop.surface);
  for (VertexId v : loop.cycle) {
    if (s.operated_vertices().contains(c.find(v)))
      throw TopologyError(ErrorKind::Overlap,
                          concat("vertex ", v, " already belongs to an operated loop"));
  }
  auto links = compute_links(c, std::set<VertexId>(loop.cycle.begin(), loop.cycle.end()));
  for (VertexId v : loop.cycle) {
    if (!links.at(c.find(v)).is_single_cycle())
      throw TopologyError(ErrorKind::Overlap, concat("vertex ", v, " is singular"));
  }
  for (EdgeId e : loop.edges) {
    if (c.incidence_count(e) != 2)
      throw TopologyError(ErrorKind::Overlap, concat("edge ", e, " is singular"));
  }
}

bool runs_from(const CellComplex& c, EdgeId e, VertexId from) {
  return c.edge(e).tail == c.find(from);
}

}  // namespace

const char* to_string(OperationKind kind) {
  switch (kind) {
    case OperationKind::Collapse: return "collapse";
    case OperationKind::Zip: return "zip";
    case OperationKind::Identify: return "identify";
  }
  return "unknown";
}

int SingularComplex::count(OperationKind kind) const {
  return static_cast<int>(std::count_if(log_.begin(), log_.end(),
                                        [kind](const OperationRecord& r) { return r.kind == kind; }));
}

std::set<VertexId> SingularComplex::singular_vertices() const {
  std::set<VertexId> out;
  for (VertexId v : singular_vertices_) out.insert(carrier_.find(v));
  return out;
}

std::set<EdgeId> SingularComplex::singular_edges() const {
  std::set<EdgeId> out;
  for (EdgeId e : singular_edges_) out.insert(carrier_.find(e).first);
  return out;
}

SingularComplex SingularComplex::with_carrier(CellComplex carrier) const {
  SingularComplex out = *this;
  out.carrier_ = std::move(carrier);
  return out;
}

SingularComplex collapse(const SingularComplex& s, const LoopMarking& loop) {
  require_operable(s, loop);
  const CellComplex& c = s.carrier();
  QuotientSpec spec;
  for (std::size_t i = 1; i < loop.length(); ++i) spec.vertex_pairs.emplace_back(loop.cycle[0], loop.cycle[i]);
  spec.tombstone = loop.edges;

  SingularComplex out = s;
  out.carrier_ = c.quotient(spec);
  out.log_.push_back({OperationKind::Collapse, {loop.surface}, betti_numbers(c), betti_numbers(out.carrier_)});
  out.singular_vertices_.insert(out.carrier_.find(loop.cycle[0]));
  for (VertexId v : loop.cycle) out.operated_.insert(out.carrier_.find(v));
  return out;
}

SingularComplex zip(const SingularComplex& s, const LoopMarking& loop, VertexId p, VertexId q) {
  if (p == q) throw TopologyError(ErrorKind::DegenerateArc, "zip endpoints coincide");
  const int ip = loop.index_of(p);
  const int iq = loop.index_of(q);
  if (ip < 0 || iq < 0)
    throw TopologyError(ErrorKind::ArcMismatch, concat("zip endpoints ", p, ", ", q, " must lie on the loop"));
  const std::size_t k = loop.length();
  const std::size_t m = wrap(iq - ip, k);
  if (2 * m != k)
    throw TopologyError(ErrorKind::ArcMismatch,
                        concat("arcs between ", p, " and ", q, " have ", m, " and ", k - m, " edges"));
  require_operable(s, loop);
  const CellComplex& c = s.carrier();

  auto forward = [&](std::size_t t) { return loop.cycle[wrap(ip + static_cast<long>(t), k)]; };
  auto backward = [&](std::size_t t) { return loop.cycle[wrap(ip - static_cast<long>(t), k)]; };

  QuotientSpec spec;
  for (std::size_t t = 1; t < m; ++t) spec.vertex_pairs.emplace_back(forward(t), backward(t));
  for (std::size_t t = 0; t < m; ++t) {
    EdgeId ef = loop.edges[wrap(ip + static_cast<long>(t), k)];
    EdgeId eb = loop.edges[wrap(ip - static_cast<long>(t) - 1, k)];
    bool same = runs_from(c, ef, forward(t)) == runs_from(c, eb, backward(t));
    spec.edge_pairs.push_back({ef, eb, same});
  }

  SingularComplex out = s;
  out.carrier_ = c.quotient(spec);
  out.log_.push_back({OperationKind::Zip, {loop.surface}, betti_numbers(c), betti_numbers(out.carrier_)});
  for (std::size_t t = 0; t <= m; ++t) out.singular_vertices_.insert(out.carrier_.find(forward(t)));
  for (const auto& pair : spec.edge_pairs) out.singular_edges_.insert(out.carrier_.find(pair.a).first);
  for (VertexId v : loop.cycle) out.operated_.insert(out.carrier_.find(v));
  return out;
}

SingularComplex identify(const SingularComplex& s, const LoopMarking& a, const LoopMarking& b,
                         int offset, bool reversed) {
  const std::size_t k = a.length();
  if (b.length() != k)
    throw TopologyError(ErrorKind::LengthMismatch,
                        concat("loops have ", k, " and ", b.length(), " edges"));
  std::set<VertexId> va(a.cycle.begin(), a.cycle.end());
  std::set<VertexId> vb(b.cycle.begin(), b.cycle.end());
  if (va == vb) throw TopologyError(ErrorKind::SelfIdentification, "a loop cannot be identified with itself");
  for (VertexId v : vb)
    if (va.contains(v))
      throw TopologyError(ErrorKind::Overlap, concat("loops share vertex ", v));
  require_operable(s, a);
  require_operable(s, b);
  const CellComplex& c = s.carrier();

  auto partner = [&](std::size_t i) {
    long step = reversed ? -static_cast<long>(i) : static_cast<long>(i);
    return wrap(offset + step, k);
  };

  QuotientSpec spec;
  for (std::size_t i = 0; i < k; ++i) spec.vertex_pairs.emplace_back(a.cycle[i], b.cycle[partner(i)]);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = partner(i);
    EdgeId ea = a.edges[i];
    EdgeId eb = reversed ? b.edges[wrap(static_cast<long>(j) - 1, k)] : b.edges[j];
    bool same = runs_from(c, ea, a.cycle[i]) == runs_from(c, eb, b.cycle[j]);
    spec.edge_pairs.push_back({ea, eb, same});
  }

  SingularComplex out = s;
  out.carrier_ = c.quotient(spec);
  out.log_.push_back({OperationKind::Identify, {a.surface, b.surface}, betti_numbers(c),
                      betti_numbers(out.carrier_)});
  for (VertexId v : a.cycle) out.singular_vertices_.insert(out.carrier_.find(v));
  for (EdgeId e : a.edges) out.singular_edges_.insert(out.carrier_.find(e).first);
  for (VertexId v : a.cycle) out.operated_.insert(out.carrier_.find(v));
  for (VertexId v : b.cycle) out.operated_.insert(out.carrier_.find(v));
  return out;
}

SingularSet singular_set(const CellComplex& c) {
  SingularSet out;
  for (const auto& [v, link] : compute_links(c))
    if (!link.is_single_cycle()) out.vertices.insert(v);
  for (const auto& [e, list] : c.incidences())
    if (list.size() != 2) out.edges.insert(e);

  std::map<VertexId, std::vector<EdgeId>> around;
  for (EdgeId e : out.edges) {
    const Edge& ed = c.edge(e);
    around[ed.tail].push_back(e);
    around[ed.head].push_back(e);
  }
  for (VertexId v : out.vertices) {
    auto it = around.find(v);
    if (it == around.end())
      out.cone_points.push_back(v);
    else if (it->second.size() == 1)
      out.pinch_points.push_back(v);
  }

  std::set<EdgeId> seen;
  for (EdgeId start : out.edges) {
    if (seen.contains(start)) continue;
    DoubleCurve curve;
    std::set<VertexId> verts;
    std::vector<EdgeId> pending{start};
    seen.insert(start);
    while (!pending.empty()) {
      EdgeId e = pending.back();
      pending.pop_back();
      curve.edges.push_back(e);
      for (VertexId v : {c.edge(e).tail, c.edge(e).head}) {
        verts.insert(v);
        for (EdgeId f : around[v])
          if (seen.insert(f).second) pending.push_back(f);
      }
    }
    std::sort(curve.edges.begin(), curve.edges.end());
    curve.vertices.assign(verts.begin(), verts.end());
    curve.closed = std::all_of(verts.begin(), verts.end(),
                               [&](VertexId v) { return around[v].size() == 2; });
    out.double_curves.push_back(std::move(curve));
  }
  return out;
}

SingularSet singular_set(const SingularComplex& s) { return singular_set(s.carrier()); }

}  // namespace singular
