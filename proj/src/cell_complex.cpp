#include "singular/cell_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "singular/link.hpp"
#include "singular/loops.hpp"

namespace singular {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::NotASurface: return "not-a-surface";
    case ErrorKind::NonOrientable: return "non-orientable";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::UnsupportedSubdivision: return "unsupported-subdivision";
    case ErrorKind::InvalidCut: return "invalid-cut";
    case ErrorKind::DegenerateGrid: return "degenerate-grid";
    case ErrorKind::NoSuchLoop: return "no-such-loop";
    case ErrorKind::NameClash: return "name-clash";
    case ErrorKind::CannotCoarsen: return "cannot-coarsen";
    case ErrorKind::NotSimple: return "not-simple";
    case ErrorKind::NotACycle: return "not-a-cycle";
    case ErrorKind::Overlap: return "overlap";
    case ErrorKind::ArcMismatch: return "arc-mismatch";
    case ErrorKind::DegenerateArc: return "degenerate-arc";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::SelfIdentification: return "self-identification";
    case ErrorKind::CannotBeConnected: return "cannot-be-connected";
    case ErrorKind::OracleTimeout: return "oracle-timeout";
    case ErrorKind::NoGeometry: return "no-geometry";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::UnknownName: return "unknown-name";
    case ErrorKind::LoopReuse: return "loop-reuse";
    case ErrorKind::DisjointnessConflict: return "disjointness-conflict";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw TopologyError(kind, message);
}

template <class... Args>
std::string concat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

// Union-find with a parity bit per element; roots are always the smallest id.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<std::int32_t, int> find(std::int32_t x) {
    path_.clear();
    std::int32_t root = x;
    while (parent_[root] != root) {
      path_.push_back(root);
      root = parent_[root];
    }
    int acc = 0;
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      acc ^= parity_[*it];
      parity_[*it] = acc;
      parent_[*it] = root;
    }
    return {root, path_.empty() ? 0 : parity_[x]};
  }

  // Records that x relates to y with the given parity. Returns false when this
  // contradicts an earlier union.
  bool unite(std::int32_t x, std::int32_t y, int relation) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == relation;
    if (ry < rx) std::swap(rx, ry);
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ relation;
    return true;
  }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<int> parity_;
  std::vector<std::int32_t> path_;
};

}  // namespace

CellComplex CellComplex::from_cells(std::span<const VertexId> vertices,
                                    std::span<const std::pair<EdgeId, Edge>> edges,
                                    std::span<const std::pair<FaceId, Face>> faces) {
  CellComplex c;
  for (VertexId v : vertices) {
    if (!v.valid()) fail(ErrorKind::MalformedInput, concat("negative vertex id ", v));
    if (!c.vertices_.emplace(v, std::nullopt).second)
      fail(ErrorKind::MalformedInput, concat("duplicate vertex id ", v));
    c.next_vertex_ = std::max(c.next_vertex_, v.value + 1);
  }
  for (const auto& [id, e] : edges) {
    if (!id.valid()) fail(ErrorKind::MalformedInput, concat("negative edge id ", id));
    if (!c.vertices_.contains(e.tail) || !c.vertices_.contains(e.head))
      fail(ErrorKind::MalformedInput, concat("edge ", id, " references a missing vertex"));
    if (!c.edges_.emplace(id, e).second)
      fail(ErrorKind::MalformedInput, concat("duplicate edge id ", id));
    c.next_edge_ = std::max(c.next_edge_, id.value + 1);
  }
  for (const auto& [id, f] : faces) {
    if (!id.valid()) fail(ErrorKind::MalformedInput, concat("negative face id ", id));
    for (const Side& s : f.sides) {
      if (!c.edges_.contains(s.edge))
        fail(ErrorKind::MalformedInput,
             concat("face ", id, " references missing edge ", s.edge));
    }
    for (int k = 0; k < 3; ++k) {
      if (c.head(f.sides[k]) != c.tail(f.sides[(k + 1) % 3]))
        fail(ErrorKind::MalformedInput, concat("face ", id, " is not a closed walk"));
    }
    if (!c.faces_.emplace(id, f).second)
      fail(ErrorKind::MalformedInput, concat("duplicate face id ", id));
    c.next_face_ = std::max(c.next_face_, id.value + 1);
  }
  return c;
}

CellComplex CellComplex::from_triangles(int vertex_count,
                                        std::span<const std::array<int, 3>> triangles,
                                        std::span<const Point3> positions) {
  CellComplex c;
  for (int v = 0; v < vertex_count; ++v) {
    std::optional<Point3> p;
    if (static_cast<std::size_t>(v) < positions.size()) p = positions[v];
    c.add_vertex(p);
  }
  std::map<std::pair<int, int>, EdgeId> by_pair;
  for (const auto& tri : triangles) {
    Face face;
    for (int k = 0; k < 3; ++k) {
      int from = tri[k];
      int to = tri[(k + 1) % 3];
      if (from < 0 || to < 0 || from >= vertex_count || to >= vertex_count)
        fail(ErrorKind::MalformedInput, "triangle references a missing vertex");
      auto key = std::minmax(from, to);
      auto it = by_pair.find(key);
      if (it == by_pair.end())
        it = by_pair.emplace(key, c.add_edge(VertexId(from), VertexId(to))).first;
      face.sides[k] = Side{it->second, c.edges_.at(it->second).tail == VertexId(from)};
    }
    c.add_face(face);
  }
  return c;
}

const Edge& CellComplex::edge(EdgeId e) const { return edges_.at(find(e).first); }

const Face& CellComplex::face(FaceId f) const { return faces_.at(f); }

std::optional<Point3> CellComplex::position(VertexId v) const {
  auto it = vertices_.find(find(v));
  if (it == vertices_.end()) return std::nullopt;
  return it->second;
}

bool CellComplex::has_geometry() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const auto& entry) { return entry.second.has_value(); });
}

VertexId CellComplex::find(VertexId v) const {
  auto it = vertex_alias_.find(v);
  return it == vertex_alias_.end() ? v : it->second;
}

std::pair<EdgeId, bool> CellComplex::find(EdgeId e) const {
  auto it = edge_alias_.find(e);
  return it == edge_alias_.end() ? std::pair{e, true} : it->second;
}

VertexId CellComplex::head(const Side& s) const {
  const Edge& e = edges_.at(s.edge);
  return s.forward ? e.head : e.tail;
}

VertexId CellComplex::tail(const Side& s) const {
  const Edge& e = edges_.at(s.edge);
  return s.forward ? e.tail : e.head;
}

std::vector<Side> CellComplex::reduced_boundary(FaceId f) const {
  std::vector<Side> out;
  for (const Side& s : faces_.at(f).sides)
    if (!deleted_edges_.contains(s.edge)) out.push_back(s);
  return out;
}

std::map<EdgeId, std::vector<Incidence>> CellComplex::incidences() const {
  std::map<EdgeId, std::vector<Incidence>> out;
  for (const auto& [id, e] : edges_)
    if (!deleted_edges_.contains(id)) out[id];
  for (const auto& [fid, f] : faces_) {
    for (int k = 0; k < 3; ++k) {
      EdgeId e = f.sides[k].edge;
      if (!deleted_edges_.contains(e)) out[e].push_back({fid, k});
    }
  }
  return out;
}

std::size_t CellComplex::incidence_count(EdgeId e) const {
  EdgeId rep = find(e).first;
  std::size_t count = 0;
  for (const auto& [fid, f] : faces_)
    for (const Side& s : f.sides)
      if (s.edge == rep) ++count;
  return count;
}

std::vector<EdgeId> CellComplex::edges_between(VertexId u, VertexId v) const {
  u = find(u);
  v = find(v);
  std::vector<EdgeId> out;
  for (const auto& [id, e] : edges_) {
    if (deleted_edges_.contains(id)) continue;
    if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) out.push_back(id);
  }
  return out;
}

bool CellComplex::link_is_single_cycle(VertexId v) const {
  VertexId rep = find(v);
  auto links = compute_links(*this, std::set<VertexId>{rep});
  auto it = links.find(rep);
  return it != links.end() && it->second.is_single_cycle();
}

VertexId CellComplex::add_vertex(std::optional<Point3> position) {
  VertexId id(next_vertex_++);
  vertices_.emplace(id, position);
  return id;
}

EdgeId CellComplex::add_edge(VertexId tail, VertexId head) {
  EdgeId id(next_edge_++);
  edges_.emplace(id, Edge{tail, head});
  return id;
}

FaceId CellComplex::add_face(const Face& face) {
  FaceId id(next_face_++);
  faces_.emplace(id, face);
  return id;
}

void CellComplex::set_edge(EdgeId e, Edge endpoints) { edges_.at(e) = endpoints; }

void CellComplex::set_face(FaceId f, const Face& face) { faces_.at(f) = face; }

CellComplex CellComplex::quotient(const QuotientSpec& spec) const {
  ParityUnionFind vertex_classes(static_cast<std::size_t>(next_vertex_));
  for (auto [a, b] : spec.vertex_pairs) {
    a = find(a);
    b = find(b);
    if (!vertices_.contains(a) || !vertices_.contains(b))
      fail(ErrorKind::MalformedInput, "quotient references a missing vertex");
    vertex_classes.unite(a.value, b.value, 0);
  }
  auto vroot = [&](VertexId v) { return VertexId(vertex_classes.find(v.value).first); };

  ParityUnionFind edge_classes(static_cast<std::size_t>(next_edge_));
  for (const auto& pair : spec.edge_pairs) {
    auto [ra, da] = find(pair.a);
    auto [rb, db] = find(pair.b);
    if (!edges_.contains(ra) || !edges_.contains(rb))
      fail(ErrorKind::MalformedInput, "quotient references a missing edge");
    if (deleted_edges_.contains(ra) || deleted_edges_.contains(rb))
      fail(ErrorKind::MalformedInput, "cannot glue a collapsed edge");
    int relation = (da ? 0 : 1) ^ (db ? 0 : 1) ^ (pair.same_direction ? 0 : 1);
    if (!edge_classes.unite(ra.value, rb.value, relation))
      fail(ErrorKind::MalformedInput, "contradictory edge identification");
  }

  CellComplex out;
  out.next_vertex_ = next_vertex_;
  out.next_edge_ = next_edge_;
  out.next_face_ = next_face_;

  for (const auto& [v, pos] : vertices_) {
    VertexId root = vroot(v);
    if (root == v)
      out.vertices_.emplace(v, pos);
    else
      out.vertex_alias_.emplace(v, root);
  }
  for (const auto& [alias, rep] : vertex_alias_) out.vertex_alias_[alias] = vroot(rep);

  for (const auto& [id, e] : edges_) {
    auto [root, parity] = edge_classes.find(id.value);
    Edge mapped{vroot(e.tail), vroot(e.head)};
    if (root == id.value) {
      out.edges_.emplace(id, mapped);
      continue;
    }
    const Edge& r = edges_.at(EdgeId(root));
    Edge rmapped{vroot(r.tail), vroot(r.head)};
    bool same = parity == 0;
    bool consistent = same ? (mapped.tail == rmapped.tail && mapped.head == rmapped.head)
                           : (mapped.tail == rmapped.head && mapped.head == rmapped.tail);
    if (!consistent)
      fail(ErrorKind::MalformedInput,
           concat("edge ", id, " glued to edge ", root, " with mismatched endpoints"));
    out.edge_alias_.emplace(id, std::pair{EdgeId(root), same});
  }
  for (const auto& [alias, target] : edge_alias_) {
    auto [root, parity] = edge_classes.find(target.first.value);
    out.edge_alias_[alias] = {EdgeId(root), target.second == (parity == 0)};
  }

  for (EdgeId e : deleted_edges_) out.deleted_edges_.insert(EdgeId(edge_classes.find(e.value).first));
  for (EdgeId e : spec.tombstone) {
    EdgeId root(edge_classes.find(find(e).first.value).first);
    const Edge& mapped = out.edges_.at(root);
    if (mapped.tail != mapped.head)
      fail(ErrorKind::MalformedInput,
           concat("edge ", e, " collapsed without gluing its endpoints"));
    out.deleted_edges_.insert(root);
  }

  for (const auto& [fid, f] : faces_) {
    Face g = f;
    for (Side& s : g.sides) {
      auto [root, parity] = edge_classes.find(s.edge.value);
      s.edge = EdgeId(root);
      s.forward = s.forward != (parity == 1);
    }
    out.faces_.emplace(fid, g);
  }
  return out;
}

SubdivisionResult CellComplex::subdivide(EdgeId e) const {
  EdgeId rep = find(e).first;
  if (!edges_.contains(rep) || deleted_edges_.contains(rep))
    fail(ErrorKind::UnsupportedSubdivision, concat("edge ", e, " is missing or collapsed"));
  auto all = incidences();
  const auto& inc = all.at(rep);
  if (inc.size() != 2 || inc[0].face == inc[1].face)
    fail(ErrorKind::UnsupportedSubdivision,
         concat("edge ", e, " lies in ", inc.size(), " face sides; need two distinct faces"));

  CellComplex out = *this;
  const Edge old = edges_.at(rep);
  std::optional<Point3> mid;
  auto pa = vertices_.at(old.tail);
  auto pb = vertices_.at(old.head);
  if (pa && pb)
    mid = Point3{((*pa)[0] + (*pb)[0]) / 2, ((*pa)[1] + (*pb)[1]) / 2,
                 ((*pa)[2] + (*pb)[2]) / 2};
  VertexId m = out.add_vertex(mid);
  EdgeId first = out.add_edge(old.tail, m);
  EdgeId second = out.add_edge(m, old.head);
  out.edges_.erase(rep);

  for (const Incidence& where : inc) {
    const Face f = faces_.at(where.face);
    const Side s = f.sides[where.side];
    const Side s1 = f.sides[(where.side + 1) % 3];
    const Side s2 = f.sides[(where.side + 2) % 3];
    VertexId opposite = head(s1);
    EdgeId diagonal = out.add_edge(m, opposite);
    Side to_mid = s.forward ? Side{first, true} : Side{second, false};
    Side from_mid = s.forward ? Side{second, true} : Side{first, false};
    out.faces_.at(where.face) = Face{{to_mid, Side{diagonal, true}, s2}};
    out.add_face(Face{{from_mid, s1, Side{diagonal, false}}});
  }
  return {std::move(out), EdgeSplit{rep, old.tail, old.head, m, first, second}};
}

CellComplex CellComplex::shifted(std::int32_t vo, std::int32_t eo, std::int32_t fo) const {
  CellComplex out;
  auto sv = [vo](VertexId v) { return VertexId(v.value + vo); };
  auto se = [eo](EdgeId e) { return EdgeId(e.value + eo); };
  for (const auto& [v, p] : vertices_) out.vertices_.emplace(sv(v), p);
  for (const auto& [id, e] : edges_) out.edges_.emplace(se(id), Edge{sv(e.tail), sv(e.head)});
  for (const auto& [id, f] : faces_) {
    Face g = f;
    for (Side& s : g.sides) s.edge = se(s.edge);
    out.faces_.emplace(FaceId(id.value + fo), g);
  }
  for (EdgeId e : deleted_edges_) out.deleted_edges_.insert(se(e));
  for (const auto& [a, r] : vertex_alias_) out.vertex_alias_.emplace(sv(a), sv(r));
  for (const auto& [a, r] : edge_alias_) out.edge_alias_.emplace(se(a), std::pair{se(r.first), r.second});
  out.next_vertex_ = next_vertex_ + vo;
  out.next_edge_ = next_edge_ + eo;
  out.next_face_ = next_face_ + fo;
  return out;
}

void CellComplex::absorb(const CellComplex& other) {
  auto merge = [](auto& into, const auto& from, const char* what) {
    for (const auto& entry : from)
      if (!into.insert(entry).second)
        fail(ErrorKind::MalformedInput, concat("id collision while merging ", what));
  };
  merge(vertices_, other.vertices_, "vertices");
  merge(edges_, other.edges_, "edges");
  merge(faces_, other.faces_, "faces");
  merge(vertex_alias_, other.vertex_alias_, "vertex aliases");
  merge(edge_alias_, other.edge_alias_, "edge aliases");
  deleted_edges_.insert(other.deleted_edges_.begin(), other.deleted_edges_.end());
  next_vertex_ = std::max(next_vertex_, other.next_vertex_);
  next_edge_ = std::max(next_edge_, other.next_edge_);
  next_face_ = std::max(next_face_, other.next_face_);
}

CellComplex CellComplex::restricted_to(const std::set<VertexId>& keep) const {
  CellComplex out;
  out.next_vertex_ = next_vertex_;
  out.next_edge_ = next_edge_;
  out.next_face_ = next_face_;
  for (const auto& [v, p] : vertices_)
    if (keep.contains(v)) out.vertices_.emplace(v, p);
  for (const auto& [id, e] : edges_) {
    if (!keep.contains(e.tail)) continue;
    out.edges_.emplace(id, e);
    if (deleted_edges_.contains(id)) out.deleted_edges_.insert(id);
  }
  for (const auto& [id, f] : faces_)
    if (keep.contains(tail(f.sides[0]))) out.faces_.emplace(id, f);
  for (const auto& [a, r] : vertex_alias_)
    if (keep.contains(r)) out.vertex_alias_.emplace(a, r);
  for (const auto& [a, r] : edge_alias_)
    if (out.edges_.contains(r.first)) out.edge_alias_.emplace(a, r);
  return out;
}

CellComplex build_from_cells(std::span<const VertexId> vertices,
                             std::span<const std::pair<EdgeId, Edge>> edges,
                             std::span<const std::pair<FaceId, Face>> faces) {
  return CellComplex::from_cells(vertices, edges, faces);
}

long euler_count(const CellComplex& c) {
  return static_cast<long>(c.vertex_count()) - static_cast<long>(c.live_edge_count()) +
         static_cast<long>(c.face_count());
}

namespace {

// Vertex classes grouped by connectivity, each group sorted, groups ordered by
// their smallest vertex.
std::vector<std::set<VertexId>> vertex_groups(const CellComplex& c) {
  std::map<VertexId, std::int32_t> index;
  std::vector<VertexId> ids;
  for (const auto& [v, p] : c.vertices()) {
    index.emplace(v, static_cast<std::int32_t>(ids.size()));
    ids.push_back(v);
  }
  ParityUnionFind groups(ids.size());
  for (const auto& [id, e] : c.edges()) groups.unite(index.at(e.tail), index.at(e.head), 0);
  std::map<std::int32_t, std::set<VertexId>> by_root;
  for (std::size_t i = 0; i < ids.size(); ++i)
    by_root[groups.find(static_cast<std::int32_t>(i)).first].insert(ids[i]);
  std::vector<std::set<VertexId>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::vector<CellComplex> connected_components(const CellComplex& c) {
  std::vector<CellComplex> out;
  for (const auto& group : vertex_groups(c)) out.push_back(c.restricted_to(group));
  return out;
}

std::size_t component_count(const CellComplex& c) { return vertex_groups(c).size(); }

std::vector<int> validate_surface_components(const CellComplex& c) {
  if (!c.deleted_edges().empty())
    fail(ErrorKind::NotASurface, "complex carries collapsed edges");

  auto incidences = c.incidences();
  for (const auto& [e, list] : incidences) {
    if (list.size() != 2)
      fail(ErrorKind::NotASurface,
           concat("edge ", e, " lies in ", list.size(), " face sides (expected 2)"));
  }
  auto links = compute_links(c);
  for (const auto& [v, p] : c.vertices()) {
    auto it = links.find(v);
    if (it == links.end() || !it->second.is_single_cycle())
      fail(ErrorKind::NotASurface, concat("link of vertex ", v, " is not a single cycle"));
  }

  // Propagate a face orientation across edges; each edge must then be walked
  // once in each direction.
  std::map<FaceId, int> flip;
  for (const auto& [start, face] : c.faces()) {
    if (flip.contains(start)) continue;
    flip[start] = 0;
    std::queue<FaceId> pending;
    pending.push(start);
    while (!pending.empty()) {
      FaceId f = pending.front();
      pending.pop();
      for (int k = 0; k < 3; ++k) {
        const Side& s = c.face(f).sides[k];
        for (const Incidence& other : incidences.at(s.edge)) {
          if (other.face == f && other.side == k) continue;
          bool here = s.forward != (flip[f] == 1);
          const Side& t = c.face(other.face).sides[other.side];
          int wanted = (t.forward != !here) ? 1 : 0;  // flip making t run against `here`
          auto it = flip.find(other.face);
          if (it == flip.end()) {
            flip[other.face] = wanted;
            pending.push(other.face);
          } else if (it->second != wanted) {
            fail(ErrorKind::NonOrientable,
                 concat("no consistent orientation across edge ", s.edge));
          }
        }
      }
    }
  }

  std::vector<int> genera;
  for (const CellComplex& part : connected_components(c)) {
    long chi = euler_count(part);
    if (chi > 2 || chi % 2 != 0)
      fail(ErrorKind::NotASurface, concat("component has Euler characteristic ", chi));
    genera.push_back(static_cast<int>((2 - chi) / 2));
  }
  return genera;
}

int validate_closed_orientable_surface(const CellComplex& c) {
  auto genera = validate_surface_components(c);
  if (genera.size() != 1)
    fail(ErrorKind::Disconnected,
         concat("complex has ", genera.size(), " components; validate each separately"));
  return genera.front();
}

SubdivisionResult subdivide_edge(const CellComplex& c, EdgeId e) { return c.subdivide(e); }

CellComplex cut_along_cycle(const CellComplex& c, const LoopMarking& cycle) {
  return cut_along_cycle(c, cycle.cycle, cycle.edges);
}

CellComplex cut_along_cycle(const CellComplex& c, std::span<const VertexId> cycle,
                            std::span<const EdgeId> edges) {
  const std::size_t k = cycle.size();
  if (k < 2 || edges.size() != k) fail(ErrorKind::InvalidCut, "cycle is too short");

  std::vector<VertexId> verts(k);
  std::vector<EdgeId> loop_edges(k);
  std::set<EdgeId> on_loop;
  for (std::size_t i = 0; i < k; ++i) {
    verts[i] = c.find(cycle[i]);
    loop_edges[i] = c.find(edges[i]).first;
    if (!c.has_edge(loop_edges[i]) || c.is_deleted(loop_edges[i]))
      fail(ErrorKind::InvalidCut, concat("edge ", edges[i], " is not a live edge"));
    on_loop.insert(loop_edges[i]);
  }
  auto incidences = c.incidences();
  for (EdgeId e : loop_edges) {
    const auto& inc = incidences.at(e);
    if (inc.size() != 2 || inc[0].face == inc[1].face)
      fail(ErrorKind::InvalidCut, concat("edge ", e, " is singular"));
  }
  auto links = compute_links(c, std::set<VertexId>(verts.begin(), verts.end()));
  for (VertexId v : verts) {
    if (!links.at(v).is_single_cycle())
      fail(ErrorKind::InvalidCut, concat("vertex ", v, " is singular"));
  }

  auto end_at = [&](EdgeId e, VertexId v) {
    const Edge& ed = c.edge(e);
    return EdgeEnd{e, ed.head == v && ed.tail != v};
  };

  // Walk each vertex link from the incoming loop edge to the outgoing one on
  // side A. The side-A face of the incoming edge is fixed by the previous step.
  std::set<std::pair<EdgeEnd, VertexId>> side_a_ends;
  std::set<Incidence> side_a_incidences;
  const Incidence initial = incidences.at(loop_edges[k - 1]).front();
  Incidence entering = initial;
  for (std::size_t i = 0; i < k; ++i) {
    VertexId v = verts[i];
    EdgeEnd in = end_at(loop_edges[(i + k - 1) % k], v);
    EdgeEnd out = end_at(loop_edges[i], v);
    auto walk = links.at(v).walk(in, entering, out);
    if (!walk) fail(ErrorKind::InvalidCut, concat("cannot separate sides at vertex ", v));
    for (const EdgeEnd& end : walk->interior) side_a_ends.insert({end, v});
    side_a_incidences.insert(entering);
    side_a_incidences.insert(walk->last);
    entering = walk->last;
  }
  if (entering != initial) fail(ErrorKind::InvalidCut, "cycle is one-sided");

  CellComplex out = c;
  std::vector<VertexId> copies(k);
  for (std::size_t i = 0; i < k; ++i) copies[i] = out.add_vertex(c.position(verts[i]));
  std::map<VertexId, VertexId> copy_of;
  for (std::size_t i = 0; i < k; ++i) copy_of[verts[i]] = copies[i];

  std::map<EdgeId, EdgeId> edge_copy;
  for (std::size_t i = 0; i < k; ++i) {
    const Edge& e = c.edge(loop_edges[i]);
    edge_copy[loop_edges[i]] = out.add_edge(copy_of.at(e.tail), copy_of.at(e.head));
  }

  // Non-loop edge ends on side B move to the copy.
  for (const auto& [e, ed] : c.edges()) {
    if (on_loop.contains(e)) continue;
    Edge moved = ed;
    if (auto it = copy_of.find(ed.tail);
        it != copy_of.end() && !side_a_ends.contains({EdgeEnd{e, false}, ed.tail}))
      moved.tail = it->second;
    if (auto it = copy_of.find(ed.head);
        it != copy_of.end() && !side_a_ends.contains({EdgeEnd{e, true}, ed.head}))
      moved.head = it->second;
    if (moved.tail != ed.tail || moved.head != ed.head) out.set_edge(e, moved);
  }
  for (EdgeId e : loop_edges) {
    for (const Incidence& inc : incidences.at(e)) {
      if (side_a_incidences.contains(inc)) continue;
      Face f = out.face(inc.face);
      f.sides[inc.side].edge = edge_copy.at(e);
      out.set_face(inc.face, f);
    }
  }
  return out;
}

}  // namespace singular
