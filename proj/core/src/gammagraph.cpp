#include "adic/gammagraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "adic/error.hpp"

namespace adic {

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Divisorial: return "divisorial";
    case VertexKind::ClassicalLeaf: return "classical";
    case VertexKind::UnboundedLeaf: return "unbounded";
  }
  return "?";
}

std::size_t GammaGraph::add_vertex(std::string id, VertexKind kind) {
  if (vertex_index_.count(id)) throw StructuralError("duplicate vertex id \"" + id + "\"");
  vertex_index_[id] = vertices_.size();
  vertices_.push_back({std::move(id), kind});
  adjacency_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t GammaGraph::add_edge(std::string id, std::size_t u, std::size_t v, std::optional<GroupElem> length) {
  if (edge_index_.count(id)) throw StructuralError("duplicate edge id \"" + id + "\"");
  if (u >= vertices_.size() || v >= vertices_.size()) throw StructuralError("edge \"" + id + "\" has a missing endpoint");
  if (u == v) throw StructuralError("edge \"" + id + "\" is a loop");
  if (length) {
    require_same_rank(rank_, length->rank(), "edge length");
    if (length->sign() <= 0) throw StructuralError("edge \"" + id + "\" must have positive length");
  } else if (vertices_[u].kind != VertexKind::Divisorial) {
    std::swap(u, v);
  }
  edge_index_[id] = edges_.size();
  edges_.push_back({std::move(id), u, v, std::move(length)});
  adjacency_[u].push_back(edges_.size() - 1);
  adjacency_[v].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

std::optional<std::size_t> GammaGraph::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GammaGraph::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GammaGraph::other_end(std::size_t e, std::size_t v) const {
  const Edge& ed = edges_.at(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw StructuralError("vertex is not an end of edge \"" + ed.id + "\"");
}

bool GammaGraph::in_skeleton_vertex(std::size_t v) const {
  return std::find(skeleton_.vertices.begin(), skeleton_.vertices.end(), v) != skeleton_.vertices.end();
}

bool GammaGraph::in_skeleton_edge(std::size_t e) const {
  return std::find(skeleton_.edges.begin(), skeleton_.edges.end(), e) != skeleton_.edges.end();
}

bool GammaGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : adjacency_[v]) {
      const std::size_t w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == vertices_.size();
}

bool GammaGraph::is_tree() const { return is_connected() && edges_.size() + 1 == vertices_.size(); }

Ranger GammaGraph::edge_length(std::size_t e) const {
  const Edge& ed = edges_.at(e);
  return ed.length ? Ranger::principal(*ed.length) : Ranger::unbounded(rank_, 1);
}

GraphPoint GammaGraph::point_on_edge(std::size_t e, const Ranger& offset) const {
  const Edge& ed = edges_.at(e);
  const Ranger zero = Ranger::principal(GroupElem::zero(rank_));
  const Ranger len = edge_length(e);
  if (offset < zero || len < offset) throw DomainError("offset outside edge \"" + ed.id + "\"");
  if (offset == zero) return GraphPoint::at_vertex(ed.u);
  if (offset == len) return GraphPoint::at_vertex(ed.v);
  return GraphPoint::on_edge(e, offset);
}

GraphPoint GammaGraph::point_on_edge_from(std::size_t e, std::size_t from, const Ranger& t) const {
  const Edge& ed = edges_.at(e);
  if (from == ed.u) return point_on_edge(e, t);
  if (from != ed.v) throw StructuralError("vertex is not an end of edge \"" + ed.id + "\"");
  if (!ed.length) throw DomainError("cannot measure from the infinite end of edge \"" + ed.id + "\"");
  return point_on_edge(e, translate(negate(t), *ed.length));
}

std::size_t GammaGraph::subdivide(std::size_t e, const GroupElem& offset, const std::string& new_id) {
  const Edge old = edges_.at(e);
  if (offset.sign() <= 0 || (old.length && !(offset < *old.length))) {
    throw DomainError("subdivision point must lie inside edge \"" + old.id + "\"");
  }
  const std::size_t m = add_vertex(new_id, VertexKind::Divisorial);
  std::optional<GroupElem> rest;
  if (old.length) rest = *old.length - offset;
  edges_[e].v = m;
  edges_[e].length = offset;
  auto& adj_v = adjacency_[old.v];
  adj_v.erase(std::find(adj_v.begin(), adj_v.end(), e));
  adjacency_[m].push_back(e);
  std::string rest_id = old.id + "'";
  while (edge_index_.count(rest_id)) rest_id += "'";
  add_edge(rest_id, m, old.v, rest);
  return m;
}

namespace {

std::vector<std::size_t> skeleton_degree(const GammaGraph& g) {
  std::vector<std::size_t> deg(g.vertices().size(), 0);
  for (std::size_t e : g.skeleton().edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (const auto& p : g.skeleton().pieces) {
    const Edge& ed = g.edge(p.edge);
    ++deg[p.from_u ? ed.u : ed.v];
  }
  return deg;
}

void check_regions(const GammaGraph& g, std::vector<std::string>& errors) {
  const std::size_t n = g.vertices().size();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edge(e);
    if (!g.in_skeleton_edge(e) && g.in_skeleton_vertex(ed.u) && g.in_skeleton_vertex(ed.v)) {
      errors.push_back("edge \"" + ed.id + "\" joins skeleton vertices outside the skeleton");
    }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || g.in_skeleton_vertex(s)) continue;
    std::size_t verts = 0, inner_edges = 0, attach = 0;
    std::set<std::size_t> edges_seen;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      ++verts;
      for (std::size_t e : g.incident(v)) {
        if (!edges_seen.insert(e).second) continue;
        const std::size_t w = g.other_end(e, v);
        if (g.in_skeleton_vertex(w)) {
          ++attach;
        } else {
          ++inner_edges;
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    if (inner_edges + 1 != verts || attach != 1) {
      errors.push_back("points near vertex \"" + g.vertex(s).id + "\" do not have a unique segment to the skeleton");
    }
  }
}

}  // namespace

ValidationReport validate(const GammaGraph& g) {
  ValidationReport rep;
  auto& err = rep.errors;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const Vertex& vx = g.vertex(v);
    if (vx.kind == VertexKind::Divisorial) continue;
    if (g.incident(v).size() != 1) {
      err.push_back(std::string(to_string(vx.kind)) + " vertex \"" + vx.id + "\" must be a leaf");
    }
    for (std::size_t e : g.incident(v)) {
      if (!g.edge(e).infinite()) {
        err.push_back("edge \"" + g.edge(e).id + "\" to non-divisorial vertex \"" + vx.id + "\" must be infinite");
      }
    }
  }
  for (const auto& ed : g.edges()) {
    if (ed.infinite() && (g.vertex(ed.u).kind != VertexKind::Divisorial || g.vertex(ed.v).kind == VertexKind::Divisorial)) {
      err.push_back("infinite edge \"" + ed.id + "\" must join a divisorial vertex to a non-divisorial leaf");
    }
  }
  if (!g.is_connected()) err.push_back("graph is not connected");

  const Skeleton& sk = g.skeleton();
  if (sk.empty()) return rep;
  const std::size_t nv = g.vertices().size(), ne = g.edges().size();
  bool indices_ok = true;
  for (std::size_t v : sk.vertices) indices_ok = indices_ok && v < nv;
  for (std::size_t e : sk.edges) indices_ok = indices_ok && e < ne;
  for (const auto& p : sk.pieces) indices_ok = indices_ok && p.edge < ne;
  if (!indices_ok) {
    err.push_back("skeleton refers to unknown vertices or edges");
    return rep;
  }
  for (std::size_t e : sk.edges) {
    const Edge& ed = g.edge(e);
    if (!g.in_skeleton_vertex(ed.u) || !g.in_skeleton_vertex(ed.v)) {
      err.push_back("skeleton edge \"" + ed.id + "\" has an end outside the skeleton");
    }
  }
  bool pieces_ok = true;
  std::set<std::size_t> piece_edges;
  for (const auto& p : sk.pieces) {
    const Edge& ed = g.edge(p.edge);
    if (!piece_edges.insert(p.edge).second) {
      err.push_back("several skeleton pieces on edge \"" + ed.id + "\"");
      pieces_ok = false;
    }
    if (g.in_skeleton_edge(p.edge)) err.push_back("edge \"" + ed.id + "\" is both a skeleton edge and a piece");
    if (!g.in_skeleton_vertex(p.from_u ? ed.u : ed.v)) {
      err.push_back("skeleton piece on \"" + ed.id + "\" starts outside the skeleton");
    }
    const Ranger zero = Ranger::principal(GroupElem::zero(g.rank()));
    if (!(zero < p.extent && p.extent < g.edge_length(p.edge)) || (!p.from_u && ed.infinite())) {
      err.push_back("skeleton piece on \"" + ed.id + "\" must end strictly inside the edge");
      pieces_ok = false;
    } else if (!p.extent.is_principal()) {
      err.push_back("skeleton piece on \"" + ed.id + "\" ends at a " + to_string(p.extent.kind()) +
                    " point; skeleton leaves must be divisorial");
      pieces_ok = false;
    }
  }
  const auto deg = skeleton_degree(g);
  for (std::size_t v : sk.vertices) {
    if (deg[v] == 0 && g.vertex(v).kind != VertexKind::Divisorial) {
      err.push_back("isolated skeleton point \"" + g.vertex(v).id + "\" must be divisorial");
    }
  }
  if (pieces_ok && err.empty()) {
    const GammaGraph normal = normalize_skeleton(g);
    check_regions(normal, err);
  }
  return rep;
}

GammaGraph normalize_skeleton(const GammaGraph& g) {
  GammaGraph out = g;
  Skeleton sk = g.skeleton();
  std::vector<SkeletonPiece> pieces = std::move(sk.pieces);
  sk.pieces.clear();
  out.set_skeleton(sk);
  for (const auto& p : pieces) {
    if (!p.extent.is_principal()) throw StructuralError("skeleton piece ends at a non-divisorial point");
    const Edge ed = out.edge(p.edge);
    GroupElem off = p.extent.point();
    if (!p.from_u) off = *ed.length - off;
    const std::size_t m = out.subdivide(p.edge, off, ed.id + "@" + off.to_string());
    const std::size_t second = out.edges().size() - 1;
    out.skeleton().vertices.push_back(m);
    out.skeleton().edges.push_back(p.from_u ? p.edge : second);
  }
  return out;
}

namespace {

struct Hanging {
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<std::optional<GroupElem>> dist;  // nullopt = infinitely far
};

Hanging hanging_structure(const GammaGraph& g) {
  if (g.skeleton().empty()) throw DomainError("graph has no skeleton");
  if (!g.skeleton().pieces.empty()) throw StructuralError("normalize skeleton pieces first");
  const std::size_t n = g.vertices().size();
  Hanging h{std::vector<std::optional<std::size_t>>(n), std::vector<std::optional<GroupElem>>(n)};
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t v : g.skeleton().vertices) {
    seen[v] = true;
    h.dist[v] = GroupElem::zero(g.rank());
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.incident(v)) {
      if (g.in_skeleton_edge(e)) continue;
      const std::size_t w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      h.parent_edge[w] = e;
      const Edge& ed = g.edge(e);
      if (ed.length && h.dist[v]) h.dist[w] = *h.dist[v] + *ed.length;
      queue.push_back(w);
    }
  }
  return h;
}

Ranger as_ranger(const std::optional<GroupElem>& d, int rank) {
  return d ? Ranger::principal(*d) : Ranger::unbounded(rank, 1);
}

// End of edge e nearer to the skeleton.
std::size_t near_end(const GammaGraph& g, const Hanging& h, std::size_t e) {
  const Edge& ed = g.edge(e);
  return h.parent_edge[ed.v] == e ? ed.u : ed.v;
}

Ranger offset_from(const GammaGraph& g, std::size_t e, std::size_t from, const Ranger& offset_from_u) {
  const Edge& ed = g.edge(e);
  if (from == ed.u) return offset_from_u;
  return translate(negate(offset_from_u), *ed.length);
}

}  // namespace

Ranger dist_to_skeleton(const GammaGraph& g, const GraphPoint& x) {
  const Hanging h = hanging_structure(g);
  if (x.is_vertex()) return as_ranger(h.dist.at(x.vertex()), g.rank());
  if (g.in_skeleton_edge(x.edge())) return Ranger::principal(GroupElem::zero(g.rank()));
  const std::size_t a = near_end(g, h, x.edge());
  return translate(offset_from(g, x.edge(), a, x.offset()), *h.dist[a]);
}

std::size_t skeleton_foot(const GammaGraph& g, const GraphPoint& x) {
  const Hanging h = hanging_structure(g);
  std::size_t v;
  if (x.is_vertex()) {
    v = x.vertex();
  } else {
    if (g.in_skeleton_edge(x.edge())) throw DomainError("skeleton_foot: point lies on the skeleton");
    v = near_end(g, h, x.edge());
  }
  while (h.parent_edge[v]) v = g.other_end(*h.parent_edge[v], v);
  return v;
}

GraphPoint retract(const GammaGraph& g, const Ranger& t, const GraphPoint& x) {
  const Ranger zero = Ranger::principal(GroupElem::zero(g.rank()));
  if (t < zero) throw DomainError("retract: parameter must be nonnegative");
  const Hanging h = hanging_structure(g);
  const Ranger r = dist_to_skeleton(g, x);
  if (r <= t) return x;

  // Walk from the foot towards x.
  std::size_t v;
  std::vector<std::size_t> path_edges;
  if (x.is_vertex()) {
    v = x.vertex();
  } else {
    path_edges.push_back(x.edge());
    v = near_end(g, h, x.edge());
  }
  while (h.parent_edge[v]) {
    path_edges.push_back(*h.parent_edge[v]);
    v = g.other_end(*h.parent_edge[v], v);
  }
  std::reverse(path_edges.begin(), path_edges.end());
  for (std::size_t e : path_edges) {
    const Ranger here = Ranger::principal(*h.dist[v]);
    if (t == here) return GraphPoint::at_vertex(v);
    const std::size_t w = g.other_end(e, v);
    const bool last = !x.is_vertex() && e == x.edge();
    const Ranger next = last ? r : as_ranger(h.dist[w], g.rank());
    if (t < next) return g.point_on_edge_from(e, v, translate(t, -*h.dist[v]));
    v = w;
  }
  return GraphPoint::at_vertex(v);
}

namespace {

std::vector<std::optional<GroupElem>> vertex_distances(const GammaGraph& g, std::size_t src) {
  const std::size_t n = g.vertices().size();
  std::vector<std::optional<GroupElem>> dist(n);
  std::vector<bool> done(n, false);
  dist[src] = GroupElem::zero(g.rank());
  for (;;) {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && dist[v] && (!best || *dist[v] < *dist[*best])) best = v;
    }
    if (!best) break;
    done[*best] = true;
    for (std::size_t e : g.incident(*best)) {
      const Edge& ed = g.edge(e);
      if (!ed.length) continue;
      const std::size_t w = g.other_end(e, *best);
      GroupElem cand = *dist[*best] + *ed.length;
      if (!dist[w] || cand < *dist[w]) dist[w] = std::move(cand);
    }
  }
  return dist;
}

// (vertex, distance) pairs reachable from a divisorial point through its edge.
std::vector<std::pair<std::size_t, GroupElem>> anchors(const GammaGraph& g, const GraphPoint& x) {
  if (x.is_vertex()) {
    if (g.vertex(x.vertex()).kind != VertexKind::Divisorial) {
      throw DomainError("distance: vertex \"" + g.vertex(x.vertex()).id + "\" is not divisorial");
    }
    return {{x.vertex(), GroupElem::zero(g.rank())}};
  }
  if (!x.offset().is_principal()) throw DomainError("distance: point is not divisorial");
  const Edge& ed = g.edge(x.edge());
  std::vector<std::pair<std::size_t, GroupElem>> out{{ed.u, x.offset().point()}};
  if (ed.length) out.push_back({ed.v, *ed.length - x.offset().point()});
  return out;
}

}  // namespace

GroupElem distance(const GammaGraph& g, const GraphPoint& x, const GraphPoint& y) {
  const auto ax = anchors(g, x), ay = anchors(g, y);
  std::optional<GroupElem> best;
  if (!x.is_vertex() && !y.is_vertex() && x.edge() == y.edge()) {
    best = abs(x.offset().point() - y.offset().point());
  }
  for (const auto& [vx, dx] : ax) {
    const auto dist = vertex_distances(g, vx);
    for (const auto& [vy, dy] : ay) {
      if (!dist[vy]) continue;
      GroupElem cand = dx + *dist[vy] + dy;
      if (!best || cand < *best) best = std::move(cand);
    }
  }
  if (!best) throw DomainError("distance: points are not connected by finite edges");
  return *best;
}

namespace {

std::vector<std::optional<std::size_t>> bfs_parents(const GammaGraph& g, std::size_t root) {
  std::vector<std::optional<std::size_t>> parent(g.vertices().size());
  std::vector<bool> seen(g.vertices().size(), false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.incident(v)) {
      const std::size_t w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return parent;
}

}  // namespace

std::vector<std::size_t> tree_path(const GammaGraph& g, std::size_t a, std::size_t b) {
  if (!g.is_tree()) throw StructuralError("tree_path: graph is not a tree");
  const auto parent = bfs_parents(g, a);
  std::vector<std::size_t> path{b};
  while (path.back() != a) {
    if (!parent[path.back()]) throw StructuralError("tree_path: vertices are disconnected");
    path.push_back(*parent[path.back()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::size_t> tree_path_via_root(const GammaGraph& g, std::size_t a, std::size_t b, std::size_t root) {
  if (!g.is_tree()) throw StructuralError("tree_path_via_root: graph is not a tree");
  const auto parent = bfs_parents(g, root);
  auto up = [&](std::size_t v) {
    std::vector<std::size_t> p{v};
    while (parent[p.back()]) p.push_back(*parent[p.back()]);
    return p;
  };
  std::vector<std::size_t> pa = up(a), pb = up(b);
  while (pa.size() >= 2 && pb.size() >= 2 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
    pa.pop_back();
    pb.pop_back();
  }
  // pa and pb now end at the common meet.
  pb.pop_back();
  pa.insert(pa.end(), pb.rbegin(), pb.rend());
  return pa;
}

std::size_t components_without(const GammaGraph& g, const std::vector<GraphPoint>& removed) {
  const std::size_t nv = g.vertices().size();
  std::vector<bool> gone(nv, false);
  std::vector<std::vector<Ranger>> cuts(g.edges().size());
  for (const auto& p : removed) {
    if (p.is_vertex()) {
      gone.at(p.vertex()) = true;
    } else {
      cuts.at(p.edge()).push_back(p.offset());
    }
  }
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  auto fresh = [&]() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  };
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto& c = cuts[e];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const Edge& ed = g.edge(e);
    std::vector<std::size_t> segs;
    for (std::size_t i = 0; i <= c.size(); ++i) segs.push_back(fresh());
    if (!gone[ed.u]) unite(segs.front(), ed.u);
    if (!gone[ed.v]) unite(segs.back(), ed.v);
  }
  std::set<std::size_t> roots;
  for (std::size_t x = 0; x < parent.size(); ++x) {
    if (x < nv && gone[x]) continue;
    roots.insert(find(x));
  }
  return roots.size();
}

GraphAutomorphism compose(const GraphAutomorphism& a, const GraphAutomorphism& b) {
  GraphAutomorphism out;
  for (std::size_t v : b.vertex_map) out.vertex_map.push_back(a.vertex_map.at(v));
  for (std::size_t e : b.edge_map) out.edge_map.push_back(a.edge_map.at(e));
  return out;
}

void check_isometry(const GammaGraph& g, const GraphAutomorphism& s) {
  const std::size_t nv = g.vertices().size(), ne = g.edges().size();
  if (s.vertex_map.size() != nv || s.edge_map.size() != ne) throw StructuralError("automorphism has the wrong size");
  auto is_perm = [](const std::vector<std::size_t>& m) {
    std::vector<bool> hit(m.size(), false);
    for (std::size_t x : m) {
      if (x >= m.size() || hit[x]) return false;
      hit[x] = true;
    }
    return true;
  };
  if (!is_perm(s.vertex_map) || !is_perm(s.edge_map)) throw StructuralError("automorphism is not a permutation");
  for (std::size_t v = 0; v < nv; ++v) {
    if (g.vertex(v).kind != g.vertex(s.vertex_map[v]).kind) throw StructuralError("automorphism changes a vertex kind");
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(s.edge_map[e]);
    const std::size_t su = s.vertex_map[a.u], sv = s.vertex_map[a.v];
    if (!((su == b.u && sv == b.v) || (su == b.v && sv == b.u))) {
      throw StructuralError("automorphism does not respect edge \"" + a.id + "\"");
    }
    if (a.length != b.length) throw StructuralError("automorphism is not isometric on edge \"" + a.id + "\"");
  }
}

std::vector<GraphAutomorphism> generate_group(const GammaGraph& g, const std::vector<GraphAutomorphism>& gens,
                                              std::size_t max_order) {
  GraphAutomorphism id;
  id.vertex_map.resize(g.vertices().size());
  id.edge_map.resize(g.edges().size());
  std::iota(id.vertex_map.begin(), id.vertex_map.end(), 0);
  std::iota(id.edge_map.begin(), id.edge_map.end(), 0);
  for (const auto& s : gens) check_isometry(g, s);
  std::set<GraphAutomorphism> seen{id};
  std::vector<GraphAutomorphism> out{id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens) {
      GraphAutomorphism c = compose(s, out[i]);
      if (seen.insert(c).second) {
        out.push_back(std::move(c));
        if (out.size() > max_order) throw StructuralError("automorphism group is too large");
      }
    }
  }
  return out;
}

GraphPoint apply(const GammaGraph& g, const GraphAutomorphism& s, const GraphPoint& x) {
  if (x.is_vertex()) return GraphPoint::at_vertex(s.vertex_map.at(x.vertex()));
  const std::size_t e = s.edge_map.at(x.edge());
  const bool same = s.vertex_map[g.edge(x.edge()).u] == g.edge(e).u;
  return GraphPoint::on_edge(e, same ? x.offset() : translate(negate(x.offset()), *g.edge(e).length));
}

GraphPoint QuotientResult::refine(const GammaGraph& original, const GraphPoint& x) const {
  if (x.is_vertex() || !midpoint_of.at(x.edge())) return x;
  const GroupElem half = Rational(1, 2) * *original.edge(x.edge()).length;
  const Ranger mid = Ranger::principal(half);
  if (x.offset() == mid) return GraphPoint::at_vertex(*midpoint_of[x.edge()]);
  const auto [first, second] = halves_of[x.edge()];
  if (x.offset() < mid) return GraphPoint::on_edge(first, x.offset());
  return GraphPoint::on_edge(second, translate(x.offset(), -half));
}

GraphPoint QuotientResult::project(const GammaGraph& original, const GraphPoint& x) const {
  const GraphPoint y = refine(original, x);
  if (y.is_vertex()) return GraphPoint::at_vertex(vertex_image.at(y.vertex()));
  const std::size_t e = edge_image.at(y.edge());
  if (!edge_reversed[y.edge()]) return GraphPoint::on_edge(e, y.offset());
  return GraphPoint::on_edge(e, translate(negate(y.offset()), *quotient.edge(e).length));
}

QuotientResult quotient(const GammaGraph& tree, const std::vector<GraphAutomorphism>& generators) {
  if (!tree.is_tree()) throw StructuralError("quotient: input must be a tree");
  const auto group = generate_group(tree, generators);
  const std::size_t ne = tree.edges().size();

  std::set<std::size_t> split;
  for (std::size_t e = 0; e < ne; ++e) {
    for (const auto& s : group) {
      if (s.edge_map[e] == e && s.vertex_map[tree.edge(e).u] == tree.edge(e).v) {
        for (const auto& t : group) split.insert(t.edge_map[e]);
        break;
      }
    }
  }

  QuotientResult res;
  res.group_order = group.size();
  res.refined = tree;
  res.midpoint_of.assign(ne, std::nullopt);
  res.halves_of.assign(ne, {0, 0});
  for (std::size_t e : split) {
    const Edge ed = tree.edge(e);
    const std::size_t m = res.refined.subdivide(e, Rational(1, 2) * *ed.length, ed.id + "/2");
    res.midpoint_of[e] = m;
    res.halves_of[e] = {e, res.refined.edges().size() - 1};
  }
  GammaGraph& R = res.refined;
  // Skeleton of the refined tree.
  {
    Skeleton sk = tree.skeleton();
    for (std::size_t e : split) {
      if (tree.in_skeleton_edge(e)) {
        sk.vertices.push_back(*res.midpoint_of[e]);
        sk.edges.push_back(res.halves_of[e].second);
      }
    }
    R.set_skeleton(sk);
  }

  // Extend every group element to the refined tree.
  std::vector<GraphAutomorphism> ext;
  for (const auto& s : group) {
    GraphAutomorphism t;
    t.vertex_map = s.vertex_map;
    t.vertex_map.resize(R.vertices().size());
    t.edge_map = s.edge_map;
    t.edge_map.resize(R.edges().size());
    for (std::size_t e : split) {
      const std::size_t f = s.edge_map[e];
      t.vertex_map[*res.midpoint_of[e]] = *res.midpoint_of[f];
      const bool same = s.vertex_map[tree.edge(e).u] == tree.edge(f).u;
      const auto [e1, e2] = res.halves_of[e];
      const auto [f1, f2] = res.halves_of[f];
      t.edge_map[e1] = same ? f1 : f2;
      t.edge_map[e2] = same ? f2 : f1;
    }
    check_isometry(R, t);
    ext.push_back(std::move(t));
  }

  std::optional<std::size_t> root;
  for (std::size_t v = 0; v < R.vertices().size() && !root; ++v) {
    bool fixed = true;
    for (const auto& t : ext) fixed = fixed && t.vertex_map[v] == v;
    if (fixed) root = v;
  }
  if (!root) throw StructuralError("quotient: the action fixes no point");
  res.root = *root;

  const std::size_t nv = R.vertices().size(), nre = R.edges().size();
  std::vector<std::size_t> vrep(nv), erep(nre);
  for (std::size_t v = 0; v < nv; ++v) {
    vrep[v] = v;
    for (const auto& t : ext) vrep[v] = std::min(vrep[v], t.vertex_map[v]);
  }
  for (std::size_t e = 0; e < nre; ++e) {
    erep[e] = e;
    for (const auto& t : ext) erep[e] = std::min(erep[e], t.edge_map[e]);
  }
  res.quotient = GammaGraph(tree.rank());
  std::map<std::size_t, std::size_t> qv, qe;
  for (std::size_t v = 0; v < nv; ++v) {
    if (vrep[v] == v) qv[v] = res.quotient.add_vertex(R.vertex(v).id, R.vertex(v).kind);
  }
  for (std::size_t e = 0; e < nre; ++e) {
    if (erep[e] != e) continue;
    const Edge& ed = R.edge(e);
    qe[e] = res.quotient.add_edge(ed.id, qv.at(vrep[ed.u]), qv.at(vrep[ed.v]), ed.length);
  }
  res.vertex_image.resize(nv);
  res.edge_image.resize(nre);
  res.edge_reversed.assign(nre, false);
  for (std::size_t v = 0; v < nv; ++v) res.vertex_image[v] = qv.at(vrep[v]);
  for (std::size_t e = 0; e < nre; ++e) {
    const std::size_t q = qe.at(erep[e]);
    res.edge_image[e] = q;
    res.edge_reversed[e] = res.vertex_image[R.edge(e).u] != res.quotient.edge(q).u;
  }
  Skeleton qsk;
  for (std::size_t v : R.skeleton().vertices) {
    if (std::find(qsk.vertices.begin(), qsk.vertices.end(), res.vertex_image[v]) == qsk.vertices.end()) {
      qsk.vertices.push_back(res.vertex_image[v]);
    }
  }
  for (std::size_t e : R.skeleton().edges) {
    if (std::find(qsk.edges.begin(), qsk.edges.end(), res.edge_image[e]) == qsk.edges.end()) {
      qsk.edges.push_back(res.edge_image[e]);
    }
  }
  std::sort(qsk.vertices.begin(), qsk.vertices.end());
  std::sort(qsk.edges.begin(), qsk.edges.end());
  res.quotient.set_skeleton(qsk);
  return res;
}

std::string to_dot(const GammaGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const Vertex& vx = g.vertex(v);
    os << "  \"" << vx.id << "\" [label=\"" << vx.id << "\\n" << to_string(vx.kind) << "\"";
    if (vx.kind != VertexKind::Divisorial) os << ", shape=point";
    if (g.in_skeleton_vertex(v)) os << ", color=red";
    os << "];\n";
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& ed = g.edge(e);
    os << "  \"" << g.vertex(ed.u).id << "\" -- \"" << g.vertex(ed.v).id << "\" [label=\""
       << (ed.length ? ed.length->to_string() : std::string("inf")) << "\"";
    if (ed.infinite()) os << ", style=dashed";
    if (g.in_skeleton_edge(e)) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace adic
