#pragma once

// Finite metric graphs over Gamma = Q^h with skeletons, the metric
// retraction onto a skeleton and quotients by finite isometry groups.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adic/ordgroup.hpp"
#include "adic/ranger.hpp"

namespace adic {

enum class VertexKind { Divisorial, ClassicalLeaf, UnboundedLeaf };

const char* to_string(VertexKind k);

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::Divisorial;
};

// Infinite edges join a divisorial vertex `u` to a non-divisorial leaf `v`.
struct Edge {
  std::string id;
  std::size_t u = 0, v = 0;
  std::optional<GroupElem> length;

  bool infinite() const { return !length.has_value(); }
};

// Part of an edge from one of its ends up to an offset, marked as skeleton.
struct SkeletonPiece {
  std::size_t edge = 0;
  bool from_u = true;
  Ranger extent = Ranger::principal(GroupElem{});
};

struct Skeleton {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::vector<SkeletonPiece> pieces;

  bool empty() const { return vertices.empty() && edges.empty() && pieces.empty(); }
};

class GraphPoint {
 public:
  static GraphPoint at_vertex(std::size_t v) { return GraphPoint(v, std::nullopt); }
  // Offset is measured from the edge's `u` end and lies strictly inside the edge.
  static GraphPoint on_edge(std::size_t e, Ranger offset) { return GraphPoint(e, std::move(offset)); }

  bool is_vertex() const { return !offset_.has_value(); }
  std::size_t vertex() const { return index_; }
  std::size_t edge() const { return index_; }
  const Ranger& offset() const { return *offset_; }

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    return a.index_ == b.index_ && a.offset_ == b.offset_;
  }

 private:
  GraphPoint(std::size_t i, std::optional<Ranger> o) : index_(i), offset_(std::move(o)) {}
  std::size_t index_;
  std::optional<Ranger> offset_;
};

struct ValidationReport {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

class GammaGraph {
 public:
  GammaGraph() = default;
  explicit GammaGraph(int rank) : rank_(rank) {}

  int rank() const { return rank_; }

  std::size_t add_vertex(std::string id, VertexKind kind = VertexKind::Divisorial);
  // nullopt length marks an infinite edge; its divisorial end becomes `u`.
  std::size_t add_edge(std::string id, std::size_t u, std::size_t v, std::optional<GroupElem> length);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  // Incident edge indices.
  const std::vector<std::size_t>& incident(std::size_t v) const { return adjacency_.at(v); }
  std::size_t other_end(std::size_t e, std::size_t v) const;

  Skeleton& skeleton() { return skeleton_; }
  const Skeleton& skeleton() const { return skeleton_; }
  void set_skeleton(Skeleton s) { skeleton_ = std::move(s); }
  bool in_skeleton_vertex(std::size_t v) const;
  bool in_skeleton_edge(std::size_t e) const;

  bool is_connected() const;
  bool is_tree() const;

  // Makes a point on edge e at the given offset from u, folding the ends
  // onto vertices.
  GraphPoint point_on_edge(std::size_t e, const Ranger& offset_from_u) const;
  // A point on edge e at offset t from its end `from`.
  GraphPoint point_on_edge_from(std::size_t e, std::size_t from, const Ranger& t) const;
  // Length of edge e as a ranger (+inf for infinite edges).
  Ranger edge_length(std::size_t e) const;

  // Splits edge e at a principal interior offset from u; returns the new vertex.
  std::size_t subdivide(std::size_t e, const GroupElem& offset_from_u, const std::string& new_id);

 private:
  int rank_ = 1;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::map<std::string, std::size_t> vertex_index_, edge_index_;
  Skeleton skeleton_;
};

ValidationReport validate(const GammaGraph& g);

// Replaces skeleton pieces ending at principal offsets by subdivision
// vertices. Throws StructuralError for pieces ending at other offsets.
GammaGraph normalize_skeleton(const GammaGraph& g);

// Distance to the skeleton; the skeleton must be valid and pieces normalized.
Ranger dist_to_skeleton(const GammaGraph& g, const GraphPoint& x);
// Foot of the segment from x to the skeleton.
std::size_t skeleton_foot(const GammaGraph& g, const GraphPoint& x);
// The metric retraction at parameter t >= 0.
GraphPoint retract(const GammaGraph& g, const Ranger& t, const GraphPoint& x);

// Distance between divisorial points (vertices or principal offsets).
GroupElem distance(const GammaGraph& g, const GraphPoint& x, const GraphPoint& y);

// Vertex sequence of the unique path between two vertices of a tree.
std::vector<std::size_t> tree_path(const GammaGraph& g, std::size_t a, std::size_t b);
// Same path obtained through the paths to a root vertex.
std::vector<std::size_t> tree_path_via_root(const GammaGraph& g, std::size_t a, std::size_t b, std::size_t root);

// Number of connected components after deleting finitely many points.
std::size_t components_without(const GammaGraph& g, const std::vector<GraphPoint>& removed);

// A permutation of vertices and edges.
struct GraphAutomorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;

  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
  friend bool operator<(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    return a.vertex_map != b.vertex_map ? a.vertex_map < b.vertex_map : a.edge_map < b.edge_map;
  }
};

GraphAutomorphism compose(const GraphAutomorphism& a, const GraphAutomorphism& b);
// Throws StructuralError when the permutation is not an isometry of g.
void check_isometry(const GammaGraph& g, const GraphAutomorphism& s);
// Closure of the generators under composition (bounded by max_order).
std::vector<GraphAutomorphism> generate_group(const GammaGraph& g, const std::vector<GraphAutomorphism>& gens,
                                              std::size_t max_order = 5040);
GraphPoint apply(const GammaGraph& g, const GraphAutomorphism& s, const GraphPoint& x);

struct QuotientResult {
  // The tree after inserting midpoints of inverted edges.
  GammaGraph refined;
  GammaGraph quotient;
  // For each refined vertex/edge: its image, and whether edge orientation flips.
  std::vector<std::size_t> vertex_image;
  std::vector<std::size_t> edge_image;
  std::vector<bool> edge_reversed;
  // Per input edge: the inserted midpoint vertex and the two halves, if split.
  std::vector<std::optional<std::size_t>> midpoint_of;
  std::vector<std::pair<std::size_t, std::size_t>> halves_of;
  std::size_t root = 0;
  std::size_t group_order = 0;

  GraphPoint refine(const GammaGraph& original, const GraphPoint& x) const;
  GraphPoint project(const GammaGraph& original, const GraphPoint& x) const;
};

QuotientResult quotient(const GammaGraph& tree, const std::vector<GraphAutomorphism>& generators);

std::string to_dot(const GammaGraph& g, const std::string& name = "G");

}  // namespace adic
