#pragma once

// Finite topological spaces as specialization preorders, with exhaustive
// checks of the quasi-tree axioms and completions of finite ordered sets.
//
// Convention: x specializes y (x in the closure of y) is written x <= y.
// Open sets are the generization-closed sets: x in U and x <= y imply y in U.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adic {

// Subsets of a finite space as bitmasks; spaces hold at most 64 points.
using PointSet = std::uint64_t;

class FiniteSpace {
 public:
  static constexpr std::size_t kMaxPoints = 64;

  FiniteSpace() = default;
  // `specializations` lists pairs (x, y) with x in the closure of y; the
  // reflexive-transitive closure is taken. Throws StructuralError on bad indices.
  FiniteSpace(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>>& specializations);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  PointSet all() const;

  bool specializes(std::size_t x, std::size_t y) const { return (gen_[x] >> y) & 1U; }
  // Smallest open set containing x.
  PointSet open_hull(std::size_t x) const { return gen_[x]; }
  PointSet closure(std::size_t x) const { return spec_[x]; }
  bool is_open_point(std::size_t x) const { return gen_[x] == bit(x); }
  bool is_closed_point(std::size_t x) const { return spec_[x] == bit(x); }
  bool is_open(PointSet s) const;
  bool is_t0() const;

  bool connected(PointSet s) const;
  std::vector<PointSet> components(PointSet s) const;
  // Number of connected components of the space minus x.
  std::size_t branch_count(std::size_t x) const;
  bool separates(std::size_t x, std::size_t a, std::size_t b) const;

  // Non-strict specialization pairs (x, y), x != y, in index order.
  std::vector<std::pair<std::size_t, std::size_t>> relations() const;

  static PointSet bit(std::size_t i) { return PointSet{1} << i; }

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> gen_;   // gen_[x]: points y with x <= y
  std::vector<PointSet> spec_;  // spec_[x]: points y with y <= x
};

std::vector<std::size_t> members(PointSet s);

struct AxiomResult {
  bool holds = true;
  std::vector<std::size_t> witness;
};

struct QuasiTreeReport {
  std::array<AxiomResult, 3> axioms;
  bool passes() const { return axioms[0].holds && axioms[1].holds && axioms[2].holds; }
  // First failing axiom, or -1.
  int failed_axiom() const;
};

// The set {a, b} together with every point separating a and b. This is the
// only candidate for [a, b].
PointSet quasi_segment(const FiniteSpace& sp, std::size_t a, std::size_t b);

// Throws DomainError when the space has more than `bound` points.
QuasiTreeReport check_quasi_tree(const FiniteSpace& sp, std::size_t bound = 10);

bool collinear(const FiniteSpace& sp, std::size_t a, std::size_t b, std::size_t c);
// Points x such that a, b, c lie in three distinct components of sp minus x.
std::vector<std::size_t> separating_vertices(const FiniteSpace& sp, std::size_t a, std::size_t b, std::size_t c);
std::vector<std::size_t> leaves(const FiniteSpace& sp);

// A finite totally ordered set (in label order) with its closed points.
struct MarkedOrder {
  std::vector<std::string> labels;
  std::vector<bool> closed;
};

bool is_quasi_interval(const MarkedOrder& m);
// Topology with base the intervals (a, b) whose ends are closed points or
// the ends of the order.
FiniteSpace to_space(const MarkedOrder& m);

// -inf, s_0, s_0+, s_1, ..., s_{n-1}, +inf. Points of S are open, the added
// points are closed.
MarkedOrder ranger_completion_order(const std::vector<std::string>& s);
FiniteSpace ranger_complete(const std::vector<std::string>& s);

// s_0, m_0, s_1, ..., s_{n-1}: points of S are closed, one open point between
// each adjacent pair.
MarkedOrder minimal_completion_order(const std::vector<std::string>& s);
FiniteSpace minimal_complete(const std::vector<std::string>& s);

// Order-preserving retraction of a quasi-interval containing S onto the
// minimal completion of S. `positions` are the indices of S in `t`, increasing.
// Entry i is the index in the minimal completion of the image of t's point i.
std::vector<std::size_t> minimal_retraction(const MarkedOrder& t, const std::vector<std::size_t>& positions);

struct HausdorffQuotient {
  FiniteSpace space;
  std::vector<std::size_t> fiber_of;  // point -> quotient point
};

// Identifies the points inside each closure, transitively.
HausdorffQuotient hausdorff_quotient(const FiniteSpace& sp);

}  // namespace adic
