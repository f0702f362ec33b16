#pragma once

// Finite-rank divisible ordered groups Q^h with the lexicographic order.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "adic/rational.hpp"

namespace adic {

// Element of Q^h. Coordinate 0 carries the largest scale.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  GroupElem(std::initializer_list<Rational> coords) : coords_(coords) {}

  static GroupElem zero(int rank) { return GroupElem(std::vector<Rational>(rank)); }
  // Unit vector of the given scale index (1-based).
  static GroupElem unit(int rank, int scale_index);

  int rank() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  // -1, 0 or +1 under the lexicographic order.
  int sign() const;

  // First `j` coordinates, i.e. the image in Q^h / (scales > j).
  GroupElem truncate(int j) const;
  GroupElem concat(const GroupElem& tail) const;

  GroupElem& operator+=(const GroupElem& other);
  GroupElem& operator-=(const GroupElem& other);
  GroupElem& operator*=(const Rational& factor);

  friend GroupElem operator+(GroupElem a, const GroupElem& b) { return a += b; }
  friend GroupElem operator-(GroupElem a, const GroupElem& b) { return a -= b; }
  friend GroupElem operator*(const Rational& k, GroupElem a) { return a *= k; }
  friend GroupElem operator*(GroupElem a, const Rational& k) { return a *= k; }
  GroupElem operator-() const;

  // Throws StructuralError on rank mismatch.
  friend std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b);

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

std::strong_ordering cmp(const GroupElem& a, const GroupElem& b);
GroupElem abs(const GroupElem& g);
const GroupElem& max(const GroupElem& a, const GroupElem& b);
const GroupElem& min(const GroupElem& a, const GroupElem& b);

void require_same_rank(int a, int b, const char* context);

// 1-based index of the scale; 1 is the largest scale.
struct ScaleIdx {
  int index = 1;
  friend auto operator<=>(const ScaleIdx&, const ScaleIdx&) = default;
};

// Index of the first nonzero coordinate. Throws DomainError for zero.
ScaleIdx scale_index(const GroupElem& g);

// |a| << |b|: the scale of a is strictly smaller than the scale of b.
bool much_smaller(const GroupElem& a, const GroupElem& b);
// |a| and |b| bound each other by integer multiples.
bool same_scale(const GroupElem& a, const GroupElem& b);

class Group {
 public:
  // Lattice defaults to Z^h.
  explicit Group(int rank);
  Group(int rank, std::vector<GroupElem> lattice_basis);

  int rank() const { return rank_; }
  bool has_explicit_lattice() const { return explicit_lattice_; }
  const std::vector<GroupElem>& lattice_basis() const { return basis_; }

  // Coordinates of g in the lattice basis (always exists: the basis spans Q^h).
  std::vector<Rational> lattice_coordinates(const GroupElem& g) const;
  bool in_lattice(const GroupElem& g) const;

  GroupElem zero() const { return GroupElem::zero(rank_); }

  friend bool operator==(const Group& a, const Group& b);

 private:
  int rank_;
  bool explicit_lattice_ = false;
  std::vector<GroupElem> basis_;
  // Inverse of the basis matrix (rows = basis vectors), row-major.
  std::vector<Rational> inverse_;
};

// Point of Spec(Gamma^+). The prime ideal is {x > 0 : scale_index(x) <= j};
// j = 0 is the generic point, j = h the closed point.
struct SpecPoint {
  int j = 0;
  int rank = 1;

  bool generic() const { return j == 0; }
  bool closed() const { return j == rank; }
  // Every non-generic point is a scale point in finite rank.
  std::optional<ScaleIdx> scale() const {
    return j == 0 ? std::nullopt : std::optional<ScaleIdx>(ScaleIdx{j});
  }

  bool in_prime_ideal(const GroupElem& x) const;
  // H_p = Gamma \ (p u -p): elements whose scale is below j.
  bool in_convex_subgroup(const GroupElem& x) const;

  // `this` is a specialization of `other` (its ideal contains other's).
  bool specializes(const SpecPoint& other) const { return j >= other.j; }
  bool immediate_specialization_of(const SpecPoint& other) const { return j == other.j + 1; }

  friend bool operator==(const SpecPoint&, const SpecPoint&) = default;
};

// The h+1 points of Spec(Gamma^+) ordered from generic to closed.
std::vector<SpecPoint> spec_points(const Group& g);

}  // namespace adic
