#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adic/ordgroup.hpp"
#include "adic/ranger.hpp"

namespace adic {

// base + m*r in the group Gamma + Z*r of values at the ranger r.
class ExtValue {
 public:
  ExtValue(GroupElem base, std::int64_t m, Ranger r);
  explicit ExtValue(GroupElem base);

  const GroupElem& base() const { return base_; }
  std::int64_t rcoeff() const { return m_; }
  const Ranger& at() const { return r_; }
  bool is_plain() const { return m_ == 0; }

  int sign() const;

  ExtValue operator-() const { return ExtValue(-base_, -m_, r_); }
  // Operands must be taken at the same ranger unless one is plain.
  friend ExtValue operator+(const ExtValue& x, const ExtValue& y);
  friend ExtValue operator-(const ExtValue& x, const ExtValue& y) { return x + (-y); }
  friend bool operator==(const ExtValue& x, const ExtValue& y);

  std::string to_string() const;

 private:
  GroupElem base_;
  std::int64_t m_ = 0;
  Ranger r_;
};

// Orders two values living in the same group.
int compare(const ExtValue& x, const ExtValue& y);

struct Corner {
  GroupElem at;
  std::int64_t jump;
};

// Continuous piecewise linear function with integer slopes on [lo, hi].
class PLFn {
 public:
  PLFn(GroupElem lo, GroupElem hi, std::vector<GroupElem> breakpoints, std::vector<std::int64_t> slopes,
       GroupElem anchor, bool pinch_left = false, bool pinch_right = false);

  static PLFn linear(GroupElem lo, GroupElem hi, std::int64_t slope, GroupElem offset);

  const GroupElem& lo() const { return lo_; }
  const GroupElem& hi() const { return hi_; }
  const std::vector<GroupElem>& breakpoints() const { return breakpoints_; }
  const std::vector<std::int64_t>& slopes() const { return slopes_; }
  const GroupElem& anchor() const { return anchor_; }
  bool pinch_left() const { return pinch_left_; }
  bool pinch_right() const { return pinch_right_; }
  int rank() const { return lo_.rank(); }
  std::size_t piece_count() const { return slopes_.size(); }

  // Piece i is slopes[i]*t + offset(i).
  const GroupElem& offset(std::size_t i) const { return offsets_[i]; }
  // Left and right ends of piece i.
  const GroupElem& piece_lo(std::size_t i) const { return i == 0 ? lo_ : breakpoints_[i - 1]; }
  const GroupElem& piece_hi(std::size_t i) const { return i + 1 == slopes_.size() ? hi_ : breakpoints_[i]; }

  bool contains(const Ranger& r) const;
  // Index of a piece whose closed support contains r.
  std::size_t piece_of(const Ranger& r) const;

  ExtValue eval(const Ranger& r) const;
  GroupElem value(const GroupElem& x) const;

  bool is_monotone() const;

 private:
  GroupElem lo_, hi_;
  std::vector<GroupElem> breakpoints_;
  std::vector<std::int64_t> slopes_;
  GroupElem anchor_;
  bool pinch_left_ = false, pinch_right_ = false;
  std::vector<GroupElem> offsets_;
};

bool is_nonnegative(const PLFn& f);
std::vector<Corner> corners(const PLFn& f);

// Least n >= 1 with n*r in the lattice of `g`.
Integer n_r(const Group& g, const GroupElem& r);
// All piece offsets lie in the lattice.
bool is_lattice_integral(const Group& g, const PLFn& f);

GroupElem interval_length(const GroupElem& a, const GroupElem& b);
GroupElem image_length(const PLFn& f);

PLFn add(const PLFn& f, const PLFn& g);
// outer o inner; inner must be strictly monotone with image inside outer's domain.
PLFn compose(const PLFn& outer, const PLFn& inner);
// |slope| at a point that is not a corner.
std::int64_t dilation(const PLFn& f, const GroupElem& x);

}  // namespace adic
