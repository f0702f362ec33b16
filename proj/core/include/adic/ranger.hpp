#pragma once

// Rangers of Q^h: the order completion by principal points, cuts,
// infinitesimal neighbours and the two unbounded ends.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "adic/ordgroup.hpp"

namespace adic {

// a + b*sqrt(d) with b != 0 and d >= 2 squarefree; never rational.
class QuadIrr {
 public:
  QuadIrr(Rational a, Rational b, Integer d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  // Rational bounds with lower < value < upper and upper - lower <= 1.
  Rational lower_bound() const;
  Rational upper_bound() const;

  QuadIrr operator+(const Rational& q) const { return QuadIrr(a_ + q, b_, d_); }
  QuadIrr operator-() const { return QuadIrr(-a_, -b_, d_); }
  QuadIrr scaled(const Rational& k) const { return QuadIrr(a_ * k, b_ * k, d_); }

  friend bool operator==(const QuadIrr&, const QuadIrr&) = default;

  std::string to_string() const;

 private:
  Rational a_, b_;
  Integer d_;
};

// Sign of a + b*sqrt(d) for any integer d >= 0.
int sign_of_sqrt_form(const Rational& a, const Rational& b, const Integer& d);
int compare(const QuadIrr& x, const Rational& q);
int compare(const QuadIrr& x, const QuadIrr& y);

enum class RangerKind { Unbounded, Principal, Cut, Infinitesimal };

const char* to_string(RangerKind k);

// Last entry of a cut sequence.
struct CutTail {
  int infinity = 0;  // +1 or -1 for an infinite tail, 0 for an irrational one
  std::optional<QuadIrr> irrational;

  static CutTail plus_infinity() { return {+1, std::nullopt}; }
  static CutTail minus_infinity() { return {-1, std::nullopt}; }
  static CutTail quad(QuadIrr q) { return {0, std::move(q)}; }

  bool infinite() const { return infinity != 0; }
  friend bool operator==(const CutTail&, const CutTail&) = default;
};

enum class CutDirection { Up, Down };

struct CutProfile {
  // Scale ideal {x > 0 : scale_index(x) <= threshold}.
  int threshold = 1;
  bool symmetric = true;
  // Meaningful only when asymmetric.
  CutDirection direction = CutDirection::Down;

  friend bool operator==(const CutProfile&, const CutProfile&) = default;
};

// A ranger is stored as the sequence of Example "r_1 ... r_n" style entries:
// a rational prefix followed by a terminal entry.
class Ranger {
 public:
  static Ranger unbounded(int rank, int sign);
  static Ranger principal(GroupElem coords);
  static Ranger infinitesimal(GroupElem coords, int sign);
  // Normalizes: an empty prefix with infinite tail is unbounded, a full-length
  // prefix with infinite tail is infinitesimal.
  static Ranger cut(int rank, std::vector<Rational> prefix, CutTail tail);

  int rank() const { return rank_; }
  RangerKind kind() const { return kind_; }
  bool is_principal() const { return kind_ == RangerKind::Principal; }
  bool is_unbounded() const { return kind_ == RangerKind::Unbounded; }
  bool is_cut() const { return kind_ == RangerKind::Cut; }
  bool is_infinitesimal() const { return kind_ == RangerKind::Infinitesimal; }

  // Principal/infinitesimal: all h coordinates. Cut: the prefix. Unbounded: empty.
  const std::vector<Rational>& coords() const { return coords_; }
  // Principal/infinitesimal only.
  GroupElem point() const;
  // +1/-1 for unbounded, infinitesimal and infinite cut tails; 0 otherwise.
  int sign() const { return sign_; }
  const std::optional<QuadIrr>& irrational_tail() const { return irrational_; }
  CutTail tail() const;

  // Position of the terminal entry, 1-based: unbounded 1, cut prefix+1,
  // principal h (its last coordinate), infinitesimal h+1.
  int defining_position() const;

  friend std::strong_ordering operator<=>(const Ranger& r, const Ranger& s);
  friend bool operator==(const Ranger& r, const Ranger& s);

  std::string to_string() const;

 private:
  Ranger() = default;

  int rank_ = 0;
  RangerKind kind_ = RangerKind::Principal;
  std::vector<Rational> coords_;
  int sign_ = 0;
  std::optional<QuadIrr> irrational_;
};

std::strong_ordering cmp(const Ranger& r, const Ranger& s);

struct RangerClass {
  RangerKind kind;
  std::optional<CutProfile> profile;
};

RangerClass classify(const Ranger& r);

Ranger translate(const Ranger& r, const GroupElem& g);
Ranger negate(const Ranger& r);
// Multiplication by a positive rational.
Ranger scale(const Ranger& r, const Rational& k);

// max(x - y, y - x) for principal rangers.
GroupElem mu(const Ranger& x, const Ranger& y);

Ranger successor(const GroupElem& g, int sign);

// Image in the completion of Q^j = Q^h / (scales > j), 0 <= j <= h.
Ranger coarsen(const Ranger& r, int j);
// coarsen restricted to 1 <= j < h.
Ranger project(const Ranger& r, int j);

// Inserts a ranger of Q^{h-j} into the fiber of Q^h over the image of `base`.
Ranger embed(const Ranger& r, const GroupElem& base);

// Principal elements strictly below/above a ranger (not the matching end).
GroupElem principal_below(const Ranger& r);
GroupElem principal_above(const Ranger& r);

const Ranger& max(const Ranger& a, const Ranger& b);
const Ranger& min(const Ranger& a, const Ranger& b);

}  // namespace adic
