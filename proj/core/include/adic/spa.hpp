#pragma once

// Valuation spectra of Gamma and of Gamma + Z*t.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adic/ordgroup.hpp"
#include "adic/ranger.hpp"

namespace adic {

// gamma + m*t
struct LinElem {
  GroupElem gamma;
  std::int64_t m = 0;

  friend bool operator==(const LinElem&, const LinElem&) = default;
};

// Point of the affine line over the spectrum point j: a ranger of Q^j, the
// quotient of Gamma by its convex subgroup of scales > j.
struct A1Point {
  int base_j = 0;
  Ranger fiber = Ranger::principal(GroupElem{});

  A1Point() = default;
  A1Point(int j, Ranger r);

  friend bool operator==(const A1Point&, const A1Point&) = default;
};

bool spa_point_membership(const A1Point& p, const LinElem& f);

A1Point generize(const A1Point& p, int j);

struct SaturationResult {
  bool found = false;
  // n*g = sum coeffs[i]*M[i] + (element of Gamma^+)
  int n = 0;
  std::vector<int> coeffs;
  // When not found: a point nonnegative on M and negative on g, if one was seen.
  std::optional<A1Point> witness;
};

SaturationResult saturation_contains(const std::vector<LinElem>& generators, const LinElem& g, int bound);

// Candidate points probing linear conditions: critical values, their
// neighbours and the ends, on every spectrum level.
std::vector<A1Point> probe_points(const std::vector<LinElem>& elems, int rank);

}  // namespace adic
