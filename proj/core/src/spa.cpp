#include "adic/spa.hpp"

#include <functional>

#include "adic/error.hpp"
#include "adic/plfun.hpp"

namespace adic {

A1Point::A1Point(int j, Ranger r) : base_j(j), fiber(std::move(r)) {
  if (j < 0) throw StructuralError("A1Point: negative spectrum index");
  require_same_rank(j, fiber.rank(), "A1Point fiber");
}

bool spa_point_membership(const A1Point& p, const LinElem& f) {
  if (f.gamma.rank() < p.base_j) throw StructuralError("spa_point_membership: element rank below the point level");
  return ExtValue(f.gamma.truncate(p.base_j), f.m, p.fiber).sign() >= 0;
}

A1Point generize(const A1Point& p, int j) {
  if (j < 0 || j > p.base_j) throw DomainError("generize: target must satisfy 0 <= j <= base");
  return A1Point(j, coarsen(p.fiber, j));
}

std::vector<A1Point> probe_points(const std::vector<LinElem>& elems, int rank) {
  std::vector<GroupElem> critical{GroupElem::zero(rank)};
  for (const auto& f : elems) {
    if (f.m != 0) critical.push_back(Rational(-1) / Rational(f.m) * f.gamma);
  }
  std::vector<Ranger> top;
  for (const auto& c : critical) {
    top.push_back(Ranger::principal(c));
    for (int k = rank; k >= 1; --k) {
      top.push_back(Ranger::principal(c + GroupElem::unit(rank, k)));
      top.push_back(Ranger::principal(c - GroupElem::unit(rank, k)));
    }
  }
  for (const auto& c : critical) {
    top.push_back(successor(c, 1));
    top.push_back(successor(c, -1));
  }
  top.push_back(Ranger::unbounded(rank, 1));
  top.push_back(Ranger::unbounded(rank, -1));

  std::vector<A1Point> out;
  for (int j = rank; j >= 0; --j) {
    for (const auto& r : top) {
      A1Point p(j, coarsen(r, j));
      bool seen = false;
      for (const auto& q : out) seen = seen || q == p;
      if (!seen) out.push_back(std::move(p));
    }
  }
  return out;
}

SaturationResult saturation_contains(const std::vector<LinElem>& generators, const LinElem& g, int bound) {
  if (bound < 1) throw DomainError("saturation_contains: bound must be positive");
  const int rank = g.gamma.rank();
  for (const auto& f : generators) require_same_rank(rank, f.gamma.rank(), "saturation_contains");

  SaturationResult res;
  std::vector<int> coeffs(generators.size(), 0);
  for (int n = 1; n <= bound && !res.found; ++n) {
    // Depth-first over coefficient vectors; the t-part must cancel exactly.
    std::function<bool(std::size_t, LinElem)> search = [&](std::size_t i, LinElem rest) {
      if (i == generators.size()) return rest.m == 0 && rest.gamma.sign() >= 0;
      for (int c = 0; c <= bound; ++c) {
        coeffs[i] = c;
        LinElem next{rest.gamma - Rational(c) * generators[i].gamma, rest.m - c * generators[i].m};
        if (search(i + 1, std::move(next))) return true;
      }
      coeffs[i] = 0;
      return false;
    };
    if (search(0, LinElem{Rational(n) * g.gamma, n * g.m})) {
      res.found = true;
      res.n = n;
      res.coeffs = coeffs;
    }
  }
  if (res.found) return res;

  std::vector<LinElem> all = generators;
  all.push_back(g);
  for (const auto& p : probe_points(all, rank)) {
    bool ok = !spa_point_membership(p, g);
    for (const auto& f : generators) ok = ok && spa_point_membership(p, f);
    if (ok) {
      res.witness = p;
      break;
    }
  }
  return res;
}

}  // namespace adic
