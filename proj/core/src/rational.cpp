#include "adic/rational.hpp"

#include <cctype>

#include "adic/error.hpp"

namespace adic {
namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string owned(s.front() == '+' ? s.substr(1) : s);
  return Integer(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer_text(num)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Integer p = parse_integer(num);
  Integer q = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
      throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    q = parse_integer(den);
    if (q == 0) {
      throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer lcm_denominators(const Rational* begin, const Rational* end) {
  Integer acc = 1;
  for (const Rational* it = begin; it != end; ++it) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), it->get_den_mpz_t());
  }
  return acc;
}

Integer floor_rational(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_squarefree(const Integer& n) {
  if (n < 1) return false;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace adic
