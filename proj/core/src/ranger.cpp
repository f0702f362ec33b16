#include "adic/ranger.hpp"

#include <sstream>

#include "adic/error.hpp"

namespace adic {

QuadIrr::QuadIrr(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_ == 0) throw StructuralError("QuadIrr: coefficient of the square root must be nonzero");
  if (d_ < 2 || !is_squarefree(d_)) throw StructuralError("QuadIrr: radicand must be squarefree and >= 2");
}

namespace {

// floor(sqrt(s)) for rational s >= 0.
Integer floor_sqrt(const Rational& s) {
  Integer pq = s.get_num() * s.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), root.get_mpz_t(), s.get_den_mpz_t());
  return out;
}

}  // namespace

Rational QuadIrr::lower_bound() const {
  const Rational s = b_ * b_ * Rational(d_);
  const Rational l(floor_sqrt(s));
  return b_ > 0 ? Rational(a_ + l) : Rational(a_ - l - 1);
}

Rational QuadIrr::upper_bound() const { return lower_bound() + 1; }

std::string QuadIrr::to_string() const {
  return adic::to_string(a_) + "+" + adic::to_string(b_) + "*sqrt(" + d_.get_str() + ")";
}

int sign_of_sqrt_form(const Rational& a, const Rational& b, const Integer& d) {
  if (d < 0) throw DomainError("sign_of_sqrt_form: negative radicand");
  if (is_perfect_square(d)) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    return sgn(Rational(a + b * Rational(root)));
  }
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins; equality is impossible.
  return cmp(Rational(a * a), Rational(b * b * Rational(d))) > 0 ? sa : sb;
}

int compare(const QuadIrr& x, const Rational& q) { return sign_of_sqrt_form(x.a() - q, x.b(), x.d()); }

int compare(const QuadIrr& x, const QuadIrr& y) {
  const Rational diff = x.a() - y.a();
  if (x.d() == y.d()) return sign_of_sqrt_form(diff, x.b() - y.b(), x.d());

  // diff + u*sqrt(p) + v*sqrt(q) with 1, sqrt(p), sqrt(q) independent over Q.
  const Rational& u = x.b();
  const Rational v = -y.b();
  const Rational up = u * u * Rational(x.d());
  const Rational vq = v * v * Rational(y.d());
  const int su = sgn(u), sv = sgn(v);
  const int s_irr = (su == sv) ? su : (cmp(up, vq) > 0 ? su : sv);
  const int s_rat = sgn(diff);
  if (s_rat == 0 || s_rat == s_irr) return s_irr;
  // Compare diff^2 with (u sqrt p + v sqrt q)^2 = up + vq + 2uv sqrt(pq).
  const int c = sign_of_sqrt_form(diff * diff - up - vq, Rational(-2 * u * v), x.d() * y.d());
  return c > 0 ? s_rat : s_irr;
}

const char* to_string(RangerKind k) {
  switch (k) {
    case RangerKind::Unbounded: return "unbounded";
    case RangerKind::Principal: return "principal";
    case RangerKind::Cut: return "cut";
    case RangerKind::Infinitesimal: return "infinitesimal";
  }
  return "?";
}

Ranger Ranger::unbounded(int rank, int sign) {
  if (rank < 0) throw StructuralError("Ranger: negative rank");
  if (sign != 1 && sign != -1) throw StructuralError("Ranger: sign must be +1 or -1");
  Ranger r;
  r.rank_ = rank;
  r.kind_ = RangerKind::Unbounded;
  r.sign_ = sign;
  return r;
}

Ranger Ranger::principal(GroupElem coords) {
  Ranger r;
  r.rank_ = coords.rank();
  r.kind_ = RangerKind::Principal;
  r.coords_ = coords.coords();
  return r;
}

Ranger Ranger::infinitesimal(GroupElem coords, int sign) {
  if (sign != 1 && sign != -1) throw StructuralError("Ranger: sign must be +1 or -1");
  if (coords.rank() == 0) return unbounded(0, sign);
  Ranger r;
  r.rank_ = coords.rank();
  r.kind_ = RangerKind::Infinitesimal;
  r.coords_ = coords.coords();
  r.sign_ = sign;
  return r;
}

Ranger Ranger::cut(int rank, std::vector<Rational> prefix, CutTail tail) {
  const int len = static_cast<int>(prefix.size());
  if (len > rank) throw StructuralError("Ranger: cut prefix longer than the rank");
  if (tail.infinite()) {
    if (tail.irrational) throw StructuralError("Ranger: cut tail is both infinite and irrational");
    if (len == 0) return unbounded(rank, tail.infinity);
    if (len == rank) return infinitesimal(GroupElem(std::move(prefix)), tail.infinity);
  } else {
    if (!tail.irrational) throw StructuralError("Ranger: cut tail missing");
    if (len == rank) throw StructuralError("Ranger: irrational cut tail needs a prefix shorter than the rank");
  }
  Ranger r;
  r.rank_ = rank;
  r.kind_ = RangerKind::Cut;
  r.coords_ = std::move(prefix);
  r.sign_ = tail.infinity;
  r.irrational_ = std::move(tail.irrational);
  return r;
}

GroupElem Ranger::point() const {
  if (kind_ != RangerKind::Principal && kind_ != RangerKind::Infinitesimal) {
    throw DomainError("Ranger::point: ranger " + to_string() + " has no underlying group element");
  }
  return GroupElem(coords_);
}

CutTail Ranger::tail() const {
  if (kind_ != RangerKind::Cut) throw DomainError("Ranger::tail: not a cut");
  return CutTail{sign_, irrational_};
}

int Ranger::defining_position() const {
  switch (kind_) {
    case RangerKind::Unbounded: return 1;
    case RangerKind::Principal: return rank_;
    case RangerKind::Infinitesimal: return rank_ + 1;
    case RangerKind::Cut: return static_cast<int>(coords_.size()) + 1;
  }
  return 0;
}

namespace {

struct Entry {
  enum Kind { Rat, Quad, Inf, Neutral } kind;
  const Rational* q = nullptr;
  const QuadIrr* irr = nullptr;
  int inf = 0;
};

Entry entry_at(const Ranger& r, std::size_t i) {
  const auto& c = r.coords();
  if (i < c.size()) return Entry{Entry::Rat, &c[i]};
  switch (r.kind()) {
    case RangerKind::Principal: return Entry{Entry::Neutral};
    case RangerKind::Cut:
      if (r.irrational_tail()) return Entry{Entry::Quad, nullptr, &*r.irrational_tail()};
      return Entry{Entry::Inf, nullptr, nullptr, r.sign()};
    default: return Entry{Entry::Inf, nullptr, nullptr, r.sign()};
  }
}

bool terminal(const Entry& e) { return e.kind != Entry::Rat; }

int compare_entries(const Entry& x, const Entry& y) {
  if (x.kind == Entry::Inf || y.kind == Entry::Inf) {
    const int a = x.kind == Entry::Inf ? x.inf : 0;
    const int b = y.kind == Entry::Inf ? y.inf : 0;
    return (a > b) - (a < b);
  }
  if (x.kind == Entry::Neutral || y.kind == Entry::Neutral) {
    if (x.kind == y.kind) return 0;
    throw StructuralError("Ranger cmp: misaligned sequences");
  }
  if (x.kind == Entry::Rat && y.kind == Entry::Rat) return cmp(*x.q, *y.q);
  if (x.kind == Entry::Quad && y.kind == Entry::Quad) return compare(*x.irr, *y.irr);
  if (x.kind == Entry::Quad) return compare(*x.irr, *y.q);
  return -compare(*y.irr, *x.q);
}

}  // namespace

std::strong_ordering operator<=>(const Ranger& r, const Ranger& s) {
  require_same_rank(r.rank(), s.rank(), "Ranger cmp");
  for (std::size_t i = 0;; ++i) {
    const Entry x = entry_at(r, i), y = entry_at(s, i);
    const int c = compare_entries(x, y);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    if (terminal(x)) return std::strong_ordering::equal;
  }
}

bool operator==(const Ranger& r, const Ranger& s) { return (r <=> s) == std::strong_ordering::equal; }

std::strong_ordering cmp(const Ranger& r, const Ranger& s) { return r <=> s; }

std::string Ranger::to_string() const {
  auto join = [](const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += adic::to_string(v[i]);
    }
    return out;
  };
  switch (kind_) {
    case RangerKind::Unbounded: return sign_ > 0 ? "+inf" : "-inf";
    case RangerKind::Principal: return "(" + join(coords_) + ")";
    case RangerKind::Infinitesimal: return "(" + join(coords_) + ")" + (sign_ > 0 ? "+" : "-");
    case RangerKind::Cut: {
      std::string out = "(" + join(coords_);
      if (!coords_.empty()) out += ",";
      if (irrational_) return out + irrational_->to_string() + ")";
      return out + (sign_ > 0 ? "+inf)" : "-inf)");
    }
  }
  return {};
}

RangerClass classify(const Ranger& r) {
  RangerClass out{r.kind(), std::nullopt};
  if (r.is_cut()) {
    CutProfile p;
    const int n = static_cast<int>(r.coords().size()) + 1;
    if (r.irrational_tail()) {
      p.threshold = n;
      p.symmetric = true;
    } else {
      p.threshold = n - 1;
      p.symmetric = false;
      p.direction = r.sign() > 0 ? CutDirection::Down : CutDirection::Up;
    }
    out.profile = p;
  }
  return out;
}

Ranger translate(const Ranger& r, const GroupElem& g) {
  require_same_rank(r.rank(), g.rank(), "translate");
  switch (r.kind()) {
    case RangerKind::Unbounded: return r;
    case RangerKind::Principal: return Ranger::principal(GroupElem(r.coords()) + g);
    case RangerKind::Infinitesimal: return Ranger::infinitesimal(GroupElem(r.coords()) + g, r.sign());
    case RangerKind::Cut: {
      std::vector<Rational> prefix = r.coords();
      for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] += g[i];
      CutTail tail = r.tail();
      if (tail.irrational) tail.irrational = *tail.irrational + g[prefix.size()];
      return Ranger::cut(r.rank(), std::move(prefix), std::move(tail));
    }
  }
  return r;
}

Ranger negate(const Ranger& r) {
  switch (r.kind()) {
    case RangerKind::Unbounded: return Ranger::unbounded(r.rank(), -r.sign());
    case RangerKind::Principal: return Ranger::principal(-GroupElem(r.coords()));
    case RangerKind::Infinitesimal: return Ranger::infinitesimal(-GroupElem(r.coords()), -r.sign());
    case RangerKind::Cut: {
      std::vector<Rational> prefix = r.coords();
      for (auto& c : prefix) c = -c;
      CutTail tail = r.tail();
      tail.infinity = -tail.infinity;
      if (tail.irrational) tail.irrational = -*tail.irrational;
      return Ranger::cut(r.rank(), std::move(prefix), std::move(tail));
    }
  }
  return r;
}

Ranger scale(const Ranger& r, const Rational& k) {
  if (k <= 0) throw DomainError("scale: factor must be positive");
  switch (r.kind()) {
    case RangerKind::Unbounded: return r;
    case RangerKind::Principal: return Ranger::principal(k * GroupElem(r.coords()));
    case RangerKind::Infinitesimal: return Ranger::infinitesimal(k * GroupElem(r.coords()), r.sign());
    case RangerKind::Cut: {
      std::vector<Rational> prefix = r.coords();
      for (auto& c : prefix) c *= k;
      CutTail tail = r.tail();
      if (tail.irrational) tail.irrational = tail.irrational->scaled(k);
      return Ranger::cut(r.rank(), std::move(prefix), std::move(tail));
    }
  }
  return r;
}

GroupElem mu(const Ranger& x, const Ranger& y) {
  if (!x.is_principal() || !y.is_principal()) {
    throw DomainError("mu: distance is defined on principal rangers only");
  }
  return abs(x.point() - y.point());
}

Ranger successor(const GroupElem& g, int sign) { return Ranger::infinitesimal(g, sign); }

Ranger coarsen(const Ranger& r, int j) {
  if (j < 0 || j > r.rank()) throw DomainError("coarsen: target rank out of range");
  if (j == r.rank()) return r;
  const int n = r.defining_position();
  switch (r.kind()) {
    case RangerKind::Unbounded: return Ranger::unbounded(j, r.sign());
    case RangerKind::Cut:
      if (n <= j || (n == j + 1 && r.sign() != 0)) return Ranger::cut(j, r.coords(), r.tail());
      break;
    default: break;
  }
  return Ranger::principal(GroupElem(std::vector<Rational>(r.coords().begin(), r.coords().begin() + j)));
}

Ranger project(const Ranger& r, int j) {
  if (j < 1 || j >= r.rank()) throw DomainError("project: need 1 <= j < rank");
  return coarsen(r, j);
}

Ranger embed(const Ranger& r, const GroupElem& base) {
  const int j = base.rank() - r.rank();
  if (j < 0) throw StructuralError("embed: fiber rank exceeds the ambient rank");
  const int h = base.rank();
  std::vector<Rational> lifted(j);
  Ranger out = Ranger::unbounded(h, 1);
  switch (r.kind()) {
    case RangerKind::Unbounded:
      out = Ranger::cut(h, std::move(lifted), r.sign() > 0 ? CutTail::plus_infinity() : CutTail::minus_infinity());
      break;
    case RangerKind::Principal:
    case RangerKind::Infinitesimal:
    case RangerKind::Cut: {
      lifted.insert(lifted.end(), r.coords().begin(), r.coords().end());
      if (r.is_principal()) {
        out = Ranger::principal(GroupElem(std::move(lifted)));
      } else if (r.is_infinitesimal()) {
        out = Ranger::infinitesimal(GroupElem(std::move(lifted)), r.sign());
      } else {
        out = Ranger::cut(h, std::move(lifted), r.tail());
      }
      break;
    }
  }
  return translate(out, base);
}

GroupElem principal_below(const Ranger& r) {
  const int h = r.rank();
  switch (r.kind()) {
    case RangerKind::Unbounded:
      if (r.sign() < 0) throw DomainError("principal_below: nothing lies below -inf");
      return GroupElem::zero(h);
    case RangerKind::Principal: return r.point() - GroupElem::unit(h, h);
    case RangerKind::Infinitesimal:
      return r.sign() > 0 ? r.point() : r.point() - GroupElem::unit(h, h);
    case RangerKind::Cut: {
      std::vector<Rational> c = r.coords();
      if (r.irrational_tail()) {
        c.push_back(r.irrational_tail()->lower_bound());
      } else if (r.sign() < 0) {
        c.back() -= 1;
      }
      c.resize(h);
      return GroupElem(std::move(c));
    }
  }
  return GroupElem::zero(h);
}

GroupElem principal_above(const Ranger& r) {
  if (r.is_unbounded() && r.sign() > 0) throw DomainError("principal_above: nothing lies above +inf");
  return -principal_below(negate(r));
}

const Ranger& max(const Ranger& a, const Ranger& b) { return a < b ? b : a; }
const Ranger& min(const Ranger& a, const Ranger& b) { return b < a ? b : a; }

}  // namespace adic
