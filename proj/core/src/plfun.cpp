#include "adic/plfun.hpp"

#include <algorithm>
#include <cstdlib>

#include "adic/error.hpp"

namespace adic {

ExtValue::ExtValue(GroupElem base, std::int64_t m, Ranger r) : base_(std::move(base)), m_(m), r_(std::move(r)) {
  require_same_rank(base_.rank(), r_.rank(), "ExtValue");
  if (m_ != 0 && r_.is_principal()) {
    base_ += Rational(m_) * r_.point();
    m_ = 0;
  }
}

ExtValue::ExtValue(GroupElem base)
    : base_(std::move(base)), m_(0), r_(Ranger::principal(GroupElem::zero(base_.rank()))) {}

int ExtValue::sign() const {
  if (m_ == 0) return base_.sign();
  // m*(r + base/m): compare r against -base/m.
  const Ranger pivot = Ranger::principal(Rational(-1, 1) / Rational(m_) * base_);
  const int c = r_ < pivot ? -1 : (r_ == pivot ? 0 : 1);
  return m_ > 0 ? c : -c;
}

ExtValue operator+(const ExtValue& x, const ExtValue& y) {
  if (x.m_ == 0) return ExtValue(x.base_ + y.base_, y.m_, y.r_);
  if (y.m_ == 0) return ExtValue(x.base_ + y.base_, x.m_, x.r_);
  if (x.r_ != y.r_) throw StructuralError("ExtValue: values at different rangers cannot be added");
  return ExtValue(x.base_ + y.base_, x.m_ + y.m_, x.r_);
}

bool operator==(const ExtValue& x, const ExtValue& y) {
  if (x.base_ != y.base_ || x.m_ != y.m_) return false;
  return x.m_ == 0 || x.r_ == y.r_;
}

std::string ExtValue::to_string() const {
  if (m_ == 0) return base_.to_string();
  return base_.to_string() + (m_ > 0 ? "+" : "") + std::to_string(m_) + "*r";
}

int compare(const ExtValue& x, const ExtValue& y) { return (x - y).sign(); }

PLFn::PLFn(GroupElem lo, GroupElem hi, std::vector<GroupElem> breakpoints, std::vector<std::int64_t> slopes,
           GroupElem anchor, bool pinch_left, bool pinch_right)
    : lo_(std::move(lo)),
      hi_(std::move(hi)),
      breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      anchor_(std::move(anchor)),
      pinch_left_(pinch_left),
      pinch_right_(pinch_right) {
  require_same_rank(lo_.rank(), hi_.rank(), "PLFn domain");
  require_same_rank(lo_.rank(), anchor_.rank(), "PLFn anchor");
  if (hi_ < lo_) throw DomainError("PLFn: domain endpoints out of order");
  if (slopes_.size() != breakpoints_.size() + 1) {
    throw StructuralError("PLFn: need exactly one slope per piece");
  }
  const GroupElem* prev = &lo_;
  for (const auto& b : breakpoints_) {
    require_same_rank(lo_.rank(), b.rank(), "PLFn breakpoint");
    if (!(*prev < b)) throw StructuralError("PLFn: breakpoints must increase strictly inside the domain");
    prev = &b;
  }
  if (!breakpoints_.empty() && !(breakpoints_.back() < hi_)) {
    throw StructuralError("PLFn: breakpoints must increase strictly inside the domain");
  }
  if (pinch_left_ && slopes_.front() != 0) throw StructuralError("PLFn: pinched left end needs slope 0");
  if (pinch_right_ && slopes_.back() != 0) throw StructuralError("PLFn: pinched right end needs slope 0");

  offsets_.reserve(slopes_.size());
  offsets_.push_back(anchor_ - Rational(slopes_[0]) * lo_);
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    offsets_.push_back(offsets_[i] + Rational(slopes_[i] - slopes_[i + 1]) * breakpoints_[i]);
  }
}

PLFn PLFn::linear(GroupElem lo, GroupElem hi, std::int64_t slope, GroupElem offset) {
  GroupElem anchor = Rational(slope) * lo + offset;
  return PLFn(std::move(lo), std::move(hi), {}, {slope}, std::move(anchor));
}

bool PLFn::contains(const Ranger& r) const {
  return Ranger::principal(lo_) <= r && r <= Ranger::principal(hi_);
}

std::size_t PLFn::piece_of(const Ranger& r) const {
  if (!contains(r)) throw DomainError("PLFn: " + r.to_string() + " lies outside the domain");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (r <= Ranger::principal(breakpoints_[i])) return i;
  }
  return breakpoints_.size();
}

ExtValue PLFn::eval(const Ranger& r) const {
  const std::size_t i = piece_of(r);
  return ExtValue(offsets_[i], slopes_[i], r);
}

GroupElem PLFn::value(const GroupElem& x) const { return eval(Ranger::principal(x)).base(); }

bool PLFn::is_monotone() const {
  const bool up = std::all_of(slopes_.begin(), slopes_.end(), [](auto n) { return n > 0; });
  const bool down = std::all_of(slopes_.begin(), slopes_.end(), [](auto n) { return n < 0; });
  return up || down;
}

bool is_nonnegative(const PLFn& f) {
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const GroupElem a = Rational(f.slopes()[i]) * f.piece_lo(i) + f.offset(i);
    const GroupElem b = Rational(f.slopes()[i]) * f.piece_hi(i) + f.offset(i);
    if (a.sign() < 0 || b.sign() < 0) return false;
  }
  return true;
}

std::vector<Corner> corners(const PLFn& f) {
  std::vector<Corner> out;
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    const std::int64_t jump = f.slopes()[i + 1] - f.slopes()[i];
    if (jump != 0) out.push_back({f.breakpoints()[i], jump});
  }
  return out;
}

Integer n_r(const Group& g, const GroupElem& r) {
  const auto c = g.lattice_coordinates(r);
  return lcm_denominators(c.data(), c.data() + c.size());
}

bool is_lattice_integral(const Group& g, const PLFn& f) {
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (!g.in_lattice(f.offset(i))) return false;
  }
  return true;
}

GroupElem interval_length(const GroupElem& a, const GroupElem& b) {
  if (b < a) throw DomainError("interval_length: endpoints out of order");
  return b - a;
}

GroupElem image_length(const PLFn& f) {
  if (!f.is_monotone()) throw DomainError("image_length: function is not strictly monotone");
  return abs(f.value(f.hi()) - f.value(f.lo()));
}

PLFn add(const PLFn& f, const PLFn& g) {
  if (f.lo() != g.lo() || f.hi() != g.hi()) throw StructuralError("add: domains differ");
  std::vector<GroupElem> bps = f.breakpoints();
  bps.insert(bps.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<std::int64_t> slopes;
  for (std::size_t i = 0; i <= bps.size(); ++i) {
    // Any interior point of the merged piece decides the slopes.
    const GroupElem& a = i == 0 ? f.lo() : bps[i - 1];
    const GroupElem& b = i == bps.size() ? f.hi() : bps[i];
    const Ranger mid = Ranger::principal(Rational(1, 2) * (a + b));
    slopes.push_back(f.slopes()[f.piece_of(mid)] + g.slopes()[g.piece_of(mid)]);
  }
  return PLFn(f.lo(), f.hi(), std::move(bps), std::move(slopes), f.anchor() + g.anchor(),
              f.pinch_left() && g.pinch_left(), f.pinch_right() && g.pinch_right());
}

PLFn compose(const PLFn& outer, const PLFn& inner) {
  if (!inner.is_monotone()) throw DomainError("compose: inner function is not strictly monotone");
  const GroupElem a = inner.value(inner.lo()), b = inner.value(inner.hi());
  const GroupElem& img_lo = min(a, b);
  const GroupElem& img_hi = max(a, b);
  if (img_lo < outer.lo() || outer.hi() < img_hi) throw DomainError("compose: image leaves the outer domain");

  std::vector<GroupElem> bps = inner.breakpoints();
  for (const auto& y : outer.breakpoints()) {
    if (!(img_lo < y && y < img_hi)) continue;
    for (std::size_t i = 0; i < inner.piece_count(); ++i) {
      const GroupElem x = Rational(1) / Rational(inner.slopes()[i]) * (y - inner.offset(i));
      if (inner.piece_lo(i) <= x && x <= inner.piece_hi(i)) {
        bps.push_back(x);
        break;
      }
    }
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<std::int64_t> slopes;
  for (std::size_t i = 0; i <= bps.size(); ++i) {
    const GroupElem& lo = i == 0 ? inner.lo() : bps[i - 1];
    const GroupElem& hi = i == bps.size() ? inner.hi() : bps[i];
    const GroupElem mid = Rational(1, 2) * (lo + hi);
    const std::int64_t n_in = inner.slopes()[inner.piece_of(Ranger::principal(mid))];
    const std::int64_t n_out = outer.slopes()[outer.piece_of(Ranger::principal(inner.value(mid)))];
    slopes.push_back(n_in * n_out);
  }
  return PLFn(inner.lo(), inner.hi(), std::move(bps), std::move(slopes), outer.value(inner.value(inner.lo())));
}

std::int64_t dilation(const PLFn& f, const GroupElem& x) {
  for (const auto& c : corners(f)) {
    if (c.at == x) throw DomainError("dilation: point is a corner");
  }
  return std::llabs(f.slopes()[f.piece_of(Ranger::principal(x))]);
}

}  // namespace adic
