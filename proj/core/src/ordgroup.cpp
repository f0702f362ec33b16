#include "adic/ordgroup.hpp"

#include <sstream>

#include "adic/error.hpp"

namespace adic {

void require_same_rank(int a, int b, const char* context) {
  if (a != b) {
    std::ostringstream os;
    os << context << ": rank mismatch (" << a << " vs " << b << ")";
    throw StructuralError(os.str());
  }
}

GroupElem GroupElem::unit(int rank, int scale_index) {
  GroupElem g = zero(rank);
  g[scale_index - 1] = 1;
  return g;
}

bool GroupElem::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

int GroupElem::sign() const {
  for (const auto& c : coords_) {
    if (c != 0) return sgn(c);
  }
  return 0;
}

GroupElem GroupElem::truncate(int j) const {
  return GroupElem(std::vector<Rational>(coords_.begin(), coords_.begin() + j));
}

GroupElem GroupElem::concat(const GroupElem& tail) const {
  std::vector<Rational> out = coords_;
  out.insert(out.end(), tail.coords_.begin(), tail.coords_.end());
  return GroupElem(std::move(out));
}

GroupElem& GroupElem::operator+=(const GroupElem& other) {
  require_same_rank(rank(), other.rank(), "GroupElem::operator+");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GroupElem& GroupElem::operator-=(const GroupElem& other) {
  require_same_rank(rank(), other.rank(), "GroupElem::operator-");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

GroupElem& GroupElem::operator*=(const Rational& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

GroupElem GroupElem::operator-() const {
  GroupElem out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const GroupElem& a, const GroupElem& b) {
  require_same_rank(a.rank(), b.rank(), "cmp");
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroupElem& a, const GroupElem& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string GroupElem::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += adic::to_string(coords_[i]);
  }
  return out + ")";
}

std::strong_ordering cmp(const GroupElem& a, const GroupElem& b) { return a <=> b; }

GroupElem abs(const GroupElem& g) { return g.sign() < 0 ? -g : g; }

const GroupElem& max(const GroupElem& a, const GroupElem& b) { return a < b ? b : a; }
const GroupElem& min(const GroupElem& a, const GroupElem& b) { return b < a ? b : a; }

ScaleIdx scale_index(const GroupElem& g) {
  for (int i = 0; i < g.rank(); ++i) {
    if (g[i] != 0) return ScaleIdx{i + 1};
  }
  throw DomainError("scale_index: zero element has no scale");
}

bool much_smaller(const GroupElem& a, const GroupElem& b) {
  return scale_index(a).index > scale_index(b).index;
}

bool same_scale(const GroupElem& a, const GroupElem& b) {
  return scale_index(a) == scale_index(b);
}

Group::Group(int rank) : rank_(rank) {
  if (rank < 1) throw StructuralError("Group: rank must be positive");
  for (int i = 1; i <= rank; ++i) basis_.push_back(GroupElem::unit(rank, i));
  inverse_.assign(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) inverse_[i * rank + i] = 1;
}

Group::Group(int rank, std::vector<GroupElem> lattice_basis)
    : rank_(rank), explicit_lattice_(true), basis_(std::move(lattice_basis)) {
  if (rank < 1) throw StructuralError("Group: rank must be positive");
  if (static_cast<int>(basis_.size()) != rank) {
    throw StructuralError("Group: lattice needs exactly rank basis vectors");
  }
  for (const auto& b : basis_) require_same_rank(rank, b.rank(), "Group lattice");

  // Gauss-Jordan on [B | I] where B has the basis vectors as rows.
  const int n = rank;
  std::vector<Rational> a(static_cast<std::size_t>(n) * n), inv(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) a[i * n + k] = basis_[i][k];
    inv[i * n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r * n + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw StructuralError("Group: lattice basis is linearly dependent");
    if (pivot != col) {
      for (int k = 0; k < n; ++k) {
        std::swap(a[pivot * n + k], a[col * n + k]);
        std::swap(inv[pivot * n + k], inv[col * n + k]);
      }
    }
    const Rational p = a[col * n + col];
    for (int k = 0; k < n; ++k) {
      a[col * n + k] /= p;
      inv[col * n + k] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const Rational f = a[r * n + col];
      for (int k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[col * n + k];
        inv[r * n + k] -= f * inv[col * n + k];
      }
    }
  }
  inverse_ = std::move(inv);
}

std::vector<Rational> Group::lattice_coordinates(const GroupElem& g) const {
  require_same_rank(rank_, g.rank(), "lattice_coordinates");
  // g = sum_i c_i b_i, i.e. g^T = c^T B, so c^T = g^T B^{-1}.
  std::vector<Rational> c(rank_, 0);
  for (int k = 0; k < rank_; ++k) {
    for (int i = 0; i < rank_; ++i) c[k] += g[i] * inverse_[i * rank_ + k];
  }
  return c;
}

bool Group::in_lattice(const GroupElem& g) const {
  for (const auto& c : lattice_coordinates(g)) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool operator==(const Group& a, const Group& b) {
  if (a.rank_ != b.rank_ || a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    if (!(a.basis_[i] == b.basis_[i])) return false;
  }
  return true;
}

bool SpecPoint::in_prime_ideal(const GroupElem& x) const {
  if (x.sign() <= 0) return false;
  return scale_index(x).index <= j;
}

bool SpecPoint::in_convex_subgroup(const GroupElem& x) const {
  if (x.is_zero()) return true;
  return scale_index(x).index > j;
}

std::vector<SpecPoint> spec_points(const Group& g) {
  std::vector<SpecPoint> out;
  for (int j = 0; j <= g.rank(); ++j) out.push_back(SpecPoint{j, g.rank()});
  return out;
}

}  // namespace adic
