#include "adic/quasitop.hpp"

#include <algorithm>
#include <bit>

#include "adic/error.hpp"

namespace adic {

FiniteSpace::FiniteSpace(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& specializations)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n > kMaxPoints) throw StructuralError("finite space: at most 64 points");
  gen_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) gen_[i] = bit(i);
  for (const auto& [x, y] : specializations) {
    if (x >= n || y >= n) throw StructuralError("finite space: specialization index out of range");
    gen_[x] |= bit(y);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((gen_[i] >> k) & 1U) gen_[i] |= gen_[k];
    }
  }
  spec_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : members(gen_[x])) spec_[y] |= bit(x);
  }
}

PointSet FiniteSpace::all() const {
  return size() == kMaxPoints ? ~PointSet{0} : (PointSet{1} << size()) - 1;
}

bool FiniteSpace::is_open(PointSet s) const {
  for (std::size_t x : members(s)) {
    if ((gen_[x] & ~s) != 0) return false;
  }
  return true;
}

bool FiniteSpace::is_t0() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if ((gen_[x] & spec_[x]) != bit(x)) return false;
  }
  return true;
}

std::vector<PointSet> FiniteSpace::components(PointSet s) const {
  // Subspaces of an Alexandrov space are Alexandrov with the restricted
  // preorder, so components are those of the comparability graph.
  std::vector<PointSet> out;
  PointSet rest = s;
  while (rest != 0) {
    PointSet comp = rest & -rest;
    PointSet frontier = comp;
    while (frontier != 0) {
      PointSet next = 0;
      for (std::size_t x : members(frontier)) next |= (gen_[x] | spec_[x]) & s;
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

bool FiniteSpace::connected(PointSet s) const { return s != 0 && components(s).size() == 1; }

std::size_t FiniteSpace::branch_count(std::size_t x) const { return components(all() & ~bit(x)).size(); }

bool FiniteSpace::separates(std::size_t x, std::size_t a, std::size_t b) const {
  if (x == a || x == b) return false;
  for (PointSet c : components(all() & ~bit(x))) {
    if ((c >> a) & 1U) return ((c >> b) & 1U) == 0;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSpace::relations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y : members(gen_[x])) {
      if (y != x) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<std::size_t> members(PointSet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

int QuasiTreeReport::failed_axiom() const {
  for (int i = 0; i < 3; ++i) {
    if (!axioms[static_cast<std::size_t>(i)].holds) return i;
  }
  return -1;
}

PointSet quasi_segment(const FiniteSpace& sp, std::size_t a, std::size_t b) {
  PointSet s = FiniteSpace::bit(a) | FiniteSpace::bit(b);
  for (std::size_t x = 0; x < sp.size(); ++x) {
    if (sp.separates(x, a, b)) s |= FiniteSpace::bit(x);
  }
  return s;
}

QuasiTreeReport check_quasi_tree(const FiniteSpace& sp, std::size_t bound) {
  const std::size_t n = sp.size();
  if (n > bound) {
    throw DomainError("check_quasi_tree: " + std::to_string(n) + " points exceed the bound " + std::to_string(bound));
  }
  QuasiTreeReport r;
  for (std::size_t x = 0; x < n && r.axioms[0].holds; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (sp.specializes(x, y) && sp.specializes(y, x)) {
        r.axioms[0] = {false, {x, y}};
        break;
      }
    }
  }

  // Any connected subspace containing a and b contains every separator, and
  // its interior may only contain separators, so the candidate is unique.
  std::vector<PointSet> seg(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      seg[a * n + b] = seg[b * n + a] = quasi_segment(sp, a, b);
      if (r.axioms[1].holds && !sp.connected(seg[a * n + b])) r.axioms[1] = {false, {a, b}};
    }
  }

  for (std::size_t x = 0; x < n && r.axioms[2].holds; ++x) {
    for (std::size_t y = 0; y < n && r.axioms[2].holds; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if ((seg[x * n + y] & seg[x * n + z]) != FiniteSpace::bit(x)) continue;
        if (seg[y * n + z] != (seg[y * n + x] | seg[x * n + z])) {
          r.axioms[2] = {false, {x, y, z}};
          break;
        }
      }
    }
  }
  return r;
}

bool collinear(const FiniteSpace& sp, std::size_t a, std::size_t b, std::size_t c) {
  return sp.separates(a, b, c) || sp.separates(b, a, c) || sp.separates(c, a, b);
}

std::vector<std::size_t> separating_vertices(const FiniteSpace& sp, std::size_t a, std::size_t b, std::size_t c) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < sp.size(); ++x) {
    if (x == a || x == b || x == c) continue;
    if (sp.separates(x, a, b) && sp.separates(x, a, c) && sp.separates(x, b, c)) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> leaves(const FiniteSpace& sp) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < sp.size(); ++x) {
    if (sp.size() > 1 && sp.branch_count(x) == 1) out.push_back(x);
  }
  return out;
}

namespace {

void check_marks(const MarkedOrder& m) {
  if (m.labels.size() != m.closed.size()) throw StructuralError("marked order: labels and marks differ in length");
}

}  // namespace

bool is_quasi_interval(const MarkedOrder& m) {
  check_marks(m);
  const std::size_t n = m.labels.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (m.closed[i] && m.closed[i + 1]) return false;
    if (!m.closed[i] && !m.closed[i + 1]) return false;
  }
  return true;
}

FiniteSpace to_space(const MarkedOrder& m) {
  check_marks(m);
  const std::size_t n = m.labels.size();
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t x = 0; x < n; ++x) {
    // Smallest basic open around x: between the nearest closed points on
    // either side, excluding them.
    std::size_t lo = x, hi = x;
    while (lo > 0 && !m.closed[lo - 1]) --lo;
    while (hi + 1 < n && !m.closed[hi + 1]) ++hi;
    for (std::size_t y = lo; y <= hi; ++y) {
      if (y != x) rel.emplace_back(x, y);
    }
  }
  return FiniteSpace(m.labels, rel);
}

MarkedOrder ranger_completion_order(const std::vector<std::string>& s) {
  MarkedOrder m;
  if (s.empty()) {
    m.labels = {"inf"};
    m.closed = {true};
    return m;
  }
  m.labels.push_back("-inf");
  m.closed.push_back(true);
  for (std::size_t i = 0; i < s.size(); ++i) {
    m.labels.push_back(s[i]);
    m.closed.push_back(false);
    m.labels.push_back(i + 1 < s.size() ? s[i] + "+" : "+inf");
    m.closed.push_back(true);
  }
  return m;
}

FiniteSpace ranger_complete(const std::vector<std::string>& s) { return to_space(ranger_completion_order(s)); }

MarkedOrder minimal_completion_order(const std::vector<std::string>& s) {
  MarkedOrder m;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      m.labels.push_back("(" + s[i - 1] + "," + s[i] + ")");
      m.closed.push_back(false);
    }
    m.labels.push_back(s[i]);
    m.closed.push_back(true);
  }
  return m;
}

FiniteSpace minimal_complete(const std::vector<std::string>& s) { return to_space(minimal_completion_order(s)); }

std::vector<std::size_t> minimal_retraction(const MarkedOrder& t, const std::vector<std::size_t>& positions) {
  check_marks(t);
  if (!is_quasi_interval(t)) throw DomainError("minimal_retraction: source is not a quasi-interval");
  if (positions.empty()) throw DomainError("minimal_retraction: empty subset");
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] >= t.labels.size()) throw StructuralError("minimal_retraction: position out of range");
    if (k > 0 && positions[k] <= positions[k - 1]) throw DomainError("minimal_retraction: positions must increase");
    if (!t.closed[positions[k]]) throw DomainError("minimal_retraction: subset points must be closed");
  }
  std::vector<std::size_t> out(t.labels.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    while (k < positions.size() && positions[k] < i) ++k;
    if (k == 0) {
      out[i] = 0;
    } else if (k == positions.size()) {
      out[i] = 2 * (positions.size() - 1);
    } else if (positions[k] == i) {
      out[i] = 2 * k;
    } else {
      out[i] = 2 * k - 1;
    }
  }
  return out;
}

HausdorffQuotient hausdorff_quotient(const FiniteSpace& sp) {
  HausdorffQuotient q;
  const auto comps = sp.components(sp.all());
  q.fiber_of.assign(sp.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::string l;
    for (std::size_t x : members(comps[c])) {
      q.fiber_of[x] = c;
      l += (l.empty() ? "" : "|") + sp.label(x);
    }
    labels.push_back(l);
  }
  q.space = FiniteSpace(std::move(labels), {});
  return q;
}

}  // namespace adic
