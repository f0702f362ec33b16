#include "adic/p1tree.hpp"

#include <algorithm>
#include <set>

#include "adic/error.hpp"

namespace adic {

namespace {

Ranger principal_of(const GroupElem& g) { return Ranger::principal(g); }

Ranger neg_inf(int rank) { return Ranger::unbounded(rank, -1); }

std::size_t least_label(const CenterConfig& c, const std::vector<std::size_t>& idx) {
  std::size_t best = idx.front();
  for (std::size_t i : idx) {
    if (c.label(i) < c.label(best)) best = i;
  }
  return best;
}

void require_point(const CenterConfig& c, const P1Point& x, const char* ctx) {
  if (!x.is_infinity() && x.center() >= c.size()) throw DomainError(std::string(ctx) + ": center out of range");
}

}  // namespace

CenterConfig::CenterConfig(int rank, std::vector<std::string> labels) : rank_(rank), labels_(std::move(labels)) {
  if (rank_ < 1) throw StructuralError("CenterConfig: rank must be positive");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw StructuralError("CenterConfig: duplicate label " + l);
  }
  delta_.assign(labels_.size(), std::vector<std::optional<GroupElem>>(labels_.size()));
}

std::optional<std::size_t> CenterConfig::index(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void CenterConfig::set(std::size_t a, std::size_t b, GroupElem logdist) {
  if (a >= size() || b >= size()) throw DomainError("CenterConfig: index out of range");
  if (a == b) throw DomainError("CenterConfig: distance of a center to itself is -inf");
  require_same_rank(rank_, logdist.rank(), "CenterConfig");
  delta_[a][b] = logdist;
  delta_[b][a] = std::move(logdist);
}

bool CenterConfig::has(std::size_t a, std::size_t b) const { return a != b && delta_.at(a).at(b).has_value(); }

const GroupElem& CenterConfig::delta(std::size_t a, std::size_t b) const {
  if (a == b) throw DomainError("CenterConfig: distance of a center to itself is -inf");
  const auto& d = delta_.at(a).at(b);
  if (!d) throw DomainError("CenterConfig: no distance between " + labels_[a] + " and " + labels_[b]);
  return *d;
}

Ranger CenterConfig::delta_ranger(std::size_t a, std::size_t b) const {
  return a == b ? neg_inf(rank_) : principal_of(delta(a, b));
}

ValidationReport validate_config(const CenterConfig& c) {
  ValidationReport rep;
  const std::size_t n = c.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!c.has(a, b)) rep.errors.push_back("missing distance " + c.label(a) + "," + c.label(b));
    }
  }
  if (!rep.ok()) return rep;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t d = b + 1; d < n; ++d) {
        std::vector<GroupElem> v{c.delta(a, b), c.delta(b, d), c.delta(a, d)};
        std::sort(v.begin(), v.end());
        if (v[1] != v[2]) {
          rep.errors.push_back("not ultrametric: " + c.label(a) + "," + c.label(b) + "," + c.label(d));
        }
      }
    }
  }
  return rep;
}

P1Point P1Point::monomial(const CenterConfig& c, std::size_t center, const Ranger& logradius) {
  if (center >= c.size()) throw DomainError("P1Point: center out of range");
  require_same_rank(c.rank(), logradius.rank(), "P1Point");
  if (logradius.is_unbounded() && logradius.sign() < 0) return classical(center);
  std::vector<std::size_t> disc;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c.delta_ranger(center, j) <= logradius) disc.push_back(j);
  }
  return P1Point(P1Kind::Monomial, least_label(c, disc), logradius);
}

Ranger P1Point::radius(int rank) const {
  switch (kind_) {
    case P1Kind::Infinity: return Ranger::unbounded(rank, 1);
    case P1Kind::Classical: return neg_inf(rank);
    case P1Kind::Monomial: break;
  }
  return *radius_;
}

bool operator<(const P1Point& x, const P1Point& y) {
  if (x.kind_ != y.kind_) return x.kind_ < y.kind_;
  if (x.center_ != y.center_) return x.center_ < y.center_;
  if (!x.radius_ || !y.radius_) return false;
  return *x.radius_ < *y.radius_;
}

std::string to_string(const CenterConfig& c, const P1Point& x) {
  switch (x.kind()) {
    case P1Kind::Infinity: return "inf";
    case P1Kind::Classical: return c.label(x.center());
    case P1Kind::Monomial: break;
  }
  return "p[" + c.label(x.center()) + ";" + x.radius(c.rank()).to_string() + "]";
}

Ranger radius(const CenterConfig& c, const P1Point& x) { return x.radius(c.rank()); }

bool point_eq(const CenterConfig& c, const P1Point& x, const P1Point& y) {
  if (x.is_infinity() || y.is_infinity()) return x.is_infinity() && y.is_infinity();
  require_point(c, x, "point_eq");
  require_point(c, y, "point_eq");
  const Ranger rx = radius(c, x);
  return rx == radius(c, y) && c.delta_ranger(x.center(), y.center()) <= rx;
}

P1Point meet(const CenterConfig& c, const P1Point& x, const P1Point& y) {
  if (x.is_infinity() || y.is_infinity()) return P1Point::infinity();
  require_point(c, x, "meet");
  require_point(c, y, "meet");
  const Ranger r = max(max(radius(c, x), radius(c, y)), c.delta_ranger(x.center(), y.center()));
  return P1Point::monomial(c, x.center(), r);
}

bool dominates(const CenterConfig& c, const P1Point& x, const P1Point& y) {
  if (x.is_infinity()) return true;
  if (y.is_infinity()) return false;
  const Ranger rx = radius(c, x);
  return radius(c, y) <= rx && c.delta_ranger(x.center(), y.center()) <= rx;
}

GroupElem distance(const CenterConfig& c, const P1Point& x, const P1Point& y) {
  if (!x.is_divisorial() || !y.is_divisorial()) throw DomainError("distance: points must be divisorial");
  const GroupElem rx = radius(c, x).point();
  const GroupElem ry = radius(c, y).point();
  const GroupElem l = meet(c, x, y).radius(c.rank()).point();
  return Rational(2) * l - rx - ry;
}

std::int64_t FactoredFn::degree() const {
  std::int64_t d = 0;
  for (const auto& [center, m] : factors) d += m;
  return d;
}

FactoredFn multiply(const FactoredFn& f, const FactoredFn& g) {
  std::map<std::size_t, std::int64_t> m;
  for (const auto& [center, k] : f.factors) m[center] += k;
  for (const auto& [center, k] : g.factors) m[center] += k;
  FactoredFn out{f.unit_logabs + g.unit_logabs, {}};
  for (const auto& [center, k] : m) {
    if (k != 0) out.factors.emplace_back(center, k);
  }
  return out;
}

ExtValue eval_abs(const CenterConfig& c, const FactoredFn& f, const P1Point& x, bool strict) {
  require_same_rank(c.rank(), f.unit_logabs.rank(), "eval_abs");
  if (x.is_infinity()) {
    const std::int64_t d = f.degree();
    if (d == 0) return ExtValue(f.unit_logabs);
    if (strict) throw DomainError("eval_abs: infinity is a zero or pole");
    return ExtValue(f.unit_logabs, d, Ranger::unbounded(c.rank(), 1));
  }
  require_point(c, x, "eval_abs");
  const Ranger rho = radius(c, x);
  GroupElem base = f.unit_logabs;
  std::int64_t m = 0;
  for (const auto& [ci, mi] : f.factors) {
    const Ranger d = c.delta_ranger(x.center(), ci);
    if (rho < d) {
      base += Rational(mi) * d.point();
    } else if (rho.is_principal() && d == rho) {
      base += Rational(mi) * rho.point();
    } else {
      m += mi;
    }
  }
  if (m != 0 && rho.is_unbounded() && strict) throw DomainError("eval_abs: point is a zero or pole");
  return ExtValue(std::move(base), m, rho);
}

std::int64_t slope_and_degree(const CenterConfig& c, const FactoredFn& f, std::size_t center, const Ranger& q) {
  std::int64_t s = 0;
  for (const auto& [ci, mi] : f.factors) {
    if (c.delta_ranger(center, ci) < q) s += mi;
  }
  return s;
}

namespace {

// Centers inside the closed disc of x, grouped into the open discs of radius
// rho(x), each group sorted and the groups ordered by least label.
std::vector<std::vector<std::size_t>> residue_classes(const CenterConfig& c, const P1Point& x) {
  const Ranger rho = radius(c, x);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!(c.delta_ranger(x.center(), j) <= rho)) continue;
    bool placed = false;
    for (auto& cl : classes) {
      if (c.delta_ranger(cl.front(), j) < rho) {
        cl.push_back(j);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({j});
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    return c.label(least_label(c, a)) < c.label(least_label(c, b));
  });
  return classes;
}

}  // namespace

std::vector<BranchSlope> branch_slopes(const CenterConfig& c, const FactoredFn& f, const P1Point& x) {
  if (!x.is_divisorial()) throw DomainError("branch_slopes: point must be divisorial");
  const Ranger rho = radius(c, x);
  std::vector<BranchSlope> out;
  std::int64_t up = 0;
  for (const auto& [ci, mi] : f.factors) {
    if (c.delta_ranger(x.center(), ci) <= rho) up += mi;
  }
  out.push_back({BranchKind::Up, 0, up});
  for (const auto& cl : residue_classes(c, x)) {
    std::int64_t s = 0;
    for (const auto& [ci, mi] : f.factors) {
      if (c.delta_ranger(cl.front(), ci) < rho) s -= mi;
    }
    out.push_back({BranchKind::Down, least_label(c, cl), s});
  }
  out.push_back({BranchKind::Generic, 0, 0});
  return out;
}

PointInvariants classify_point(const CenterConfig& c, const P1Point& x) {
  PointInvariants p;
  if (!x.is_monomial()) return p;
  const Ranger rho = radius(c, x);
  switch (rho.kind()) {
    case RangerKind::Principal:
      p.F = 1;
      p.residue_field = ResidueField::Transcendental;
      p.type_label = 2;
      break;
    case RangerKind::Cut:
      p.E = 1;
      p.value_group = ValueGroup::GammaPlusR;
      p.type_label = 3;
      p.symmetric_cut = classify(rho).profile->symmetric;
      break;
    case RangerKind::Infinitesimal:
      p.E = 1;
      p.value_group = ValueGroup::GammaPlusR;
      p.type_label = 5;
      break;
    case RangerKind::Unbounded:
      p.E = 1;
      p.value_group = ValueGroup::GammaPlusR;
      p.type_label = 6;
      p.discrete_only = true;
      break;
  }
  return p;
}

void validate_chain(const CenterConfig& c, const DiscChain& chain) {
  for (std::size_t k = 0; k < chain.discs.size(); ++k) {
    const auto& [ck, rk] = chain.discs[k];
    if (ck >= c.size()) throw DomainError("validate_chain: center out of range");
    require_same_rank(c.rank(), rk.rank(), "validate_chain");
    if (k + 1 == chain.discs.size()) break;
    const auto& [cn, rn] = chain.discs[k + 1];
    if (!(rn < rk)) throw DomainError("validate_chain: radii must decrease strictly");
    if (cn >= c.size() || !(c.delta_ranger(ck, cn) <= principal_of(rk))) {
      throw DomainError("validate_chain: disc " + std::to_string(k + 1) + " is not inside its predecessor");
    }
  }
}

std::optional<ChainLimit> chain_limit(const CenterConfig& c, const DiscChain& chain, const FactoredFn& f) {
  validate_chain(c, chain);
  for (std::size_t k = 0; k < chain.discs.size(); ++k) {
    const auto& [ck, rk] = chain.discs[k];
    const Ranger r = principal_of(rk);
    const bool avoids = std::all_of(f.factors.begin(), f.factors.end(),
                                    [&](const auto& fm) { return r < c.delta_ranger(ck, fm.first); });
    if (avoids) {
      const ExtValue v = eval_abs(c, f, P1Point::monomial(c, ck, r));
      return ChainLimit{k, v.base()};
    }
  }
  return std::nullopt;
}

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Disc: return "disc";
    case ComponentKind::Annulus: return "annulus";
    case ComponentKind::SemiInfiniteAnnulus: return "semi-infinite annulus";
  }
  return "?";
}

namespace {

std::vector<P1Point> sorted_unique(std::vector<P1Point> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<P1Point> meet_closure(const CenterConfig& c, const std::vector<P1Point>& pts) {
  std::vector<P1Point> out = pts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(meet(c, pts[i], pts[j]));
  }
  return sorted_unique(std::move(out));
}

// Parent of each node: the least other node dominating it.
std::vector<std::optional<std::size_t>> parents(const CenterConfig& c, const std::vector<P1Point>& nodes) {
  std::vector<std::optional<std::size_t>> par(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i || !dominates(c, nodes[j], nodes[i])) continue;
      if (!par[i] || dominates(c, nodes[*par[i]], nodes[j])) par[i] = j;
    }
  }
  return par;
}

bool contains(const std::vector<P1Point>& sorted, const P1Point& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void check_marked(const CenterConfig& c, const std::vector<P1Point>& marked) {
  for (const auto& x : marked) {
    require_point(c, x, "triangulate");
    if (x.is_monomial() && !x.is_divisorial()) {
      throw DomainError("triangulate: marked points must be classical or divisorial");
    }
  }
}

// Marked points plus the branch points of the tree they span, plus one
// divisorial point when none is present.
std::vector<P1Point> minimal_vertices(const CenterConfig& c, const std::vector<P1Point>& marked) {
  std::vector<P1Point> v = sorted_unique(marked);
  const std::vector<P1Point> m = meet_closure(c, v);
  const auto par = parents(c, m);
  std::vector<int> valence(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (par[i]) {
      ++valence[i];
      ++valence[*par[i]];
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (valence[i] >= 3) v.push_back(m[i]);
  }
  v = sorted_unique(std::move(v));
  if (std::none_of(v.begin(), v.end(), [](const P1Point& x) { return x.is_divisorial(); })) {
    std::vector<P1Point> finite;
    for (const auto& x : v) {
      if (x.is_classical()) finite.push_back(x);
    }
    if (finite.size() >= 2) {
      P1Point top = finite.front();
      for (const auto& x : finite) top = meet(c, top, x);
      v.push_back(top);
    } else {
      const std::size_t a = finite.empty() ? 0 : finite.front().center();
      v.push_back(P1Point::monomial(c, a, principal_of(GroupElem::zero(c.rank()))));
    }
    v = sorted_unique(std::move(v));
  }
  return v;
}

}  // namespace

Triangulation triangulate(const CenterConfig& c, const std::vector<P1Point>& marked) {
  if (c.size() == 0) throw DomainError("triangulate: empty configuration");
  check_marked(c, marked);
  Triangulation t;
  t.vertices = minimal_vertices(c, marked);
  const auto& v = t.vertices;

  GammaGraph g(c.rank());
  for (const auto& x : v) {
    g.add_vertex(to_string(c, x), x.is_divisorial() ? VertexKind::Divisorial : VertexKind::ClassicalLeaf);
  }
  auto index_of = [&](const P1Point& x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  auto link = [&](std::size_t a, std::size_t b) {
    std::optional<GroupElem> len;
    if (v[a].is_divisorial() && v[b].is_divisorial()) len = distance(c, v[a], v[b]);
    g.add_edge(g.vertex(a).id + "~" + g.vertex(b).id, a, b, len);
  };

  const std::vector<P1Point> m = meet_closure(c, v);
  const auto par = parents(c, m);
  std::vector<std::size_t> below_free_top;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!contains(v, m[i])) continue;
    std::optional<std::size_t> p = par[i];
    while (p && !contains(v, m[*p]) && par[*p]) p = par[*p];
    if (!p) continue;
    if (contains(v, m[*p])) {
      link(index_of(m[i]), index_of(m[*p]));
    } else {
      below_free_top.push_back(index_of(m[i]));
    }
  }
  if (below_free_top.size() == 2) link(below_free_top[0], below_free_top[1]);

  Skeleton sk;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) sk.vertices.push_back(i);
  for (std::size_t e = 0; e < g.edges().size(); ++e) sk.edges.push_back(e);
  g.set_skeleton(std::move(sk));

  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const ComponentKind k = g.edge(e).infinite() ? ComponentKind::SemiInfiniteAnnulus : ComponentKind::Annulus;
    t.components.push_back({k, e, std::nullopt, g.edge(e).id, false});
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_divisorial()) continue;
    const Ranger rho = radius(c, v[i]);
    const bool up_used = std::any_of(v.begin(), v.end(), [&](const P1Point& w) { return !dominates(c, v[i], w); });
    if (!up_used) t.components.push_back({ComponentKind::Disc, std::nullopt, i, "inf", false});
    for (const auto& cl : residue_classes(c, v[i])) {
      const bool used = std::any_of(v.begin(), v.end(), [&](const P1Point& w) {
        return w != v[i] && dominates(c, v[i], w) && c.delta_ranger(cl.front(), w.center()) < rho;
      });
      if (!used) t.components.push_back({ComponentKind::Disc, std::nullopt, i, c.label(least_label(c, cl)), false});
    }
    t.components.push_back({ComponentKind::Disc, std::nullopt, i, "", true});
  }
  t.skeleton = std::move(g);
  return t;
}

const FactoredFn& MapData::minus_value(std::size_t b) const {
  const auto it = fiber.find(b);
  if (it == fiber.end()) {
    const std::string name = b < target.size() ? target.label(b) : std::to_string(b);
    throw DomainError("map: missing factorization of f - " + name);
  }
  return it->second;
}

void validate_map(const MapData& f) {
  require_same_rank(f.source.rank(), f.target.rank(), "map");
  if (f.image.size() != f.source.size()) throw DomainError("map: need one image per source center");
  for (std::size_t b : f.image) {
    if (b >= f.target.size()) throw DomainError("map: image out of range");
  }
  for (const auto& [b, fn] : f.fiber) {
    if (b >= f.target.size()) throw DomainError("map: factorization for an unknown target center");
    require_same_rank(f.source.rank(), fn.unit_logabs.rank(), "map factorization");
    for (const auto& [a, m] : fn.factors) {
      if (a >= f.source.size()) throw DomainError("map: factor center out of range");
      if (m <= 0) throw DomainError("map: factorizations of f - b must have positive multiplicities");
      if (f.image[a] != b) {
        throw DomainError("map: " + f.source.label(a) + " is a root of f - " + f.target.label(b) +
                          " but maps elsewhere");
      }
    }
  }
  for (std::size_t a = 0; a < f.source.size(); ++a) {
    const auto it = f.fiber.find(f.image[a]);
    if (it == f.fiber.end()) continue;
    const auto& fs = it->second.factors;
    if (std::none_of(fs.begin(), fs.end(), [&](const auto& fm) { return fm.first == a; })) {
      throw DomainError("map: " + f.source.label(a) + " is missing from the factorization of its value");
    }
  }
}

namespace {

Ranger ext_to_ranger(const ExtValue& v) {
  if (v.is_plain()) return Ranger::principal(v.base());
  return translate(scale(v.at(), Rational(v.rcoeff())), v.base());
}

// Solves |f - b|(p_{a,r}) = sigma for r, a being a root of f - b.
Ranger invert_along(const CenterConfig& src, const FactoredFn& fn, std::size_t a, const Ranger& sigma) {
  std::vector<GroupElem> bps;
  for (const auto& [ci, mi] : fn.factors) {
    if (ci != a) bps.push_back(src.delta(a, ci));
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  auto value_at = [&](const GroupElem& r) {
    return eval_abs(src, fn, P1Point::monomial(src, a, Ranger::principal(r))).base();
  };
  std::size_t piece = 0;
  while (piece < bps.size() && Ranger::principal(value_at(bps[piece])) <= sigma) ++piece;
  // On the piece below bps[piece]: value = s*r + intercept.
  std::int64_t s = 0;
  GroupElem intercept = fn.unit_logabs;
  for (const auto& [ci, mi] : fn.factors) {
    if (ci == a || (piece > 0 && src.delta(a, ci) <= bps[piece - 1])) {
      s += mi;
    } else {
      intercept += Rational(mi) * src.delta(a, ci);
    }
  }
  return scale(translate(sigma, -intercept), Rational(1, s));
}

std::vector<std::size_t> roots(const FactoredFn& fn) {
  std::vector<std::size_t> r;
  for (const auto& [ci, mi] : fn.factors) r.push_back(ci);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

}  // namespace

P1Point pushforward_point(const MapData& f, const P1Point& x) {
  if (x.is_infinity()) return x;
  require_point(f.source, x, "pushforward_point");
  const std::size_t b = f.image.at(x.center());
  if (x.is_classical()) return P1Point::classical(b);
  const ExtValue v = eval_abs(f.source, f.minus_value(b), x);
  return P1Point::monomial(f.target, b, ext_to_ranger(v));
}

std::vector<P1Point> preimage_point(const MapData& f, const P1Point& y) {
  if (y.is_infinity()) return {y};
  require_point(f.target, y, "preimage_point");
  const FactoredFn& fn = f.minus_value(y.center());
  std::vector<P1Point> out;
  for (std::size_t a : roots(fn)) {
    if (y.is_classical()) {
      out.push_back(P1Point::classical(a));
    } else {
      out.push_back(P1Point::monomial(f.source, a, invert_along(f.source, fn, a, radius(f.target, y))));
    }
  }
  return sorted_unique(std::move(out));
}

Pullback pullback_skeleton(const MapData& f, const std::vector<TargetSegment>& delta) {
  const CenterConfig& src = f.source;
  struct Seg {
    std::size_t root;
    GroupElem lo, hi;
    const FactoredFn* fn;
  };
  std::vector<Seg> segs;
  for (const auto& d : delta) {
    if (d.center >= f.target.size()) throw DomainError("pullback: center out of range");
    if (d.hi < d.lo) throw DomainError("pullback: segment endpoints out of order");
    const FactoredFn& fn = f.minus_value(d.center);
    for (std::size_t a : roots(fn)) {
      segs.push_back({a, invert_along(src, fn, a, Ranger::principal(d.lo)).point(),
                      invert_along(src, fn, a, Ranger::principal(d.hi)).point(), &fn});
    }
  }
  auto node = [&](std::size_t a, const GroupElem& r) { return P1Point::monomial(src, a, Ranger::principal(r)); };
  std::vector<P1Point> nodes;
  for (const auto& s : segs) {
    nodes.push_back(node(s.root, s.lo));
    nodes.push_back(node(s.root, s.hi));
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Seg& s = segs[i];
      const Seg& t = segs[j];
      GroupElem low = max(s.lo, t.lo);
      if (s.root != t.root) low = max(low, src.delta(s.root, t.root));
      if (low <= min(s.hi, t.hi)) nodes.push_back(node(s.root, low));
    }
  }
  nodes = sorted_unique(std::move(nodes));

  Pullback out;
  out.points = nodes;
  out.graph = GammaGraph(src.rank());
  for (const auto& x : nodes) out.graph.add_vertex(to_string(src, x));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& s : segs) {
    std::vector<std::pair<GroupElem, std::size_t>> on;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const GroupElem r = radius(src, nodes[k]).point();
      if (s.lo <= r && r <= s.hi && src.delta_ranger(nodes[k].center(), s.root) <= Ranger::principal(r)) {
        on.emplace_back(r, k);
      }
    }
    std::sort(on.begin(), on.end());
    for (std::size_t k = 0; k + 1 < on.size(); ++k) {
      const auto [lo, a] = on[k];
      const auto [hi, b] = on[k + 1];
      if (!seen.insert({a, b}).second) continue;
      out.graph.add_edge(out.graph.vertex(a).id + "~" + out.graph.vertex(b).id, a, b, hi - lo);
      std::vector<GroupElem> bps;
      std::vector<std::int64_t> slopes;
      std::vector<GroupElem> inner;
      for (const auto& [ci, mi] : s.fn->factors) {
        if (ci == s.root) continue;
        const GroupElem& dlt = src.delta(s.root, ci);
        if (lo < dlt && dlt < hi) inner.push_back(dlt);
      }
      std::sort(inner.begin(), inner.end());
      inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
      for (const auto& bp : inner) {
        slopes.push_back(slope_and_degree(src, *s.fn, s.root, Ranger::principal(bp)));
      }
      slopes.push_back(slope_and_degree(src, *s.fn, s.root, Ranger::principal(hi)));
      const GroupElem anchor = eval_abs(src, *s.fn, nodes[a]).base();
      out.edge_maps.emplace_back(lo, hi, std::move(inner), std::move(slopes), anchor, false, false);
    }
  }
  return out;
}

SimultaneousTriangulation simultaneous_triangulation(const MapData& f, const std::vector<P1Point>& w0,
                                                     const std::vector<P1Point>& v0, int max_rounds) {
  check_marked(f.source, w0);
  check_marked(f.target, v0);
  std::vector<P1Point> v = v0;
  for (const auto& w : w0) v.push_back(pushforward_point(f, w));
  for (int round = 1; round <= max_rounds; ++round) {
    const std::vector<P1Point> vt = minimal_vertices(f.target, v);
    std::vector<P1Point> w = w0;
    for (const auto& y : vt) {
      const auto pre = preimage_point(f, y);
      w.insert(w.end(), pre.begin(), pre.end());
    }
    w = sorted_unique(std::move(w));
    const std::vector<P1Point> wt = minimal_vertices(f.source, w);
    std::vector<P1Point> extra;
    std::set_difference(wt.begin(), wt.end(), w.begin(), w.end(), std::back_inserter(extra));
    if (extra.empty()) return {w, vt, round};
    v = vt;
    for (const auto& x : extra) v.push_back(pushforward_point(f, x));
  }
  throw DomainError("simultaneous_triangulation: no fixed point within the round limit");
}

}  // namespace adic
