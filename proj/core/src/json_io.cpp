#include "adic/json_io.hpp"

#include <algorithm>

#include "adic/error.hpp"

namespace adic::json {

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) { throw ParseError(what, ptr.empty() ? "/" : ptr); }

std::string at(const std::string& ptr, const std::string& key) {
  std::string k;
  for (char ch : key) {
    if (ch == '~') {
      k += "~0";
    } else if (ch == '/') {
      k += "~1";
    } else {
      k += ch;
    }
  }
  return ptr + "/" + k;
}
std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(at(ptr, key), "missing field \"" + key + "\"");
  return *it;
}

const Json& array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
  return j;
}

std::string str(const Json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

std::int64_t integer(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

int sign_from(const Json& j, const std::string& ptr) {
  const std::string s = str(j, ptr);
  if (s == "+") return 1;
  if (s == "-") return -1;
  fail(ptr, "sign must be \"+\" or \"-\"");
}

std::vector<Rational> coords_from(const Json& j, const std::string& ptr) {
  std::vector<Rational> out;
  const Json& a = array(j, ptr);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_from(a[i], at(ptr, i)));
  return out;
}

Json coords_json(const std::vector<Rational>& c) {
  Json a = Json::array();
  for (const auto& q : c) a.push_back(to_json(q));
  return a;
}

std::size_t label_index(const CenterConfig& c, const Json& j, const std::string& ptr) {
  const std::string l = str(j, ptr);
  const auto i = c.index(l);
  if (!i) fail(ptr, "unknown center \"" + l + "\"");
  return *i;
}

template <class F>
auto guarded(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StructuralError& e) {
    fail(ptr, e.what());
  }
}

}  // namespace

Rational rational_from(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(ptr, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(ptr, e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

GroupElem elem_from(const Json& j, int rank, const std::string& ptr) {
  auto c = coords_from(j, ptr);
  if (static_cast<int>(c.size()) != rank) {
    fail(ptr, "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(c.size()));
  }
  return GroupElem(std::move(c));
}

Json to_json(const GroupElem& g) { return coords_json(g.coords()); }

Group group_from(const Json& j, const std::string& ptr) {
  const std::int64_t rank = integer(field(j, "rank", ptr), at(ptr, "rank"));
  if (rank < 1 || rank > 16) fail(at(ptr, "rank"), "rank must be between 1 and 16");
  const int h = static_cast<int>(rank);
  if (!j.contains("lattice")) return Group(h);
  const std::string lp = at(ptr, "lattice");
  const Json& l = array(j.at("lattice"), lp);
  std::vector<GroupElem> basis;
  for (std::size_t i = 0; i < l.size(); ++i) basis.push_back(elem_from(l[i], h, at(lp, i)));
  return guarded(lp, [&] { return Group(h, basis); });
}

Json to_json(const Group& g) {
  Json j;
  j["rank"] = g.rank();
  if (g.has_explicit_lattice()) {
    Json l = Json::array();
    for (const auto& b : g.lattice_basis()) l.push_back(to_json(b));
    j["lattice"] = l;
  }
  return j;
}

Ranger ranger_from(const Json& j, int rank, const std::string& ptr) {
  const std::string type = str(field(j, "type", ptr), at(ptr, "type"));
  if (type == "principal") return Ranger::principal(elem_from(field(j, "coords", ptr), rank, at(ptr, "coords")));
  if (type == "infinitesimal") {
    return Ranger::infinitesimal(elem_from(field(j, "coords", ptr), rank, at(ptr, "coords")),
                                 sign_from(field(j, "sign", ptr), at(ptr, "sign")));
  }
  if (type == "unbounded") return Ranger::unbounded(rank, sign_from(field(j, "sign", ptr), at(ptr, "sign")));
  if (type == "cut") {
    auto prefix = coords_from(field(j, "prefix", ptr), at(ptr, "prefix"));
    const Json& t = field(j, "tail", ptr);
    const std::string tp = at(ptr, "tail");
    CutTail tail;
    if (t.is_string()) {
      const std::string s = t.get<std::string>();
      if (s == "+inf") {
        tail = CutTail::plus_infinity();
      } else if (s == "-inf") {
        tail = CutTail::minus_infinity();
      } else {
        fail(tp, "tail must be \"+inf\", \"-inf\" or a quadratic irrational");
      }
    } else {
      const Rational a = rational_from(field(t, "a", tp), at(tp, "a"));
      const Rational b = rational_from(field(t, "b", tp), at(tp, "b"));
      const Json& dj = field(t, "d", tp);
      Integer d;
      if (dj.is_number_integer()) {
        d = Integer(dj.get<long>());
      } else {
        const Rational dq = rational_from(dj, at(tp, "d"));
        if (dq.get_den() != 1) fail(at(tp, "d"), "d must be an integer");
        d = dq.get_num();
      }
      tail = guarded(tp, [&] { return CutTail::quad(QuadIrr(a, b, d)); });
    }
    return guarded(ptr, [&] { return Ranger::cut(rank, std::move(prefix), std::move(tail)); });
  }
  fail(at(ptr, "type"), "unknown ranger type \"" + type + "\"");
}

Json to_json(const Ranger& r) {
  Json j;
  j["type"] = to_string(r.kind());
  switch (r.kind()) {
    case RangerKind::Principal:
      j["coords"] = coords_json(r.coords());
      break;
    case RangerKind::Infinitesimal:
      j["coords"] = coords_json(r.coords());
      j["sign"] = r.sign() > 0 ? "+" : "-";
      break;
    case RangerKind::Unbounded:
      j["sign"] = r.sign() > 0 ? "+" : "-";
      break;
    case RangerKind::Cut: {
      j["prefix"] = coords_json(r.coords());
      const CutTail t = r.tail();
      if (t.infinite()) {
        j["tail"] = t.infinity > 0 ? "+inf" : "-inf";
      } else {
        j["tail"] = Json{{"a", to_json(t.irrational->a())},
                         {"b", to_json(t.irrational->b())},
                         {"d", t.irrational->d().get_str()}};
      }
      break;
    }
  }
  return j;
}

Json to_json(const ExtValue& v) {
  Json j;
  j["base"] = to_json(v.base());
  if (!v.is_plain()) {
    j["r_coeff"] = v.rcoeff();
    j["at"] = to_json(v.at());
  }
  j["text"] = v.to_string();
  return j;
}

PLFn plfn_from(const Json& j, int rank, const std::string& ptr) {
  const std::string dp = at(ptr, "domain");
  const Json& dom = array(field(j, "domain", ptr), dp);
  if (dom.size() != 2) fail(dp, "domain must have two endpoints");
  GroupElem lo = elem_from(dom[0], rank, at(dp, 0));
  GroupElem hi = elem_from(dom[1], rank, at(dp, 1));
  std::vector<GroupElem> bps;
  if (j.contains("breakpoints")) {
    const std::string bp = at(ptr, "breakpoints");
    const Json& b = array(j.at("breakpoints"), bp);
    for (std::size_t i = 0; i < b.size(); ++i) bps.push_back(elem_from(b[i], rank, at(bp, i)));
  }
  std::vector<std::int64_t> slopes;
  const std::string sp = at(ptr, "slopes");
  const Json& s = array(field(j, "slopes", ptr), sp);
  for (std::size_t i = 0; i < s.size(); ++i) slopes.push_back(integer(s[i], at(sp, i)));
  GroupElem anchor = elem_from(field(j, "anchor", ptr), rank, at(ptr, "anchor"));
  bool left = false, right = false;
  if (j.contains("pinch")) {
    const std::string pp = at(ptr, "pinch");
    const Json& p = array(j.at("pinch"), pp);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::string side = str(p[i], at(pp, i));
      if (side == "left") {
        left = true;
      } else if (side == "right") {
        right = true;
      } else {
        fail(at(pp, i), "pinch entries are \"left\" or \"right\"");
      }
    }
  }
  return guarded(ptr, [&] { return PLFn(lo, hi, bps, slopes, anchor, left, right); });
}

Json to_json(const PLFn& f) {
  Json j;
  j["domain"] = Json::array({to_json(f.lo()), to_json(f.hi())});
  Json b = Json::array();
  for (const auto& x : f.breakpoints()) b.push_back(to_json(x));
  j["breakpoints"] = b;
  j["slopes"] = f.slopes();
  j["anchor"] = to_json(f.anchor());
  Json p = Json::array();
  if (f.pinch_left()) p.push_back("left");
  if (f.pinch_right()) p.push_back("right");
  j["pinch"] = p;
  return j;
}

LinElem linelem_from(const Json& j, int rank, const std::string& ptr) {
  return LinElem{elem_from(field(j, "gamma", ptr), rank, at(ptr, "gamma")), integer(field(j, "m", ptr), at(ptr, "m"))};
}

Json to_json(const LinElem& f) { return Json{{"gamma", to_json(f.gamma)}, {"m", f.m}}; }

A1Point a1point_from(const Json& j, int rank, const std::string& ptr) {
  const std::int64_t bj = integer(field(j, "base_j", ptr), at(ptr, "base_j"));
  if (bj < 0 || bj > rank) fail(at(ptr, "base_j"), "base_j must lie in 0..rank");
  // The fiber lives over the first base_j coordinates.
  const int fiber_rank = static_cast<int>(bj);
  if (fiber_rank == 0) return A1Point(0, Ranger::principal(GroupElem{}));
  Ranger r = ranger_from(field(j, "fiber", ptr), fiber_rank, at(ptr, "fiber"));
  return guarded(ptr, [&] { return A1Point(static_cast<int>(bj), r); });
}

Json to_json(const A1Point& p) { return Json{{"base_j", p.base_j}, {"fiber", to_json(p.fiber)}}; }

GammaGraph graph_from(const Json& j, int rank, const std::string& ptr) {
  GammaGraph g(rank);
  const std::string vp = at(ptr, "vertices");
  const Json& vs = array(field(j, "vertices", ptr), vp);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = at(vp, i);
    const std::string id = str(field(vs[i], "id", p), at(p, "id"));
    VertexKind kind = VertexKind::Divisorial;
    if (vs[i].contains("kind")) {
      const std::string k = str(vs[i].at("kind"), at(p, "kind"));
      if (k == "divisorial") {
        kind = VertexKind::Divisorial;
      } else if (k == "classical") {
        kind = VertexKind::ClassicalLeaf;
      } else if (k == "unbounded") {
        kind = VertexKind::UnboundedLeaf;
      } else {
        fail(at(p, "kind"), "unknown vertex kind \"" + k + "\"");
      }
    }
    guarded(p, [&] { return g.add_vertex(id, kind); });
  }
  auto vertex = [&](const Json& v, const std::string& p) {
    const std::string id = str(v, p);
    const auto i = g.find_vertex(id);
    if (!i) fail(p, "unknown vertex \"" + id + "\"");
    return *i;
  };
  auto edge = [&](const Json& v, const std::string& p) {
    const std::string id = str(v, p);
    const auto i = g.find_edge(id);
    if (!i) fail(p, "unknown edge \"" + id + "\"");
    return *i;
  };
  if (j.contains("edges")) {
    const std::string ep = at(ptr, "edges");
    const Json& es = array(j.at("edges"), ep);
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string p = at(ep, i);
      const std::string id = str(field(es[i], "id", p), at(p, "id"));
      const std::size_t u = vertex(field(es[i], "u", p), at(p, "u"));
      const std::size_t v = vertex(field(es[i], "v", p), at(p, "v"));
      std::optional<GroupElem> len;
      if (es[i].contains("length") && !es[i].at("length").is_null()) {
        len = elem_from(es[i].at("length"), rank, at(p, "length"));
      }
      guarded(p, [&] { return g.add_edge(id, u, v, len); });
    }
  }
  if (j.contains("skeleton")) {
    const std::string sp = at(ptr, "skeleton");
    const Json& s = j.at("skeleton");
    Skeleton sk;
    if (s.contains("vertices")) {
      const Json& a = array(s.at("vertices"), at(sp, "vertices"));
      for (std::size_t i = 0; i < a.size(); ++i) sk.vertices.push_back(vertex(a[i], at(at(sp, "vertices"), i)));
    }
    if (s.contains("edges")) {
      const Json& a = array(s.at("edges"), at(sp, "edges"));
      for (std::size_t i = 0; i < a.size(); ++i) sk.edges.push_back(edge(a[i], at(at(sp, "edges"), i)));
    }
    if (s.contains("pieces")) {
      const std::string pp = at(sp, "pieces");
      const Json& a = array(s.at("pieces"), pp);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = at(pp, i);
        SkeletonPiece piece;
        piece.edge = edge(field(a[i], "edge", p), at(p, "edge"));
        const std::string from = str(field(a[i], "from", p), at(p, "from"));
        if (from != "u" && from != "v") fail(at(p, "from"), "from must be \"u\" or \"v\"");
        piece.from_u = from == "u";
        piece.extent = ranger_from(field(a[i], "extent", p), rank, at(p, "extent"));
        sk.pieces.push_back(piece);
      }
    }
    g.set_skeleton(sk);
  }
  return g;
}

Json to_json(const GammaGraph& g) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : g.vertices()) vs.push_back(Json{{"id", v.id}, {"kind", to_string(v.kind)}});
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : g.edges()) {
    es.push_back(Json{{"id", e.id},
                      {"u", g.vertex(e.u).id},
                      {"v", g.vertex(e.v).id},
                      {"length", e.length ? to_json(*e.length) : Json(nullptr)}});
  }
  j["edges"] = es;
  const Skeleton& s = g.skeleton();
  Json sk;
  Json sv = Json::array(), se = Json::array(), sp = Json::array();
  for (std::size_t v : s.vertices) sv.push_back(g.vertex(v).id);
  for (std::size_t e : s.edges) se.push_back(g.edge(e).id);
  for (const auto& p : s.pieces) {
    sp.push_back(Json{{"edge", g.edge(p.edge).id}, {"from", p.from_u ? "u" : "v"}, {"extent", to_json(p.extent)}});
  }
  sk["vertices"] = sv;
  sk["edges"] = se;
  sk["pieces"] = sp;
  j["skeleton"] = sk;
  return j;
}

GraphPoint graph_point_from(const Json& j, const GammaGraph& g, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected a graph point object");
  if (j.contains("vertex")) {
    const std::string id = str(j.at("vertex"), at(ptr, "vertex"));
    const auto v = g.find_vertex(id);
    if (!v) fail(at(ptr, "vertex"), "unknown vertex \"" + id + "\"");
    return GraphPoint::at_vertex(*v);
  }
  const std::string id = str(field(j, "edge", ptr), at(ptr, "edge"));
  const auto e = g.find_edge(id);
  if (!e) fail(at(ptr, "edge"), "unknown edge \"" + id + "\"");
  const Ranger off = ranger_from(field(j, "offset", ptr), g.rank(), at(ptr, "offset"));
  return g.point_on_edge(*e, off);
}

Json to_json(const GammaGraph& g, const GraphPoint& x) {
  if (x.is_vertex()) return Json{{"vertex", g.vertex(x.vertex()).id}};
  return Json{{"edge", g.edge(x.edge()).id}, {"offset", to_json(x.offset())}};
}

CenterConfig config_from(const Json& centers, const Json& logdist, int rank, const std::string& ptr) {
  const std::string cp = at(ptr, "centers");
  const Json& cs = array(centers, cp);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cs.size(); ++i) labels.push_back(str(cs[i], at(cp, i)));
  CenterConfig c = guarded(cp, [&] { return CenterConfig(rank, labels); });
  const std::string lp = at(ptr, "logdist");
  const Json& ld = array(logdist, lp);
  for (std::size_t i = 0; i < ld.size(); ++i) {
    const std::string p = at(lp, i);
    const Json& t = array(ld[i], p);
    if (t.size() != 3) fail(p, "logdist entries are [a, b, elem]");
    const std::size_t a = label_index(c, t[0], at(p, 0));
    const std::size_t b = label_index(c, t[1], at(p, 1));
    if (a == b) fail(p, "logdist of a center with itself is fixed at -inf");
    c.set(a, b, elem_from(t[2], rank, at(p, 2)));
  }
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (!c.has(a, b)) fail(lp, "missing logdist for \"" + c.label(a) + "\", \"" + c.label(b) + "\"");
    }
  }
  return c;
}

Json logdist_json(const CenterConfig& c) {
  Json out = Json::array();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) out.push_back(Json::array({c.label(a), c.label(b), to_json(c.delta(a, b))}));
  }
  return out;
}

P1Point p1point_from(const Json& j, const CenterConfig& c, const std::string& ptr) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return P1Point::infinity();
    return P1Point::classical(label_index(c, j, ptr));
  }
  const std::size_t a = label_index(c, field(j, "center", ptr), at(ptr, "center"));
  const Ranger r = ranger_from(field(j, "radius", ptr), c.rank(), at(ptr, "radius"));
  return guarded(ptr, [&] { return P1Point::monomial(c, a, r); });
}

Json to_json(const CenterConfig& c, const P1Point& x) {
  if (x.is_infinity()) return "inf";
  if (x.is_classical()) return c.label(x.center());
  return Json{{"center", c.label(x.center())}, {"radius", to_json(x.radius(c.rank()))}};
}

FactoredFn factored_from(const Json& j, const CenterConfig& c, const std::string& ptr) {
  FactoredFn f{GroupElem::zero(c.rank()), {}};
  if (j.contains("unit")) f.unit_logabs = elem_from(j.at("unit"), c.rank(), at(ptr, "unit"));
  if (j.contains("factors")) {
    const std::string fp = at(ptr, "factors");
    const Json& fs = array(j.at("factors"), fp);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string p = at(fp, i);
      const Json& t = array(fs[i], p);
      if (t.size() != 2) fail(p, "factors are [center, multiplicity]");
      const std::int64_t m = integer(t[1], at(p, 1));
      if (m == 0) fail(at(p, 1), "multiplicity must be nonzero");
      f.factors.emplace_back(label_index(c, t[0], at(p, 0)), m);
    }
  } else if (!j.is_object()) {
    fail(ptr, "expected an object");
  }
  return f;
}

Json to_json(const CenterConfig& c, const FactoredFn& f) {
  Json fs = Json::array();
  for (const auto& [a, m] : f.factors) fs.push_back(Json::array({c.label(a), m}));
  return Json{{"unit", to_json(f.unit_logabs)}, {"factors", fs}};
}

MapData map_from(const Json& j, int rank, const std::string& ptr) {
  MapData f;
  const Json& s = field(j, "source", ptr);
  const Json& t = field(j, "target", ptr);
  const std::string sp = at(ptr, "source"), tp = at(ptr, "target");
  f.source = config_from(field(s, "centers", sp), field(s, "logdist", sp), rank, sp);
  f.target = config_from(field(t, "centers", tp), field(t, "logdist", tp), rank, tp);
  const std::string ip = at(ptr, "image");
  const Json& im = field(j, "image", ptr);
  if (!im.is_object()) fail(ip, "image maps source labels to target labels");
  f.image.assign(f.source.size(), 0);
  std::vector<bool> seen(f.source.size(), false);
  for (const auto& [k, v] : im.items()) {
    const auto a = f.source.index(k);
    if (!a) fail(at(ip, k), "unknown source center \"" + k + "\"");
    f.image[*a] = label_index(f.target, v, at(ip, k));
    seen[*a] = true;
  }
  for (std::size_t a = 0; a < seen.size(); ++a) {
    if (!seen[a]) fail(ip, "no image for \"" + f.source.label(a) + "\"");
  }
  const std::string fp = at(ptr, "fibers");
  const Json& fs = array(field(j, "fibers", ptr), fp);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string p = at(fp, i);
    const std::size_t b = label_index(f.target, field(fs[i], "base", p), at(p, "base"));
    f.fiber[b] = factored_from(field(fs[i], "factored", p), f.source, at(p, "factored"));
  }
  guarded(ptr, [&] {
    validate_map(f);
    return 0;
  });
  return f;
}

FiniteSpace space_from(const Json& j, const std::string& ptr) {
  const std::string pp = at(ptr, "points");
  const Json& ps = array(field(j, "points", ptr), pp);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < ps.size(); ++i) labels.push_back(str(ps[i], at(pp, i)));
  if (labels.size() > FiniteSpace::kMaxPoints) fail(pp, "at most 64 points");
  auto index = [&](const Json& v, const std::string& p) {
    const std::string l = str(v, p);
    const auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) fail(p, "unknown point \"" + l + "\"");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  if (j.contains("specializations")) {
    const std::string sp = at(ptr, "specializations");
    const Json& ss = array(j.at("specializations"), sp);
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string p = at(sp, i);
      const Json& t = array(ss[i], p);
      if (t.size() != 2) fail(p, "specializations are [x, y] with x in the closure of y");
      rel.emplace_back(index(t[0], at(p, 0)), index(t[1], at(p, 1)));
    }
  }
  return FiniteSpace(labels, rel);
}

Json to_json(const FiniteSpace& sp) {
  Json rel = Json::array();
  for (const auto& [x, y] : sp.relations()) rel.push_back(Json::array({sp.label(x), sp.label(y)}));
  return Json{{"points", sp.labels()}, {"specializations", rel}};
}

MarkedOrder marked_from(const Json& j, const std::string& ptr) {
  MarkedOrder m;
  const std::string op = at(ptr, "order");
  const Json& o = array(field(j, "order", ptr), op);
  for (std::size_t i = 0; i < o.size(); ++i) m.labels.push_back(str(o[i], at(op, i)));
  m.closed.assign(m.labels.size(), false);
  if (j.contains("closed")) {
    const std::string cp = at(ptr, "closed");
    const Json& c = array(j.at("closed"), cp);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::string l = str(c[i], at(cp, i));
      const auto it = std::find(m.labels.begin(), m.labels.end(), l);
      if (it == m.labels.end()) fail(at(cp, i), "unknown point \"" + l + "\"");
      m.closed[static_cast<std::size_t>(it - m.labels.begin())] = true;
    }
  }
  return m;
}

Json to_json(const QuasiTreeReport& r, const FiniteSpace& sp) {
  Json axioms = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json w = Json::array();
    for (std::size_t x : r.axioms[i].witness) w.push_back(sp.label(x));
    Json a{{"axiom", i}, {"holds", r.axioms[i].holds}};
    if (!r.axioms[i].holds) a["witness"] = w;
    axioms.push_back(a);
  }
  Json j{{"quasi_tree", r.passes()}};
  if (!r.passes()) j["failed_axiom"] = r.failed_axiom();
  j["axioms"] = axioms;
  return j;
}

}  // namespace adic::json
