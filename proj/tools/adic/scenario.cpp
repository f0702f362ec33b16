#include "scenario.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "adic/error.hpp"
#include "adic/gammagraph.hpp"
#include "adic/p1tree.hpp"
#include "adic/plfun.hpp"
#include "adic/quasitop.hpp"
#include "adic/ranger.hpp"
#include "adic/spa.hpp"

namespace adic::cli {

namespace {

using json::Json;

[[noreturn]] void schema(const std::string& ptr, const std::string& what) { throw ParseError(what, ptr); }

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const Json& need(const Json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object() || !j.contains(key)) schema(at(ptr, key), "missing field \"" + key + "\"");
  return j.at(key);
}

const char* ordering_name(std::strong_ordering o) {
  if (o < 0) return "LT";
  if (o > 0) return "GT";
  return "EQ";
}

// A named section: object keyed by name or array addressed by index.
template <class T>
class Table {
 public:
  using Parser = std::function<T(const Json&, const std::string&)>;

  void load(const Json& root, const std::string& key, const Parser& parse) {
    parse_ = parse;
    if (!root.contains(key)) return;
    const std::string ptr = "/" + key;
    const Json& s = root.at(key);
    if (s.is_object()) {
      for (const auto& [name, v] : s.items()) items_.emplace(name, parse(v, at(ptr, name)));
    } else if (s.is_array()) {
      for (std::size_t i = 0; i < s.size(); ++i) list_.push_back(parse(s[i], at(ptr, i)));
    } else {
      schema(ptr, "section must be an object or an array");
    }
  }

  // Integer: index into an array section. String: a name, else parsed
  // inline. Anything else: parsed inline.
  T resolve(const Json& j, const std::string& ptr) const {
    if (j.is_number_integer()) {
      const auto i = j.get<std::int64_t>();
      if (i < 0 || static_cast<std::size_t>(i) >= list_.size()) schema(ptr, "reference out of range");
      return list_[static_cast<std::size_t>(i)];
    }
    if (j.is_string()) {
      const auto it = items_.find(j.get<std::string>());
      if (it != items_.end()) return it->second;
    }
    return parse_(j, ptr);
  }

 private:
  Parser parse_;
  std::map<std::string, T> items_;
  std::vector<T> list_;
};

struct Context {
  int rank = 1;
  Group group{1};
  std::optional<CenterConfig> config;
  Table<Ranger> rangers;
  Table<P1Point> points;
  Table<FactoredFn> functions;
  Table<MapData> maps;
  Table<GammaGraph> graphs;
  Table<PLFn> plfns;
  Table<FiniteSpace> spaces;

  const CenterConfig& centers(const std::string& ptr) const {
    if (!config) schema(ptr, "command needs \"centers\" and \"logdist\"");
    return *config;
  }
};

struct Command {
  std::string op;
  std::function<Json()> run;
};

Json profile_json(const RangerClass& c) {
  Json j{{"kind", to_string(c.kind)}};
  if (c.profile) {
    j["threshold"] = c.profile->threshold;
    j["symmetric"] = c.profile->symmetric;
    if (!c.profile->symmetric) j["direction"] = c.profile->direction == CutDirection::Up ? "up" : "down";
  }
  return j;
}

Json invariants_json(const PointInvariants& p) {
  Json j{{"type", p.type_label},
         {"E", p.E},
         {"F", p.F},
         {"value_group", p.value_group == ValueGroup::Gamma ? "Gamma" : "Gamma+Z*r"},
         {"residue_field", p.residue_field == ResidueField::Base ? "k" : "k(u)"}};
  if (p.symmetric_cut) j["symmetric_cut"] = *p.symmetric_cut;
  if (p.discrete_only) j["discrete_only"] = true;
  return j;
}

// The point of `x` (given on g) on the graph with normalized skeleton pieces.
GraphPoint refine_point(const GammaGraph& g, const GammaGraph& n, const GraphPoint& x) {
  if (x.is_vertex()) return x;
  const std::size_t e = x.edge();
  const Edge& before = g.edge(e);
  const Edge& after = n.edge(e);
  if (after.v == before.v) return x;
  const Ranger cut = Ranger::principal(*after.length);
  if (x.offset() < cut) return x;
  if (x.offset() == cut) return GraphPoint::at_vertex(after.v);
  for (std::size_t f : n.incident(after.v)) {
    if (f != e) return n.point_on_edge(f, translate(x.offset(), -*after.length));
  }
  return x;
}

Json triangulation_json(const CenterConfig& c, const Triangulation& t) {
  Json vs = Json::array();
  for (const auto& v : t.vertices) vs.push_back(json::to_json(c, v));
  Json comps = Json::array();
  for (const auto& k : t.components) {
    Json cj{{"kind", to_string(k.kind)}};
    if (k.edge) cj["edge"] = t.skeleton.edge(*k.edge).id;
    if (k.vertex) cj["vertex"] = t.skeleton.vertex(*k.vertex).id;
    if (!k.contains.empty()) cj["contains"] = k.contains;
    if (k.generic) cj["generic"] = true;
    comps.push_back(cj);
  }
  std::size_t finite = 0, infinite = 0;
  for (const auto& e : t.skeleton.edges()) (e.infinite() ? infinite : finite)++;
  return Json{{"vertices", vs},
              {"skeleton", json::to_json(t.skeleton)},
              {"finite_edges", finite},
              {"infinite_edges", infinite},
              {"components", comps}};
}

class Builder {
 public:
  Builder(Context& ctx, std::vector<DotGraph>& dot) : ctx_(ctx), dot_(dot) {}

  Command build(const Json& cmd, const std::string& ptr, std::size_t index) {
    const std::string op = [&] {
      const Json& o = need(cmd, "op", ptr);
      if (!o.is_string()) schema(at(ptr, "op"), "op must be a string");
      return o.get<std::string>();
    }();
    const std::string tag = op + "_" + std::to_string(index);
    const int h = ctx_.rank;
    auto ranger = [&](const std::string& key) { return ctx_.rangers.resolve(need(cmd, key, ptr), at(ptr, key)); };
    auto elem = [&](const std::string& key) { return json::elem_from(need(cmd, key, ptr), h, at(ptr, key)); };
    auto point = [&](const std::string& key) { return ctx_.points.resolve(need(cmd, key, ptr), at(ptr, key)); };
    auto fn = [&](const std::string& key) { return ctx_.functions.resolve(need(cmd, key, ptr), at(ptr, key)); };
    auto graph = [&](const std::string& key) { return ctx_.graphs.resolve(need(cmd, key, ptr), at(ptr, key)); };

    if (op == "classify") {
      const Ranger r = ranger("ranger");
      return {op, [r] { return profile_json(classify(r)); }};
    }
    if (op == "cmp") {
      const Json& a = need(cmd, "a", ptr);
      const Json& b = need(cmd, "b", ptr);
      if (a.is_array() && b.is_array()) {
        const GroupElem x = elem("a"), y = elem("b");
        return {op, [x, y] { return Json(ordering_name(cmp(x, y))); }};
      }
      const Ranger x = ranger("a"), y = ranger("b");
      return {op, [x, y] { return Json(ordering_name(cmp(x, y))); }};
    }
    if (op == "translate") {
      const Ranger r = ranger("ranger");
      const GroupElem g = elem("by");
      return {op, [r, g] { return json::to_json(translate(r, g)); }};
    }
    if (op == "project") {
      const Ranger r = ranger("ranger");
      const Json& jj = need(cmd, "j", ptr);
      if (!jj.is_number_integer()) schema(at(ptr, "j"), "j must be an integer");
      const int j = jj.get<int>();
      return {op, [r, j] { return json::to_json(project(r, j)); }};
    }
    if (op == "spec") {
      const Group g = ctx_.group;
      return {op, [g] {
                Json out = Json::array();
                for (const auto& p : spec_points(g)) {
                  out.push_back(Json{{"j", p.j}, {"generic", p.generic()}, {"closed", p.closed()}});
                }
                return out;
              }};
    }
    if (op == "spa-member") {
      if (cmd.contains("generators")) {
        const std::string gp = at(ptr, "generators");
        const Json& gs = cmd.at("generators");
        if (!gs.is_array()) schema(gp, "expected an array");
        std::vector<LinElem> gens;
        for (std::size_t i = 0; i < gs.size(); ++i) gens.push_back(json::linelem_from(gs[i], h, at(gp, i)));
        const LinElem g = json::linelem_from(need(cmd, "element", ptr), h, at(ptr, "element"));
        int bound = 8;
        if (cmd.contains("bound")) {
          if (!cmd.at("bound").is_number_integer()) schema(at(ptr, "bound"), "bound must be an integer");
          bound = cmd.at("bound").get<int>();
        }
        return {op, [gens, g, bound] {
                  const auto r = saturation_contains(gens, g, bound);
                  Json j{{"contained", r.found}};
                  if (r.found) {
                    j["n"] = r.n;
                    j["coefficients"] = r.coeffs;
                  } else if (r.witness) {
                    j["witness"] = json::to_json(*r.witness);
                  }
                  return j;
                }};
      }
      const A1Point p = json::a1point_from(need(cmd, "point", ptr), h, at(ptr, "point"));
      const LinElem f = json::linelem_from(need(cmd, "element", ptr), h, at(ptr, "element"));
      return {op, [p, f] { return Json{{"member", spa_point_membership(p, f)}}; }};
    }
    if (op == "pl-eval") {
      const PLFn f = ctx_.plfns.resolve(need(cmd, "plfn", ptr), at(ptr, "plfn"));
      const Ranger r = ranger("at");
      return {op, [f, r] {
                Json j{{"value", json::to_json(f.eval(r))}, {"monotone", f.is_monotone()}};
                j["nonnegative"] = is_nonnegative(f);
                return j;
              }};
    }
    if (op == "graph-validate") {
      const GammaGraph g = graph("graph");
      return {op, [g, tag, this] {
                const auto rep = validate(g);
                if (rep.ok()) dot_.push_back({tag, to_dot(g, tag)});
                return Json{{"valid", rep.ok()}, {"errors", rep.errors}};
              }};
    }
    if (op == "retract") {
      const GammaGraph g = graph("graph");
      const Ranger t = ranger("t");
      const GraphPoint x = json::graph_point_from(need(cmd, "point", ptr), g, at(ptr, "point"));
      return {op, [g, t, x] {
                const GammaGraph n = normalize_skeleton(g);
                const GraphPoint y = refine_point(g, n, x);
                const GraphPoint r = retract(n, t, y);
                return Json{{"point", json::to_json(n, r)},
                            {"dist_to_skeleton", json::to_json(dist_to_skeleton(n, y))}};
              }};
    }
    if (op == "quotient") {
      const GammaGraph g = graph("graph");
      const std::string gp = at(ptr, "generators");
      const Json& gs = need(cmd, "generators", ptr);
      if (!gs.is_array()) schema(gp, "expected an array");
      std::vector<GraphAutomorphism> gens;
      for (std::size_t i = 0; i < gs.size(); ++i) gens.push_back(automorphism(g, gs[i], at(gp, i)));
      return {op, [g, gens, tag, this] {
                const auto q = quotient(g, gens);
                dot_.push_back({tag, to_dot(q.quotient, tag)});
                Json images = Json::object();
                for (std::size_t v = 0; v < g.vertices().size(); ++v) {
                  images[g.vertex(v).id] = json::to_json(q.quotient, q.project(g, GraphPoint::at_vertex(v)));
                }
                return Json{{"group_order", q.group_order},
                            {"root", q.quotient.vertex(q.vertex_image[q.root]).id},
                            {"quotient", json::to_json(q.quotient)},
                            {"vertex_images", images}};
              }};
    }
    if (op == "p1-distance") {
      const CenterConfig& c = ctx_.centers(ptr);
      const P1Point x = point("x"), y = point("y");
      return {op, [c, x, y] {
                return Json{{"distance", json::to_json(distance(c, x, y))},
                            {"meet", json::to_json(c, meet(c, x, y))},
                            {"equal", point_eq(c, x, y)}};
              }};
    }
    if (op == "absval") {
      const CenterConfig& c = ctx_.centers(ptr);
      const FactoredFn f = fn("function");
      const P1Point x = point("at");
      return {op, [c, f, x] {
                return Json{{"logabs", json::to_json(eval_abs(c, f, x))},
                            {"point", invariants_json(classify_point(c, x))}};
              }};
    }
    if (op == "slopes") {
      const CenterConfig& c = ctx_.centers(ptr);
      const FactoredFn f = fn("function");
      const P1Point x = point("at");
      return {op, [c, f, x] {
                Json branches = Json::array();
                std::int64_t total = 0;
                for (const auto& b : branch_slopes(c, f, x)) {
                  Json bj{{"kind", b.kind == BranchKind::Up ? "up" : b.kind == BranchKind::Down ? "down" : "generic"},
                          {"slope", b.slope}};
                  if (b.kind == BranchKind::Down) bj["center"] = c.label(b.center);
                  total += b.slope;
                  branches.push_back(bj);
                }
                Json j{{"branches", branches}, {"sum", total}};
                if (x.is_monomial()) j["slope_below"] = slope_and_degree(c, f, x.center(), radius(c, x));
                return j;
              }};
    }
    if (op == "triangulate") {
      const CenterConfig& c = ctx_.centers(ptr);
      const std::string mp = at(ptr, "marked");
      const Json& ms = need(cmd, "marked", ptr);
      if (!ms.is_array()) schema(mp, "expected an array");
      std::vector<P1Point> marked;
      for (std::size_t i = 0; i < ms.size(); ++i) marked.push_back(ctx_.points.resolve(ms[i], at(mp, i)));
      return {op, [c, marked, tag, this] {
                const auto t = triangulate(c, marked);
                dot_.push_back({tag, to_dot(t.skeleton, tag)});
                return triangulation_json(c, t);
              }};
    }
    if (op == "pullback") {
      const MapData f = ctx_.maps.resolve(need(cmd, "map", ptr), at(ptr, "map"));
      const std::string sp = at(ptr, "segments");
      const Json& ss = need(cmd, "segments", ptr);
      if (!ss.is_array()) schema(sp, "expected an array");
      std::vector<TargetSegment> segs;
      for (std::size_t i = 0; i < ss.size(); ++i) {
        const std::string p = at(sp, i);
        const Json& s = ss[i];
        const std::string label = [&] {
          const Json& cj = need(s, "center", p);
          if (!cj.is_string()) schema(at(p, "center"), "expected a center label");
          return cj.get<std::string>();
        }();
        const auto b = f.target.index(label);
        if (!b) schema(at(p, "center"), "unknown target center \"" + label + "\"");
        segs.push_back({*b, json::elem_from(need(s, "lo", p), h, at(p, "lo")),
                        json::elem_from(need(s, "hi", p), h, at(p, "hi"))});
      }
      return {op, [f, segs, tag, this] {
                const auto pb = pullback_skeleton(f, segs);
                dot_.push_back({tag, to_dot(pb.graph, tag)});
                Json pts = Json::array();
                for (const auto& x : pb.points) pts.push_back(json::to_json(f.source, x));
                Json maps = Json::array();
                for (const auto& m : pb.edge_maps) maps.push_back(json::to_json(m));
                return Json{{"graph", json::to_json(pb.graph)}, {"points", pts}, {"edge_maps", maps}};
              }};
    }
    if (op == "quasi-check") {
      std::size_t bound = 10;
      if (cmd.contains("bound")) {
        if (!cmd.at("bound").is_number_unsigned()) schema(at(ptr, "bound"), "bound must be a non-negative integer");
        bound = cmd.at("bound").get<std::size_t>();
      }
      std::optional<MarkedOrder> marks;
      FiniteSpace sp;
      if (cmd.contains("space")) {
        sp = ctx_.spaces.resolve(cmd.at("space"), at(ptr, "space"));
      } else if (cmd.contains("marked")) {
        marks = json::marked_from(cmd.at("marked"), at(ptr, "marked"));
        sp = to_space(*marks);
      } else if (cmd.contains("ranger_complete")) {
        const std::string rp = at(ptr, "ranger_complete");
        const Json& s = cmd.at("ranger_complete");
        if (!s.is_array()) schema(rp, "expected an array of labels");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (!s[i].is_string()) schema(at(rp, i), "expected a string");
          labels.push_back(s[i].get<std::string>());
        }
        sp = ranger_complete(labels);
      } else {
        schema(ptr, "quasi-check needs \"space\", \"marked\" or \"ranger_complete\"");
      }
      return {op, [sp, marks, bound] {
                Json j = json::to_json(check_quasi_tree(sp, bound), sp);
                j["space"] = json::to_json(sp);
                Json lv = Json::array();
                for (std::size_t x : leaves(sp)) lv.push_back(sp.label(x));
                j["leaves"] = lv;
                if (marks) j["quasi_interval"] = is_quasi_interval(*marks);
                const auto q = hausdorff_quotient(sp);
                j["hausdorff_quotient"] = q.space.labels();
                return j;
              }};
    }
    schema(at(ptr, "op"), "unknown op \"" + op + "\"");
  }

 private:
  static GraphAutomorphism automorphism(const GammaGraph& g, const Json& j, const std::string& ptr) {
    GraphAutomorphism s;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) s.vertex_map.push_back(v);
    for (std::size_t e = 0; e < g.edges().size(); ++e) s.edge_map.push_back(e);
    auto fill = [&](const char* key, std::vector<std::size_t>& map, auto find) {
      if (!j.is_object()) schema(ptr, "expected an object");
      if (!j.contains(key)) return;
      const std::string p = at(ptr, key);
      const Json& m = j.at(key);
      if (!m.is_object()) schema(p, "expected an object of id pairs");
      for (const auto& [from, to] : m.items()) {
        const auto a = find(from);
        if (!a) schema(at(p, from), "unknown id \"" + from + "\"");
        if (!to.is_string()) schema(at(p, from), "expected an id");
        const auto b = find(to.template get<std::string>());
        if (!b) schema(at(p, from), "unknown id \"" + to.template get<std::string>() + "\"");
        map[*a] = *b;
      }
    };
    fill("vertices", s.vertex_map, [&](const std::string& id) { return g.find_vertex(id); });
    fill("edges", s.edge_map, [&](const std::string& id) { return g.find_edge(id); });
    return s;
  }

  Context& ctx_;
  std::vector<DotGraph>& dot_;
};

std::string text_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << "adic report v" << report.at("version").get<std::string>() << "\n";
  if (report.contains("seed")) out << "seed " << report.at("seed").dump() << "\n";
  for (const auto& r : report.at("results")) {
    out << "[" << r.at("index").get<std::size_t>() << "] " << r.at("op").get<std::string>();
    const Json& res = r.at("result");
    if (res.is_object()) {
      for (const auto& [k, v] : res.items()) out << "\n    " << k << ": " << text_value(v);
    } else {
      out << ": " << text_value(res);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  return std::nullopt;
}

RunResult run_scenario(const std::string& text, const RunOptions& opts) {
  RunResult res;
  Context ctx;
  std::vector<Command> commands;
  std::vector<DotGraph> dot;
  Builder builder(ctx, dot);

  try {
    Json root;
    try {
      root = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), "");
    }
    if (!root.is_object()) throw ParseError("scenario must be a JSON object", "");
    ctx.group = json::group_from(need(root, "group", ""), "/group");
    ctx.rank = ctx.group.rank();
    const int h = ctx.rank;
    if (root.contains("centers") || root.contains("logdist")) {
      ctx.config = json::config_from(need(root, "centers", ""), need(root, "logdist", ""), h, "");
      const auto rep = validate_config(*ctx.config);
      if (!rep.ok()) throw DomainError("center configuration: " + rep.errors.front());
    }
    ctx.rangers.load(root, "rangers", [h](const Json& j, const std::string& p) { return json::ranger_from(j, h, p); });
    ctx.points.load(root, "points", [&ctx](const Json& j, const std::string& p) {
      return json::p1point_from(j, ctx.centers(p), p);
    });
    ctx.functions.load(root, "functions", [&ctx](const Json& j, const std::string& p) {
      return json::factored_from(j, ctx.centers(p), p);
    });
    ctx.maps.load(root, "maps", [h](const Json& j, const std::string& p) { return json::map_from(j, h, p); });
    ctx.graphs.load(root, "graphs", [h](const Json& j, const std::string& p) { return json::graph_from(j, h, p); });
    ctx.plfns.load(root, "plfns", [h](const Json& j, const std::string& p) { return json::plfn_from(j, h, p); });
    ctx.spaces.load(root, "spaces", [](const Json& j, const std::string& p) { return json::space_from(j, p); });

    const Json& cmds = need(root, "commands", "");
    if (!cmds.is_array()) throw ParseError("commands must be an array", "/commands");
    for (std::size_t i = 0; i < cmds.size(); ++i) commands.push_back(builder.build(cmds[i], at("/commands", i), i));
  } catch (const ParseError& e) {
    res.exit_code = 1;
    res.error = "schema error at " + (e.pointer().empty() ? std::string("/") : e.pointer()) + ": " + e.what();
    return res;
  } catch (const StructuralError& e) {
    res.exit_code = 1;
    res.error = std::string("schema error: ") + e.what();
    return res;
  } catch (const DomainError& e) {
    res.exit_code = 2;
    res.error = std::string("domain error while loading: ") + e.what();
    return res;
  }

  Json report;
  report["version"] = kReportVersion;
  if (!opts.source_name.empty()) report["scenario"] = opts.source_name;
  if (opts.seed) report["seed"] = *opts.seed;
  Json results = Json::array();
  for (std::size_t i = 0; i < commands.size(); ++i) {
    try {
      results.push_back(Json{{"index", i}, {"op", commands[i].op}, {"result", commands[i].run()}});
    } catch (const std::logic_error& e) {
      res.exit_code = 2;
      res.error = "domain error in command " + std::to_string(i) + " (" + commands[i].op + "): " + e.what();
      return res;
    }
  }
  report["results"] = results;
  res.output = opts.format == Format::Json ? report.dump(2) + "\n" : render_text(report);
  res.dot = std::move(dot);
  return res;
}

}  // namespace adic::cli
