#include "adic/json_io.hpp"

#include <gtest/gtest.h>

#include "adic/error.hpp"
#include "generators.hpp"
#include "graph_gen.hpp"
#include "p1_oracle.hpp"

namespace adic {
namespace {

using json::Json;
using testing::Rng;

std::string pointer_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.pointer();
  }
  return "<no error>";
}

TEST(JsonIo, Rationals) {
  EXPECT_EQ(json::rational_from(Json("6/4"), ""), Rational(3, 2));
  EXPECT_EQ(json::rational_from(Json(-7), ""), Rational(-7));
  EXPECT_EQ(json::to_json(Rational(-3, 2)), Json("-3/2"));
  EXPECT_EQ(pointer_of([] { json::rational_from(Json("3/0"), "/x"); }), "/x");
  EXPECT_EQ(pointer_of([] { json::rational_from(Json(1.5), "/y"); }), "/y");
}

TEST(JsonIo, ElementsAndGroups) {
  const Json e = Json::parse(R"(["1/2", 0])");
  EXPECT_EQ(json::elem_from(e, 2, ""), (GroupElem{Rational(1, 2), Rational(0)}));
  EXPECT_EQ(pointer_of([&] { json::elem_from(e, 3, "/e"); }), "/e");
  const Group g = json::group_from(Json::parse(R"({"rank": 2, "lattice": [["1", "0"], ["1/2", "1"]]})"), "/group");
  EXPECT_TRUE(g.has_explicit_lattice());
  EXPECT_EQ(json::group_from(json::to_json(g), ""), g);
  EXPECT_EQ(pointer_of([] { json::group_from(Json::parse(R"({"rank": 0})"), "/group"); }), "/group/rank");
  EXPECT_EQ(pointer_of([] { json::group_from(Json::parse(R"({"rank": 1, "lattice": [["0"]]})"), "/group"); }),
            "/group/lattice");
}

TEST(JsonIo, RangersRoundTrip) {
  for (int h = 1; h <= 3; ++h) {
    for (const Ranger& r : testing::ranger_grid(h)) {
      const Json j = json::to_json(r);
      ASSERT_EQ(json::ranger_from(Json::parse(j.dump()), h, ""), r) << j.dump();
    }
  }
  const Json bad = Json::parse(R"({"type": "cut", "prefix": ["1", "2"], "tail": "up"})");
  EXPECT_EQ(pointer_of([&] { json::ranger_from(bad, 3, "/r"); }), "/r/tail");
  EXPECT_EQ(pointer_of([] { json::ranger_from(Json::parse(R"({"type": "cut", "prefix": ["1", "2", "3"], "tail": "+inf"})"), 2, "/r"); }),
            "/r");
  EXPECT_EQ(pointer_of([] { json::ranger_from(Json::parse(R"({"type": "spline"})"), 2, "/r"); }), "/r/type");
}

TEST(JsonIo, PlfnRoundTrip) {
  const PLFn f({Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {{Rational(1), Rational(0)}}, {1, -1},
               {Rational(0), Rational(1)});
  const PLFn g = json::plfn_from(json::to_json(f), 2, "");
  EXPECT_EQ(json::to_json(g), json::to_json(f));
  const Json bad = Json::parse(R"({"domain": [["0"], ["1"]], "slopes": [1, 2], "anchor": ["0"]})");
  EXPECT_EQ(pointer_of([&] { json::plfn_from(bad, 1, "/f"); }), "/f");
}

TEST(JsonIo, SpaTypes) {
  const LinElem f{{Rational(1), Rational(-1)}, 3};
  EXPECT_EQ(json::linelem_from(json::to_json(f), 2, ""), f);
  const A1Point p(1, Ranger::infinitesimal({Rational(2)}, -1));
  EXPECT_EQ(json::a1point_from(json::to_json(p), 2, ""), p);
  EXPECT_EQ(pointer_of([] { json::a1point_from(Json::parse(R"({"base_j": 3})"), 2, "/p"); }), "/p/base_j");
}

TEST(JsonIo, GraphsRoundTrip) {
  Rng rng(91);
  for (int iter = 0; iter < 40; ++iter) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    const GammaGraph g = testing::random_graph_with_skeleton(rng, rank);
    const Json j = json::to_json(g);
    const GammaGraph back = json::graph_from(Json::parse(j.dump()), rank, "");
    ASSERT_EQ(json::to_json(back), j);
    for (int k = 0; k < 5; ++k) {
      const GraphPoint x = testing::random_point(rng, g);
      EXPECT_EQ(json::graph_point_from(json::to_json(g, x), back, ""), x);
    }
  }
  const Json bad = Json::parse(R"({"vertices": [{"id": "a"}], "edges": [{"id": "e", "u": "a", "v": "b", "length": ["1"]}]})");
  EXPECT_EQ(pointer_of([&] { json::graph_from(bad, 1, "/g"); }), "/g/edges/0/v");
  const Json dup = Json::parse(R"({"vertices": [{"id": "a"}, {"id": "a"}]})");
  EXPECT_EQ(pointer_of([&] { json::graph_from(dup, 1, "/g"); }), "/g/vertices/1");
}

TEST(JsonIo, CentersPointsFunctions) {
  Rng rng(92);
  for (int iter = 0; iter < 20; ++iter) {
    const CenterConfig c = testing::hierarchical_config(rng, 2, 2 + static_cast<int>(rng() % 4));
    const CenterConfig back = json::config_from(Json(c.labels()), json::logdist_json(c), 2, "");
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) ASSERT_EQ(back.delta(a, b), c.delta(a, b));
    }
    for (int k = 0; k < 5; ++k) {
      const std::size_t a = rng() % c.size();
      const P1Point x = rng() % 4 == 0 ? P1Point::classical(a) : P1Point::monomial(c, a, testing::random_radius(rng, c));
      EXPECT_EQ(json::p1point_from(json::to_json(c, x), c, ""), x);
      const FactoredFn f = testing::random_fn(rng, c, false);
      const Json fj = json::to_json(c, f);
      EXPECT_EQ(json::to_json(c, json::factored_from(fj, c, "")), fj);
    }
    EXPECT_EQ(json::p1point_from(Json("inf"), c, ""), P1Point::infinity());
  }
  EXPECT_EQ(pointer_of([] { json::config_from(Json::parse(R"(["a", "b"])"), Json::array(), 1, ""); }), "/logdist");
  EXPECT_EQ(pointer_of([] { json::config_from(Json::parse(R"(["a", "b"])"), Json::parse(R"([["a", "z", ["0"]]])"), 1, ""); }),
            "/logdist/0/1");
}

TEST(JsonIo, SpacesAndReports) {
  const FiniteSpace sp = ranger_complete({"0", "1"});
  const FiniteSpace back = json::space_from(json::to_json(sp), "");
  EXPECT_EQ(back.labels(), sp.labels());
  EXPECT_EQ(back.relations(), sp.relations());
  const MarkedOrder m = json::marked_from(Json::parse(R"({"order": ["a", "b", "c"], "closed": ["a", "c"]})"), "");
  EXPECT_EQ(m.closed, (std::vector<bool>{true, false, true}));
  const FiniteSpace loop({"a", "b"}, {{0, 1}, {1, 0}});
  const Json r = json::to_json(check_quasi_tree(loop), loop);
  EXPECT_EQ(r.at("failed_axiom"), 0);
  EXPECT_EQ(r.at("axioms").at(0).at("witness"), Json::parse(R"(["a", "b"])"));
  EXPECT_EQ(pointer_of([] { json::space_from(Json::parse(R"({"points": ["a"], "specializations": [["a", "q"]]})"), "/s"); }),
            "/s/specializations/0/1");
}

}  // namespace
}  // namespace adic
