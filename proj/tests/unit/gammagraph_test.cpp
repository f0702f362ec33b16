#include <gtest/gtest.h>

#include <algorithm>

#include "adic/error.hpp"
#include "adic/gammagraph.hpp"
#include "graph_gen.hpp"

namespace adic {
namespace {

using testing::Rng;

GroupElem E(std::initializer_list<Rational> c) { return GroupElem(c); }
Ranger P(std::initializer_list<Rational> c) { return Ranger::principal(GroupElem(c)); }

// Center c with arms to a, b, d of lengths (1,0), (1,0), (2,0).
GammaGraph y_tree() {
  GammaGraph g(2);
  const auto c = g.add_vertex("c");
  const auto a = g.add_vertex("a");
  const auto b = g.add_vertex("b");
  const auto d = g.add_vertex("d");
  g.add_edge("ca", c, a, E({1, 0}));
  g.add_edge("cb", c, b, E({1, 0}));
  g.add_edge("cd", c, d, E({2, 0}));
  return g;
}

TEST(GammaGraph, ValidateExamples) {
  GammaGraph g = y_tree();
  EXPECT_TRUE(validate(g).ok());

  Skeleton sk;
  sk.vertices = {0};
  sk.pieces.push_back({2, true, Ranger::cut(2, {1}, CutTail::quad(QuadIrr(0, 1, 2)))});
  g.set_skeleton(sk);
  const auto rep = validate(g);
  EXPECT_FALSE(rep.ok());
  EXPECT_NE(rep.errors.front().find("divisorial"), std::string::npos);

  sk.pieces = {{2, true, successor(E({1, 0}), 1)}};
  g.set_skeleton(sk);
  EXPECT_FALSE(validate(g).ok());

  sk.pieces = {{2, true, P({1, 0})}};
  g.set_skeleton(sk);
  EXPECT_TRUE(validate(g).ok());

  GammaGraph single(2);
  single.add_vertex("x");
  single.set_skeleton({{0}, {}, {}});
  EXPECT_TRUE(validate(single).ok());

  GammaGraph classical(2);
  classical.add_vertex("x", VertexKind::ClassicalLeaf);
  classical.set_skeleton({{0}, {}, {}});
  EXPECT_FALSE(validate(classical).ok());
}

TEST(GammaGraph, ValidateStructure) {
  GammaGraph g(1);
  const auto a = g.add_vertex("a");
  const auto b = g.add_vertex("b", VertexKind::ClassicalLeaf);
  g.add_edge("ab", a, b, E({3}));
  EXPECT_FALSE(validate(g).ok());
  EXPECT_THROW(g.add_edge("ab", a, b, std::nullopt), StructuralError);
  EXPECT_THROW(g.add_edge("aa", a, a, E({1})), StructuralError);
  EXPECT_THROW(g.add_edge("neg", a, b, E({-1})), StructuralError);

  GammaGraph h(1);
  const auto p = h.add_vertex("p");
  const auto q = h.add_vertex("q", VertexKind::UnboundedLeaf);
  const auto e = h.add_edge("pq", q, p, std::nullopt);
  EXPECT_EQ(h.edge(e).u, p);
  EXPECT_TRUE(validate(h).ok());
  h.add_vertex("lonely");
  EXPECT_FALSE(validate(h).ok());
}

TEST(GammaGraph, SkeletonNeedsUniqueSegments) {
  // A cycle outside the skeleton gives two segments to it.
  GammaGraph g(1);
  for (const char* id : {"s", "a", "b"}) g.add_vertex(id);
  g.add_edge("sa", 0, 1, E({1}));
  g.add_edge("sb", 0, 2, E({1}));
  g.add_edge("ab", 1, 2, E({1}));
  g.set_skeleton({{0}, {}, {}});
  EXPECT_FALSE(validate(g).ok());
  g.set_skeleton({{0, 1, 2}, {0, 1}, {}});
  EXPECT_FALSE(validate(g).ok());
  g.set_skeleton({{0, 1, 2}, {0, 1, 2}, {}});
  EXPECT_TRUE(validate(g).ok());
}

TEST(GammaGraph, DistanceToSkeleton) {
  GammaGraph g = y_tree();
  g.set_skeleton({{0, 1}, {0}, {}});
  EXPECT_EQ(dist_to_skeleton(g, GraphPoint::at_vertex(2)), P({1, 0}));
  EXPECT_EQ(dist_to_skeleton(g, GraphPoint::on_edge(2, P({1, 0}))), P({1, 0}));
  EXPECT_EQ(dist_to_skeleton(g, GraphPoint::at_vertex(0)), P({0, 0}));
  EXPECT_EQ(dist_to_skeleton(g, GraphPoint::on_edge(0, P({Rational(1, 2), 0}))), P({0, 0}));
  const Ranger r = dist_to_skeleton(g, GraphPoint::on_edge(2, successor(E({1, 0}), 1)));
  EXPECT_EQ(r, successor(E({1, 0}), 1));
  EXPECT_LT(P({1, 0}), r);
  EXPECT_LT(r, P({1, Rational(1, 1000)}));
  EXPECT_EQ(skeleton_foot(g, GraphPoint::at_vertex(3)), 0u);

  GammaGraph none = y_tree();
  EXPECT_THROW(dist_to_skeleton(none, GraphPoint::at_vertex(0)), DomainError);
}

TEST(GammaGraph, DistanceFromEdgeEndAndLeaf) {
  GammaGraph g(1);
  const auto s = g.add_vertex("s");
  const auto a = g.add_vertex("a");
  const auto c = g.add_vertex("c", VertexKind::ClassicalLeaf);
  g.add_edge("as", a, s, E({4}));
  g.add_edge("ac", a, c, std::nullopt);
  g.set_skeleton({{s}, {}, {}});
  ASSERT_TRUE(validate(g).ok());
  // offsets on "as" are measured from a, the far end
  EXPECT_EQ(dist_to_skeleton(g, GraphPoint::on_edge(0, P({1}))), P({3}));
  EXPECT_EQ(dist_to_skeleton(g, GraphPoint::at_vertex(c)), Ranger::unbounded(1, 1));
  EXPECT_EQ(dist_to_skeleton(g, GraphPoint::on_edge(1, P({10}))), P({14}));
  EXPECT_EQ(retract(g, P({6}), GraphPoint::at_vertex(c)), GraphPoint::on_edge(1, P({2})));
  EXPECT_EQ(retract(g, P({4}), GraphPoint::at_vertex(c)), GraphPoint::at_vertex(a));
  EXPECT_EQ(retract(g, P({1}), GraphPoint::at_vertex(c)), GraphPoint::on_edge(0, P({3})));
  EXPECT_EQ(retract(g, Ranger::unbounded(1, 1), GraphPoint::at_vertex(c)), GraphPoint::at_vertex(c));
}

TEST(GammaGraph, RetractExamples) {
  GammaGraph g = y_tree();
  g.set_skeleton({{0, 1}, {0}, {}});
  const GraphPoint end = GraphPoint::at_vertex(3);
  EXPECT_EQ(retract(g, P({1, 0}), end), GraphPoint::on_edge(2, P({1, 0})));
  EXPECT_EQ(retract(g, P({5, 0}), end), end);
  EXPECT_EQ(retract(g, P({0, 0}), end), GraphPoint::at_vertex(0));
  EXPECT_THROW(retract(g, P({-1, 0}), end), DomainError);
}

TEST(GammaGraph, RetractionLaws) {
  Rng rng(61);
  for (int i = 0; i < 150; ++i) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    const GammaGraph g = testing::random_graph_with_skeleton(rng, rank);
    ASSERT_TRUE(validate(g).ok()) << to_dot(g);
    for (int k = 0; k < 10; ++k) {
      const GraphPoint x = testing::random_point(rng, g);
      const Ranger rx = dist_to_skeleton(g, x);
      const Ranger t = rng() % 2 ? Ranger::principal(GroupElem::zero(rank)) : testing::random_offset(rng, Ranger::unbounded(rank, 1));
      const Ranger t2 = testing::random_offset(rng, Ranger::unbounded(rank, 1));
      const GraphPoint y = retract(g, t, x);
      EXPECT_EQ(dist_to_skeleton(g, y), min(t, rx));
      EXPECT_EQ(retract(g, t, y), y);
      EXPECT_EQ(retract(g, t, retract(g, t2, x)), retract(g, min(t, t2), x));
      if (y != x) EXPECT_LT(dist_to_skeleton(g, y), rx);
    }
    for (std::size_t v : g.skeleton().vertices) {
      EXPECT_EQ(retract(g, Ranger::principal(GroupElem::zero(rank)), GraphPoint::at_vertex(v)), GraphPoint::at_vertex(v));
    }
  }
}

TEST(GammaGraph, NormalizePieces) {
  GammaGraph g = y_tree();
  g.set_skeleton({{0}, {}, {{2, true, P({1, 0})}}});
  const GammaGraph n = normalize_skeleton(g);
  EXPECT_EQ(n.vertices().size(), 5u);
  EXPECT_TRUE(n.skeleton().pieces.empty());
  EXPECT_EQ(dist_to_skeleton(n, GraphPoint::at_vertex(3)), P({1, 0}));
  g.set_skeleton({{3}, {}, {{2, false, P({Rational(1, 2), 0})}}});
  const GammaGraph m = normalize_skeleton(g);
  EXPECT_EQ(dist_to_skeleton(m, GraphPoint::at_vertex(0)), P({Rational(3, 2), 0}));
}

TEST(GammaGraph, TreePathsAgree) {
  Rng rng(67);
  for (int i = 0; i < 100; ++i) {
    auto st = testing::random_symmetric_tree(rng, 1, 2 + static_cast<int>(rng() % 2), false, rng() % 2, false);
    const GammaGraph& t = st.tree;
    const std::size_t n = t.vertices().size();
    const std::size_t root = rng() % n;
    for (int k = 0; k < 10; ++k) {
      const std::size_t a = rng() % n, b = rng() % n;
      EXPECT_EQ(tree_path(t, a, b), tree_path_via_root(t, a, b, root));
    }
  }
}

TEST(GammaGraph, SegmentIntersections) {
  // Paths between vertices of a tree intersect in a sub-path or not at all.
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    auto st = testing::random_symmetric_tree(rng, 1, 3, false, false, false);
    const GammaGraph& t = st.tree;
    const std::size_t n = t.vertices().size();
    for (int k = 0; k < 10; ++k) {
      const auto p = tree_path(t, rng() % n, rng() % n);
      const auto q = tree_path(t, rng() % n, rng() % n);
      std::vector<std::size_t> common;
      for (std::size_t v : p) {
        if (std::find(q.begin(), q.end(), v) != q.end()) common.push_back(v);
      }
      if (common.size() <= 1) continue;
      EXPECT_EQ(common, tree_path(t, common.front(), common.back()));
    }
  }
}

TEST(GammaGraph, VertexIsMidpoint) {
  // Cut two arms of the Y tree to equal length; swapping them fixes the
  // center, which is the midpoint of the resulting segment and principal.
  const GammaGraph g = y_tree();
  const GraphPoint b1 = GraphPoint::on_edge(1, P({1, 0}));
  const GraphPoint b2 = GraphPoint::on_edge(2, P({1, 0}));
  ASSERT_EQ(distance(g, GraphPoint::at_vertex(1), b1), distance(g, GraphPoint::at_vertex(1), b2));
  EXPECT_EQ(distance(g, b1, GraphPoint::at_vertex(0)), distance(g, b2, GraphPoint::at_vertex(0)));
  EXPECT_EQ(distance(g, b1, b2), E({2, 0}));
  EXPECT_EQ(components_without(g, {GraphPoint::at_vertex(0)}), 3u);
}

TEST(GammaGraph, ComponentsWithoutPoints) {
  const GammaGraph g = y_tree();
  EXPECT_EQ(components_without(g, {}), 1u);
  EXPECT_EQ(components_without(g, {GraphPoint::on_edge(2, successor(E({1, 0}), 1))}), 2u);
  EXPECT_EQ(components_without(g, {GraphPoint::on_edge(2, P({1, 0})), GraphPoint::on_edge(2, P({Rational(3, 2), 0}))}), 3u);
}

TEST(GammaGraph, QuotientSwapsLeaves) {
  GammaGraph g(2);
  const auto q = g.add_vertex("q");
  const auto a = g.add_vertex("a");
  const auto b = g.add_vertex("b");
  g.add_edge("qa", q, a, E({1, 0}));
  g.add_edge("qb", q, b, E({1, 0}));
  const GraphAutomorphism swap{{0, 2, 1}, {1, 0}};
  const auto res = quotient(g, {swap});
  EXPECT_EQ(res.group_order, 2u);
  ASSERT_EQ(res.quotient.vertices().size(), 2u);
  ASSERT_EQ(res.quotient.edges().size(), 1u);
  EXPECT_EQ(*res.quotient.edge(0).length, E({1, 0}));
  EXPECT_EQ(res.project(g, GraphPoint::at_vertex(a)), res.project(g, GraphPoint::at_vertex(b)));
}

TEST(GammaGraph, QuotientOfReflectedEdge) {
  GammaGraph g(2);
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("ab", 0, 1, E({3, 1}));
  const auto res = quotient(g, {GraphAutomorphism{{1, 0}, {0}}});
  ASSERT_EQ(res.quotient.edges().size(), 1u);
  EXPECT_EQ(*res.quotient.edge(0).length, E({Rational(3, 2), Rational(1, 2)}));
  EXPECT_EQ(res.quotient.vertices().size(), 2u);
  const GraphPoint img = res.project(g, GraphPoint::on_edge(0, P({1, 0})));
  EXPECT_EQ(img, res.project(g, GraphPoint::on_edge(0, P({2, 1}))));
}

TEST(GammaGraph, QuotientRejectsNonIsometries) {
  GammaGraph g(1);
  g.add_vertex("q");
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("qa", 0, 1, E({1}));
  g.add_edge("qb", 0, 2, E({2}));
  EXPECT_THROW(quotient(g, {GraphAutomorphism{{0, 2, 1}, {1, 0}}}), StructuralError);
  EXPECT_THROW(quotient(g, {GraphAutomorphism{{0, 1, 2}, {1, 0}}}), StructuralError);
}

TEST(GammaGraph, QuotientMetricIsOrbitMinimum) {
  Rng rng(73);
  for (int i = 0; i < 60; ++i) {
    const int variant = static_cast<int>(rng() % 5);
    const int k = variant == 1 || variant == 2 ? 3 : 2;
    auto st = testing::random_symmetric_tree(rng, 2, k, variant == 2, variant == 3, variant == 4);
    const auto res = quotient(st.tree, st.generators);
    const auto group = testing::closure(st.tree, st.generators);
    EXPECT_EQ(res.group_order, group.size());
    EXPECT_TRUE(res.quotient.is_tree());
    for (int j = 0; j < 15; ++j) {
      const GraphPoint x = testing::random_divisorial_point(rng, st.tree);
      const GraphPoint y = testing::random_divisorial_point(rng, st.tree);
      std::optional<GroupElem> best;
      for (const auto& s : group) {
        const GroupElem d = distance(st.tree, x, apply(st.tree, s, y));
        if (!best || d < *best) best = d;
      }
      EXPECT_EQ(distance(res.quotient, res.project(st.tree, x), res.project(st.tree, y)), *best);
    }
  }
}

TEST(GammaGraph, DotExport) {
  GammaGraph g = y_tree();
  g.set_skeleton({{0, 1}, {0}, {}});
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("\"c\" -- \"a\" [label=\"(1,0)\", color=red"), std::string::npos);
  EXPECT_NE(dot.find("\"c\" -- \"d\" [label=\"(2,0)\"]"), std::string::npos);
}

}  // namespace
}  // namespace adic
