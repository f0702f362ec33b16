#include "adic/quasitop.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "adic/error.hpp"
#include "generators.hpp"

namespace adic {
namespace {

using testing::Rng;

// Open sets straight from the definition: generization-closed subsets.
std::vector<PointSet> all_opens(const FiniteSpace& sp) {
  std::vector<PointSet> out;
  for (PointSet u = 0; u <= sp.all(); ++u) {
    bool ok = true;
    for (std::size_t x = 0; x < sp.size() && ok; ++x) {
      if (!((u >> x) & 1U)) continue;
      for (std::size_t y = 0; y < sp.size(); ++y) {
        if (sp.specializes(x, y) && !((u >> y) & 1U)) ok = false;
      }
    }
    if (ok) out.push_back(u);
  }
  return out;
}

// A subspace is connected when no pair of disjoint relatively open sets
// covers it.
bool connected_by_opens(const std::vector<PointSet>& opens, PointSet a) {
  if (a == 0) return false;
  for (PointSet u : opens) {
    const PointSet p = u & a;
    if (p == 0 || p == a) continue;
    for (PointSet v : opens) {
      if ((v & a) == (a & ~p)) return false;
    }
  }
  return true;
}

bool separates_by_opens(const std::vector<PointSet>& opens, const FiniteSpace& sp, std::size_t x, std::size_t a,
                        std::size_t b) {
  if (x == a || x == b) return false;
  const PointSet rest = sp.all() & ~FiniteSpace::bit(x);
  // a and b share a component iff some connected subset of the rest holds both.
  for (PointSet s = rest; ; s = (s - 1) & rest) {
    if (((s >> a) & 1U) && ((s >> b) & 1U) && connected_by_opens(opens, s)) return false;
    if (s == 0) break;
  }
  return true;
}

FiniteSpace random_space(Rng& rng, std::size_t n, int density) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && static_cast<int>(rng() % 100) < density) rel.emplace_back(x, y);
    }
  }
  return FiniteSpace(labels, rel);
}

// Every (S, S0) with |S| = n.
std::vector<MarkedOrder> all_marked(std::size_t n) {
  std::vector<MarkedOrder> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    MarkedOrder m;
    for (std::size_t i = 0; i < n; ++i) {
      m.labels.push_back("s" + std::to_string(i));
      m.closed.push_back(((mask >> i) & 1U) != 0);
    }
    out.push_back(m);
  }
  return out;
}

// A finite tree with each edge replaced by an open midpoint whose closure is
// the two endpoints.
FiniteSpace random_tree_model(Rng& rng, std::size_t vertices) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t v = 1; v < vertices; ++v) {
    const std::size_t parent = rng() % v;
    const std::size_t mid = labels.size();
    labels.push_back("e" + std::to_string(parent) + "_" + std::to_string(v));
    rel.emplace_back(parent, mid);
    rel.emplace_back(v, mid);
  }
  return FiniteSpace(labels, rel);
}

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back("x" + std::to_string(i));
  return s;
}

TEST(QuasiTop, SierpinskiConventions) {
  const FiniteSpace sp({"c", "o"}, {{0, 1}});
  EXPECT_TRUE(sp.specializes(0, 1));
  EXPECT_FALSE(sp.specializes(1, 0));
  EXPECT_TRUE(sp.is_open_point(1));
  EXPECT_TRUE(sp.is_closed_point(0));
  EXPECT_FALSE(sp.is_open_point(0));
  EXPECT_EQ(sp.closure(1), 0b11U);
  EXPECT_EQ(sp.open_hull(0), 0b11U);
  EXPECT_TRUE(sp.is_open(0b10));
  EXPECT_FALSE(sp.is_open(0b01));
  EXPECT_TRUE(sp.is_t0());
  EXPECT_TRUE(sp.connected(sp.all()));
  EXPECT_THROW(FiniteSpace({"a"}, {{0, 1}}), StructuralError);
}

TEST(QuasiTop, TransitiveClosureIsTaken) {
  const FiniteSpace sp({"a", "b", "c"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(sp.specializes(0, 2));
  EXPECT_EQ(sp.relations().size(), 3U);
}

TEST(QuasiTop, ConnectivityMatchesOpenSetDefinition) {
  Rng rng(71);
  for (int iter = 0; iter < 60; ++iter) {
    const FiniteSpace sp = random_space(rng, 2 + rng() % 5, 10 + static_cast<int>(rng() % 25));
    const auto opens = all_opens(sp);
    for (PointSet u = 0; u <= sp.all(); ++u) ASSERT_EQ(sp.is_open(u), std::count(opens.begin(), opens.end(), u) == 1);
    for (PointSet a = 1; a <= sp.all(); ++a) ASSERT_EQ(sp.connected(a), connected_by_opens(opens, a)) << a;
    for (std::size_t x = 0; x < sp.size(); ++x) {
      for (std::size_t a = 0; a < sp.size(); ++a) {
        for (std::size_t b = 0; b < sp.size(); ++b) {
          ASSERT_EQ(sp.separates(x, a, b), separates_by_opens(opens, sp, x, a, b));
        }
      }
    }
  }
}

TEST(QuasiTop, AxiomOneMatchesExhaustiveSearch) {
  Rng rng(72);
  for (int iter = 0; iter < 150; ++iter) {
    const FiniteSpace sp = random_space(rng, 1 + rng() % 6, 10 + static_cast<int>(rng() % 30));
    bool expected = true;
    for (std::size_t a = 0; a < sp.size(); ++a) {
      for (std::size_t b = 0; b < sp.size(); ++b) {
        const PointSet ends = FiniteSpace::bit(a) | FiniteSpace::bit(b);
        bool found = false;
        for (PointSet s = sp.all(); !found; s = (s - 1) & sp.all()) {
          if ((s & ends) == ends && sp.connected(s)) {
            bool inner = true;
            for (std::size_t x : members(s & ~ends)) inner = inner && sp.separates(x, a, b);
            found = inner;
          }
          if (s == 0) break;
        }
        expected = expected && found;
      }
    }
    EXPECT_EQ(check_quasi_tree(sp).axioms[1].holds, expected);
  }
}

TEST(QuasiTop, RangerCompletionExamples) {
  const FiniteSpace one = ranger_complete({"x"});
  EXPECT_EQ(one.labels(), (std::vector<std::string>{"-inf", "x", "+inf"}));
  const FiniteSpace two = ranger_complete({"0", "1"});
  ASSERT_EQ(two.size(), 5U);
  EXPECT_EQ(two.labels(), (std::vector<std::string>{"-inf", "0", "0+", "1", "+inf"}));
  const auto r = check_quasi_tree(two);
  EXPECT_TRUE(r.passes());
  EXPECT_EQ(r.failed_axiom(), -1);
  EXPECT_EQ(leaves(two), (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(ranger_complete({}).size(), 1U);
}

TEST(QuasiTop, RangerCompletionStructure) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const FiniteSpace sp = ranger_complete(names(n));
    ASSERT_EQ(sp.size(), 2 * n + 1);
    EXPECT_TRUE(check_quasi_tree(sp, 13).passes()) << n;
    EXPECT_EQ(leaves(sp).size(), 2U);
    PointSet s_points = 0;
    for (std::size_t i = 0; i < n; ++i) s_points |= FiniteSpace::bit(2 * i + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t x = 2 * i + 1;
      EXPECT_TRUE(sp.is_open_point(x));
      EXPECT_EQ(sp.closure(x), FiniteSpace::bit(x - 1) | FiniteSpace::bit(x) | FiniteSpace::bit(x + 1));
      // Discrete induced topology on S.
      EXPECT_EQ(sp.open_hull(x) & s_points, FiniteSpace::bit(x));
      EXPECT_TRUE(sp.is_closed_point(x - 1));
    }
  }
}

TEST(QuasiTop, DoubledEndpointFailsAxiomTwo) {
  // [0, 1] modelled as 0 < m < 1 with m open; 0' specializes 0 and m.
  const FiniteSpace sp({"0", "0'", "m", "1"}, {{0, 2}, {3, 2}, {1, 2}, {1, 0}});
  const auto r = check_quasi_tree(sp);
  EXPECT_TRUE(r.axioms[0].holds);
  EXPECT_TRUE(r.axioms[1].holds);
  ASSERT_FALSE(r.axioms[2].holds);
  EXPECT_EQ(r.failed_axiom(), 2);
  const auto& w = r.axioms[2].witness;
  ASSERT_EQ(w.size(), 3U);
  const auto seg = [&](std::size_t a, std::size_t b) { return quasi_segment(sp, a, b); };
  EXPECT_EQ(seg(w[0], w[1]) & seg(w[0], w[2]), FiniteSpace::bit(w[0]));
  EXPECT_NE(seg(w[1], w[2]), seg(w[1], w[0]) | seg(w[0], w[2]));
  EXPECT_EQ(seg(0, 1), 0b0011U);
  EXPECT_EQ(seg(0, 3), 0b1101U);
}

TEST(QuasiTop, MutualSpecializationFailsAxiomZero) {
  const FiniteSpace sp({"a", "b"}, {{0, 1}, {1, 0}});
  EXPECT_FALSE(sp.is_t0());
  const auto r = check_quasi_tree(sp);
  EXPECT_FALSE(r.axioms[0].holds);
  EXPECT_EQ(r.axioms[0].witness, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.failed_axiom(), 0);
}

TEST(QuasiTop, BoundIsEnforced) {
  const FiniteSpace sp = ranger_complete(names(5));
  EXPECT_THROW(check_quasi_tree(sp), DomainError);
  EXPECT_NO_THROW(check_quasi_tree(sp, 11));
}

TEST(QuasiTop, QuasiIntervalExamples) {
  EXPECT_TRUE(is_quasi_interval({{"a", "b", "c"}, {true, false, true}}));
  EXPECT_FALSE(is_quasi_interval({{"a", "b"}, {true, true}}));
  EXPECT_FALSE(is_quasi_interval({{"a", "b", "c"}, {true, true, false}}));
  EXPECT_TRUE(is_quasi_interval({{"a"}, {false}}));
  EXPECT_THROW(is_quasi_interval({{"a"}, {}}), StructuralError);
  EXPECT_FALSE(to_space({{"a", "b"}, {true, true}}).connected(0b11));
}

TEST(QuasiTop, QuasiIntervalAgreesWithAxioms) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& m : all_marked(n)) {
      const FiniteSpace sp = to_space(m);
      bool no_vertex = true;
      for (std::size_t x = 0; x < sp.size(); ++x) no_vertex = no_vertex && sp.branch_count(x) <= 2;
      EXPECT_EQ(is_quasi_interval(m), check_quasi_tree(sp).passes() && no_vertex) << n;
    }
  }
}

TEST(QuasiTop, TreeModelsAreQuasiTrees) {
  Rng rng(73);
  for (int iter = 0; iter < 40; ++iter) {
    const FiniteSpace sp = random_tree_model(rng, 2 + rng() % 5);
    EXPECT_TRUE(check_quasi_tree(sp, 16).passes());
  }
}

TEST(QuasiTop, NonCollinearTriplesHaveUniqueVertex) {
  Rng rng(74);
  int noncollinear = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const FiniteSpace sp = random_tree_model(rng, 3 + rng() % 4);
    for (std::size_t a = 0; a < sp.size(); ++a) {
      for (std::size_t b = a + 1; b < sp.size(); ++b) {
        for (std::size_t c = b + 1; c < sp.size(); ++c) {
          const auto v = separating_vertices(sp, a, b, c);
          if (collinear(sp, a, b, c)) {
            EXPECT_TRUE(v.empty());
          } else {
            ++noncollinear;
            ASSERT_EQ(v.size(), 1U);
            EXPECT_GE(sp.branch_count(v[0]), 3U);
            EXPECT_EQ(quasi_segment(sp, a, b) & quasi_segment(sp, a, c) & quasi_segment(sp, b, c),
                      FiniteSpace::bit(v[0]));
          }
        }
      }
    }
  }
  EXPECT_GT(noncollinear, 0);
}

// Finest partition whose quotient is Hausdorff, by search over all partitions.
std::vector<std::size_t> finest_hausdorff_partition(const FiniteSpace& sp) {
  const std::size_t n = sp.size();
  std::vector<std::size_t> cls(n, 0), best;
  std::size_t best_count = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      // The quotient is a finite space; Hausdorff means discrete, i.e. every
      // fiber is open in the source.
      for (std::size_t c = 0; c < used; ++c) {
        PointSet f = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (cls[x] == c) f |= FiniteSpace::bit(x);
        }
        if (!sp.is_open(f)) return;
      }
      if (used > best_count) {
        best_count = used;
        best = cls;
      }
      return;
    }
    for (std::size_t c = 0; c <= used; ++c) {
      cls[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return best;
}

TEST(QuasiTop, HausdorffQuotientIsFinest) {
  Rng rng(75);
  std::vector<FiniteSpace> cases = {ranger_complete({"0", "1"}), FiniteSpace({"a", "b", "c"}, {})};
  for (int iter = 0; iter < 30; ++iter) cases.push_back(random_space(rng, 1 + rng() % 6, 8));
  for (const auto& sp : cases) {
    const auto q = hausdorff_quotient(sp);
    const auto oracle = finest_hausdorff_partition(sp);
    for (std::size_t x = 0; x < sp.size(); ++x) {
      for (std::size_t y = 0; y < sp.size(); ++y) {
        ASSERT_EQ(q.fiber_of[x] == q.fiber_of[y], oracle[x] == oracle[y]);
      }
    }
    EXPECT_TRUE(q.space.relations().empty());
    for (std::size_t c = 0; c < q.space.size(); ++c) {
      PointSet f = 0;
      for (std::size_t x = 0; x < sp.size(); ++x) {
        if (q.fiber_of[x] == c) f |= FiniteSpace::bit(x);
      }
      EXPECT_TRUE(sp.connected(f));
    }
  }
}

TEST(QuasiTop, HausdorffQuotientOfCompletion) {
  const auto q = hausdorff_quotient(ranger_complete({"0", "1"}));
  EXPECT_EQ(q.space.size(), 1U);
  EXPECT_EQ(q.space.label(0), "-inf|0|0+|1|+inf");
  const FiniteSpace discrete({"a", "b"}, {});
  const auto d = hausdorff_quotient(discrete);
  EXPECT_EQ(d.space.labels(), discrete.labels());
  EXPECT_EQ(d.fiber_of, (std::vector<std::size_t>{0, 1}));
}

TEST(QuasiTop, MinimalCompletion) {
  const auto m = minimal_completion_order({"a", "b", "c"});
  EXPECT_EQ(m.labels, (std::vector<std::string>{"a", "(a,b)", "b", "(b,c)", "c"}));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto order = minimal_completion_order(names(n));
    EXPECT_TRUE(is_quasi_interval(order));
    const FiniteSpace sp = to_space(order);
    EXPECT_TRUE(check_quasi_tree(sp).passes());
    EXPECT_EQ(std::count(order.closed.begin(), order.closed.end(), true), static_cast<long>(n));
    EXPECT_EQ(leaves(sp).size(), n == 1 ? 0U : 2U);
  }
}

// Every order-preserving continuous map from t to the minimal completion that
// fixes S.
std::vector<std::vector<std::size_t>> all_retractions(const MarkedOrder& t, const std::vector<std::size_t>& pos) {
  const FiniteSpace src = to_space(t);
  const auto target_order = minimal_completion_order(names(pos.size()));
  const FiniteSpace dst = to_space(target_order);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(t.labels.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == f.size()) {
      for (std::size_t k = 0; k < pos.size(); ++k) {
        if (f[pos[k]] != 2 * k) return;
      }
      for (const auto& [x, y] : src.relations()) {
        if (!dst.specializes(f[x], f[y])) return;
      }
      out.push_back(f);
      return;
    }
    for (std::size_t v = i == 0 ? 0 : f[i - 1]; v < dst.size(); ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

TEST(QuasiTop, MinimalCompletionIsUniversal) {
  Rng rng(76);
  int checked = 0;
  for (std::size_t len = 1; len <= 9; len += 2) {
    for (bool closed_first : {true, false}) {
      MarkedOrder t;
      for (std::size_t i = 0; i < len; ++i) {
        t.labels.push_back("t" + std::to_string(i));
        t.closed.push_back((i % 2 == 0) == closed_first);
      }
      std::vector<std::size_t> closed;
      for (std::size_t i = 0; i < len; ++i) {
        if (t.closed[i]) closed.push_back(i);
      }
      for (unsigned mask = 1; mask < (1U << closed.size()); ++mask) {
        std::vector<std::size_t> pos;
        for (std::size_t k = 0; k < closed.size(); ++k) {
          if ((mask >> k) & 1U) pos.push_back(closed[k]);
        }
        const auto all = all_retractions(t, pos);
        const auto ours = minimal_retraction(t, pos);
        EXPECT_EQ(std::count(all.begin(), all.end(), ours), 1);
        // With one point between consecutive members of S and nothing outside,
        // the retraction is forced.
        bool tight = pos.front() == 0 && pos.back() + 1 == len;
        for (std::size_t k = 0; k + 1 < pos.size(); ++k) tight = tight && pos[k + 1] == pos[k] + 2;
        if (tight) EXPECT_EQ(all.size(), 1U);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20);
  EXPECT_THROW(minimal_retraction({{"a", "b"}, {true, true}}, {0}), DomainError);
  EXPECT_THROW(minimal_retraction({{"a", "b", "c"}, {true, false, true}}, {1}), DomainError);
  EXPECT_THROW(minimal_retraction({{"a", "b", "c"}, {true, false, true}}, {2, 0}), DomainError);
}

}  // namespace
}  // namespace adic
