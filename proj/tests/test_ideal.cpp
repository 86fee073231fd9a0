#include <gtest/gtest.h>

#include <random>

#include "coverlab/error.hpp"
#include "coverlab/ideal.hpp"
#include "oracles.hpp"

using namespace coverlab;

namespace {

std::vector<std::string> vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal(vars(n), std::move(ms));
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n, int max_exp, int ngens) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < ngens; ++i) {
    std::vector<int> a(n);
    for (auto& x : a) x = e(rng);
    gens.push_back(a);
  }
  return ideal(n, gens);
}

// Calls fn on every exponent vector in [0, cap]^n.
template <class Fn>
void for_each_monomial(std::size_t n, int cap, Fn&& fn) {
  std::vector<int> a(n, 0);
  while (true) {
    fn(Monomial(a));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++a[i] <= cap) break;
      a[i] = 0;
    }
    if (i == n) return;
  }
}

}  // namespace

TEST(Monomial, Basics) {
  const Monomial a({2, 0, 1});
  const Monomial b({1, 1, 0});
  EXPECT_EQ(a.degree(), 3);
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_EQ(lcm(a, b), Monomial({2, 1, 1}));
  EXPECT_EQ(gcd(a, b), Monomial({1, 0, 0}));
  EXPECT_EQ(colon(a, b), Monomial({1, 0, 1}));
  EXPECT_TRUE(Monomial({1, 0, 0}).divides(a));
  EXPECT_EQ(to_string(a, vars(3)), "x1^2*x3");
  EXPECT_EQ(to_string(Monomial::one(2), vars(2)), "1");
  EXPECT_EQ(Monomial::squarefree(3, 0b101), Monomial({1, 0, 1}));
}

TEST(Ideal, Minimization) {
  EXPECT_EQ(ideal(2, {{1, 0}, {1, 1}}).generators(), (std::vector<Monomial>{Monomial({1, 0})}));
  const auto i = ideal(3, {{0, 2, 0}, {1, 1, 1}, {1, 2, 0}});
  EXPECT_EQ(i.num_generators(), 2U);
  EXPECT_TRUE(i.contains(Monomial({1, 2, 0})));
  EXPECT_TRUE(ideal(2, {}).is_zero());
  EXPECT_THROW(ideal(2, {{1, 0, 0}}), Error);
}

TEST(Ideal, Membership) {
  const auto i = ideal(3, {{0, 1, 0}, {1, 0, 1}});
  EXPECT_TRUE(i.contains(Monomial({1, 1, 0})));
  EXPECT_FALSE(i.contains(Monomial({2, 0, 0})));
  EXPECT_TRUE(MonomialIdeal::unit(vars(3)).contains(Monomial::one(3)));
  EXPECT_THROW(i.monomial({{"y", 1}}), Error);
}

TEST(Ideal, IntersectExamples) {
  const auto a = ideal(3, {{1, 0, 0}, {0, 1, 0}});
  const auto b = ideal(3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(intersect(a, b), ideal(3, {{0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(intersect(a, MonomialIdeal::unit(vars(3))), a);
  EXPECT_EQ(intersect(a, a), a);
  EXPECT_THROW(intersect(a, ideal(2, {{1, 0}})), Error);
}

TEST(Ideal, IntersectionIsMembershipConjunction) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_ideal(rng, 3, 3, 3);
    const auto b = random_ideal(rng, 3, 3, 3);
    const auto both = intersect(a, b);
    for_each_monomial(3, 4, [&](const Monomial& m) {
      ASSERT_EQ(both.contains(m), a.contains(m) && b.contains(m)) << to_string(m, vars(3));
    });
  }
}

TEST(Ideal, ProductIsSumOfGenerators) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_ideal(rng, 3, 2, 2);
    const auto b = random_ideal(rng, 3, 2, 2);
    const auto ab = multiply(a, b);
    // m ∈ ab iff m = u·v·w for generators u of a, v of b.
    for_each_monomial(3, 4, [&](const Monomial& m) {
      bool want = false;
      for (const auto& u : a.generators())
        for (const auto& v : b.generators()) want = want || (u * v).divides(m);
      ASSERT_EQ(ab.contains(m), want);
    });
  }
}

TEST(Ideal, PowerExamples) {
  const auto m = ideal(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(power(m, 2), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(power(m, 1), m);
  EXPECT_TRUE(power(m, 0).is_unit());
  const auto j = cover_ideal(make_family("complete:3"));
  std::vector<std::vector<int>> products;
  for (const auto& u : j.generators())
    for (const auto& v : j.generators()) products.push_back((u * v).exponents());
  EXPECT_EQ(power(j, 2), ideal(3, products));
}

TEST(Ideal, ColonExamples) {
  const auto a = ideal(2, {{2, 0}, {1, 1}});
  EXPECT_EQ(colon(a, Monomial({1, 0})), ideal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(colon(a, Monomial::one(2)), a);
  const Graph p3 = make_family("path:3");
  EXPECT_EQ(colon(symbolic_power(p3, 3), Monomial({1, 1, 1})), cover_ideal(p3));
}

TEST(Ideal, ColonMembershipProperty) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_ideal(rng, 3, 3, 3);
    const Monomial m({e(rng), e(rng), e(rng)});
    const auto c = colon(a, m);
    for_each_monomial(3, 4, [&](const Monomial& w) { ASSERT_EQ(c.contains(w), a.contains(w * m)); });
  }
}

TEST(Ideal, RestrictExamples) {
  const auto a = ideal(3, {{0, 1, 0}, {1, 0, 1}});
  const auto r = restrict_variable(a, "x2");
  EXPECT_EQ(r.variables(), (std::vector<std::string>{"x1", "x3"}));
  EXPECT_EQ(r.generators(), (std::vector<Monomial>{Monomial({1, 1})}));
  EXPECT_EQ(restrict_variable(ideal(2, {{1, 0}}), "x2").generators(), (std::vector<Monomial>{Monomial({1})}));
  EXPECT_TRUE(restrict_variable(ideal(2, {{1, 0}}), "x1").is_zero());
  EXPECT_THROW(restrict_variable(a, "y"), Error);
}

TEST(Graph, EdgeAndCoverIdeals) {
  EXPECT_EQ(edge_ideal(make_family("path:3")), ideal(3, {{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(edge_ideal(make_family("complete:3")), ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_TRUE(edge_ideal(Graph(vars(2), std::vector<Edge>{})).is_zero());
  EXPECT_EQ(cover_ideal(make_family("path:3")), ideal(3, {{0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(cover_ideal(make_family("complete:2")), ideal(2, {{1, 0}, {0, 1}}));
}

TEST(Graph, CoverIdealGeneratorsAreMinimalCovers) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 7, 0.45);
    std::vector<Monomial> want;
    for (VertexMask c : oracle::minimal_covers(g)) want.push_back(Monomial::squarefree(g.num_vertices(), c));
    EXPECT_EQ(cover_ideal(g), MonomialIdeal(g.labels(), want));
  }
}

TEST(Symbolic, Examples) {
  const Graph p3 = make_family("path:3");
  EXPECT_EQ(symbolic_power(p3, 2), ideal(3, {{0, 2, 0}, {1, 1, 1}, {2, 0, 2}}));
  EXPECT_EQ(symbolic_power(p3, 1), cover_ideal(p3));
  EXPECT_TRUE(symbolic_power(p3, 0).is_unit());
  EXPECT_THROW(symbolic_power(p3, -1), Error);
  const Graph k3 = make_family("complete:3");
  const Monomial u({1, 1, 1});
  EXPECT_TRUE(symbolic_power(k3, 2).contains(u));
  EXPECT_TRUE(in_symbolic_power(k3, 2, u));
  EXPECT_FALSE(power(cover_ideal(k3), 2).contains(u));
}

TEST(Symbolic, GeneratedFormMatchesEdgewiseCriterion) {
  for (const char* spec : {"path:3", "path:4", "cycle:4", "cycle:5", "complete:3", "complete:4", "star:4"}) {
    const Graph g = make_family(spec);
    for (int k = 1; k <= 5; ++k) {
      if (g.num_vertices() >= 5 && k > 3) continue;  // keeps the scan short
      const auto jk = symbolic_power(g, k);
      for (const auto& gen : jk.generators()) {
        for (int e : gen.exponents()) ASSERT_LE(e, k);
      }
      for_each_monomial(g.num_vertices(), k, [&](const Monomial& m) {
        ASSERT_EQ(jk.contains(m), in_symbolic_power(g, k, m)) << spec << " k=" << k;
      });
    }
  }
}

TEST(Symbolic, ColonLemma) {
  for (const char* spec : {"path:3", "path:4", "complete:3", "cycle:4", "star:4", "cycle:5"}) {
    const Graph g = make_family(spec);
    for (int k = 2; k <= 5; ++k) {
      EXPECT_EQ(colon(symbolic_power(g, k), product_of_variables(g.num_vertices())), symbolic_power(g, k - 2))
          << spec << " k=" << k;
    }
  }
}

TEST(Symbolic, BipartiteOrdinaryEqualsSymbolic) {
  for (const char* spec : {"path:2", "path:3", "path:4", "path:5", "cycle:4", "star:4", "complete_bipartite:2,2"}) {
    const Graph g = make_family(spec);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(power(cover_ideal(g), k), symbolic_power(g, k)) << spec;
  }
  const Graph k3 = make_family("complete:3");
  EXPECT_NE(power(cover_ideal(k3), 2), symbolic_power(k3, 2));
}

TEST(Symbolic, RestrictionFactorsThroughNeighbourhood) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + trial % 3, 0.5);
    for (int k = 1; k <= 3; ++k) {
      const int x = 0;
      const auto lhs = restrict_variable(symbolic_power(g, k), g.label(x));
      const Graph rest = delete_vertices(g, g.closed_neighbor_mask(x));
      std::vector<std::string> ambient(g.labels().begin() + 1, g.labels().end());
      auto rhs = extend_variables(symbolic_power(rest, k), ambient);
      std::vector<int> u(ambient.size(), 0);
      for (int y : g.neighbors(x)) u[static_cast<std::size_t>(y - 1)] = k;
      rhs = scale(rhs, Monomial(u));
      EXPECT_EQ(lhs, rhs) << g.canonical_string() << " k=" << k;
    }
  }
}

TEST(Json, RoundTrip) {
  const auto j = symbolic_power(make_family("cycle:4"), 2);
  EXPECT_EQ(ideal_from_json(to_json(j)), j);
  EXPECT_EQ(to_json(ideal(2, {{2, 1}}))["generators"][0]["x1"], 2);
  EXPECT_THROW(ideal_from_json(nlohmann::json{{"variables", {"a"}}, {"generators", {{{"b", 1}}}}}), Error);
}

TEST(Limits, GeneratorCapRaises) {
  const auto m = ideal(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_THROW(power(m, 6, IdealLimits{50}), GuardExceeded);
}
