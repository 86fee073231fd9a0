#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "coverlab/construction.hpp"
#include "coverlab/error.hpp"
#include "coverlab/stanley.hpp"
#include "oracles.hpp"

using namespace coverlab;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<int>> gens) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal(vars, std::move(ms));
}

std::vector<std::vector<int>> decoded(const CharacteristicPoset& p) {
  std::vector<std::vector<int>> out;
  for (auto idx : p.elements()) out.push_back(p.decode(idx));
  std::sort(out.begin(), out.end());
  return out;
}

void expect_witness(const MonomialIdeal& i, PosetMode mode, const StanleyResult& r, bool sdepth,
                    const StanleyOptions& opts = {}) {
  const CharacteristicPoset p(i, mode, opts.max_box, opts.cap);
  EXPECT_TRUE(is_valid_partition(p, r.witness));
  if (r.exact()) {
    EXPECT_EQ(sdepth ? score_sdepth(p, r.witness) : score_sreg(p, r.witness), r.value);
  }
}

int n_of(const char* spec) { return static_cast<int>(make_family(spec).num_vertices()); }

}  // namespace

TEST(Poset, MaximalIdealOfTwoVariables) {
  const auto m = ideal(2, {{1, 0}, {0, 1}});
  const CharacteristicPoset up(m, PosetMode::ideal);
  EXPECT_EQ(up.cap(), (std::vector<int>{1, 1}));
  EXPECT_EQ(decoded(up), (std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}}));
  const CharacteristicPoset down(m, PosetMode::quotient);
  EXPECT_EQ(decoded(down), (std::vector<std::vector<int>>{{0, 0}}));
}

TEST(Poset, SymbolicSquareOfP3MatchesEdgewiseCriterion) {
  const Graph g = make_family("path:3");
  const CharacteristicPoset p(symbolic_power(g, 2), PosetMode::ideal);
  EXPECT_EQ(p.cap(), (std::vector<int>{2, 2, 2}));
  ASSERT_EQ(p.box_size(), 27U);
  for (std::size_t idx = 0; idx < p.box_size(); ++idx) {
    EXPECT_EQ(p.contains(idx), in_symbolic_power(g, 2, Monomial(p.decode(idx))));
  }
}

TEST(Poset, ClosureAndGuard) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto i = ideal(3, {{e(rng), e(rng), e(rng)}, {e(rng), e(rng), e(rng)}});
    if (i.is_unit()) continue;
    const CharacteristicPoset up(i, PosetMode::ideal), down(i, PosetMode::quotient);
    EXPECT_EQ(up.size() + down.size(), up.box_size());
    for (auto idx : up.elements())
      for (std::size_t v = 0; v < 3; ++v)
        if (up.coordinate(idx, v) < up.cap()[v]) {
          EXPECT_TRUE(up.contains(idx + up.stride(v)));
        }
  }
  EXPECT_THROW(CharacteristicPoset(symbolic_power(make_family("path:5"), 3), PosetMode::ideal, 100),
               GuardExceeded);
}

TEST(Sdepth, Examples) {
  const auto m = ideal(2, {{1, 0}, {0, 1}});
  const auto r = sdepth_exact(m, PosetMode::ideal);
  EXPECT_EQ(r.value, 1);
  EXPECT_TRUE(r.exact());
  expect_witness(m, PosetMode::ideal, r, true);
  EXPECT_EQ(sdepth_exact(m, PosetMode::quotient).value, 0);
  const auto jp3 = cover_ideal(make_family("path:3"));
  EXPECT_EQ(sdepth_exact(jp3, PosetMode::quotient).value, 1);
  // Zero module: S/S.
  EXPECT_FALSE(sdepth_exact(MonomialIdeal::unit({"x1", "x2"}), PosetMode::quotient).value.has_value());
  EXPECT_EQ(sdepth_exact(MonomialIdeal::unit({"x1", "x2"}), PosetMode::quotient).value_string(), "inf");
}

TEST(Sdepth, MaximalIdealIsCeilHalf) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::vector<int>> gens;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> a(n, 0);
      a[v] = 1;
      gens.push_back(a);
    }
    EXPECT_EQ(sdepth_exact(ideal(n, gens), PosetMode::ideal).value, static_cast<int>((n + 1) / 2)) << n;
  }
}

TEST(Sreg, Examples) {
  const auto ip3 = edge_ideal(make_family("path:3"));
  const auto r = sreg_poset(ip3, PosetMode::ideal);
  EXPECT_EQ(r.value, 2);
  expect_witness(ip3, PosetMode::ideal, r, false);
  EXPECT_EQ(sreg_poset(ideal(1, {{1}}), PosetMode::ideal).value, 1);
  EXPECT_EQ(sreg_poset(edge_ideal(make_family("complete:2")), PosetMode::quotient).value, 1);
}

TEST(Search, AgreesWithExhaustivePartitions) {
  std::mt19937 rng(32);
  std::uniform_int_distribution<int> e(0, 2);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    std::vector<std::vector<int>> gens;
    for (int g = 0; g < 1 + trial % 3; ++g) {
      std::vector<int> a(n);
      for (auto& x : a) x = e(rng);
      gens.push_back(a);
    }
    const auto i = ideal(n, gens);
    if (i.is_unit()) continue;
    for (PosetMode mode : {PosetMode::ideal, PosetMode::quotient}) {
      const CharacteristicPoset p(i, mode);
      if (p.size() > 12 || p.empty()) continue;
      const auto want = oracle::exhaustive_partitions(oracle::poset_elements(i, p.cap(), mode == PosetMode::ideal), p.cap());
      const auto sd = sdepth_exact(i, mode);
      const auto sr = sreg_poset(i, mode);
      EXPECT_EQ(sd.value, want.best_sdepth) << i.to_string() << ' ' << to_string(mode);
      EXPECT_EQ(sr.value, want.best_sreg) << i.to_string() << ' ' << to_string(mode);
      expect_witness(i, mode, sd, true);
      expect_witness(i, mode, sr, false);
      ++checked;
    }
  }
  EXPECT_GT(checked, 80);
}

TEST(Search, WitnessesOnCorpusPowers) {
  for (const char* spec : {"complete:2", "path:3", "complete:3", "path:4"}) {
    for (int k = 1; k <= 2; ++k) {
      const auto jk = symbolic_power(make_family(spec), k);
      for (PosetMode mode : {PosetMode::ideal, PosetMode::quotient}) {
        expect_witness(jk, mode, sdepth_exact(jk, mode), true);
        expect_witness(jk, mode, sreg_poset(jk, mode), false);
      }
    }
  }
}

TEST(Search, IndependentOfEnlargedCap) {
  for (const char* spec : {"complete:2", "path:3", "complete:3"}) {
    for (int k = 1; k <= 2; ++k) {
      const auto jk = symbolic_power(make_family(spec), k);
      for (PosetMode mode : {PosetMode::ideal, PosetMode::quotient}) {
        const auto base = sdepth_exact(jk, mode);
        const CharacteristicPoset p(jk, mode);
        for (std::size_t v = 0; v < p.num_variables(); ++v) {
          StanleyOptions opts;
          opts.cap = p.cap();
          ++(*opts.cap)[v];
          const auto bigger = sdepth_exact(jk, mode, opts);
          ASSERT_TRUE(base.exact() && bigger.exact());
          EXPECT_EQ(bigger.value, base.value) << spec << " k=" << k << " var " << v;
          expect_witness(jk, mode, bigger, true, opts);
        }
      }
    }
  }
}

TEST(Search, TinyBudgetFlagsBound) {
  StanleyOptions opts;
  opts.budget = std::chrono::milliseconds(0);
  const auto jk = symbolic_power(make_family("path:4"), 3);
  const auto sd = sdepth_exact(jk, PosetMode::ideal, opts);
  const auto sr = sreg_poset(jk, PosetMode::ideal, opts);
  // Either decided before the first clock check or flagged in the safe direction.
  if (!sd.exact()) {
    EXPECT_EQ(sd.exactness, Exactness::lower_bound);
    EXPECT_EQ(sd.value_string().substr(0, 2), ">=");
  }
  if (!sr.exact()) {
    EXPECT_EQ(sr.exactness, Exactness::upper_bound);
  }
  const auto full = sdepth_exact(jk, PosetMode::ideal);
  ASSERT_TRUE(full.exact());
  EXPECT_LE(*sd.value, *full.value);
  expect_witness(jk, PosetMode::ideal, sd, true);
}

TEST(Search, JsonShape) {
  const auto r = sdepth_exact(ideal(2, {{1, 0}, {0, 1}}), PosetMode::ideal);
  const auto j = to_json(r);
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["flag"], "exact");
  EXPECT_EQ(j["witness"].size(), r.witness.intervals.size());
}

TEST(Dagger, SmallGraphs) {
  const auto p3 = dagger_check(make_family("path:3"));
  EXPECT_EQ(p3.sreg_edge_ideal.value, 2);
  EXPECT_EQ(p3.sdepth_cover_quotient.value, 1);
  EXPECT_TRUE(p3.first_holds() && p3.second_holds());
  const auto k2 = dagger_check(make_family("complete:2"));
  EXPECT_EQ(k2.sreg_edge_ideal.value, 2);
  EXPECT_EQ(k2.sdepth_cover_quotient.value, 0);
  EXPECT_TRUE(k2.first_holds() && k2.second_holds());
  const auto k3 = dagger_check(make_family("complete:3"));
  EXPECT_TRUE(k3.exact() && k3.first_holds() && k3.second_holds());
  EXPECT_THROW(dagger_check(Graph({"a", "b"}, std::vector<Edge>{})), Error);
}

TEST(Sequence, NonIncreasingWithBounds) {
  const struct {
    const char* spec;
    int k_max;
  } cases[] = {{"complete:2", 3}, {"path:3", 3}, {"complete:3", 2}};
  for (const auto& c : cases) {
    const Graph g = make_family(c.spec);
    const int nu = static_cast<int>(ordered_matching_number(g).first);
    const auto s = sdepth_sequence(g, c.k_max);
    ASSERT_EQ(s.terms.size(), static_cast<std::size_t>(c.k_max));
    for (const auto& flag : s.quotient_non_increasing) EXPECT_EQ(flag, std::optional<bool>(true)) << c.spec;
    for (const auto& flag : s.ideal_non_increasing) EXPECT_EQ(flag, std::optional<bool>(true)) << c.spec;
    for (const auto& t : s.terms) {
      EXPECT_GE(*t.ideal.value, n_of(c.spec) - nu);
      EXPECT_GE(*t.quotient.value, n_of(c.spec) - nu - 1);
    }
  }
}

TEST(Shift, PolarizationShift) {
  const auto k2 = polarization_shift_check(make_family("complete:2"), 2);
  EXPECT_EQ(k2.shift, 2);
  EXPECT_TRUE(k2.exact() && k2.holds());
  const auto k2r1 = polarization_shift_check(make_family("complete:2"), 1);
  EXPECT_EQ(k2r1.shift, 0);
  EXPECT_TRUE(k2r1.holds());
  EXPECT_TRUE(polarization_shift_check(make_family("path:3"), 2).holds());
  EXPECT_THROW(polarization_shift_check(make_family("path:5"), 2), GuardExceeded);
}

TEST(Deletion, Examples) {
  const auto p3 = deletion_monotonicity_check(edge_ideal(make_family("path:3")), "x3");
  EXPECT_EQ(p3.ideal_after.value, 2);
  EXPECT_EQ(p3.ideal_before.value, 2);
  EXPECT_EQ(p3.ideal_holds, std::optional<bool>(true));
  EXPECT_EQ(p3.quotient_holds, std::optional<bool>(true));
  const auto x1 = deletion_monotonicity_check(ideal(2, {{1, 0}}), "x2");
  EXPECT_EQ(x1.ideal_before.value, 1);
  EXPECT_EQ(x1.ideal_after.value, 1);
  EXPECT_EQ(x1.ideal_holds, std::optional<bool>(true));
  const auto j = deletion_monotonicity_check(symbolic_power(make_family("path:4"), 2), "x1");
  EXPECT_EQ(j.ideal_holds, std::optional<bool>(true));
  EXPECT_EQ(j.quotient_holds, std::optional<bool>(true));
}
