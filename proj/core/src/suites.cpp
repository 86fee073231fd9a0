#include "coverlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "coverlab/construction.hpp"
#include "coverlab/error.hpp"

namespace coverlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skip:
      return "skip";
  }
  return "skip";
}

Status SuiteResult::aggregate() const {
  if (count(Status::fail) > 0) return Status::fail;
  if (count(Status::pass) > 0) return Status::pass;
  return Status::skip;
}

std::size_t SuiteResult::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [s](const InstanceResult& r) { return r.status == s; }));
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : instances) {
    nlohmann::json row{{"instance", r.instance}, {"status", to_string(r.status)}, {"detail", r.detail}};
    if (r.status == Status::fail) row["repro"] = r.repro;
    rows.push_back(std::move(row));
  }
  return {{"suite", suite},
          {"status", to_string(aggregate())},
          {"pass", count(Status::pass)},
          {"fail", count(Status::fail)},
          {"skip", count(Status::skip)},
          {"instances", std::move(rows)}};
}

void write_suite_tsv(std::ostream& out, const SuiteResult& r) {
  out << "suite\tinstance\tstatus\tdetail\n";
  for (const auto& i : r.instances) {
    out << r.suite << '\t' << i.instance << '\t' << to_string(i.status) << '\t' << i.detail << '\n';
    if (i.status == Status::fail) out << "#\trepro: " << i.repro << '\n';
  }
  out << r.suite << "\t(total)\t" << to_string(r.aggregate()) << '\t' << r.count(Status::pass) << " pass, "
      << r.count(Status::fail) << " fail, " << r.count(Status::skip) << " skip\n";
}

namespace {

struct Outcome {
  Status status;
  std::string detail;
};

struct Task {
  const CorpusEntry* entry;
  std::optional<int> k;
  std::function<Outcome()> check;
};

using Builder = std::function<std::vector<Task>(const SuiteConfig&)>;

Outcome pass(std::string d) { return {Status::pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::fail, std::move(d)}; }
Outcome skip(std::string d) { return {Status::skip, std::move(d)}; }
Outcome verdict(bool ok, std::string d) { return {ok ? Status::pass : Status::fail, std::move(d)}; }

std::size_t nu_o(const Graph& g) { return ordered_matching_number(g).first; }

std::pair<int, int> k_range(const SuiteConfig& c, int lo, int hi) { return c.k_range.value_or(std::pair{lo, hi}); }

int max_k_for(const Graph& g, std::size_t guard) {
  return g.num_vertices() == 0 ? 0 : static_cast<int>(guard / g.num_vertices());
}

// "true value >= bound" from a value that is exact or a certified lower bound.
Status at_least(const StanleyResult& r, int bound) {
  if (!r.value || *r.value >= bound) return Status::pass;
  return r.exact() ? Status::fail : Status::skip;
}

Status combine(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::skip || b == Status::skip) return Status::skip;
  return Status::pass;
}

// Builds one task per (graph, k) with k in the suite range.
std::vector<Task> per_k(const SuiteConfig& c, int lo, int hi, bool need_edges,
                        const std::function<Outcome(const Graph&, int)>& check) {
  std::vector<Task> out;
  const auto [klo, khi] = k_range(c, lo, hi);
  for (const auto& e : c.corpus) {
    if (need_edges && e.graph.num_edges() == 0) continue;
    for (int k = klo; k <= khi; ++k) {
      out.push_back({&e, k, [&g = e.graph, k, check] { return check(g, k); }});
    }
  }
  return out;
}

std::vector<Task> depth_stabilization(const SuiteConfig& c) {
  std::vector<Task> out;
  for (const auto& e : c.corpus) {
    if (e.graph.num_edges() == 0) continue;
    const auto [klo, khi] = k_range(c, 1, max_k_for(e.graph, c.engine.homology.max_hochster_variables));
    for (int k = std::max(klo, 1); k <= khi; ++k) {
      out.push_back({&e, k, [&g = e.graph, k, &c] {
                       const int t = static_cast<int>(nu_o(g));
                       const int expected = static_cast<int>(g.num_vertices()) - t - 1;
                       const QuotientInvariants q = invariants_of_quotient(g, k, c.engine.homology, false);
                       const int depth = *q.depth.value;
                       std::ostringstream d;
                       d << "depth=" << depth << " n-nu_o-1=" << expected;
                       if (k >= 2 * t - 1) {
                         d << " (stable range)";
                         return verdict(depth == expected, d.str());
                       }
                       d << " (k<2nu_o-1, lower bound)";
                       return verdict(depth >= expected, d.str());
                     }});
    }
  }
  return out;
}

std::vector<Task> sdepth_monotone(const SuiteConfig& c) {
  std::vector<Task> out;
  const int k_max = c.k_range ? c.k_range->second : 3;
  for (const auto& e : c.corpus) {
    if (e.graph.num_edges() == 0) continue;
    out.push_back({&e, std::nullopt, [&g = e.graph, k_max, &c] {
                     const SdepthSequence seq = sdepth_sequence(g, k_max, c.engine.stanley);
                     std::ostringstream d;
                     d << "J:";
                     for (const auto& t : seq.terms) d << ' ' << t.ideal.value_string();
                     d << " S/J:";
                     for (const auto& t : seq.terms) d << ' ' << t.quotient.value_string();
                     Status s = Status::pass;
                     for (std::size_t i = 0; i < seq.ideal_non_increasing.size(); ++i) {
                       for (const auto& flag : {seq.ideal_non_increasing[i], seq.quotient_non_increasing[i]}) {
                         s = combine(s, !flag ? Status::skip : (*flag ? Status::pass : Status::fail));
                       }
                     }
                     return Outcome{s, d.str()};
                   }});
  }
  return out;
}

std::vector<Task> sdepth_lower_bounds(const SuiteConfig& c) {
  return per_k(c, 1, 3, true, [&c](const Graph& g, int k) {
    const int bound = static_cast<int>(g.num_vertices() - nu_o(g));
    const MonomialIdeal jk = symbolic_power(g, k);
    const StanleyResult ideal = sdepth_exact(jk, PosetMode::ideal, c.engine.stanley);
    const StanleyResult quotient = sdepth_exact(jk, PosetMode::quotient, c.engine.stanley);
    std::ostringstream d;
    d << "sdepth(J)=" << ideal.value_string() << ">=" << bound << " sdepth(S/J)=" << quotient.value_string()
      << ">=" << bound - 1;
    return Outcome{combine(at_least(ideal, bound), at_least(quotient, bound - 1)), d.str()};
  });
}

std::vector<Task> stanley_inequality(const SuiteConfig& c) {
  std::vector<Task> out;
  for (const auto& e : c.corpus) {
    if (e.graph.num_edges() == 0) continue;
    const int t = static_cast<int>(nu_o(e.graph));
    const auto [klo, khi] = k_range(c, std::max(1, 2 * t - 1), 2 * t);
    for (int k = std::max(klo, std::max(1, 2 * t - 1)); k <= khi; ++k) {
      out.push_back({&e, k, [&g = e.graph, k, &c] {
                       const QuotientInvariants q = invariants_of_quotient(g, k, c.engine.homology, false);
                       const int depth = *q.depth.value;
                       const MonomialIdeal jk = symbolic_power(g, k);
                       const StanleyResult ideal = sdepth_exact(jk, PosetMode::ideal, c.engine.stanley);
                       const StanleyResult quotient = sdepth_exact(jk, PosetMode::quotient, c.engine.stanley);
                       std::ostringstream d;
                       d << "depth(S/J)=" << depth << "<=" << quotient.value_string() << " depth(J)=" << depth + 1
                         << "<=" << ideal.value_string();
                       return Outcome{combine(at_least(quotient, depth), at_least(ideal, depth + 1)), d.str()};
                     }});
    }
  }
  return out;
}

std::vector<Task> colon_lemma(const SuiteConfig& c) {
  return per_k(c, 2, 5, true, [](const Graph& g, int k) {
    if (k < 2) return skip("needs k >= 2");
    const MonomialIdeal lhs = colon(symbolic_power(g, k), product_of_variables(g.num_vertices()));
    const MonomialIdeal rhs = symbolic_power(g, k - 2);
    return verdict(lhs == rhs, std::to_string(lhs.num_generators()) + " vs " + std::to_string(rhs.num_generators()) +
                                   " generators");
  });
}

std::vector<Task> bipartite_symbolic_equality(const SuiteConfig& c) {
  return per_k(c, 1, 3, true, [](const Graph& g, int k) {
    const MonomialIdeal symbolic = symbolic_power(g, k);
    const MonomialIdeal ordinary = power(cover_ideal(g), k);
    if (is_bipartite(g)) return verdict(symbolic == ordinary, symbolic == ordinary ? "J^k = J^(k)" : "J^k != J^(k)");
    for (const auto& m : symbolic.generators()) {
      if (!ordinary.contains(m)) {
        return pass("not bipartite, expected difference: " + to_string(m, symbolic.variables()) +
                    " in J^(k) but not J^k");
      }
    }
    return skip("not bipartite, no difference at this k");
  });
}

std::vector<Task> polarization_coverideal(const SuiteConfig& c) {
  std::vector<Task> out;
  for (const auto& e : c.corpus) {
    const auto [klo, khi] = k_range(c, 1, max_k_for(e.graph, c.engine.homology.max_hochster_variables));
    for (int k = std::max(klo, 1); k <= khi; ++k) {
      out.push_back({&e, k, [&g = e.graph, k] {
                       return verdict(check_polarization_is_cover_ideal(g, k), "pol(J^(k)) vs J(G_k)");
                     }});
    }
  }
  return out;
}

std::vector<Task> polarization_shift(const SuiteConfig& c) {
  return per_k(c, 1, 2, true, [&c](const Graph& g, int r) {
    if (r < 1) return skip("needs r >= 1");
    const ShiftResult s = polarization_shift_check(g, r, c.engine.stanley);
    std::ostringstream d;
    d << "layered=" << s.layered.value_string() << " base=" << s.base.value_string() << " shift=" << s.shift;
    if (!s.exact()) return skip(d.str() + " (truncated)");
    return verdict(s.holds(), d.str());
  });
}

std::vector<Task> terai(const SuiteConfig& c) {
  return per_k(c, 1, 3, true, [&c](const Graph& g, int k) {
    if (k < 1) return skip("needs k >= 1");
    const std::size_t nk = g.num_vertices() * static_cast<std::size_t>(k);
    if (nk > 12) throw GuardExceeded("edge-ideal side of G_k", nk, 12);
    const LayeredGraph gk = build_layered_graph(g, k);
    const MonomialIdeal edges = edge_ideal(gk.graph);
    const TeraiResult t = terai_check(edges, c.engine.homology);
    const std::size_t im = induced_matching_number(gk.graph).first;
    const int reg_quotient = t.reg_ideal - 1;
    std::ostringstream d;
    d << "reg(I(G_k))=" << t.reg_ideal << " pd(T/J(G_k))=" << t.pd_dual_quotient
      << " reg(T/I(G_k))=" << reg_quotient << ">=indmatch(G_k)=" << im;
    return verdict(t.holds() && reg_quotient >= static_cast<int>(im), d.str());
  });
}

std::vector<Task> dagger(const SuiteConfig& c) {
  std::vector<Task> out;
  for (const auto& e : c.corpus) {
    if (e.graph.num_edges() == 0) continue;
    out.push_back({&e, std::nullopt, [&g = e.graph, &c] {
                     const DaggerResult r = dagger_check(g, c.engine.stanley);
                     std::ostringstream d;
                     d << "sreg(I)=" << r.sreg_edge_ideal.value_string()
                       << " sdepth(S/J)=" << r.sdepth_cover_quotient.value_string()
                       << " sdepth(J)=" << r.sdepth_cover_ideal.value_string()
                       << " sreg(S/I)=" << r.sreg_edge_quotient.value_string() << " n=" << r.n;
                     if (!r.exact()) return skip(d.str() + " (truncated)");
                     return verdict(r.first_holds() && r.second_holds(), d.str());
                   }});
  }
  return out;
}

std::vector<Task> deletion_sreg(const SuiteConfig& c) {
  return per_k(c, 1, 2, true, [&c](const Graph& g, int k) {
    const MonomialIdeal jk = symbolic_power(g, k);
    Status s = Status::pass;
    std::ostringstream d;
    for (const auto& x : jk.variables()) {
      const DeletionResult r = deletion_monotonicity_check(jk, x, c.engine.stanley);
      for (const auto& h : {r.ideal_holds, r.quotient_holds}) {
        s = combine(s, !h ? Status::skip : (*h ? Status::pass : Status::fail));
      }
      d << x << ":" << r.ideal_after.value_string() << "<=" << r.ideal_before.value_string() << ","
        << r.quotient_after.value_string() << "<=" << r.quotient_before.value_string() << " ";
    }
    std::string detail = d.str();
    if (!detail.empty()) detail.pop_back();
    return Outcome{s, detail};
  });
}

std::vector<Task> induced_matching_witness_suite(const SuiteConfig& c) {
  std::vector<Task> out;
  for (const auto& e : c.corpus) {
    if (e.graph.num_edges() == 0) continue;
    const int t = static_cast<int>(nu_o(e.graph));
    const auto [klo, khi] = k_range(c, 2 * t - 1, 2 * t);
    for (int k = std::max({klo, 2 * t - 1, 1}); k <= khi; ++k) {
      out.push_back({&e, k, [&g = e.graph, k] {
                       const auto [nu, m] = ordered_matching_number(g);
                       const InducedMatchingWitness w = induced_matching_witness(g, m, k);
                       return verdict(w.validated && w.edges.size() == nu,
                                      std::to_string(w.edges.size()) + " edges in G_" + std::to_string(k));
                     }});
    }
  }
  return out;
}

std::vector<Task> embed_gk(const SuiteConfig& c) {
  return per_k(c, 1, 3, false, [](const Graph& g, int k) {
    if (k < 1) return skip("needs k >= 1");
    const LayerEmbedding e = embed_layered_graph(g, k);
    return verdict(e.is_isomorphism(), e.is_isomorphism() ? "G_k = G_{k+1} \\ W" : "not an isomorphism");
  });
}

std::vector<Task> betti_oracle(const SuiteConfig& c) {
  std::vector<Task> out;
  for (const auto& e : c.corpus) {
    if (e.graph.num_edges() == 0) continue;
    out.push_back({&e, std::nullopt, [&g = e.graph, &c] {
                     std::vector<std::pair<std::string, MonomialIdeal>> ideals{{"I(G)", edge_ideal(g)},
                                                                               {"J(G)", cover_ideal(g)}};
                     if (2 * g.num_vertices() <= 12) ideals.emplace_back("pol J^(2)", polarize(symbolic_power(g, 2)).ideal);
                     std::string detail;
                     bool ok = true;
                     for (const auto& [name, ideal] : ideals) {
                       const bool same = hochster_betti(ideal, c.engine.homology).entries() ==
                                         upper_koszul_betti(ideal, c.engine.homology).entries();
                       ok = ok && same;
                       detail += (detail.empty() ? "" : " ") + name + (same ? ":agree" : ":DIFFER");
                     }
                     return verdict(ok, detail);
                   }});
  }
  return out;
}

std::vector<Task> symbolic_oracle(const SuiteConfig& c) {
  return per_k(c, 1, 3, false, [](const Graph& g, int k) {
    const MonomialIdeal jk = symbolic_power(g, k);
    const std::size_t n = g.num_vertices();
    std::vector<int> a(n, 0);
    std::size_t checked = 0;
    // Exponents above k never matter for either side.
    while (true) {
      const Monomial m(a);
      if (jk.contains(m) != in_symbolic_power(g, k, m)) {
        return fail("disagree at " + to_string(m, jk.variables()));
      }
      ++checked;
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++a[i] <= k + 1) break;
        a[i] = 0;
      }
      if (i == n) break;
    }
    return pass(std::to_string(checked) + " monomials agree");
  });
}

std::vector<Task> polarization_pd(const SuiteConfig& c) {
  return per_k(c, 1, 3, true, [&c](const Graph& g, int k) {
    if (k < 1) return skip("needs k >= 1");
    const MonomialIdeal jk = symbolic_power(g, k);
    const int direct = upper_koszul_betti(jk, c.engine.homology).projective_dimension();
    const int polarized = hochster_betti(polarize(jk).ideal, c.engine.homology).projective_dimension();
    return verdict(direct == polarized,
                   "pd(S/J^(k))=" + std::to_string(direct) + " pd(pol)=" + std::to_string(polarized));
  });
}

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> r{
      {"depth-stabilization", depth_stabilization},
      {"sdepth-monotone", sdepth_monotone},
      {"sdepth-lower-bounds", sdepth_lower_bounds},
      {"stanley-inequality", stanley_inequality},
      {"colon-lemma", colon_lemma},
      {"bipartite-symbolic-equality", bipartite_symbolic_equality},
      {"polarization-coverideal", polarization_coverideal},
      {"polarization-shift", polarization_shift},
      {"terai", terai},
      {"dagger", dagger},
      {"deletion-sreg", deletion_sreg},
      {"induced-matching-witness", induced_matching_witness_suite},
      {"embed-gk", embed_gk},
      {"betti-oracle", betti_oracle},
      {"symbolic-oracle", symbolic_oracle},
      {"polarization-pd", polarization_pd},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, b] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(std::string_view name, const SuiteConfig& config) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& p) { return p.first == name; });
  if (it == reg.end()) throw Error("unknown suite '" + std::string(name) + "'");

  const std::vector<Task> tasks = it->second(config);
  SuiteResult result;
  result.suite = std::string(name);
  result.instances.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      InstanceResult& r = result.instances[i];
      r.instance = t.entry->name + (t.k ? " k=" + std::to_string(*t.k) : "");
      r.repro = "coverlab verify " + result.suite + " --corpus '" + t.entry->spec + "'" +
                (t.k ? " --k " + std::to_string(*t.k) : "");
      try {
        const Outcome o = t.check();
        r.status = o.status;
        r.detail = o.detail;
      } catch (const GuardExceeded& e) {
        r.status = Status::skip;
        r.detail = std::string("guard: ") + e.what();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        r.status = Status::skip;
        r.detail = "internal error";
      }
    }
  };
  const std::size_t n_workers = std::clamp<std::size_t>(config.workers, 1, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace coverlab
