#include "coverlab/report.hpp"

#include <chrono>

#include "coverlab/construction.hpp"
#include "coverlab/error.hpp"

namespace coverlab {

std::string EngineConfig::fingerprint() const { return to_json().dump(); }

nlohmann::json EngineConfig::to_json() const {
  return {{"field", homology.prime == 0 ? std::string("Q") : "GF(" + std::to_string(homology.prime) + ")"},
          {"max_complex_vertices", homology.max_complex_vertices},
          {"max_hochster_variables", homology.max_hochster_variables},
          {"max_koszul_box", homology.max_koszul_box},
          {"max_poset_box", stanley.max_box},
          {"budget_ms", stanley.budget.count()},
          {"sdepth", with_sdepth}};
}

std::string FlaggedValue::to_string() const {
  if (!skipped.empty()) return "skip";
  std::string s = value ? std::to_string(*value) : "inf";
  if (flag == "lower_bound") return ">=" + s;
  if (flag == "upper_bound") return "<=" + s;
  return s;
}

nlohmann::json FlaggedValue::to_json() const {
  nlohmann::json j;
  if (!skipped.empty()) {
    j["value"] = nullptr;
    j["skipped"] = skipped;
  } else {
    j["value"] = value ? nlohmann::json(*value) : nlohmann::json("inf");
  }
  j["flag"] = flag;
  return j;
}

namespace {

FlaggedValue flagged_from_json(const nlohmann::json& j) {
  FlaggedValue v;
  v.flag = j.at("flag").get<std::string>();
  if (j.contains("skipped")) {
    v.skipped = j.at("skipped").get<std::string>();
  } else if (j.at("value").is_number_integer()) {
    v.value = j.at("value").get<int>();
  }
  return v;
}

FlaggedValue skipped(std::string reason) {
  FlaggedValue v;
  v.skipped = std::move(reason);
  return v;
}

FlaggedValue from_stanley(const StanleyResult& r) {
  FlaggedValue v;
  v.value = r.value;
  v.flag = to_string(r.exactness);
  return v;
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string ordinary_comparison(const Graph& g, int k) {
  const MonomialIdeal symbolic = symbolic_power(g, k);
  const MonomialIdeal ordinary = power(cover_ideal(g), k);
  const std::string tag = "^(" + std::to_string(k) + ")";
  if (symbolic == ordinary) return "J^" + std::to_string(k) + " = J" + tag;
  for (const auto& m : symbolic.generators()) {
    if (!ordinary.contains(m)) {
      return to_string(m, symbolic.variables()) + " in J" + tag + " but not in J^" + std::to_string(k);
    }
  }
  return "J^" + std::to_string(k) + " != J" + tag;
}

}  // namespace

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& [a, b] : ordered_witness.pairs) witness.push_back({a, b});
  nlohmann::json j{{"graph", graph},
                   {"hash", hash},
                   {"n", n},
                   {"k", k},
                   {"ordered_matching_number", ordered_matching},
                   {"ordered_matching", witness},
                   {"induced_matching_number", induced_matching},
                   {"depth", depth.to_json()},
                   {"pd", pd.to_json()},
                   {"reg", reg.to_json()},
                   {"sdepth_ideal", sdepth_ideal.to_json()},
                   {"sdepth_quotient", sdepth_quotient.to_json()},
                   {"notes", notes},
                   {"config", config}};
  if (!timings.empty()) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [stage, ms] : timings) t[stage] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

InvariantReport InvariantReport::from_json(const nlohmann::json& j) {
  InvariantReport r;
  r.graph = j.at("graph").get<std::string>();
  r.hash = j.at("hash").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<int>();
  r.ordered_matching = j.at("ordered_matching_number").get<std::size_t>();
  for (const auto& p : j.at("ordered_matching")) r.ordered_witness.pairs.emplace_back(p.at(0), p.at(1));
  r.induced_matching = j.at("induced_matching_number").get<std::size_t>();
  r.depth = flagged_from_json(j.at("depth"));
  r.pd = flagged_from_json(j.at("pd"));
  r.reg = flagged_from_json(j.at("reg"));
  r.sdepth_ideal = flagged_from_json(j.at("sdepth_ideal"));
  r.sdepth_quotient = flagged_from_json(j.at("sdepth_quotient"));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.config = j.at("config");
  return r;
}

InvariantReport compute_report(const CorpusEntry& entry, int k, const EngineConfig& config,
                               const ReportRequest& request) {
  if (k < 0) throw Error("k must be >= 0");
  const Graph& g = entry.graph;
  InvariantReport r;
  Stopwatch clock;
  r.graph = entry.name;
  r.hash = graph_hash(g);
  r.n = g.num_vertices();
  r.k = k;
  r.config = config.to_json();

  auto [nu, witness] = ordered_matching_number(g);
  r.ordered_matching = nu;
  for (const auto& [a, b] : witness.pairs) r.ordered_witness.pairs.emplace_back(a, b);
  r.induced_matching = induced_matching_number(g).first;
  r.timings.emplace_back("matchings", clock.lap());

  if (k == 0 || g.num_edges() == 0) {
    // J^(0) = S and J(edgeless) = S: the quotient is zero.
    r.depth.value = std::nullopt;
    r.pd = skipped("zero module");
    r.reg = skipped("zero module");
  } else {
    try {
      const QuotientInvariants q = invariants_of_quotient(g, k, config.homology, false);
      r.depth.value = q.depth.value;
      r.pd.value = q.pd;
      r.reg.value = q.reg;
    } catch (const GuardExceeded& e) {
      r.depth = r.pd = r.reg = skipped(e.what());
    }
  }
  r.timings.emplace_back("homology", clock.lap());

  if (config.with_sdepth) {
    try {
      const MonomialIdeal jk = symbolic_power(g, k);
      r.sdepth_ideal = from_stanley(sdepth_exact(jk, PosetMode::ideal, config.stanley));
      r.sdepth_quotient = from_stanley(sdepth_exact(jk, PosetMode::quotient, config.stanley));
    } catch (const GuardExceeded& e) {
      r.sdepth_ideal = r.sdepth_quotient = skipped(e.what());
    }
  } else {
    r.sdepth_ideal = r.sdepth_quotient = skipped("disabled");
  }
  r.timings.emplace_back("sdepth", clock.lap());

  if (request.compare_ordinary && k >= 2 && g.num_edges() > 0) r.notes.push_back(ordinary_comparison(g, k));
  if (!request.timings) r.timings.clear();
  return r;
}

InvariantReport cached_report(const CorpusEntry& entry, int k, const EngineConfig& config,
                              const ReportRequest& request, const Cache* cache) {
  if (!cache || request.timings) return compute_report(entry, k, config, request);
  const std::string computation = request.compare_ordinary ? "report+ordinary" : "report";
  const std::string key = Cache::make_key(graph_hash(entry.graph), k, computation, config.fingerprint());
  if (auto hit = cache->get(key)) {
    try {
      InvariantReport r = InvariantReport::from_json(*hit);
      // The hash covers the graph, not the display name.
      r.graph = entry.name;
      return r;
    } catch (const std::exception&) {
      // fall through and recompute
    }
  }
  InvariantReport r = compute_report(entry, k, config, request);
  cache->put(key, r.to_json());
  return r;
}

void write_tsv_header(std::ostream& out) {
  out << "graph\tn\tk\tnu_o\tindmatch\tdepth\tpd\treg\tsdepth_J\tsdepth_S/J\tnotes\n";
}

void write_tsv_row(std::ostream& out, const InvariantReport& r) {
  std::string notes;
  for (const auto& s : r.notes) notes += (notes.empty() ? "" : "; ") + s;
  out << r.graph << '\t' << r.n << '\t' << r.k << '\t' << r.ordered_matching << '\t' << r.induced_matching << '\t'
      << r.depth.to_string() << '\t' << r.pd.to_string() << '\t' << r.reg.to_string() << '\t'
      << r.sdepth_ideal.to_string() << '\t' << r.sdepth_quotient.to_string() << '\t' << (notes.empty() ? "-" : notes)
      << '\n';
}

}  // namespace coverlab
