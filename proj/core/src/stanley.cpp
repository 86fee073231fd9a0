#include "coverlab/stanley.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "coverlab/construction.hpp"
#include "coverlab/error.hpp"

namespace coverlab {

std::string to_string(PosetMode mode) { return mode == PosetMode::ideal ? "ideal" : "quotient"; }

std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::exact:
      return "exact";
    case Exactness::lower_bound:
      return "lower_bound";
    case Exactness::upper_bound:
      return "upper_bound";
  }
  return "exact";
}

CharacteristicPoset::CharacteristicPoset(const MonomialIdeal& ideal, PosetMode mode, std::size_t max_box,
                                         std::optional<std::vector<int>> cap)
    : mode_(mode) {
  const std::size_t n = ideal.num_variables();
  if (cap) {
    if (cap->size() != n) throw Error("poset cap has the wrong length");
    const Monomial top = ideal.is_zero() ? Monomial::one(n) : ideal.generator_lcm();
    for (std::size_t i = 0; i < n; ++i) {
      if ((*cap)[i] < top[i]) throw Error("poset cap is below the generator lcm");
    }
    cap_ = *cap;
  } else {
    cap_ = ideal.is_zero() ? std::vector<int>(n, 0) : ideal.generator_lcm().exponents();
  }

  stride_.resize(n);
  std::size_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    stride_[i] = box;
    box *= static_cast<std::size_t>(cap_[i] + 1);
    if (box > max_box) throw GuardExceeded("characteristic poset box exceeds guard", box, max_box);
  }

  member_.assign(box, 0);
  for (std::size_t idx = 0; idx < box; ++idx) {
    const bool in = ideal.contains(Monomial(decode(idx)));
    member_[idx] = (mode == PosetMode::ideal) == in ? 1 : 0;
    if (member_[idx]) elements_.push_back(idx);
  }
  std::stable_sort(elements_.begin(), elements_.end(),
                   [this](std::size_t a, std::size_t b) { return degree(a) < degree(b); });
}

std::vector<int> CharacteristicPoset::decode(std::size_t index) const {
  std::vector<int> a(cap_.size());
  for (std::size_t i = 0; i < cap_.size(); ++i) a[i] = coordinate(index, i);
  return a;
}

std::size_t CharacteristicPoset::encode(const std::vector<int>& a) const {
  if (a.size() != cap_.size()) throw Error("exponent vector has the wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] > cap_[i]) throw Error("exponent vector outside the poset box");
    idx += static_cast<std::size_t>(a[i]) * stride_[i];
  }
  return idx;
}

int CharacteristicPoset::degree(std::size_t index) const {
  int d = 0;
  for (std::size_t i = 0; i < cap_.size(); ++i) d += coordinate(index, i);
  return d;
}

int CharacteristicPoset::rho(std::size_t index) const {
  int r = 0;
  for (std::size_t i = 0; i < cap_.size(); ++i) r += coordinate(index, i) == cap_[i] ? 1 : 0;
  return r;
}

namespace {

// Calls fn(box index) for every c with a <= c <= b.
template <class Fn>
void for_each_in_interval(const CharacteristicPoset& p, const std::vector<int>& a, const std::vector<int>& b,
                          Fn&& fn) {
  const std::size_t n = a.size();
  std::vector<int> c = a;
  while (true) {
    fn(p.encode(c));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++c[i] <= b[i]) break;
      c[i] = a[i];
    }
    if (i == n) return;
  }
}

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

bool is_valid_partition(const CharacteristicPoset& poset, const IntervalPartition& part) {
  std::vector<char> hit(poset.box_size(), 0);
  std::size_t covered = 0;
  for (const auto& iv : part.intervals) {
    if (iv.lower.size() != poset.num_variables() || iv.upper.size() != poset.num_variables()) return false;
    for (std::size_t i = 0; i < iv.lower.size(); ++i) {
      if (iv.lower[i] < 0 || iv.lower[i] > iv.upper[i] || iv.upper[i] > poset.cap()[i]) return false;
    }
    bool ok = true;
    for_each_in_interval(poset, iv.lower, iv.upper, [&](std::size_t idx) {
      if (!poset.contains(idx) || hit[idx]) ok = false;
      hit[idx] = 1;
      ++covered;
    });
    if (!ok) return false;
  }
  return covered == poset.size();
}

std::optional<int> score_sdepth(const CharacteristicPoset& poset, const IntervalPartition& part) {
  std::optional<int> best;
  for (const auto& iv : part.intervals) {
    const int r = poset.rho(poset.encode(iv.upper));
    best = best ? std::min(*best, r) : r;
  }
  return best;
}

std::optional<int> score_sreg(const CharacteristicPoset&, const IntervalPartition& part) {
  std::optional<int> best;
  for (const auto& iv : part.intervals) {
    const int d = sum(iv.lower);
    best = best ? std::max(*best, d) : d;
  }
  return best;
}

std::string StanleyResult::value_string() const {
  std::string s = value ? std::to_string(*value) : "inf";
  if (exactness == Exactness::lower_bound) s = ">=" + s;
  if (exactness == Exactness::upper_bound) s = "<=" + s;
  return s;
}

nlohmann::json to_json(const StanleyResult& r) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& iv : r.witness.intervals) intervals.push_back({{"lower", iv.lower}, {"upper", iv.upper}});
  nlohmann::json value = r.value ? nlohmann::json(*r.value) : nlohmann::json("inf");
  return {{"value", value}, {"flag", to_string(r.exactness)}, {"witness", intervals}};
}

namespace {

struct Timeout {};

enum class Objective { sdepth, sreg };

// Decides whether the poset has an interval partition meeting a target:
// every upper endpoint with ρ >= target (sdepth) or every lower endpoint of
// degree <= target (sreg). sdepth is plain exact-cover backtracking: the
// first uncovered element in a linear extension is minimal among the
// uncovered ones, so it has to be the lower endpoint of its interval. sreg
// only has to cover the elements above the target, see solve_sreg.
class PartitionSearch {
 public:
  PartitionSearch(const CharacteristicPoset& p, Objective obj, std::chrono::steady_clock::time_point deadline)
      : p_(p), obj_(obj), deadline_(deadline) {
    pos_.assign(p.box_size(), -1);
    for (std::size_t i = 0; i < p.size(); ++i) pos_[p.elements()[i]] = static_cast<int>(i);
    words_ = (p.size() + 63) / 64;
    // Zobrist keys from a fixed splitmix sequence keep runs reproducible.
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;
    keys_.resize(p.size());
    for (auto& k : keys_) {
      s += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = s;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      k = z ^ (z >> 31);
    }
  }

  /// Returns a partition meeting the target, or nullopt when none exists.
  std::optional<IntervalPartition> run(int target) {
    target_ = target;
    covered_.assign(words_, 0);
    hash_ = 0;
    chosen_.clear();
    failed_.clear();
    stored_words_ = 0;
    if (obj_ == Objective::sreg) prepare_lowers();
    if (!(obj_ == Objective::sreg ? solve_sreg() : solve(0))) return std::nullopt;
    IntervalPartition out;
    for (const auto& [a, b] : chosen_) out.intervals.push_back({p_.decode(a), p_.decode(b)});
    // sreg only places the boxes reaching above the target; the rest stay singletons.
    for (std::size_t idx : p_.elements()) {
      if (!is_covered(idx)) out.intervals.push_back({p_.decode(idx), p_.decode(idx)});
    }
    return out;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  struct Candidate {
    std::size_t upper;
    std::size_t volume;
  };

  bool is_covered(std::size_t idx) const {
    const auto q = static_cast<std::size_t>(pos_[idx]);
    return (covered_[q / 64] >> (q % 64)) & 1U;
  }

  void toggle(std::size_t a, std::size_t b) {
    for_each_in_interval(p_, p_.decode(a), p_.decode(b), [&](std::size_t idx) {
      const auto q = static_cast<std::size_t>(pos_[idx]);
      covered_[q / 64] ^= std::uint64_t{1} << (q % 64);
      hash_ ^= keys_[q];
    });
  }

  // Upper endpoints b >= a with [a, b] inside the uncovered part of the poset.
  std::vector<Candidate> candidates(std::size_t a) const {
    const std::size_t n = p_.num_variables();
    std::vector<int> lo = p_.decode(a);
    std::vector<std::size_t> span(n), lstride(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      span[i] = static_cast<std::size_t>(p_.cap()[i] - lo[i] + 1);
      lstride[i] = total;
      total *= span[i];
    }
    std::vector<char> ok(total, 0);
    std::vector<std::size_t> off(n, 0);
    std::vector<Candidate> out;
    for (std::size_t l = 0; l < total; ++l) {
      std::size_t g = a;
      std::size_t volume = 1;
      for (std::size_t i = 0; i < n; ++i) {
        g += off[i] * p_.stride(i);
        volume *= off[i] + 1;
      }
      bool good = p_.contains(g) && !is_covered(g);
      for (std::size_t i = 0; good && i < n; ++i) {
        if (off[i] > 0 && !ok[l - lstride[i]]) good = false;
      }
      ok[l] = good ? 1 : 0;
      if (good && (obj_ != Objective::sdepth || p_.rho(g) >= target_)) out.push_back({g, volume});
      for (std::size_t i = 0; i < n; ++i) {
        if (++off[i] < span[i]) break;
        off[i] = 0;
      }
    }
    // sdepth: smaller boxes first, sreg: larger first; ties by index.
    std::sort(out.begin(), out.end(), [&](const Candidate& x, const Candidate& y) {
      if (x.volume != y.volume) return obj_ == Objective::sdepth ? x.volume < y.volume : x.volume > y.volume;
      return x.upper < y.upper;
    });
    return out;
  }

  bool known_failure() const {
    auto it = failed_.find(hash_);
    if (it == failed_.end()) return false;
    for (std::size_t off = 0; off < it->second.size(); off += words_) {
      if (std::equal(covered_.begin(), covered_.end(), it->second.begin() + static_cast<std::ptrdiff_t>(off))) {
        return true;
      }
    }
    return false;
  }

  void remember_failure() {
    if (stored_words_ + words_ > kMemoWords) return;
    auto& slot = failed_[hash_];
    slot.insert(slot.end(), covered_.begin(), covered_.end());
    stored_words_ += words_;
  }

  // sreg forward check. An uncovered element c above the target degree d
  // needs a future lower endpoint a of degree <= d with [a, c] uncovered, and
  // then some a' of degree exactly d with [a', c] uncovered as well. The set
  // of such a' is built bottom-up: a' works for c iff it works for c - e_i
  // whenever a'_i < c_i. Sets are bitsets over the degree-d elements.
  void prepare_lowers() {
    level_.clear();
    level_pos_.assign(p_.size(), 0);
    for (std::size_t q = 0; q < p_.size(); ++q) {
      if (p_.degree(p_.elements()[q]) != target_) continue;
      level_pos_[q] = level_.size();
      level_.push_back(p_.elements()[q]);
    }
    lw_ = (level_.size() + 63) / 64;
    const std::size_t n = p_.num_variables();
    eq_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      eq_[i].assign(static_cast<std::size_t>(p_.cap()[i] + 1) * lw_, 0);
      for (std::size_t b = 0; b < level_.size(); ++b) {
        const auto v = static_cast<std::size_t>(p_.coordinate(level_[b], i));
        eq_[i][v * lw_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
    lowers_.assign(p_.size() * lw_, 0);
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Fills lowers_ for every uncovered element and returns the position of an
  // uncovered element above the target with the fewest possible lowers.
  // Returns kNone when nothing above the target is left, and sets dead_ when
  // some element has no possible lower at all.
  std::size_t most_constrained() {
    const auto& elems = p_.elements();
    const std::size_t n = p_.num_variables();
    std::size_t best = kNone;
    int best_count = std::numeric_limits<int>::max();
    dead_ = false;
    for (std::size_t q = 0; q < elems.size(); ++q) {
      const std::size_t c = elems[q];
      std::uint64_t* mine = &lowers_[q * lw_];
      std::fill(mine, mine + lw_, 0);
      if (is_covered(c) || p_.degree(c) < target_) continue;
      if (p_.degree(c) == target_) {
        const std::size_t b = level_pos_[q];
        mine[b / 64] |= std::uint64_t{1} << (b % 64);
        continue;
      }
      std::fill(mine, mine + lw_, ~std::uint64_t{0});
      for (std::size_t i = 0; i < n; ++i) {
        const int ci = p_.coordinate(c, i);
        const std::uint64_t* same = &eq_[i][static_cast<std::size_t>(ci) * lw_];
        const std::uint64_t* below = nullptr;
        if (ci > 0) {
          const std::size_t pred = c - p_.stride(i);
          if (p_.contains(pred) && !is_covered(pred)) below = &lowers_[static_cast<std::size_t>(pos_[pred]) * lw_];
        }
        // A lower a with a_i > c_i is in no predecessor set and fails a_i == c_i.
        for (std::size_t w = 0; w < lw_; ++w) mine[w] &= same[w] | (below ? below[w] : 0);
      }
      int count = 0;
      for (std::size_t w = 0; w < lw_; ++w) count += std::popcount(mine[w]);
      if (count == 0) {
        dead_ = true;
        return q;
      }
      if (count < best_count) {
        best_count = count;
        best = q;
      }
    }
    return best;
  }

  // Every box reaching above degree d can be cut into boxes whose lower
  // endpoints have degree exactly d, so sreg <= d iff the elements above d
  // are exactly covered by such boxes. Branch on the most constrained one.
  bool solve_sreg() {
    if (level_.empty()) {
      return std::all_of(p_.elements().begin(), p_.elements().end(),
                         [&](std::size_t idx) { return p_.degree(idx) <= target_; });
    }
    if ((++nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout{};
    const std::size_t q = most_constrained();
    if (q == kNone) return true;
    if (dead_) return false;
    if (known_failure()) return false;
    const std::size_t h = p_.elements()[q];
    // Copy: the recursion overwrites lowers_.
    const std::vector<std::uint64_t> options(lowers_.begin() + static_cast<std::ptrdiff_t>(q * lw_),
                                             lowers_.begin() + static_cast<std::ptrdiff_t>((q + 1) * lw_));
    for (std::size_t w = 0; w < lw_; ++w) {
      for (std::uint64_t bits = options[w]; bits != 0; bits &= bits - 1) {
        const std::size_t a = level_[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
        for (const Candidate& c : candidates(a)) {
          if (!dominates(c.upper, h)) continue;
          toggle(a, c.upper);
          chosen_.emplace_back(a, c.upper);
          if (solve_sreg()) return true;
          chosen_.pop_back();
          toggle(a, c.upper);
        }
      }
    }
    remember_failure();
    return false;
  }

  bool dominates(std::size_t b, std::size_t h) const {
    for (std::size_t i = 0; i < p_.num_variables(); ++i) {
      if (p_.coordinate(b, i) < p_.coordinate(h, i)) return false;
    }
    return true;
  }

  bool solve(std::size_t cursor) {
    if ((++nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout{};
    const auto& elems = p_.elements();
    while (cursor < elems.size() && is_covered(elems[cursor])) ++cursor;
    if (cursor == elems.size()) return true;
    const std::size_t a = elems[cursor];
    if (known_failure()) return false;
    for (const Candidate& c : candidates(a)) {
      toggle(a, c.upper);
      chosen_.emplace_back(a, c.upper);
      if (solve(cursor + 1)) return true;
      chosen_.pop_back();
      toggle(a, c.upper);
    }
    remember_failure();
    return false;
  }

  static constexpr std::size_t kMemoWords = std::size_t{1} << 24;

  const CharacteristicPoset& p_;
  Objective obj_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<int> pos_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> keys_;
  int target_ = 0;
  std::vector<std::uint64_t> covered_;
  std::uint64_t hash_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> chosen_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> failed_;
  std::size_t stored_words_ = 0;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> level_pos_;
  bool dead_ = false;
  std::size_t lw_ = 0;
  std::vector<std::vector<std::uint64_t>> eq_;
  std::vector<std::uint64_t> lowers_;
};

IntervalPartition singletons(const CharacteristicPoset& p) {
  IntervalPartition out;
  for (std::size_t idx : p.elements()) out.intervals.push_back({p.decode(idx), p.decode(idx)});
  return out;
}

// Largest ρ over poset elements above a.
int best_rho_above(const CharacteristicPoset& p, std::size_t a) {
  int best = 0;
  const auto lo = p.decode(a);
  for (std::size_t idx : p.elements()) {
    bool above = true;
    for (std::size_t i = 0; i < lo.size() && above; ++i) above = p.coordinate(idx, i) >= lo[i];
    if (above) best = std::max(best, p.rho(idx));
  }
  return best;
}

bool is_minimal(const CharacteristicPoset& p, std::size_t idx) {
  for (std::size_t i = 0; i < p.num_variables(); ++i) {
    if (p.coordinate(idx, i) > 0 && p.contains(idx - p.stride(i))) return false;
  }
  return true;
}

}  // namespace

StanleyResult sdepth_exact(const MonomialIdeal& ideal, PosetMode mode, const StanleyOptions& opts) {
  const CharacteristicPoset p(ideal, mode, opts.max_box, opts.cap);
  StanleyResult r;
  if (p.empty()) return r;  // zero module

  r.witness = singletons(p);
  int lower = *score_sdepth(p, r.witness);
  int upper = static_cast<int>(p.num_variables());
  for (std::size_t idx : p.elements()) {
    if (is_minimal(p, idx)) upper = std::min(upper, best_rho_above(p, idx));
  }

  const auto deadline = std::chrono::steady_clock::now() + opts.budget;
  PartitionSearch search(p, Objective::sdepth, deadline);
  try {
    for (int d = lower + 1; d <= upper; ++d) {
      auto part = search.run(d);
      if (!part) break;
      r.witness = std::move(*part);
      lower = *score_sdepth(p, r.witness);
      d = lower;
    }
  } catch (const Timeout&) {
    if (lower < upper) r.exactness = Exactness::lower_bound;
  }
  r.value = lower;
  r.nodes = search.nodes();
  return r;
}

StanleyResult sreg_poset(const MonomialIdeal& ideal, PosetMode mode, const StanleyOptions& opts) {
  const CharacteristicPoset p(ideal, mode, opts.max_box, opts.cap);
  StanleyResult r;
  if (p.empty()) return r;

  r.witness = singletons(p);
  int upper = *score_sreg(p, r.witness);
  int lower = 0;
  for (std::size_t idx : p.elements()) {
    if (is_minimal(p, idx)) lower = std::max(lower, p.degree(idx));
  }

  const auto deadline = std::chrono::steady_clock::now() + opts.budget;
  PartitionSearch search(p, Objective::sreg, deadline);
  try {
    for (int d = upper - 1; d >= lower; --d) {
      auto part = search.run(d);
      if (!part) break;
      r.witness = std::move(*part);
      upper = *score_sreg(p, r.witness);
      d = upper;
    }
  } catch (const Timeout&) {
    if (lower < upper) r.exactness = Exactness::upper_bound;
  }
  r.value = upper;
  r.nodes = search.nodes();
  return r;
}

namespace {

std::optional<int> sum_if_finite(const StanleyResult& a, const StanleyResult& b) {
  if (!a.value || !b.value) return std::nullopt;
  return *a.value + *b.value;
}

}  // namespace

bool DaggerResult::exact() const {
  return sreg_edge_ideal.exact() && sdepth_cover_quotient.exact() && sdepth_cover_ideal.exact() &&
         sreg_edge_quotient.exact();
}

bool DaggerResult::first_holds() const {
  const auto s = sum_if_finite(sreg_edge_ideal, sdepth_cover_quotient);
  return s && *s == static_cast<int>(n);
}

bool DaggerResult::second_holds() const {
  const auto s = sum_if_finite(sdepth_cover_ideal, sreg_edge_quotient);
  return s && *s == static_cast<int>(n);
}

DaggerResult dagger_check(const Graph& g, const StanleyOptions& opts) {
  if (g.num_edges() == 0) throw Error("duality check needs at least one edge");
  DaggerResult r;
  r.n = g.num_vertices();
  const MonomialIdeal edges = edge_ideal(g);
  const MonomialIdeal cover = cover_ideal(g);
  r.sreg_edge_ideal = sreg_poset(edges, PosetMode::ideal, opts);
  r.sdepth_cover_quotient = sdepth_exact(cover, PosetMode::quotient, opts);
  r.sdepth_cover_ideal = sdepth_exact(cover, PosetMode::ideal, opts);
  r.sreg_edge_quotient = sreg_poset(edges, PosetMode::quotient, opts);
  return r;
}

namespace {

// sdepth_k >= sdepth_{k+1}. A lower bound on the left still settles "true"
// when the right side is exact.
std::optional<bool> non_increasing(const StanleyResult& left, const StanleyResult& right) {
  if (!right.exact()) return std::nullopt;
  if (!left.value) return true;
  if (!right.value) return left.exact() ? std::optional<bool>(false) : std::nullopt;
  if (*left.value >= *right.value) return true;
  return left.exact() ? std::optional<bool>(false) : std::nullopt;
}

}  // namespace

SdepthSequence sdepth_sequence(const Graph& g, int k_max, const StanleyOptions& opts) {
  SdepthSequence seq;
  for (int k = 1; k <= k_max; ++k) {
    const MonomialIdeal jk = symbolic_power(g, k);
    SdepthTerm term;
    term.k = k;
    term.ideal = sdepth_exact(jk, PosetMode::ideal, opts);
    term.quotient = sdepth_exact(jk, PosetMode::quotient, opts);
    seq.terms.push_back(std::move(term));
  }
  for (std::size_t i = 0; i + 1 < seq.terms.size(); ++i) {
    seq.ideal_non_increasing.push_back(non_increasing(seq.terms[i].ideal, seq.terms[i + 1].ideal));
    seq.quotient_non_increasing.push_back(non_increasing(seq.terms[i].quotient, seq.terms[i + 1].quotient));
  }
  return seq;
}

bool ShiftResult::holds() const {
  if (!layered.value || !base.value) return !layered.value && !base.value;
  return *layered.value == *base.value + shift;
}

ShiftResult polarization_shift_check(const Graph& g, int r, const StanleyOptions& opts,
                                     std::size_t max_layered_variables) {
  if (r < 1) throw Error("shift check needs r >= 1");
  const std::size_t nr = g.num_vertices() * static_cast<std::size_t>(r);
  if (nr > max_layered_variables) {
    throw GuardExceeded("layered ring exceeds shift-check guard", nr, max_layered_variables);
  }
  ShiftResult out;
  out.shift = static_cast<int>(g.num_vertices()) * (r - 1);
  const LayeredGraph gr = build_layered_graph(g, r);
  out.layered = sdepth_exact(cover_ideal(gr.graph), PosetMode::quotient, opts);
  out.base = sdepth_exact(symbolic_power(g, r), PosetMode::quotient, opts);
  return out;
}

namespace {

// sreg(after) <= sreg(before); sreg values are exact or upper bounds, so
// "true" needs only the right-hand side exact.
std::optional<bool> not_larger(const StanleyResult& after, const StanleyResult& before) {
  if (!after.value) return true;  // zero module
  if (!before.value) return after.exact() ? std::optional<bool>(false) : std::nullopt;
  if (*after.value <= *before.value) return before.exact() ? std::optional<bool>(true) : std::nullopt;
  return after.exact() ? std::optional<bool>(false) : std::nullopt;
}

}  // namespace

DeletionResult deletion_monotonicity_check(const MonomialIdeal& ideal, std::string_view variable,
                                           const StanleyOptions& opts) {
  const MonomialIdeal restricted = restrict_variable(ideal, variable);
  DeletionResult r;
  r.ideal_before = sreg_poset(ideal, PosetMode::ideal, opts);
  r.ideal_after = sreg_poset(restricted, PosetMode::ideal, opts);
  r.quotient_before = sreg_poset(ideal, PosetMode::quotient, opts);
  r.quotient_after = sreg_poset(restricted, PosetMode::quotient, opts);
  r.ideal_holds = not_larger(r.ideal_after, r.ideal_before);
  r.quotient_holds = not_larger(r.quotient_after, r.quotient_before);
  return r;
}

}  // namespace coverlab
