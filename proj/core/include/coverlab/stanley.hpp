#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverlab/graph.hpp"
#include "coverlab/homology.hpp"
#include "coverlab/ideal.hpp"

namespace coverlab {

/// Which module of the pair (I, S/I) a poset describes.
enum class PosetMode { ideal, quotient };

std::string to_string(PosetMode mode);

/// Exponent vectors a <= g lying in I (ideal mode, an up-set of the box) or
/// outside I (quotient mode, a down-set). Elements are stored by mixed-radix
/// index into the box.
class CharacteristicPoset {
 public:
  /// g defaults to the lcm of the minimal generators.
  CharacteristicPoset(const MonomialIdeal& ideal, PosetMode mode, std::size_t max_box = 50000,
                      std::optional<std::vector<int>> cap = std::nullopt);

  PosetMode mode() const noexcept { return mode_; }
  std::size_t num_variables() const noexcept { return cap_.size(); }
  const std::vector<int>& cap() const noexcept { return cap_; }
  std::size_t box_size() const noexcept { return member_.size(); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  bool contains(std::size_t index) const { return member_[index] != 0; }
  /// Element indices sorted by total degree, then index: a linear extension.
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }

  std::vector<int> decode(std::size_t index) const;
  std::size_t encode(const std::vector<int>& a) const;
  std::size_t stride(std::size_t var) const { return stride_[var]; }
  int coordinate(std::size_t index, std::size_t var) const {
    return static_cast<int>((index / stride_[var]) % static_cast<std::size_t>(cap_[var] + 1));
  }
  int degree(std::size_t index) const;
  /// ρ(b) = #{i : b_i = g_i}.
  int rho(std::size_t index) const;

 private:
  PosetMode mode_;
  std::vector<int> cap_;
  std::vector<std::size_t> stride_;
  std::vector<char> member_;
  std::vector<std::size_t> elements_;
};

struct Interval {
  std::vector<int> lower;
  std::vector<int> upper;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
};

/// Disjoint cover of exactly the poset elements by boxes inside the poset.
bool is_valid_partition(const CharacteristicPoset& poset, const IntervalPartition& p);
/// min ρ(upper); +infinity (nullopt) for an empty partition.
std::optional<int> score_sdepth(const CharacteristicPoset& poset, const IntervalPartition& p);
/// max |lower|; nullopt for an empty partition.
std::optional<int> score_sreg(const CharacteristicPoset& poset, const IntervalPartition& p);

enum class Exactness { exact, lower_bound, upper_bound };
std::string to_string(Exactness e);

struct StanleyOptions {
  std::chrono::milliseconds budget{60000};
  std::size_t max_box = 50000;
  /// Overrides the box cap g (for the g-independence check).
  std::optional<std::vector<int>> cap;
};

struct StanleyResult {
  /// nullopt: +infinity (zero module) for sdepth, -infinity for sreg.
  std::optional<int> value;
  Exactness exactness = Exactness::exact;
  IntervalPartition witness;
  std::size_t nodes = 0;

  bool exact() const noexcept { return exactness == Exactness::exact; }
  std::string value_string() const;
};

/// Stanley depth of I or S/I: the best min ρ(upper) over interval partitions.
/// When the budget runs out the best certified lower bound is returned.
StanleyResult sdepth_exact(const MonomialIdeal& ideal, PosetMode mode, const StanleyOptions& opts = {});

/// Stanley regularity restricted to the characteristic poset: the smallest
/// max |lower| over interval partitions. Truncation returns an upper bound.
StanleyResult sreg_poset(const MonomialIdeal& ideal, PosetMode mode, const StanleyOptions& opts = {});

nlohmann::json to_json(const StanleyResult& r);

/// sreg(I(G)) + sdepth(S/J(G)) = n and sdepth(J(G)) + sreg(S/I(G)) = n.
struct DaggerResult {
  StanleyResult sreg_edge_ideal;
  StanleyResult sdepth_cover_quotient;
  StanleyResult sdepth_cover_ideal;
  StanleyResult sreg_edge_quotient;
  std::size_t n = 0;

  bool exact() const;
  bool first_holds() const;
  bool second_holds() const;
};
DaggerResult dagger_check(const Graph& g, const StanleyOptions& opts = {});

struct SdepthTerm {
  int k = 0;
  StanleyResult ideal;
  StanleyResult quotient;
};

struct SdepthSequence {
  std::vector<SdepthTerm> terms;
  /// Per adjacent pair (k, k+1): nullopt when either side is inexact.
  std::vector<std::optional<bool>> ideal_non_increasing;
  std::vector<std::optional<bool>> quotient_non_increasing;
};
SdepthSequence sdepth_sequence(const Graph& g, int k_max, const StanleyOptions& opts = {});

/// sdepth(T_r / J(G_r)) vs sdepth(S / J(G)^(r)) + n(r - 1).
struct ShiftResult {
  StanleyResult layered;
  StanleyResult base;
  int shift = 0;
  bool exact() const { return layered.exact() && base.exact(); }
  bool holds() const;
};
/// Throws GuardExceeded when n·r exceeds max_layered_variables.
ShiftResult polarization_shift_check(const Graph& g, int r, const StanleyOptions& opts = {},
                                     std::size_t max_layered_variables = 8);

/// sreg(I') <= sreg(I) and sreg(S'/I') <= sreg(S/I) for I' = I ∩ K[vars \ x].
struct DeletionResult {
  StanleyResult ideal_before;
  StanleyResult ideal_after;
  StanleyResult quotient_before;
  StanleyResult quotient_after;
  /// nullopt: undecided because a value was truncated in the unsafe direction.
  std::optional<bool> ideal_holds;
  std::optional<bool> quotient_holds;
};
DeletionResult deletion_monotonicity_check(const MonomialIdeal& ideal, std::string_view variable,
                                           const StanleyOptions& opts = {});

}  // namespace coverlab
