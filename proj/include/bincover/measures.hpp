#pragma once

#include <bincover/algorithms.hpp>
#include <bincover/core.hpp>
#include <bincover/generators.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bincover {

/// A bijection on {0..n-1}; position i of the permuted sequence holds item
/// mapping[i] of the original.
struct Permutation {
  std::vector<std::size_t> mapping;

  static Permutation identity(std::size_t n);
  bool valid() const;
  Sequence apply(const Sequence& seq) const;
};

// --- Relative worst order -----------------------------------------------------

struct WorstOrderOptions {
  bool exact = true;
  std::uint64_t budget = 10'000'000;  ///< max distinct orderings (exact mode)
  std::size_t samples = 1000;         ///< sampled mode
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct WorstOrderResult {
  std::size_t value = 0;
  /// True when `value` is A_W itself; false for the sampled minimum, which is
  /// only an upper bound on A_W.
  bool exact = true;
  Sequence witness;
  /// Distinct orderings of the multiset, saturated at UINT64_MAX.
  std::uint64_t orderings = 0;
  /// "enumeration", "count-dp" or "sampled".
  std::string method;
};

/// A_W(I) = min over orderings of A(sigma(I)). Exact mode enumerates distinct
/// multiset permutations when there are at most options.budget of them and
/// otherwise falls back to the count DP; BudgetExceeded when neither fits.
WorstOrderResult worst_order_value(const AlgorithmId& alg, const Sequence& multiset,
                                   const WorstOrderOptions& options = {});

// --- Restricted intervals -------------------------------------------------------

/// Counts of items in (a, 1/(p+1)), [1/(p+1), 1/p) and [1/p, b).
struct SizeProfile {
  std::size_t small = 0;
  std::size_t medium = 0;
  std::size_t large = 0;

  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

/// Throws OutOfInterval if an item lies outside (a,b).
SizeProfile size_profile(const Sequence& seq, const IntervalSpec& spec);

// --- Random order ----------------------------------------------------------

/// Float summary of a stochastic measurement with a 95% normal-approximation
/// interval (sample standard deviation). Approximate by construction.
struct RatioEstimate {
  double point = 0;
  double ci_low = 0;
  double ci_high = 0;
  double stddev = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// point / opt and its interval, when an OPT value was supplied.
  std::optional<double> ratio;
  std::optional<double> ratio_ci_low;
  std::optional<double> ratio_ci_high;
  std::optional<std::size_t> opt;
};

RatioEstimate summarize(std::span<const std::uint64_t> values, std::uint64_t seed,
                        std::optional<std::size_t> opt = {});

/// Mean covered count of `alg` over uniformly random orderings of the
/// multiset. Requires samples >= 100.
RatioEstimate random_order_estimate(const AlgorithmId& alg, const Sequence& multiset,
                                    std::size_t samples, std::uint64_t seed,
                                    std::optional<std::size_t> opt = {}, int jobs = 1);

/// Exact E[DNF] over uniformly random orderings of l items of size 1-eps and
/// s items of size eps (eps < 1/(l+s)). Computed by counting orderings per
/// (larges used, smalls used, open-bin state) with big integers.
Rational exact_expected_dnf_two_size(std::size_t large_count, std::size_t small_count);

// --- Min/min -------------------------------------------------------------------

struct MinMinResult {
  Rational ratio;
  bool has_border = true;
  bool unrestricted = false;
};

/// max{(1 + 1/p)/(1 + b), pb/(1 + b)} for intervals containing the border
/// 1/p. Intervals without a border give 1 (has_border = false); the
/// unrestricted interval (0,1) gives 1. Throws BoundaryB when b = 1/(p-1).
MinMinResult minmin_ratio_dnf(const IntervalSpec& spec);

/// DHk has min/min ratio 1 whenever a < 1/p, and on (0,1).
MinMinResult minmin_ratio_dhk(const IntervalSpec& spec);

// --- Competitive ratio on restricted intervals --------------------------------

enum class BoundKind { Exact, UpperBound };

std::string_view to_string(BoundKind k);

struct TableEntry {
  std::string algorithm;  ///< "DNF" or "DHk"
  Rational ratio;
  BoundKind kind = BoundKind::Exact;
  int min_k = 1;  ///< smallest k the DHk entry applies to
};

struct CompetitiveTable {
  BorderCase border_case = BorderCase::One;
  int p = 2;
  bool b_above_split = false;  ///< two-border case: b > (p+2)/(p(p+1))
  std::vector<TableEntry> entries;
  /// DHk's exact ratio exceeds DNF's (exact or upper-bound) ratio.
  bool dhk_better = false;

  const TableEntry& entry(const std::string& algorithm) const;
};

/// Throws NoBorder for intervals with no border and InvalidArgument for more
/// than two borders.
CompetitiveTable competitive_table(const IntervalSpec& spec);

}  // namespace bincover
