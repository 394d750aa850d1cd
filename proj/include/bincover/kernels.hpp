#pragma once

// Count-only engines and the data-parallel loops built on them.
//
// Every parallel kernel has a `_serial` twin that is the reference
// implementation; tests assert that both return identical results for any
// worker count, and bench_kernels compares their throughput.

#include <bincover/algorithms.hpp>
#include <bincover/core.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bincover {

/// Covered-bin counter for DNF (k = 1) and DHk. Item sizes are numerators over
/// a common `unit`: unit = 1.0 for floats, the common denominator for exact
/// integer instances. Class 1 packs Next-Fit style; class j >= 2 closes after
/// exactly j items.
template <class T>
class CoverCounter {
public:
  CoverCounter(int k, T unit) : unit_(unit), fill_(static_cast<std::size_t>(k) + 1, 0),
                                class_sum_(static_cast<std::size_t>(k) + 1, T{}) {}

  void push(T size, int cls) {
    const auto j = static_cast<std::size_t>(cls);
    class_sum_[j] += size;
    open_volume_ += size;
    if (cls == 1) {
      if (!(class_sum_[1] < unit_)) close(1);
    } else if (++fill_[j] == cls) {
      close(j);
    }
  }

  std::size_t covered() const noexcept { return covered_; }
  /// Total content of bins that are currently open.
  T open_volume() const noexcept { return open_volume_; }

private:
  void close(std::size_t j) {
    ++covered_;
    open_volume_ -= class_sum_[j];
    class_sum_[j] = T{};
    fill_[j] = 0;
  }

  T unit_;
  std::vector<int> fill_;
  std::vector<T> class_sum_;
  T open_volume_{};
  std::size_t covered_ = 0;
};

/// An exact multiset scaled to 64-bit integers, classified for one algorithm.
struct CountingInstance {
  std::vector<std::int64_t> sizes;  ///< numerators over `unit`
  std::vector<int> classes;         ///< harmonic class per item
  std::int64_t unit = 1;
  int k = 1;         ///< classes used by the counter
  int max_open = 1;  ///< bins that may stay open at the end
};

/// Common-denominator scaling. Empty when the denominator, or n times it,
/// does not fit comfortably in 62 bits.
std::optional<std::pair<std::vector<std::int64_t>, std::int64_t>>
scale_to_integers(std::span<const ItemSize> items);

/// Throws InstanceTooLarge when the items cannot be scaled to 64 bits.
CountingInstance make_counting_instance(const AlgorithmId& alg, std::span<const ItemSize> items);

std::size_t count_covered(const CountingInstance& inst);
std::size_t count_covered(const CountingInstance& inst, std::span<const std::size_t> order);
std::size_t count_covered(const AlgorithmId& alg, std::span<const double> items);

// --- Monte Carlo over i.i.d. uniform (0,1) items -------------------------
// Trial t draws gen_uniform(n, derive_seed(seed, t)) and returns the covered
// count of `alg` on it.

std::vector<std::uint64_t> uniform_trials_serial(const AlgorithmId& alg, std::size_t n,
                                                 std::size_t trials, std::uint64_t seed);
std::vector<std::uint64_t> uniform_trials(const AlgorithmId& alg, std::size_t n,
                                          std::size_t trials, std::uint64_t seed, int jobs);

// --- Uniformly random orderings of a fixed multiset -----------------------
// Sample s applies a Fisher-Yates shuffle driven by Rng(derive_seed(seed, s)).

std::vector<std::size_t> shuffled_order(std::size_t n, std::uint64_t seed, std::size_t sample);

std::vector<std::uint64_t> shuffled_counts_serial(const CountingInstance& inst,
                                                  std::size_t samples, std::uint64_t seed);
std::vector<std::uint64_t> shuffled_counts(const CountingInstance& inst, std::size_t samples,
                                           std::uint64_t seed, int jobs);

// --- Exact worst order ------------------------------------------------------

struct WorstOrderOutcome {
  std::size_t value = 0;
  /// Item indices (into the instance) of the first ordering, in depth-first
  /// order over distinct values, that attains `value`.
  std::vector<std::size_t> witness;
  std::uint64_t leaves = 0;  ///< complete orderings evaluated
};

/// Number of distinct orderings of the multiset (multinomial coefficient).
BigInt distinct_orderings(const CountingInstance& inst);

/// Minimum covered count over all distinct orderings, with prefix pruning.
WorstOrderOutcome worst_order_serial(const CountingInstance& inst);
WorstOrderOutcome worst_order(const CountingInstance& inst, int jobs);

/// Same minimum by dynamic programming over (remaining counts per distinct
/// small value, fill of the open bin). Classes j >= 2 add floor(n_j / j) in
/// any order, so only the Next-Fit class needs the search. Suited to
/// multisets with few distinct sizes and many copies. Throws BudgetExceeded
/// when the state space exceeds `state_budget`.
WorstOrderOutcome worst_order_by_counts(const CountingInstance& inst, std::uint64_t state_budget = 1u << 25);

}  // namespace bincover
