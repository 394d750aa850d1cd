#include <bincover/generators.hpp>
#include <bincover/kernels.hpp>
#include <bincover/rng.hpp>

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <numeric>

namespace bincover {

std::optional<std::pair<std::vector<std::int64_t>, std::int64_t>>
scale_to_integers(std::span<const ItemSize> items) {
  BigInt unit = 1;
  for (const auto& item : items) mpz_lcm(unit.get_mpz_t(), unit.get_mpz_t(), item.value().get_den_mpz_t());
  // Room for the sum of every item plus a few units of slack.
  const BigInt headroom = unit * BigInt(static_cast<unsigned long>(items.size() + 4));
  if (!headroom.fits_slong_p() || headroom > BigInt(1) << 62) return std::nullopt;

  std::vector<std::int64_t> sizes;
  sizes.reserve(items.size());
  for (const auto& item : items) {
    const BigInt num = item.value().get_num() * (unit / item.value().get_den());
    sizes.push_back(num.get_si());
  }
  return std::make_pair(std::move(sizes), static_cast<std::int64_t>(unit.get_si()));
}

CountingInstance make_counting_instance(const AlgorithmId& alg, std::span<const ItemSize> items) {
  auto scaled = scale_to_integers(items);
  if (!scaled) throw Error(ErrorCode::InstanceTooLarge, "common denominator exceeds the 64-bit exact kernels");
  CountingInstance inst;
  inst.sizes = std::move(scaled->first);
  inst.unit = scaled->second;
  inst.k = alg.classes();
  inst.max_open = alg.max_open();
  const HarmonicConfig cfg(inst.k);
  inst.classes.reserve(items.size());
  for (const auto& item : items) inst.classes.push_back(harmonic_interval(item, cfg).j);
  return inst;
}

std::size_t count_covered(const CountingInstance& inst) {
  CoverCounter<std::int64_t> counter(inst.k, inst.unit);
  for (std::size_t i = 0; i < inst.sizes.size(); ++i) counter.push(inst.sizes[i], inst.classes[i]);
  return counter.covered();
}

std::size_t count_covered(const CountingInstance& inst, std::span<const std::size_t> order) {
  CoverCounter<std::int64_t> counter(inst.k, inst.unit);
  for (const auto i : order) counter.push(inst.sizes[i], inst.classes[i]);
  return counter.covered();
}

std::size_t count_covered(const AlgorithmId& alg, std::span<const double> items) {
  const int k = alg.classes();
  CoverCounter<double> counter(k, 1.0);
  for (const double x : items) counter.push(x, harmonic_class(x, k));
  return counter.covered();
}

// --- uniform Monte Carlo --------------------------------------------------------

namespace {

std::uint64_t uniform_trial(const AlgorithmId& alg, std::size_t n, std::uint64_t trial_seed) {
  // Same draw stream as gen_uniform(n, trial_seed), consumed on the fly.
  const int k = alg.classes();
  Rng rng(trial_seed);
  CoverCounter<double> counter(k, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform_open01();
    counter.push(x, harmonic_class(x, k));
  }
  return counter.covered();
}

}  // namespace

std::vector<std::uint64_t> uniform_trials_serial(const AlgorithmId& alg, std::size_t n,
                                                 std::size_t trials, std::uint64_t seed) {
  std::vector<std::uint64_t> out(trials);
  for (std::size_t t = 0; t < trials; ++t) out[t] = uniform_trial(alg, n, derive_seed(seed, t));
  return out;
}

std::vector<std::uint64_t> uniform_trials(const AlgorithmId& alg, std::size_t n,
                                          std::size_t trials, std::uint64_t seed, int jobs) {
  std::vector<std::uint64_t> out(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (std::int64_t t = 0; t < count; ++t) {
    out[static_cast<std::size_t>(t)] = uniform_trial(alg, n, derive_seed(seed, static_cast<std::uint64_t>(t)));
  }
  return out;
}

// --- random orderings -----------------------------------------------------------

std::vector<std::size_t> shuffled_order(std::size_t n, std::uint64_t seed, std::size_t sample) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(seed, sample));
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

std::vector<std::uint64_t> shuffled_counts_serial(const CountingInstance& inst,
                                                  std::size_t samples, std::uint64_t seed) {
  std::vector<std::uint64_t> out(samples);
  for (std::size_t s = 0; s < samples; ++s)
    out[s] = count_covered(inst, shuffled_order(inst.sizes.size(), seed, s));
  return out;
}

std::vector<std::uint64_t> shuffled_counts(const CountingInstance& inst, std::size_t samples,
                                           std::uint64_t seed, int jobs) {
  std::vector<std::uint64_t> out(samples);
  const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(static) num_threads(std::max(1, jobs))
  for (std::int64_t s = 0; s < count; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    out[idx] = count_covered(inst, shuffled_order(inst.sizes.size(), seed, idx));
  }
  return out;
}

// --- exact worst order --------------------------------------------------------------

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Distinct values with multiplicities; item indices per value so a witness
/// can be mapped back to the instance.
struct DistinctValues {
  std::vector<std::int64_t> size;
  std::vector<int> cls;
  std::vector<std::vector<std::size_t>> members;
};

DistinctValues group_distinct(const CountingInstance& inst) {
  std::vector<std::size_t> idx(inst.sizes.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return inst.sizes[a] < inst.sizes[b]; });
  DistinctValues d;
  for (const auto i : idx) {
    if (d.size.empty() || d.size.back() != inst.sizes[i]) {
      d.size.push_back(inst.sizes[i]);
      d.cls.push_back(inst.classes[i]);
      d.members.emplace_back();
    }
    d.members.back().push_back(i);
  }
  return d;
}

/// Depth-first search over distinct orderings. A prefix is cut when even the
/// cheapest completion cannot beat the bound: every bin closed later holds
/// less than 2 and each of at most `max_open` bins left open holds less than 1,
/// so `open + remaining < 2 * more + max_open`.
class WorstOrderSearch {
public:
  WorstOrderSearch(const CountingInstance& inst, const DistinctValues& values)
      : inst_(inst), values_(values), counts_(values.size.size()) {
    for (std::size_t v = 0; v < counts_.size(); ++v) counts_[v] = values.members[v].size();
    for (const auto s : inst.sizes) remaining_ += s;
  }

  /// Restricts the first position to distinct value `first` (parallel split).
  void run(std::optional<std::size_t> first, std::atomic<std::size_t>* shared_best) {
    shared_ = shared_best;
    CoverCounter<std::int64_t> counter(inst_.k, inst_.unit);
    if (first) {
      if (!take(*first, counter)) return;
      dfs(counter);
    } else {
      dfs(counter);
    }
  }

  std::size_t best() const { return best_; }
  const std::vector<std::size_t>& best_path() const { return best_path_; }
  std::uint64_t leaves() const { return leaves_; }

private:
  std::size_t lower_bound(const CoverCounter<std::int64_t>& c) const {
    const std::int64_t slack = c.open_volume() + remaining_ - inst_.max_open * inst_.unit;
    if (slack < 0) return c.covered();
    return c.covered() + static_cast<std::size_t>(slack / (2 * inst_.unit)) + 1;
  }

  bool pruned(const CoverCounter<std::int64_t>& c) const {
    const std::size_t lb = lower_bound(c);
    if (lb >= best_) return true;
    // Strict against other workers' bounds, so the first minimising ordering
    // in depth-first order survives and the witness matches the serial run.
    return shared_ != nullptr && lb > shared_->load(std::memory_order_relaxed);
  }

  bool take(std::size_t v, CoverCounter<std::int64_t>& counter) {
    if (counts_[v] == 0) return false;
    --counts_[v];
    remaining_ -= values_.size[v];
    path_.push_back(v);
    counter.push(values_.size[v], values_.cls[v]);
    return true;
  }

  void give_back(std::size_t v) {
    ++counts_[v];
    remaining_ += values_.size[v];
    path_.pop_back();
  }

  void dfs(const CoverCounter<std::int64_t>& counter) {
    if (path_.size() == inst_.sizes.size()) {
      ++leaves_;
      if (counter.covered() < best_) {
        best_ = counter.covered();
        best_path_ = path_;
        if (shared_ != nullptr) publish(best_);
      }
      return;
    }
    if (pruned(counter)) return;
    for (std::size_t v = 0; v < counts_.size(); ++v) {
      if (counts_[v] == 0) continue;
      CoverCounter<std::int64_t> next = counter;
      take(v, next);
      dfs(next);
      give_back(v);
    }
  }

  void publish(std::size_t value) {
    std::size_t cur = shared_->load(std::memory_order_relaxed);
    while (value < cur && !shared_->compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
    }
  }

  const CountingInstance& inst_;
  const DistinctValues& values_;
  std::vector<std::size_t> counts_;
  std::int64_t remaining_ = 0;
  std::vector<std::size_t> path_;
  std::size_t best_ = kNone;
  std::vector<std::size_t> best_path_;
  std::uint64_t leaves_ = 0;
  std::atomic<std::size_t>* shared_ = nullptr;
};

std::vector<std::size_t> to_item_indices(const DistinctValues& values, const std::vector<std::size_t>& path) {
  std::vector<std::size_t> used(values.size.size(), 0);
  std::vector<std::size_t> out;
  out.reserve(path.size());
  for (const auto v : path) out.push_back(values.members[v][used[v]++]);
  return out;
}

}  // namespace

BigInt distinct_orderings(const CountingInstance& inst) {
  const DistinctValues values = group_distinct(inst);
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), inst.sizes.size());
  for (const auto& m : values.members) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), m.size());
    result /= f;
  }
  return result;
}

WorstOrderOutcome worst_order_serial(const CountingInstance& inst) {
  const DistinctValues values = group_distinct(inst);
  WorstOrderSearch search(inst, values);
  search.run(std::nullopt, nullptr);
  WorstOrderOutcome out;
  out.value = inst.sizes.empty() ? 0 : search.best();
  out.witness = to_item_indices(values, search.best_path());
  out.leaves = inst.sizes.empty() ? 1 : search.leaves();
  return out;
}

WorstOrderOutcome worst_order(const CountingInstance& inst, int jobs) {
  if (inst.sizes.empty()) return worst_order_serial(inst);
  const DistinctValues values = group_distinct(inst);
  const std::size_t branches = values.size.size();
  std::atomic<std::size_t> shared_best{kNone};
  std::vector<std::size_t> branch_best(branches, kNone);
  std::vector<std::vector<std::size_t>> branch_path(branches);
  std::vector<std::uint64_t> branch_leaves(branches, 0);

  const auto count = static_cast<std::int64_t>(branches);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (std::int64_t b = 0; b < count; ++b) {
    const auto idx = static_cast<std::size_t>(b);
    WorstOrderSearch search(inst, values);
    search.run(idx, &shared_best);
    branch_best[idx] = search.best();
    branch_path[idx] = search.best_path();
    branch_leaves[idx] = search.leaves();
  }

  WorstOrderOutcome out;
  out.value = kNone;
  std::size_t chosen = 0;
  for (std::size_t b = 0; b < branches; ++b) {
    out.leaves += branch_leaves[b];
    if (branch_best[b] < out.value) {
      out.value = branch_best[b];
      chosen = b;
    }
  }
  out.witness = to_item_indices(values, branch_path[chosen]);
  return out;
}

}  // namespace bincover

namespace bincover {

WorstOrderOutcome worst_order_by_counts(const CountingInstance& inst, std::uint64_t state_budget) {
  WorstOrderOutcome out;
  std::vector<std::size_t> small;
  std::vector<std::size_t> bordered;
  std::vector<std::size_t> per_class(static_cast<std::size_t>(inst.k) + 1, 0);
  for (std::size_t i = 0; i < inst.sizes.size(); ++i) {
    if (inst.classes[i] == 1) {
      small.push_back(i);
    } else {
      bordered.push_back(i);
      ++per_class[static_cast<std::size_t>(inst.classes[i])];
    }
  }
  for (std::size_t j = 2; j < per_class.size(); ++j) out.value += per_class[j] / j;

  // Distinct small values with their members.
  std::vector<std::int64_t> size;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> sorted = small;
  std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return inst.sizes[a] < inst.sizes[b]; });
  for (const auto i : sorted) {
    if (size.empty() || size.back() != inst.sizes[i]) {
      size.push_back(inst.sizes[i]);
      members.emplace_back();
    }
    members.back().push_back(i);
  }

  // Mixed-radix code of the remaining counts; state = code * unit + fill.
  const std::size_t m = size.size();
  std::vector<std::uint64_t> radix(m + 1, 1);
  for (std::size_t v = 0; v < m; ++v) {
    const std::uint64_t base = members[v].size() + 1;
    if (radix[v] > state_budget / base) throw Error(ErrorCode::BudgetExceeded, "count DP state space too large");
    radix[v + 1] = radix[v] * base;
  }
  const auto unit = static_cast<std::uint64_t>(inst.unit);
  if (radix[m] > state_budget / unit) throw Error(ErrorCode::BudgetExceeded, "count DP state space too large");
  std::vector<std::int32_t> memo(radix[m] * unit, -1);

  std::vector<std::size_t> left(m);
  for (std::size_t v = 0; v < m; ++v) left[v] = members[v].size();
  std::uint64_t code = radix[m] - 1;

  const std::function<std::int32_t(std::int64_t)> solve = [&](std::int64_t fill) -> std::int32_t {
    if (code == 0) return 0;
    std::int32_t& slot = memo[code * unit + static_cast<std::uint64_t>(fill)];
    if (slot >= 0) return slot;
    std::int32_t best = INT32_MAX;
    for (std::size_t v = 0; v < m; ++v) {
      if (left[v] == 0) continue;
      const std::int64_t next = fill + size[v];
      const bool closes = next >= inst.unit;
      --left[v];
      code -= radix[v];
      const std::int32_t got = (closes ? 1 : 0) + solve(closes ? 0 : next);
      code += radix[v];
      ++left[v];
      best = std::min(best, got);
    }
    ++out.leaves;
    return slot = best;
  };
  const std::int32_t small_value = solve(0);
  out.value += static_cast<std::size_t>(small_value);

  // Replay the minimising choices.
  std::vector<std::size_t> taken(m, 0);
  std::int64_t fill = 0;
  while (code != 0) {
    const std::int32_t target = solve(fill);
    for (std::size_t v = 0; v < m; ++v) {
      if (left[v] == 0) continue;
      const std::int64_t next = fill + size[v];
      const bool closes = next >= inst.unit;
      --left[v];
      code -= radix[v];
      if ((closes ? 1 : 0) + solve(closes ? 0 : next) == target) {
        out.witness.push_back(members[v][taken[v]++]);
        fill = closes ? 0 : next;
        break;
      }
      code += radix[v];
      ++left[v];
    }
  }
  out.witness.insert(out.witness.end(), bordered.begin(), bordered.end());
  return out;
}

}  // namespace bincover
