#pragma once

// Slow, independent reference implementations used as test oracles. None of
// this shares code with the library beyond the Rational type.

#include <bincover/analytic.hpp>
#include <bincover/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace ref {

using bincover::Rational;
using Items = std::vector<Rational>;

inline std::size_t next_fit(const Items& items) {
  std::size_t covered = 0;
  Rational level = 0;
  for (const auto& x : items) {
    level += x;
    if (level >= 1) {
      ++covered;
      level = 0;
    }
  }
  return covered;
}

/// Class j in 2..k when 1/j <= x < 1/(j-1), otherwise 1.
inline int harmonic_class(const Rational& x, int k) {
  for (int j = 2; j <= k; ++j)
    if (x >= Rational(1, j) && x < Rational(1, j - 1)) return j;
  return 1;
}

inline std::size_t harmonic(const Items& items, int k) {
  if (k == 1) return next_fit(items);
  std::vector<Items> per_class(static_cast<std::size_t>(k) + 1);
  for (const auto& x : items) per_class[static_cast<std::size_t>(harmonic_class(x, k))].push_back(x);
  std::size_t covered = next_fit(per_class[1]);
  for (int j = 2; j <= k; ++j) covered += per_class[static_cast<std::size_t>(j)].size() / static_cast<std::size_t>(j);
  return covered;
}

/// Tries every way to split the items into groups (items may be left out)
/// and returns the largest number of groups reaching 1.
inline std::size_t brute_opt(const Items& items) {
  std::vector<Rational> groups;
  std::size_t best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == items.size()) {
      std::size_t c = 0;
      for (const auto& g : groups) c += g >= 1 ? 1 : 0;
      best = std::max(best, c);
      return;
    }
    go(i + 1);
    for (auto& g : groups) {
      g += items[i];
      go(i + 1);
      g -= items[i];
    }
    groups.push_back(items[i]);
    go(i + 1);
    groups.pop_back();
  };
  go(0);
  return best;
}

/// Visits all n! orderings (repeated values included).
inline void for_each_permutation(const Items& items, const std::function<void(const Items&)>& visit) {
  std::vector<std::size_t> idx(items.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Items order(items.size());
  do {
    for (std::size_t i = 0; i < idx.size(); ++i) order[i] = items[idx[i]];
    visit(order);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

inline Rational permutation_average(const Items& items, const std::function<std::size_t(const Items&)>& alg) {
  Rational total = 0;
  std::size_t count = 0;
  for_each_permutation(items, [&](const Items& order) {
    total += alg(order);
    ++count;
  });
  Rational avg = total / count;
  avg.canonicalize();
  return avg;
}

inline std::size_t permutation_min(const Items& items, const std::function<std::size_t(const Items&)>& alg) {
  std::size_t best = static_cast<std::size_t>(-1);
  for_each_permutation(items, [&](const Items& order) { best = std::min(best, alg(order)); });
  return items.empty() ? 0 : best;
}

/// 2 * sum_{i=2..k} 1/(i^2 (i-1)).
inline bincover::HighFloat r_large_direct(int k) {
  bincover::HighFloat sum = 0;
  for (int i = 2; i <= k; ++i) sum += bincover::HighFloat(1) / (bincover::HighFloat(i) * i * (i - 1));
  return 2 * sum;
}

}  // namespace ref
