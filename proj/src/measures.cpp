#include <bincover/kernels.hpp>
#include <bincover/measures.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bincover {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.mapping.resize(n);
  std::iota(p.mapping.begin(), p.mapping.end(), std::size_t{0});
  return p;
}

bool Permutation::valid() const {
  std::vector<bool> seen(mapping.size(), false);
  for (const auto i : mapping) {
    if (i >= mapping.size() || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

Sequence Permutation::apply(const Sequence& seq) const {
  if (mapping.size() != seq.size() || !valid())
    throw Error(ErrorCode::InvalidArgument, "permutation does not match the sequence");
  Sequence out;
  out.provenance = seq.provenance;
  out.items.reserve(seq.size());
  for (const auto i : mapping) out.items.push_back(seq.items[i]);
  return out;
}

namespace {

Sequence reorder(const Sequence& seq, std::span<const std::size_t> order) {
  Sequence out;
  out.provenance = seq.provenance;
  out.items.reserve(order.size());
  for (const auto i : order) out.items.push_back(seq.items[i]);
  return out;
}

}  // namespace

WorstOrderResult worst_order_value(const AlgorithmId& alg, const Sequence& multiset,
                                   const WorstOrderOptions& options) {
  WorstOrderResult result;
  if (multiset.size() == 0) {
    result.orderings = 1;
    result.method = "enumeration";
    return result;
  }
  const CountingInstance inst = make_counting_instance(alg, multiset.items);
  if (options.exact) {
    const BigInt count = distinct_orderings(inst);
    result.exact = true;
    result.orderings = count.fits_ulong_p() ? count.get_ui() : UINT64_MAX;
    if (count <= BigInt(std::to_string(options.budget))) {
      const WorstOrderOutcome outcome = options.jobs > 1 ? worst_order(inst, options.jobs) : worst_order_serial(inst);
      result.value = outcome.value;
      result.witness = reorder(multiset, outcome.witness);
      result.method = "enumeration";
      return result;
    }
    try {
      const WorstOrderOutcome outcome = worst_order_by_counts(inst);
      result.value = outcome.value;
      result.witness = reorder(multiset, outcome.witness);
      result.method = "count-dp";
      return result;
    } catch (const Error&) {
      throw Error(ErrorCode::BudgetExceeded, "multiset has " + count.get_str() + " distinct orderings, budget is " +
                                                 std::to_string(options.budget) + ", and the count DP does not fit");
    }
  }
  if (options.samples == 0) throw Error(ErrorCode::InvalidArgument, "sampled worst order needs samples >= 1");
  const auto counts = shuffled_counts(inst, options.samples, options.seed, options.jobs);
  const auto best = std::min_element(counts.begin(), counts.end());
  const auto sample = static_cast<std::size_t>(best - counts.begin());
  const auto order = shuffled_order(multiset.size(), options.seed, sample);
  result.value = static_cast<std::size_t>(*best);
  result.exact = false;
  result.method = "sampled";
  result.witness = reorder(multiset, order);
  result.orderings = options.samples;
  return result;
}

SizeProfile size_profile(const Sequence& seq, const IntervalSpec& spec) {
  const Rational medium(1, spec.p() + 1);
  const Rational large(1, spec.p());
  SizeProfile profile;
  for (const auto& item : seq.items) {
    const Rational& x = item.value();
    if (!spec.contains(x)) throw Error(ErrorCode::OutOfInterval, to_string(item) + " is outside " + spec.to_string());
    if (x >= large) {
      ++profile.large;
    } else if (x >= medium) {
      ++profile.medium;
    } else {
      ++profile.small;
    }
  }
  return profile;
}

RatioEstimate summarize(std::span<const std::uint64_t> values, std::uint64_t seed, std::optional<std::size_t> opt) {
  RatioEstimate est;
  est.samples = values.size();
  est.seed = seed;
  if (values.empty()) return est;
  // Welford.
  double mean = 0;
  double m2 = 0;
  std::size_t n = 0;
  for (const auto v : values) {
    ++n;
    const double x = static_cast<double>(v);
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  est.point = mean;
  est.stddev = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
  const double half = 1.96 * est.stddev / std::sqrt(static_cast<double>(n));
  est.ci_low = mean - half;
  est.ci_high = mean + half;
  if (opt) {
    est.opt = opt;
    if (*opt > 0) {
      const double o = static_cast<double>(*opt);
      est.ratio = mean / o;
      est.ratio_ci_low = est.ci_low / o;
      est.ratio_ci_high = est.ci_high / o;
    } else if (mean == 0) {
      est.ratio = est.ratio_ci_low = est.ratio_ci_high = 1.0;
    }
  }
  return est;
}

RatioEstimate random_order_estimate(const AlgorithmId& alg, const Sequence& multiset, std::size_t samples,
                                    std::uint64_t seed, std::optional<std::size_t> opt, int jobs) {
  if (samples < 100) throw Error(ErrorCode::InvalidArgument, "random-order estimates need at least 100 samples");
  const CountingInstance inst = make_counting_instance(alg, multiset.items);
  const auto counts = shuffled_counts(inst, samples, seed, jobs);
  return summarize(counts, seed, opt);
}

Rational exact_expected_dnf_two_size(std::size_t large_count, std::size_t small_count) {
  // Per state: number of prefixes with i larges and j smalls ending in that
  // state, and the sum of their covered counts.
  enum { N = 0, L = 1, S = 2 };
  struct Cell {
    BigInt count[3];
    BigInt total[3];
  };
  const std::size_t width = small_count + 1;
  std::vector<Cell> cur(width);
  std::vector<Cell> next(width);
  cur[0].count[N] = 1;

  auto move = [](Cell& to, int state, const BigInt& count, const BigInt& total, bool closes) {
    if (count == 0) return;
    to.count[state] += count;
    to.total[state] += total;
    if (closes) to.total[state] += count;
  };

  for (std::size_t i = 0;; ++i) {
    const bool more_large = i < large_count;
    if (more_large) {
      for (auto& c : next)
        for (int st = 0; st < 3; ++st) c.count[st] = 0, c.total[st] = 0;
    }
    for (std::size_t j = 0; j < width; ++j) {
      const Cell& c = cur[j];
      if (j + 1 < width) {
        Cell& to = cur[j + 1];
        move(to, S, c.count[N], c.total[N], false);
        move(to, N, c.count[L], c.total[L], true);
        move(to, S, c.count[S], c.total[S], false);
      }
      if (more_large) {
        Cell& to = next[j];
        move(to, L, c.count[N], c.total[N], false);
        move(to, N, c.count[L], c.total[L], true);
        move(to, N, c.count[S], c.total[S], true);
      }
    }
    if (!more_large) break;
    std::swap(cur, next);
  }

  const Cell& end = cur[small_count];
  BigInt total = end.total[N] + end.total[L] + end.total[S];
  BigInt orderings;
  mpz_bin_uiui(orderings.get_mpz_t(), large_count + small_count, large_count);
  Rational r(total, orderings);
  r.canonicalize();
  return r;
}

MinMinResult minmin_ratio_dnf(const IntervalSpec& spec) {
  if (spec.is_unrestricted()) return {Rational(1), true, true};
  const int p = spec.p();
  if (spec.a() >= Rational(1, p)) return {Rational(1), false, false};
  if (p >= 2 && spec.b() == Rational(1, p - 1))
    throw Error(ErrorCode::BoundaryB, "the min/min formula does not apply at b = 1/(p-1) = " + format_rational(spec.b()));
  const Rational& b = spec.b();
  const Rational first = (1 + Rational(1, p)) / (1 + b);
  const Rational second = p * b / (1 + b);
  Rational r = first > second ? first : second;
  r.canonicalize();
  return {r, true, false};
}

MinMinResult minmin_ratio_dhk(const IntervalSpec& spec) {
  return {Rational(1), spec.is_unrestricted() || spec.a() < Rational(1, spec.p()), spec.is_unrestricted()};
}

std::string_view to_string(BoundKind k) { return k == BoundKind::Exact ? "exact" : "upper-bound"; }

const TableEntry& CompetitiveTable::entry(const std::string& algorithm) const {
  for (const auto& e : entries)
    if (e.algorithm == algorithm) return e;
  throw Error(ErrorCode::InvalidArgument, "no table entry for " + algorithm);
}

CompetitiveTable competitive_table(const IntervalSpec& spec) {
  CompetitiveTable table;
  table.border_case = spec.border_case();
  table.p = spec.p();
  const long p = spec.p();
  auto ratio = [](long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  switch (table.border_case) {
    case BorderCase::None:
      throw Error(ErrorCode::NoBorder, "interval " + spec.to_string() + " contains no border 1/l");
    case BorderCase::Many:
      throw Error(ErrorCode::InvalidArgument, "interval " + spec.to_string() + " contains more than two borders");
    case BorderCase::One:
      table.entries.push_back({"DNF", ratio(p, p + 1), BoundKind::Exact, 1});
      table.entries.push_back({"DHk", ratio(p * p + 1, p * (p + 1)), BoundKind::Exact, static_cast<int>(p)});
      break;
    case BorderCase::Two: {
      const Rational split = make_rational(p + 2, p * (p + 1));
      table.b_above_split = spec.b() > split;
      const long den = p * (p + 1) * (p + 2);
      if (!table.b_above_split) {
        table.entries.push_back({"DNF", ratio(p + 1, p + 2), BoundKind::UpperBound, 1});
        table.entries.push_back({"DHk", ratio(p * p * p + 2 * p * p + p + 2, den), BoundKind::Exact, static_cast<int>(p + 1)});
      } else {
        table.entries.push_back({"DNF", ratio(p * p + p, p * p + 2 * p + 2), BoundKind::UpperBound, 1});
        table.entries.push_back({"DHk", ratio(p * p * p + 2 * p * p + 2, den), BoundKind::Exact, static_cast<int>(p + 1)});
      }
      break;
    }
  }
  table.dhk_better = table.entry("DHk").ratio > table.entry("DNF").ratio;
  return table;
}

}  // namespace bincover
