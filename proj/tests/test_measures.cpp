#include <bincover/kernels.hpp>
#include <bincover/markov.hpp>
#include <bincover/measures.hpp>

#include "support/random.hpp"
#include "support/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace bincover;

TEST_CASE("permutations") {
  const auto seq = make_sequence({{1, 2}, {1, 3}, {1, 4}});
  CHECK(Permutation::identity(3).apply(seq).items == seq.items);
  const Permutation p{{2, 0, 1}};
  CHECK(p.valid());
  CHECK(p.apply(seq).items[0].value() == Rational(1, 4));
  CHECK_FALSE(Permutation{{0, 0, 1}}.valid());
  const Permutation short_perm{{0, 1}};
  CHECK_THROWS_AS(short_perm.apply(seq), Error);
}

TEST_CASE("worst order values") {
  const auto seq = make_sequence({{1, 2}, {1, 2}, {1, 4}, {1, 4}, {1, 4}, {1, 4}});
  const auto dnf = worst_order_value(AlgorithmId::dnf(), seq);
  CHECK(dnf.value == 1);
  CHECK(dnf.exact);
  CHECK(dnf.orderings == 15);
  CHECK(dnf_run(dnf.witness).covered() == 1);
  CHECK(worst_order_value(AlgorithmId::dhk(2), seq).value == 2);
  CHECK(worst_order_value(AlgorithmId::dnf(), make_sequence({{1, 2}, {1, 2}})).value == 1);
  CHECK(worst_order_value(AlgorithmId::dnf(), Sequence{}).value == 0);

  WorstOrderOptions tight;
  tight.budget = 10;
  const auto dp = worst_order_value(AlgorithmId::dnf(), seq, tight);
  CHECK(dp.method == "count-dp");
  CHECK(dp.value == 1);
  CHECK(dnf_run(dp.witness).covered() == 1);
  Sequence wide;
  for (long d = 3; d <= 17; ++d) wide.items.emplace_back(Rational(1, d));
  CHECK_THROWS_AS(worst_order_value(AlgorithmId::dnf(), wide, tight), Error);

  WorstOrderOptions sampled;
  sampled.exact = false;
  sampled.samples = 200;
  sampled.seed = 5;
  const auto s = worst_order_value(AlgorithmId::dnf(), seq, sampled);
  CHECK_FALSE(s.exact);
  CHECK(s.value >= dnf.value);
  CHECK(dnf_run(s.witness).covered() == s.value);
}

TEST_CASE("rwor worst-order ratio") {
  for (std::int64_t n : {1, 2, 3}) {
    const auto f = gen_rwor(n);
    CHECK(worst_order_value(AlgorithmId::dnf(), f.seq).value == static_cast<std::size_t>(2 * n));
    CHECK(worst_order_value(AlgorithmId::dhk(2), f.seq).value == static_cast<std::size_t>(3 * n - 1));
  }
}

TEST_CASE("count DP agrees with enumeration") {
  const std::vector<Rational> palette = {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4),
                                         Rational(1, 6), Rational(5, 12)};
  Rng rng(404);
  for (int rep = 0; rep < 300; ++rep) {
    const auto seq = gen::sequence(gen::from_palette(rng, rng.below(9), palette));
    for (const auto alg : {AlgorithmId::dnf(), AlgorithmId::dhk(2), AlgorithmId::dhk(3)}) {
      const auto inst = make_counting_instance(alg, seq.items);
      const auto a = worst_order_serial(inst);
      const auto b = worst_order_by_counts(inst);
      CHECK(a.value == b.value);
      CHECK(count_covered(inst, b.witness) == b.value);
    }
  }
}

TEST_CASE("rwor worst orders at scale") {
  const auto f = gen_rwor(20);
  const auto dnf = worst_order_value(AlgorithmId::dnf(), f.seq);
  const auto dh2 = worst_order_value(AlgorithmId::dhk(2), f.seq);
  CHECK(dnf.method == "count-dp");
  CHECK(dnf.value == 40);
  CHECK(dh2.value == 59);
}

TEST_CASE("worst order comparability on small multisets") {
  const std::vector<Rational> palette = {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6)};
  Rng rng(8);
  for (int rep = 0; rep < 200; ++rep) {
    const auto seq = gen::sequence(gen::from_palette(rng, 1 + rng.below(8), palette));
    const auto d = static_cast<long>(worst_order_value(AlgorithmId::dnf(), seq).value);
    for (int k : {2, 3}) {
      const auto h = static_cast<long>(worst_order_value(AlgorithmId::dhk(k), seq).value);
      CHECK(h >= d - (k - 1));
      CHECK(2 * h <= 3 * d + 2);
    }
  }
}

TEST_CASE("size profile") {
  const IntervalSpec spec(Rational(1, 5), Rational(1));
  CHECK(size_profile(Sequence{}, spec) == SizeProfile{});
  CHECK(size_profile(make_sequence({{1, 4}, {2, 5}, {1, 2}, {3, 4}}), spec) == SizeProfile{1, 1, 2});
  CHECK_THROWS_AS(size_profile(make_sequence({{1, 10}}), spec), Error);
}

TEST_CASE("summaries") {
  const std::vector<std::uint64_t> v = {1, 2, 3, 4};
  const auto s = summarize(v, 9, 4);
  CHECK(s.point == doctest::Approx(2.5));
  CHECK(s.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(s.ci_low < 2.5);
  CHECK(*s.ratio == doctest::Approx(0.625));
  CHECK(s.seed == 9);
}

TEST_CASE("random order estimate") {
  const auto seq = make_sequence({{1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 3}, {2, 3}, {1, 5}, {4, 5}});
  const auto exact = ref::permutation_average(gen::values(seq), [](const ref::Items& o) { return ref::next_fit(o); });
  const auto est = random_order_estimate(AlgorithmId::dnf(), seq, 20000, 17);
  const double se = est.stddev / std::sqrt(20000.0);
  CHECK(std::fabs(est.point - exact.get_d()) <= 4 * se);
  CHECK_THROWS_AS(random_order_estimate(AlgorithmId::dnf(), seq, 50, 1), Error);

  // Large items only: DH2 packs pairs whatever the order.
  const auto pairs = make_sequence({{1, 2}, {3, 5}, {2, 3}, {3, 4}, {4, 5}});
  const auto dh = random_order_estimate(AlgorithmId::dhk(2), pairs, 200, 3);
  CHECK(dh.stddev == 0);
  CHECK(dh.point == 2);
}

TEST_CASE("random order mean on two sizes approaches 2/5 per item") {
  const auto seq = gen_two_size_counts(500, 500, Rational(1, 2000), 1);
  const auto est = random_order_estimate(AlgorithmId::dnf(), seq, 10000, 2);
  const double se = est.stddev / std::sqrt(10000.0);
  // Finite-n expectation from the exact DP; 2/5 is its limit.
  const double exact = exact_expected_dnf_two_size(500, 500).get_d();
  CHECK(std::fabs(est.point - exact) <= 4 * se);
  CHECK(std::fabs(exact / 1000 - 0.4) < 0.01);
}

TEST_CASE("exact two-size expectation") {
  CHECK(exact_expected_dnf_two_size(0, 0) == 0);
  CHECK(exact_expected_dnf_two_size(1, 0) == 0);
  CHECK(exact_expected_dnf_two_size(2, 0) == 1);
  CHECK(exact_expected_dnf_two_size(0, 5) == 0);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t l = 0; l <= n; ++l) {
      const std::size_t s = n - l;
      const auto seq = gen_two_size_counts(l, s, Rational(1, 2 * static_cast<long>(n) + 1), 0);
      const auto avg = ref::permutation_average(gen::values(seq), [](const ref::Items& o) { return ref::next_fit(o); });
      CHECK(exact_expected_dnf_two_size(l, s) == avg);
    }
  }
  const double big = exact_expected_dnf_two_size(2000, 2000).get_d();
  CHECK(std::fabs(big / 4000 - 0.4) < 0.01);
}

TEST_CASE("markov chain") {
  const auto pi = markov_stationary(MarkovChain::dnf_two_size());
  CHECK(pi == std::vector<Rational>{Rational(2, 5), Rational(1, 5), Rational(2, 5)});

  MarkovChain single{{"A"}, {{Rational(1)}}};
  CHECK(markov_stationary(single) == std::vector<Rational>{Rational(1)});

  MarkovChain sym{{"A", "B"}, {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}};
  CHECK(markov_stationary(sym) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

  MarkovChain split{{"A", "B"}, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  CHECK_FALSE(split.irreducible());
  CHECK_THROWS_AS(markov_stationary(split), Error);

  MarkovChain bad{{"A", "B"}, {{Rational(1, 2), Rational(1, 3)}, {Rational(1, 2), Rational(1, 2)}}};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("min/min ratios") {
  CHECK(minmin_ratio_dnf(IntervalSpec(Rational(0), Rational(3, 5))).ratio == Rational(15, 16));
  CHECK(minmin_ratio_dnf(IntervalSpec(Rational(1, 4), Rational(3, 5))).ratio == Rational(15, 16));
  const auto unrestricted = minmin_ratio_dnf(IntervalSpec(Rational(0), Rational(1)));
  CHECK(unrestricted.ratio == 1);
  CHECK(unrestricted.unrestricted);
  CHECK(minmin_ratio_dhk(IntervalSpec(Rational(0), Rational(1))).ratio == 1);
  const auto none = minmin_ratio_dnf(IntervalSpec(Rational(3, 5), Rational(4, 5)));
  CHECK(none.ratio == 1);
  CHECK_FALSE(none.has_border);
  try {
    minmin_ratio_dnf(IntervalSpec(Rational(1, 10), Rational(1, 2)));
    FAIL("expected BoundaryB");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryB);
  }
  CHECK_THROWS_AS(minmin_ratio_dnf(IntervalSpec(Rational(1, 10), Rational(1))), Error);
  // p = 3, b = 2/5: max{(4/3)/(7/5), (6/5)/(7/5)} = max{20/21, 6/7}.
  CHECK(minmin_ratio_dnf(IntervalSpec(Rational(0), Rational(2, 5))).ratio == Rational(20, 21));
}

TEST_CASE("min/min family matches the closed form in the limit") {
  // DNF covers one bin per 1 + b - (p+1)eps of volume; OPT covers a bin per
  // p+1 items of 1/p - eps.
  const Rational b(3, 5);
  const int p = 2;
  const Rational eps(1, 100000);
  const auto worst = gen_minmin_worst(p, b, eps, 4);
  const auto opt = gen_minmin_opt_worst(p, eps, 4);
  const Rational dnf_per_volume = Rational(4) / volume(worst.seq);
  const Rational opt_per_volume = Rational(4) / volume(opt.seq);
  const double ratio = Rational(dnf_per_volume / opt_per_volume).get_d();
  CHECK(ratio == doctest::Approx(Rational(15, 16).get_d()).epsilon(1e-3));
}

TEST_CASE("competitive table") {
  const auto one = competitive_table(IntervalSpec(Rational(1, 3), Rational(1)));
  CHECK(one.entry("DNF").ratio == Rational(2, 3));
  CHECK(one.entry("DHk").ratio == Rational(5, 6));
  CHECK(one.entry("DHk").min_k == 2);
  CHECK(one.dhk_better);

  const auto low = competitive_table(IntervalSpec(Rational(1, 4), Rational(2, 3)));
  CHECK(low.border_case == BorderCase::Two);
  CHECK_FALSE(low.b_above_split);
  CHECK(low.entry("DNF").ratio == Rational(3, 4));
  CHECK(low.entry("DNF").kind == BoundKind::UpperBound);
  CHECK(low.entry("DHk").ratio == Rational(5, 6));

  const auto high = competitive_table(IntervalSpec(Rational(1, 4), Rational(1)));
  CHECK(high.b_above_split);
  CHECK(high.entry("DNF").ratio == Rational(3, 5));
  CHECK(high.entry("DHk").ratio == Rational(3, 4));
  CHECK(high.dhk_better);

  CHECK_THROWS_AS(competitive_table(IntervalSpec(Rational(3, 5), Rational(1))), Error);
  CHECK_THROWS_AS(competitive_table(IntervalSpec(Rational(0), Rational(1))), Error);

  for (int p = 2; p <= 12; ++p) {
    const auto t1 = competitive_table(IntervalSpec(Rational(1, p + 1), Rational(1, p - 1)));
    CHECK(t1.dhk_better);
    const auto t2 = competitive_table(IntervalSpec(Rational(1, p + 2), Rational(1, p - 1)));
    CHECK(t2.dhk_better);
  }
}
