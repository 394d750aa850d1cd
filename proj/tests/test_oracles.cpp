#include <bincover/algorithms.hpp>
#include <bincover/generators.hpp>
#include <bincover/oracles.hpp>

#include "support/random.hpp"
#include "support/reference.hpp"

#include <doctest.h>

using namespace bincover;

TEST_CASE("opt_exact small cases") {
  CHECK(opt_exact(Sequence{}) == 0);
  CHECK(opt_exact(make_sequence({{1, 2}, {3, 8}, {5, 8}, {1, 2}, {3, 8}, {5, 8}})) == 3);
  CHECK(opt_exact(make_sequence({{9, 10}, {9, 10}})) == 1);
  CHECK(opt_exact(make_sequence({{1, 3}, {1, 3}, {1, 3}})) == 1);
}

TEST_CASE("opt_exact equals set partition enumeration") {
  Rng rng(1001);
  for (int rep = 0; rep < 60; ++rep) {
    const auto v = gen::items(rng, 1 + rng.below(9), 12);
    CHECK(opt_exact(gen::sequence(v)) == ref::brute_opt(v));
  }
}

TEST_CASE("opt_exact handles sixteen items") {
  Rng rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    const auto seq = gen::sequence(gen::items(rng, 16, 20));
    const auto opt = opt_exact(seq);
    CHECK(opt <= opt_volume_bound(seq));
  }
}

TEST_CASE("opt_exact budget") {
  Rng rng(4);
  const auto seq = gen::sequence(gen::items(rng, 40, 97));
  CHECK_THROWS_AS(opt_exact(seq, OptExactOptions{50}), Error);
}

TEST_CASE("opt_two_size") {
  const Rational eps(1, 100);
  CHECK(opt_two_size(3, 1, eps) == 2);
  CHECK(opt_two_size(1, 3, eps) == 1);
  CHECK(opt_two_size(2, 2, eps) == 2);
  CHECK_THROWS_AS(opt_two_size(60, 60, eps), Error);
  for (std::size_t n = 1; n <= 12; ++n) {
    const Rational e(1, static_cast<long>(2 * n));
    for (std::size_t l = 0; l <= n; ++l) {
      const auto seq = gen_two_size_counts(l, n - l, e, 5);
      CHECK(opt_two_size(l, n - l, e) == opt_exact(seq));
    }
  }
}

TEST_CASE("certificates") {
  const auto seq = make_sequence({{1, 2}, {3, 8}, {5, 8}, {1, 2}, {3, 8}, {5, 8}});
  PartitionCertificate cert;
  cert.groups = {{ItemSize(3, 8), ItemSize(5, 8)}, {ItemSize(3, 8), ItemSize(5, 8)}, {ItemSize(1, 2), ItemSize(1, 2)}};
  cert.claimed_covered = 3;
  CHECK(verify_certificate(seq, cert) == 3);

  PartitionCertificate undersized;
  undersized.groups = {{ItemSize(1, 4), ItemSize(1, 4)}};
  CHECK(verify_certificate(make_sequence({{1, 4}, {1, 4}}), undersized) == 0);

  PartitionCertificate stolen;
  stolen.groups = {{ItemSize(1, 2), ItemSize(1, 2), ItemSize(1, 2)}};
  CHECK_THROWS_AS(verify_certificate(seq, stolen), Error);
}

TEST_CASE("volume bound") {
  CHECK(opt_volume_bound(make_sequence({{1, 2}, {1, 2}, {1, 2}})) == 1);
  CHECK(opt_volume_bound(make_sequence({{9, 10}})) == 0);
}

TEST_CASE("online algorithms reach half the optimum up to open bins") {
  Rng rng(77);
  for (int rep = 0; rep < 300; ++rep) {
    const auto v = gen::items(rng, 1 + rng.below(10), 10);
    const auto seq = gen::sequence(v);
    const auto opt = static_cast<long>(opt_exact(seq));
    CHECK(2 * static_cast<long>(dnf_run(seq).covered()) >= opt - 1);
    for (int k : {2, 3}) CHECK(2 * static_cast<long>(dhk_run(seq, HarmonicConfig(k)).covered()) >= opt - k);
  }
}
