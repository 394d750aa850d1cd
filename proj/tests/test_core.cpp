#include <bincover/core.hpp>
#include <bincover/sequence_io.hpp>

#include "support/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace bincover;

TEST_CASE("item sizes are reduced and strictly inside (0,1)") {
  ItemSize a(2, 4);
  CHECK(a.value() == Rational(1, 2));
  CHECK(a.value().get_den() == 2);
  CHECK_THROWS_AS(ItemSize(1, 1), Error);
  CHECK_THROWS_AS(ItemSize(0, 3), Error);
  CHECK_THROWS_AS(ItemSize(-1, 3), Error);
  CHECK_THROWS_AS(ItemSize(5, 4), Error);
  try {
    ItemSize(3, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidItem);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/8") == Rational(3, 8));
  CHECK(parse_rational("6/16") == Rational(3, 8));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("3.5e-2") == Rational(7, 200));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational(" 2 ") == Rational(2));
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.2.3", "1e", "0x10"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(4, 2)) == "2");
}

TEST_CASE("volume") {
  CHECK(volume(Sequence{}) == 0);
  CHECK(volume(make_sequence({{1, 2}, {1, 4}, {1, 2}, {1, 4}})) == Rational(3, 2));
}

TEST_CASE("volume is order independent") {
  Rng rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    auto v = gen::items(rng, 1 + rng.below(20), 50);
    const Rational forward = volume(gen::sequence(v));
    std::reverse(v.begin(), v.end());
    Rational backward = 0;
    for (const auto& x : v) backward += x;
    CHECK(forward == backward);
  }
}

TEST_CASE("verify_packing") {
  const auto seq = make_sequence({{1, 2}, {1, 2}});
  Packing one;
  one.bins.push_back({{ItemSize(1, 2), ItemSize(1, 2)}, BinStatus::Closed});
  CHECK(verify_packing(seq, one) == 1);

  const auto seq2 = make_sequence({{1, 2}, {1, 4}});
  Packing under;
  under.bins.push_back({{ItemSize(1, 2), ItemSize(1, 4)}, BinStatus::Open});
  CHECK(verify_packing(seq2, under) == 0);

  const auto seq3 = make_sequence({{1, 2}, {1, 2}, {1, 4}});
  Packing split;
  split.bins.push_back({{ItemSize(1, 2)}, BinStatus::Open});
  split.bins.push_back({{ItemSize(1, 2), ItemSize(1, 4)}, BinStatus::Open});
  CHECK(verify_packing(seq3, split) == 0);

  Packing wrong;
  wrong.bins.push_back({{ItemSize(1, 2)}, BinStatus::Open});
  CHECK_THROWS_AS(verify_packing(seq, wrong), Error);
}

TEST_CASE("covered is sum >= 1, not > 1") {
  Bin b{{ItemSize(1, 3), ItemSize(2, 3)}, BinStatus::Closed};
  CHECK(b.covered());
  Packing p{{b}};
  CHECK(p.covered_count() == 1);
}

TEST_CASE("validate_reasonable rejects a bin closed at 3/4") {
  PackingTrace t;
  t.events = {{0, 0, TraceAction::Open}, {0, 0, TraceAction::Place}, {1, 0, TraceAction::Place},
              {0, 0, TraceAction::Close}};
  t.final.bins.push_back({{ItemSize(1, 2), ItemSize(1, 4)}, BinStatus::Closed});
  const auto v = validate_reasonable(t, 1);
  CHECK_FALSE(v.ok);
  CHECK(v.violation == Violation::ClosedUncovered);
  CHECK(v.event_index == 3);
}

TEST_CASE("validate_reasonable rejects a covered bin left open") {
  PackingTrace t;
  t.events = {{0, 0, TraceAction::Open}, {0, 0, TraceAction::Place}, {1, 0, TraceAction::Place},
              {2, 0, TraceAction::Place}};
  t.final.bins.push_back({{ItemSize(1, 2), ItemSize(1, 2), ItemSize(1, 4)}, BinStatus::Open});
  const auto v = validate_reasonable(t, 1);
  CHECK_FALSE(v.ok);
  CHECK(v.violation == Violation::NotClosedWhenCovered);
}

TEST_CASE("validate_reasonable counts open bins") {
  PackingTrace t;
  t.events = {{0, 0, TraceAction::Open}, {0, 0, TraceAction::Place}, {0, 1, TraceAction::Open},
              {1, 1, TraceAction::Place}};
  t.final.bins.push_back({{ItemSize(1, 4)}, BinStatus::Open});
  t.final.bins.push_back({{ItemSize(1, 4)}, BinStatus::Open});
  CHECK(validate_reasonable(t, 2).ok);
  const auto v = validate_reasonable(t, 1);
  CHECK_FALSE(v.ok);
  CHECK(v.violation == Violation::TooManyOpen);
}

TEST_CASE("validate_reasonable throws on malformed traces") {
  PackingTrace t;
  t.events = {{0, 0, TraceAction::Place}};
  t.final.bins.push_back({{ItemSize(1, 4)}, BinStatus::Open});
  CHECK_THROWS_AS(validate_reasonable(t, 1), Error);

  PackingTrace twice;
  twice.events = {{0, 0, TraceAction::Open}, {0, 0, TraceAction::Place}, {0, 0, TraceAction::Place}};
  twice.final.bins.push_back({{ItemSize(1, 4), ItemSize(1, 4)}, BinStatus::Open});
  CHECK_THROWS_AS(validate_reasonable(twice, 1), Error);
}

TEST_CASE("sequence text format round trip") {
  const auto seq = make_sequence({{1, 2}, {3, 8}, {5, 8}}, "unit-test");
  std::ostringstream os;
  write_sequence(os, seq);
  const auto back = parse_sequence(os.str());
  REQUIRE(back.size() == 3);
  CHECK(back.items == seq.items);

  const auto mixed = parse_sequence("# bincover v1\n# comment\n\n0.5\n1/4  # trailing\n");
  REQUIRE(mixed.size() == 2);
  CHECK(mixed.items[1].value() == Rational(1, 4));
  CHECK_THROWS_AS(parse_sequence("1/2\n3/2\n"), Error);
  CHECK_THROWS_AS(parse_sequence("1/2\nfoo\n"), Error);
}

TEST_CASE("empty sequence is legal") {
  CHECK(parse_sequence("").empty());
  CHECK(volume(Sequence{}) == 0);
}
