#include <bincover/experiments.hpp>
#include <bincover/json_io.hpp>

#include <doctest.h>

using namespace bincover;

TEST_CASE("ratio_to_opt needs provenance") {
  CHECK_THROWS_AS(ratio_to_opt(3, OptValue{4, OptProvenance::None, ""}), Error);
  CHECK(ratio_to_opt(3, OptValue{4, OptProvenance::Oracle, "opt_exact"}) == 0.75);
  CHECK(ratio_to_opt(0, OptValue{0, OptProvenance::Certificate, "c"}) == 1.0);
}

TEST_CASE("uniform experiment is reproducible and worker independent") {
  const auto a = run_uniform_experiment(AlgorithmId::dnf(), 2000, 10, 9, 1);
  const auto b = run_uniform_experiment(AlgorithmId::dnf(), 2000, 10, 9, 4);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.passed());
  CHECK(a.to_json().contains("wall_clock_ms") == false);
  CHECK(a.to_json(true).contains("wall_clock_ms"));
  CHECK(a.checks.at(0).source.find("2/e") != std::string::npos);
}

TEST_CASE("uniform experiment at tiny n reports the exact optimum") {
  const auto r = run_uniform_experiment(AlgorithmId::dhk(2), 10, 20, 3, 1, 1.0);
  CHECK(r.summary.contains("mean_opt_exact"));
  CHECK(r.summary["mean_opt_exact"].get<double>() <= 5.0);
}

TEST_CASE("random order experiment") {
  const auto r = run_random_order_experiment(4, 4, Rational(1, 100), 4000, 5);
  CHECK(r.passed());
  CHECK(r.summary["opt"] == 4);
  const auto degenerate = run_random_order_experiment(6, 0, Rational(1, 100), 200, 5);
  CHECK(degenerate.passed());
  CHECK(degenerate.summary["dnf_exact_ratio"].get<double>() == 1.0);
  const auto none = run_random_order_experiment(0, 6, Rational(1, 100), 200, 5);
  CHECK(none.passed());
  CHECK_THROWS_AS(run_random_order_experiment(10, 10, Rational(1, 10), 200, 5), Error);
}

TEST_CASE("interval sweep") {
  const std::vector<IntervalSpec> specs = {
      IntervalSpec(Rational(1, 3), Rational(1)),
      IntervalSpec(Rational(1, 4), Rational(1, 2)),
      IntervalSpec(Rational(1, 5), Rational(1, 2)),
  };
  SweepOptions opt;
  opt.n = 60;
  const auto r = run_interval_sweep(specs, opt);
  CHECK(r.passed());
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0]["dnf_family_ratio"] == "2/3");
  CHECK(r.records[0]["dhk_family_ratio"] == "5/6");
  CHECK(r.records[2]["dhk_family_ratio"] == "47/60");
}

TEST_CASE("report csv") {
  ExperimentReport r;
  r.name = "x";
  r.expect_near("a", 1.0, 1.05, 0.1, "src");
  r.expect_at_most("b", 2.0, 1.0, 0.5, "src");
  CHECK_FALSE(r.passed());
  const auto csv = r.checks_csv();
  CHECK(csv.find("x,a,1,1.05,0.1,PASS") != std::string::npos);
  CHECK(csv.find("x,b,2,1,0.5,FAIL") != std::string::npos);
}

TEST_CASE("json helpers") {
  CHECK(json_number(0.1 + 0.2).dump() == "0.3");
  CHECK(rational_to_json(Rational(3, 6)) == "1/2");
  const auto fam = gen_dnf_one_border(2, 1, Rational(1, 8));
  const auto cert = certificate_from_json(certificate_to_json(*fam.opt_cert));
  CHECK(cert.claimed_covered == 3);
  CHECK(verify_certificate(fam.seq, cert) == 3);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"groups": 3})")), Error);
  const auto j = trace_to_json(dnf_run(make_sequence({{1, 2}, {1, 2}})));
  CHECK(j["covered"] == 1);
  CHECK(j["events"][0]["item"].is_null());
  CHECK(j["events"][1]["action"] == "place");
}
