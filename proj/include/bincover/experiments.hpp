#pragma once

#include <bincover/algorithms.hpp>
#include <bincover/generators.hpp>
#include <bincover/json_io.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bincover {

enum class OptProvenance { None, Oracle, Certificate, Analytic };

std::string_view to_string(OptProvenance p);

/// An optimal-offline value together with where it came from. Reports refuse
/// to divide by values without provenance.
struct OptValue {
  double value = 0;
  OptProvenance provenance = OptProvenance::None;
  std::string citation;
};

/// alg / opt; 0/0 is reported as 1. Throws MissingProvenance.
double ratio_to_opt(double alg_value, const OptValue& opt);

struct ExpectationCheck {
  std::string name;
  double observed = 0;
  double expected = 0;
  double tolerance = 0;
  std::string source;  ///< the expectation's origin: a closed form or an oracle
  bool pass = false;
};

struct ExperimentReport {
  std::string name;
  Json parameters = Json::object();
  Json records = Json::array();
  Json summary = Json::object();
  std::vector<ExpectationCheck> checks;
  std::uint64_t seed = 0;
  double wall_clock_ms = 0;

  bool passed() const;
  /// Appends a check |observed - expected| <= tolerance.
  void expect_near(std::string name, double observed, double expected, double tolerance,
                   std::string source);
  /// Appends a check observed <= bound + tolerance.
  void expect_at_most(std::string name, double observed, double bound, double tolerance,
                      std::string source);
  /// Wall-clock time is left out unless asked for, keeping dumps reproducible.
  Json to_json(bool include_timing = false) const;
  /// One row per check.
  std::string checks_csv() const;
};

/// Monte Carlo ratio of `alg` on n uniform (0,1) items against E[OPT] = n/2.
/// tolerance < 0 selects 3 standard errors plus the 2k/n rounding allowance.
ExperimentReport run_uniform_experiment(const AlgorithmId& alg, std::size_t n, std::size_t trials,
                                        std::uint64_t seed, int jobs = 1,
                                        double tolerance = -1);

/// DNF and DHk on the two-size multiset (l large, s small items).
ExperimentReport run_random_order_experiment(std::size_t large_count, std::size_t small_count,
                                             const Rational& eps, std::size_t samples,
                                             std::uint64_t seed, int k = 2, int jobs = 1);

enum class EpsPolicy { Default, Fixed };

struct SweepOptions {
  std::int64_t n = 600;
  EpsPolicy eps_policy = EpsPolicy::Default;
  Rational eps;  ///< used with EpsPolicy::Fixed
};

/// Generated worst-case families per interval against competitive_table.
ExperimentReport run_interval_sweep(const std::vector<IntervalSpec>& specs,
                                    const SweepOptions& options = {});

}  // namespace bincover
