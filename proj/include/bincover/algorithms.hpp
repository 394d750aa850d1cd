#pragma once

#include <bincover/core.hpp>

#include <string>

namespace bincover {

/// Number of harmonic classes used by Dual Harmonic. k = 1 is Dual Next-Fit.
class HarmonicConfig {
public:
  explicit HarmonicConfig(int k);
  int k() const noexcept { return k_; }

private:
  int k_;
};

/// Class index under the harmonic partition (0,1/k), [1/k,1/(k-1)), ..., [1/2,1).
/// j == 1 is the small class (0,1/k); j in [2,k] is [1/j, 1/(j-1)). Borders
/// belong to the interval on their right.
struct IntervalIndex {
  int j = 1;

  bool is_small() const noexcept { return j == 1; }
  friend bool operator==(const IntervalIndex&, const IntervalIndex&) = default;
};

IntervalIndex harmonic_interval(const ItemSize& item, const HarmonicConfig& cfg);

/// Same classification on a float, used by the Monte Carlo kernels.
int harmonic_class(double item, int k);

PackingTrace dnf_run(const Sequence& seq);
PackingTrace dhk_run(const Sequence& seq, const HarmonicConfig& cfg);

/// Identifies one of the two algorithms under study.
struct AlgorithmId {
  enum class Kind { DualNextFit, DualHarmonic };

  Kind kind = Kind::DualNextFit;
  int k = 1;

  static AlgorithmId dnf() { return {Kind::DualNextFit, 1}; }
  static AlgorithmId dhk(int k) { return {Kind::DualHarmonic, HarmonicConfig(k).k()}; }

  /// "DNF" or "DH<k>".
  std::string name() const;
  /// Bins that can stand open simultaneously (1 for DNF, k for DHk).
  int max_open() const { return kind == Kind::DualNextFit ? 1 : k; }
  /// Harmonic parameter to classify with; DNF behaves as k = 1.
  int classes() const { return kind == Kind::DualNextFit ? 1 : k; }

  friend bool operator==(const AlgorithmId&, const AlgorithmId&) = default;
};

/// Parses "dnf", "dhk" (with k supplied separately) or "dh<k>".
AlgorithmId parse_algorithm(const std::string& name, int k = 2);

PackingTrace run(const AlgorithmId& alg, const Sequence& seq);

}  // namespace bincover
