#pragma once

#include <bincover/rational.hpp>

#include <string>
#include <vector>

namespace bincover {

/// Finite chain with exact rational transition probabilities.
/// transition[i][j] is the probability of moving from state i to state j.
struct MarkovChain {
  std::vector<std::string> states;
  std::vector<std::vector<Rational>> transition;

  std::size_t size() const noexcept { return states.size(); }

  /// Square, nonnegative, rows summing to 1. Throws InvalidArgument.
  void validate() const;
  bool irreducible() const;

  /// DNF on i.i.d. fair draws from {eps, 1-eps}: states N (no open bin),
  /// L (open bin holds one large item), S (open bin holds only small items).
  static MarkovChain dnf_two_size();
};

/// Solves pi P = pi, sum(pi) = 1 exactly by Gaussian elimination over the
/// rationals. Throws NotIrreducible.
std::vector<Rational> markov_stationary(const MarkovChain& chain);

}  // namespace bincover
