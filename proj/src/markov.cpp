#include <bincover/error.hpp>
#include <bincover/markov.hpp>

#include <deque>

namespace bincover {

void MarkovChain::validate() const {
  const std::size_t n = size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "chain has no states");
  if (transition.size() != n) throw Error(ErrorCode::InvalidArgument, "transition matrix has wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (transition[i].size() != n) throw Error(ErrorCode::InvalidArgument, "transition matrix is not square");
    Rational sum = 0;
    for (const auto& x : transition[i]) {
      if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative transition probability");
      sum += x;
    }
    if (sum != 1) throw Error(ErrorCode::InvalidArgument, "row " + states[i] + " sums to " + format_rational(sum));
  }
}

bool MarkovChain::irreducible() const {
  const std::size_t n = size();
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& w = forward ? transition[i][j] : transition[j][i];
        if (w > 0 && !seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    for (const bool s : seen)
      if (!s) return false;
    return true;
  };
  return n > 0 && reaches_all(true) && reaches_all(false);
}

MarkovChain MarkovChain::dnf_two_size() {
  const Rational half(1, 2);
  MarkovChain chain;
  chain.states = {"N", "L", "S"};
  chain.transition = {
      {0, half, half},
      {1, 0, 0},
      {half, 0, half},
  };
  return chain;
}

std::vector<Rational> markov_stationary(const MarkovChain& chain) {
  chain.validate();
  if (!chain.irreducible()) throw Error(ErrorCode::NotIrreducible, "chain is not irreducible");
  const std::size_t n = chain.size();
  // Rows: (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = chain.transition[j][i] - (i == j ? 1 : 0);
  }
  for (std::size_t j = 0; j < n; ++j) m[n - 1][j] = 1;
  m[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::NotIrreducible, "stationary system is singular");
    std::swap(m[col], m[pivot]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> pi(n);
  for (std::size_t i = 0; i < n; ++i) {
    pi[i] = m[i][n];
    pi[i].canonicalize();
  }
  return pi;
}

}  // namespace bincover
