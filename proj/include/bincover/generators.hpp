#pragma once

#include <bincover/algorithms.hpp>
#include <bincover/core.hpp>
#include <bincover/oracles.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bincover {

enum class BorderCase { None, One, Two, Many };

std::string_view to_string(BorderCase c);

/// A restriction interval (a,b) for item sizes with its maximal border 1/p,
/// the largest 1/l strictly below b.
class IntervalSpec {
public:
  /// Requires 0 <= a < b <= 1.
  IntervalSpec(Rational a, Rational b);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  int p() const noexcept { return p_; }

  /// One border: 1/(p+1) <= a < 1/p. Two borders: 1/(p+2) <= a < 1/(p+1).
  BorderCase border_case() const;
  bool contains(const Rational& x) const { return a_ < x && x < b_; }
  bool is_unrestricted() const { return a_ == 0 && b_ == 1; }

  std::string to_string() const;

private:
  Rational a_;
  Rational b_;
  int p_;
};

enum class Exactness { Exact, LowerBound };

std::string_view to_string(Exactness e);

/// A machine-checkable statement about a generated sequence.
struct Claim {
  std::optional<AlgorithmId> algorithm;  ///< empty: the claim is about OPT
  std::size_t expected = 0;
  Exactness exactness = Exactness::Exact;

  std::string subject() const { return algorithm ? algorithm->name() : "OPT"; }
};

/// A labelled slice [begin, end) of a generated sequence with the number of
/// bins DNF closes inside it.
struct Segment {
  std::string label;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t dnf_expected = 0;
};

struct GeneratedFamily {
  Sequence seq;
  Rational eps;
  std::int64_t scale_n = 0;
  std::vector<Claim> claims;
  std::optional<PartitionCertificate> opt_cert;
  std::vector<Segment> segments;
  std::optional<IntervalSpec> interval;

  const Claim* find(const std::string& subject) const;
  std::size_t expected(const std::string& subject) const;
};

/// Re-runs every algorithm claim and the certificate. Throws ClaimMismatch on
/// the first disagreement. Generators call this before returning.
void verify_family(const GeneratedFamily& family);

/// <(1/x)^(x-1), 1/x - eps, 1/x + eps>^(xn): DNF covers xn, OPT (x+1)n.
GeneratedFamily gen_dnf_one_border(int x, std::int64_t n, std::optional<Rational> eps = {});

/// <(1/p - eps/(p-1))^(p-1), 1/p + eps>^n: OPT n, DHk (k >= p)
/// floor(n(p-1)/(p+1)) + floor(n/p).
GeneratedFamily gen_dhk_one_border(int p, std::int64_t n, std::optional<Rational> eps = {},
                                   std::optional<IntervalSpec> spec = {});

/// Five-part sequence on which DNF covers p(p+1)n while a four-block
/// certificate covers (p^2+2p+2)n. Requires p >= 3, n >= 1.
GeneratedFamily gen_dnf_two_border(int p, std::int64_t n, std::optional<Rational> eps = {});

/// <(1/(p+1) - eps)^n, ((p+2)/(p(p+1)) + (p-1)eps)^n, (1/p - eps)^(n(p-2))>:
/// OPT n, DHk (k >= p+1) floor(n/(p+2)) + floor(n/p) + floor(n(p-2)/(p+1)).
GeneratedFamily gen_dhk_two_border(int p, std::int64_t n, std::optional<Rational> eps = {});

/// <1/2, (1/(2n))^(n-1), 1/2>^(2n): DNF 2n in this order, DHk 3n-1.
GeneratedFamily gen_rwor(std::int64_t n);

/// Two-size sequences over {eps, 1-eps}. Requires 0 < eps < 1/n.
Sequence gen_two_size_iid(std::size_t n, const Rational& eps, std::uint64_t seed);
Sequence gen_two_size_counts(std::size_t large_count, std::size_t small_count,
                             const Rational& eps, std::uint64_t seed);

/// Min/min worst case for DNF: each bin gets p items of 1/p - eps then one of
/// b - eps. DNF covers exactly `bins`.
GeneratedFamily gen_minmin_worst(int p, const Rational& b, const Rational& eps, std::int64_t bins);

/// Min/min worst case for OPT: bins * (p+1) items of 1/p - eps.
GeneratedFamily gen_minmin_opt_worst(int p, const Rational& eps, std::int64_t bins);

/// n i.i.d. uniform (0,1) draws, reproducible per seed.
std::vector<double> gen_uniform(std::size_t n, std::uint64_t seed);

/// Exact conversion of float draws (every finite double is a dyadic rational).
Sequence to_exact_sequence(std::span<const double> draws, std::string provenance = {});

/// Largest 10^-m (m >= 1) accepted by `ok`, trying m up to 40.
Rational default_eps(const std::function<bool(const Rational&)>& ok);

}  // namespace bincover
