#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

namespace bincover {

/// ~100 significant decimal digits.
using HighFloat = boost::multiprecision::cpp_bin_float_100;

HighFloat pi_hp();
HighFloat e_hp();

/// Trigamma at a positive integer: pi^2/6 - sum_{i<m} 1/i^2.
HighFloat trigamma_int(int m);

struct SeriesValue {
  HighFloat value;
  HighFloat error_bound;  ///< absolute bound on the rounding error
};

/// mu(k) = sum_{l=1..k} e^l (-l)^(k-l) / (k-l)!, summed with Neumaier
/// compensation. Throws PrecisionLoss when error_bound / |value| > 1e-30.
SeriesValue mu(int k);

/// Expected-ratio decomposition for DHk on uniform (0,1) items with the
/// optimum normalised to n/2.
struct EruBreakdown {
  int k = 2;
  HighFloat r_large;  ///< items in [1/k, 1)
  HighFloat r_small;  ///< items in (0, 1/k)
  HighFloat total;
};

/// r_large = 2(2 - 1/k - psi1(1) + psi1(k+1)); r_small = 2/(mu(k) k).
EruBreakdown eru_dhk(int k);

/// Same r_large through the printed alternative 2((12-pi^2)/6 - (1+k)/k^2 + psi1(k)).
HighFloat eru_r_large_alt(int k);

/// lim_{k->inf} ERU(DHk) = (12 - pi^2)/3.
HighFloat eru_dhk_limit();

/// 2/e, the known expected ratio of DNF.
HighFloat eru_dnf();

std::string to_string(const HighFloat& x, int digits = 30);

}  // namespace bincover
