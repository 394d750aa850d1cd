#include <bincover/analytic.hpp>
#include <bincover/error.hpp>

#include <boost/math/constants/constants.hpp>

#include <limits>

namespace bincover {

HighFloat pi_hp() { return boost::math::constants::pi<HighFloat>(); }
HighFloat e_hp() { return boost::math::constants::e<HighFloat>(); }

HighFloat trigamma_int(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "trigamma_int needs m >= 1");
  const HighFloat pi = pi_hp();
  HighFloat value = pi * pi / 6;
  for (int i = 1; i < m; ++i) value -= HighFloat(1) / (HighFloat(i) * i);
  return value;
}

SeriesValue mu(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "mu needs k >= 1");
  const HighFloat e = e_hp();
  HighFloat sum = 0;
  HighFloat compensation = 0;
  HighFloat magnitude = 0;
  HighFloat e_pow = 1;
  for (int l = 1; l <= k; ++l) {
    e_pow *= e;
    const int d = k - l;
    HighFloat term = e_pow;
    for (int i = 1; i <= d; ++i) term *= HighFloat(l) / i;  // l^d / d!
    if (d % 2 == 1) term = -term;
    magnitude += abs(term);
    // Neumaier.
    const HighFloat t = sum + term;
    if (abs(sum) >= abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  SeriesValue out;
  out.value = sum + compensation;
  // Each term carries at most 2(k+1) roundings; the compensated sum adds a few more.
  const HighFloat unit = std::numeric_limits<HighFloat>::epsilon();
  out.error_bound = HighFloat(2 * k + 8) * unit * magnitude;
  if (out.value == 0 || out.error_bound / abs(out.value) > HighFloat("1e-30"))
    throw Error(ErrorCode::PrecisionLoss, "mu(" + std::to_string(k) + ") loses more than 30 digits to cancellation");
  return out;
}

EruBreakdown eru_dhk(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "eru_dhk needs k >= 2");
  EruBreakdown out;
  out.k = k;
  out.r_large = 2 * (2 - HighFloat(1) / k - trigamma_int(1) + trigamma_int(k + 1));
  out.r_small = 2 / (mu(k).value * k);
  out.total = out.r_large + out.r_small;
  return out;
}

HighFloat eru_r_large_alt(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "eru_r_large_alt needs k >= 2");
  const HighFloat pi = pi_hp();
  return 2 * ((12 - pi * pi) / 6 - HighFloat(1 + k) / (HighFloat(k) * k) + trigamma_int(k));
}

HighFloat eru_dhk_limit() {
  const HighFloat pi = pi_hp();
  return (12 - pi * pi) / 3;
}

HighFloat eru_dnf() { return 2 / e_hp(); }

std::string to_string(const HighFloat& x, int digits) { return x.str(digits); }

}  // namespace bincover
