#include "ifdist/specfun.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <algorithm>
#include <string>

#include "ifdist/errors.hpp"

namespace ifdist::specfun {
namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Below this the Stirling tails are shifted upward by recurrence.
constexpr double kAsymptoticThreshold = 10.0;

// (-1)^k zeta(k) / k, k = 2..31: Taylor coefficients of ln Gamma(1 + z) beyond
// the linear term.
constexpr std::array<double, 30> kLnGammaTaylor = {
    0.8224670334241132,    -0.40068563438653143,  0.27058080842778454,
    -0.20738555102867398,  0.1695571769974082,    -0.1440498967688461,
    0.12550966952474304,   -0.11133426586956469,  0.1000994575127818,
    -0.09095401714582904,  0.083353840546109,     -0.0769325164113522,
    0.07143294629536133,   -0.06666870588242046,  0.06250095514121304,
    -0.058823978658684585, 0.055555767627403614,  -0.05263167937961666,
    0.05000004769810169,   -0.047619070330142226, 0.04545455629320467,
    -0.04347826605304026,  0.04166666915034121,   -0.04000000119214014,
    0.03846153903467518,   -0.037037037312989324, 0.035714285847333355,
    -0.034482758684919304, 0.03333333336437758,   -0.03225806453115042,
};

// Series in the neighbourhood of the zeros of ln Gamma at 1 and 2, where the
// shifted Stirling form would lose relative accuracy.
constexpr double kRootWindow = 0.25;

double ln_gamma_1p_series(double z) {
  double sum = 0.0;
  for (std::size_t k = kLnGammaTaylor.size(); k-- > 0;) {
    sum = sum * z + kLnGammaTaylor[k];
  }
  return z * (-kEulerGamma + z * sum);
}

// ln Gamma(x) - [(x - 1/2) ln x - x + ln sqrt(2 pi)] for x >= 10.
double stirling_correction(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double s = -3617.0 / 122400.0;
  s = s * inv2 + 1.0 / 156.0;
  s = s * inv2 - 691.0 / 360360.0;
  s = s * inv2 + 1.0 / 1188.0;
  s = s * inv2 - 1.0 / 1680.0;
  s = s * inv2 + 1.0 / 1260.0;
  s = s * inv2 - 1.0 / 360.0;
  s = s * inv2 + 1.0 / 12.0;
  return s * inv;
}

double ln_gamma_stirling(double x) {
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_correction(x);
}

void require_positive(double x, const char* fn) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be positive, got " +
                      std::to_string(x));
  }
}

}  // namespace

double ln_gamma(double x) {
  require_positive(x, "ln_gamma");
  if (std::isinf(x)) return x;
  if (std::abs(x - 1.0) < kRootWindow) return ln_gamma_1p_series(x - 1.0);
  if (std::abs(x - 2.0) < kRootWindow) {
    const double z = x - 2.0;
    return std::log1p(z) + ln_gamma_1p_series(z);
  }
  if (x >= kAsymptoticThreshold) return ln_gamma_stirling(x);

  // Shift up: ln Gamma(x) = ln Gamma(x + n) - ln prod_{i<n} (x + i).
  double prod = 1.0;
  double y = x;
  while (y < kAsymptoticThreshold) {
    prod *= y;
    y += 1.0;
  }
  return ln_gamma_stirling(y) - std::log(prod);
}

double gamma(double x) {
  require_positive(x, "gamma");
  return std::exp(ln_gamma(x));
}

double digamma(double x) {
  require_positive(x, "digamma");
  if (std::isinf(x)) return x;
  double shift = 0.0;
  while (x < kAsymptoticThreshold) {
    shift += 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double s = 1.0 / 12.0;
  s = s * inv2 - 691.0 / 32760.0;
  s = s * inv2 + 1.0 / 132.0;
  s = s * inv2 - 1.0 / 240.0;
  s = s * inv2 + 1.0 / 252.0;
  s = s * inv2 - 1.0 / 120.0;
  s = s * inv2 + 1.0 / 12.0;
  s *= inv2;
  return std::log(x) - 0.5 / x - s - shift;
}

double harmonic(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("harmonic: argument must be nonnegative, got " +
                      std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  return digamma(x + 1.0) + kEulerGamma;
}

double log_beta(double a, double b) {
  require_positive(a, "log_beta");
  require_positive(b, "log_beta");
  const double small = std::min(a, b);
  const double big = std::max(a, b);
  if (big < kAsymptoticThreshold) {
    return ln_gamma(small) + ln_gamma(big) - ln_gamma(small + big);
  }
  // ln Gamma(big) - ln Gamma(small + big) written so the O(big ln big) parts
  // cancel analytically.
  const double sum = small + big;
  const double ratio = -(big - 0.5) * std::log1p(small / big) -
                       small * std::log(sum) + small +
                       stirling_correction(big) - stirling_correction(sum);
  return ln_gamma(small) + ratio;
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  if (n <= 60) {
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    // C(n, i) * (n - i) < 2^64 for n <= 60, and the division is exact.
    for (unsigned i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return static_cast<double>(c);
  }
  return std::exp(ln_gamma(n + 1.0) - ln_gamma(k + 1.0) -
                  ln_gamma(n - k + 1.0));
}

}  // namespace ifdist::specfun
