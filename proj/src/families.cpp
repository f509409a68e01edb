#include "families.hpp"

#include <algorithm>

namespace ltm::fam {

namespace inverse_gaussian {

// Safeguarded Newton on the CDF. The IG density is unimodal and the CDF
// strictly increasing on (0, inf), so bisection fallback always works.
double quantile(double mu, double lambda, double u) {
  double lo = 0.0, hi = mu;
  while (cdf(mu, lambda, hi) < u) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) return hi;
  }
  // Initial guess: Wilson-Hilferty-ish via a lognormal moment match.
  double s2 = std::log1p(mu / lambda);
  double x = std::exp(std::log(mu) - 0.5 * s2 +
                      std::sqrt(s2) * detail::norm_quantile(u));
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    double f = cdf(mu, lambda, x) - u;
    if (f > 0.0)
      hi = x;
    else
      lo = x;
    double d = std::exp(log_pdf(mu, lambda, x));
    double step = d > 0.0 ? f / d : 0.0;
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 1e-14 * (std::fabs(x) + 1e-300)) return next;
    x = next;
  }
  return x;
}

}  // namespace inverse_gaussian

namespace poisson {

double quantile(double lambda, double u) {
  // Smallest k with cdf(k) >= u; start from a normal approximation.
  double z = detail::norm_quantile(u);
  double k = std::floor(lambda + std::sqrt(lambda) * z + (z * z - 1.0) / 6.0);
  k = std::max(0.0, k);
  if (cdf(lambda, k) >= u) {
    while (k > 0.0 && cdf(lambda, k - 1.0) >= u) k -= 1.0;
  } else {
    do {
      k += 1.0;
    } while (cdf(lambda, k) < u);
  }
  return k;
}

}  // namespace poisson

}  // namespace ltm::fam
