#ifndef LTM_SAMPLING_HPP_
#define LTM_SAMPLING_HPP_

#include <cstdint>

#include "ltm/distributions.hpp"
#include "ltm/rng.hpp"

namespace ltm {

/// Controls the central power-series branch of the tLocationScale
/// sampler. The series inverts the Student-t CDF around the median;
/// `truncation_order` is the number of series terms kept and
/// `fallback_threshold` is the |u - 1/2| bound beyond which monotone
/// numeric inversion of the CDF is used instead. Defaults meet the
/// 1e-6 branch-agreement tolerance for nu >= 1.
struct TlsSeriesConfig {
  int truncation_order = 96;
  double fallback_threshold = 0.45;
};

/// One variate from `family` by inverse-CDF sampling: consumes exactly
/// one uniform from `rng`, clamps it to [1e-12, 1 - 1e-12], and maps it
/// through quantile(). Forcing the uniform to u therefore yields
/// quantile(family, params, u) exactly.
double draw(FamilyId family, const ParamVector& params, RngStream& rng);

/// Logistic variate via the closed-form inverse CDF
/// mu - sigma * ln((1-u)/u).
double draw_logistic(const ParamVector& params, RngStream& rng);

/// Nakagami variate as sqrt(Y) with Y ~ Gamma(shape=mu, scale=omega/mu).
double draw_nakagami(const ParamVector& params, RngStream& rng);

/// tLocationScale variate: central power series in V(nu,u) for
/// |u - 1/2| < cfg.fallback_threshold (or whenever the truncated series
/// is accurate enough), monotone numeric inversion of the Student-t CDF
/// otherwise. Both branches agree within 1e-6 on the output scale.
double draw_tlocationscale(const ParamVector& params,
                           const TlsSeriesConfig& cfg, RngStream& rng);
double draw_tlocationscale(const ParamVector& params, RngStream& rng);

/// Rejection-resamples draw() until the variate is positive. Rejected
/// variates consume rng state, so determinism is preserved. Throws
/// rejection-budget-exhausted after `max_rejects` nonpositive draws.
double draw_positive(FamilyId family, const ParamVector& params,
                     RngStream& rng, int max_rejects = 1000);

namespace detail_sampling {
/// Coefficients c(i, nu), i = 1..order, of the central power series
/// t(V) = V + sum_i c(i,nu) V^(2i+1) for the standard t_nu quantile.
/// Exposed for tests.
std::vector<double> tls_series_coefficients(double nu, int order);
/// Standardized series evaluation at u (no location/scale applied);
/// returns NaN when the truncated series cannot reach ~1e-8 accuracy.
double tls_series_std_quantile(double nu, double u, int order);
}  // namespace detail_sampling

}  // namespace ltm

#endif  // LTM_SAMPLING_HPP_
