#include "ltm/sampling.hpp"

#include <cmath>
#include <vector>

#include "families.hpp"
#include "special.hpp"

namespace ltm {

namespace {

constexpr double kUniformEps = 1e-12;

double clamped_uniform(RngStream& rng) {
  double u = rng.next_uniform();
  if (u < kUniformEps) return kUniformEps;
  if (u > 1.0 - kUniformEps) return 1.0 - kUniformEps;
  return u;
}

}  // namespace

namespace detail_sampling {

// Coefficients of the odd power series t(v) = sum_k a_k v^(2k+1)
// (a_0 = 1) solving dt/dv = (1 + t^2/nu)^((nu+1)/2), the inverse of the
// standardized t_nu CDF expressed in v = (u - 1/2) / C(nu). Computed by
// a Miller-type recurrence on the even series W = t^2/nu and
// G = (1+W)^alpha, with a_m = g_m / (2m+1).
std::vector<double> tls_series_coefficients(double nu, int order) {
  const double alpha = 0.5 * (nu + 1.0);
  std::vector<double> a(order + 1), w(order + 1), g(order + 1);
  a[0] = 1.0;
  g[0] = 1.0;
  for (int m = 1; m <= order; ++m) {
    double wm = 0.0;
    for (int i = 0; i + i <= m - 1; ++i) {
      int j = m - 1 - i;
      wm += (i == j ? 1.0 : 2.0) * a[i] * a[j];
    }
    w[m] = wm / nu;
    double gm = 0.0;
    for (int k = 1; k <= m; ++k)
      gm += ((alpha + 1.0) * k - m) * w[k] * g[m - k];
    g[m] = gm / m;
    a[m] = g[m] / (2.0 * m + 1.0);
  }
  return std::vector<double>(a.begin() + 1, a.end());  // c(1..order)
}

namespace {

struct TlsCacheEntry {
  double nu = -1.0;
  int order = 0;
  std::vector<double> coeff;
};

const std::vector<double>& cached_coefficients(double nu, int order) {
  thread_local TlsCacheEntry cache[4];
  thread_local int next_slot = 0;
  for (auto& e : cache)
    if (e.nu == nu && e.order == order) return e.coeff;
  auto& e = cache[next_slot];
  next_slot = (next_slot + 1) % 4;
  e.nu = nu;
  e.order = order;
  e.coeff = tls_series_coefficients(nu, order);
  return e.coeff;
}

}  // namespace

double tls_series_std_quantile(double nu, double u, int order) {
  // V(nu, u) of the series: sqrt(nu*pi) (u - 1/2) Gamma(nu/2) /
  // Gamma((nu+1)/2), i.e. (u - 1/2) over the t density at 0.
  const double v =
      (u - 0.5) * std::exp(-fam::tls::log_norm_const(nu));
  const auto& c = cached_coefficients(nu, order);
  const double v2 = v * v;
  double acc = 0.0;
  for (int i = order - 1; i >= 0; --i) acc = (acc + c[i]) * v2;
  double t = v * (1.0 + acc);
  // Truncation estimate from the last retained term; reject the result
  // when the series has visibly not converged at this u.
  double last = std::fabs(c[order - 1] * std::pow(v2, order) * v);
  if (!(last < 1e-8 * (1.0 + std::fabs(t)))) return detail::kNaN;
  return t;
}

}  // namespace detail_sampling

double draw(FamilyId family, const ParamVector& params, RngStream& rng) {
  validate_params(family, params);
  return quantile(family, params, clamped_uniform(rng));
}

double draw_logistic(const ParamVector& params, RngStream& rng) {
  validate_params(FamilyId::Logistic, params);
  double u = clamped_uniform(rng);
  return params[0] - params[1] * std::log((1.0 - u) / u);
}

double draw_nakagami(const ParamVector& params, RngStream& rng) {
  validate_params(FamilyId::Nakagami, params);
  double u = clamped_uniform(rng);
  double y = (params[1] / params[0]) * detail::gamma_p_inv(params[0], u);
  return std::sqrt(y);
}

double draw_tlocationscale(const ParamVector& params,
                           const TlsSeriesConfig& cfg, RngStream& rng) {
  validate_params(FamilyId::TLocationScale, params);
  if (cfg.truncation_order < 1)
    fail("invalid-params", "truncation_order must be >= 1");
  if (!(cfg.fallback_threshold > 0.0 && cfg.fallback_threshold < 0.5))
    fail("invalid-params", "fallback_threshold must be in (0, 0.5)");
  const double mu = params[0], sigma = params[1], nu = params[2];
  const double u = clamped_uniform(rng);
  if (std::fabs(u - 0.5) < cfg.fallback_threshold) {
    double t = detail_sampling::tls_series_std_quantile(
        nu, u, cfg.truncation_order);
    if (std::isfinite(t)) return mu + sigma * t;
    // series outside its usable radius: fall back to inversion
  }
  return mu + sigma * fam::tls::std_quantile(nu, u);
}

double draw_tlocationscale(const ParamVector& params, RngStream& rng) {
  return draw_tlocationscale(params, TlsSeriesConfig{}, rng);
}

double draw_positive(FamilyId family, const ParamVector& params,
                     RngStream& rng, int max_rejects) {
  for (int attempt = 0; attempt <= max_rejects; ++attempt) {
    double x = draw(family, params, rng);
    if (x > 0.0) return x;
  }
  fail("rejection-budget-exhausted",
       "no positive variate after " + std::to_string(max_rejects + 1) +
           " draws from " + std::string(family_name(family)));
}

}  // namespace ltm
