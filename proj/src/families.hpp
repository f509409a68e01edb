#ifndef LTM_SRC_FAMILIES_HPP_
#define LTM_SRC_FAMILIES_HPP_

// Per-family density math, one namespace per family, parameterized the
// way Table-2-style fitted values are reported:
//
//   BirnbaumSaunders(beta scale, gamma shape)
//   ExtremeValue(mu, sigma)          minimum-type Gumbel
//   Gamma(a shape, b scale)
//   GeneralizedExtremeValue(k, sigma, mu)   maximum convention
//   HalfNormal(sigma)                location fixed at 0
//   InverseGaussian(mu, lambda)
//   Logistic(mu, sigma)
//   Loglogistic(mu, sigma)           ln X ~ Logistic(mu, sigma)
//   Lognormal(mu, sigma)
//   Nakagami(mu shape, omega spread)
//   Normal(mu, sigma)
//   Poisson(lambda)
//   Rayleigh(sigma)
//   TLocationScale(mu, sigma, nu)
//   Weibull(a scale, b shape)
//
// log_pdf returns -inf outside the support. cdf is defined on all of R
// and saturates at 0/1 at the support boundaries.

#include <cmath>

#include "special.hpp"

namespace ltm::fam {

using detail::kEulerGamma;
using detail::kInf;
using detail::kNaN;
using detail::kPi;

// ---------------------------------------------------------------- Normal
namespace normal {
inline double cdf(double mu, double sigma, double x) {
  return detail::norm_cdf((x - mu) / sigma);
}
inline double log_pdf(double mu, double sigma, double x) {
  double z = (x - mu) / sigma;
  return -0.5 * z * z - std::log(sigma) -
         0.91893853320467274178032973640561764;  // ln sqrt(2*pi)
}
inline double quantile(double mu, double sigma, double u) {
  return mu + sigma * detail::norm_quantile(u);
}
inline double mean(double mu, double /*sigma*/) { return mu; }
}  // namespace normal

// -------------------------------------------------------------- Logistic
namespace logistic {
inline double cdf(double mu, double sigma, double x) {
  return 1.0 / (1.0 + std::exp(-(x - mu) / sigma));
}
inline double log_pdf(double mu, double sigma, double x) {
  double z = std::fabs((x - mu) / sigma);
  // -z - 2 ln(1+e^-z) - ln sigma, written for large |z| stability
  return -z - 2.0 * std::log1p(std::exp(-z)) - std::log(sigma);
}
inline double quantile(double mu, double sigma, double u) {
  return mu - sigma * std::log((1.0 - u) / u);
}
inline double mean(double mu, double /*sigma*/) { return mu; }
}  // namespace logistic

// ------------------------------------------------- ExtremeValue (minimum)
namespace gumbel_min {
inline double cdf(double mu, double sigma, double x) {
  return -std::expm1(-std::exp((x - mu) / sigma));
}
inline double log_pdf(double mu, double sigma, double x) {
  double z = (x - mu) / sigma;
  if (z > 700.0) return -kInf;
  return z - std::exp(z) - std::log(sigma);
}
inline double quantile(double mu, double sigma, double u) {
  return mu + sigma * std::log(-std::log1p(-u));
}
inline double mean(double mu, double sigma) { return mu - kEulerGamma * sigma; }
}  // namespace gumbel_min

// ----------------------------------------------------------------- Gamma
namespace gamma_dist {
inline double cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  return detail::gamma_p(a, x / b);
}
inline double log_pdf(double a, double b, double x) {
  if (x <= 0.0) return -kInf;
  return (a - 1.0) * std::log(x) - x / b - detail::lgamma(a) -
         a * std::log(b);
}
inline double quantile(double a, double b, double u) {
  return b * detail::gamma_p_inv(a, u);
}
inline double mean(double a, double b) { return a * b; }
}  // namespace gamma_dist

// -------------------------------------------------------------- Lognormal
namespace lognormal {
inline double cdf(double mu, double sigma, double x) {
  if (x <= 0.0) return 0.0;
  return detail::norm_cdf((std::log(x) - mu) / sigma);
}
inline double log_pdf(double mu, double sigma, double x) {
  if (x <= 0.0) return -kInf;
  double lx = std::log(x);
  return normal::log_pdf(mu, sigma, lx) - lx;
}
inline double quantile(double mu, double sigma, double u) {
  return std::exp(mu + sigma * detail::norm_quantile(u));
}
inline double mean(double mu, double sigma) {
  return std::exp(mu + 0.5 * sigma * sigma);
}
}  // namespace lognormal

// ------------------------------------------------------------ Loglogistic
namespace loglogistic {
inline double cdf(double mu, double sigma, double x) {
  if (x <= 0.0) return 0.0;
  return logistic::cdf(mu, sigma, std::log(x));
}
inline double log_pdf(double mu, double sigma, double x) {
  if (x <= 0.0) return -kInf;
  double lx = std::log(x);
  return logistic::log_pdf(mu, sigma, lx) - lx;
}
inline double quantile(double mu, double sigma, double u) {
  return std::exp(logistic::quantile(mu, sigma, u));
}
inline double mean(double mu, double sigma) {
  if (sigma >= 1.0) return kInf;
  return std::exp(mu) * kPi * sigma / std::sin(kPi * sigma);
}
}  // namespace loglogistic

// ---------------------------------------------------------------- Weibull
namespace weibull {
inline double cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-std::pow(x / a, b));
}
inline double log_pdf(double a, double b, double x) {
  if (x <= 0.0) return -kInf;
  double t = x / a;
  return std::log(b / a) + (b - 1.0) * std::log(t) - std::pow(t, b);
}
inline double quantile(double a, double b, double u) {
  return a * std::pow(-std::log1p(-u), 1.0 / b);
}
inline double mean(double a, double b) {
  return a * detail::tgamma(1.0 + 1.0 / b);
}
}  // namespace weibull

// --------------------------------------------------------------- Rayleigh
namespace rayleigh {
inline double cdf(double sigma, double x) {
  if (x <= 0.0) return 0.0;
  double z = x / sigma;
  return -std::expm1(-0.5 * z * z);
}
inline double log_pdf(double sigma, double x) {
  if (x <= 0.0) return -kInf;
  double z = x / sigma;
  return std::log(x) - 2.0 * std::log(sigma) - 0.5 * z * z;
}
inline double quantile(double sigma, double u) {
  return sigma * std::sqrt(-2.0 * std::log1p(-u));
}
inline double mean(double sigma) { return sigma * std::sqrt(kPi / 2.0); }
}  // namespace rayleigh

// ------------------------------------------------------------- HalfNormal
namespace halfnormal {
inline double cdf(double sigma, double x) {
  if (x <= 0.0) return 0.0;
  return std::erf(x / (sigma * 1.4142135623730950488016887242096981));
}
inline double log_pdf(double sigma, double x) {
  if (x < 0.0) return -kInf;
  double z = x / sigma;
  return 0.5 * std::log(2.0 / kPi) - std::log(sigma) - 0.5 * z * z;
}
inline double quantile(double sigma, double u) {
  return sigma * detail::norm_quantile(0.5 * (1.0 + u));
}
inline double mean(double sigma) { return sigma * std::sqrt(2.0 / kPi); }
}  // namespace halfnormal

// --------------------------------------------------------------- Nakagami
namespace nakagami {
inline double cdf(double mu, double omega, double x) {
  if (x <= 0.0) return 0.0;
  return detail::gamma_p(mu, mu * x * x / omega);
}
inline double log_pdf(double mu, double omega, double x) {
  if (x <= 0.0) return -kInf;
  return std::log(2.0) + mu * std::log(mu / omega) - detail::lgamma(mu) +
         (2.0 * mu - 1.0) * std::log(x) - mu * x * x / omega;
}
inline double quantile(double mu, double omega, double u) {
  return std::sqrt(omega / mu * detail::gamma_p_inv(mu, u));
}
inline double mean(double mu, double omega) {
  return std::exp(detail::lgamma(mu + 0.5) - detail::lgamma(mu)) *
         std::sqrt(omega / mu);
}
}  // namespace nakagami

// -------------------------------------------------------- InverseGaussian
namespace inverse_gaussian {
inline double cdf(double mu, double lambda, double x) {
  if (x <= 0.0) return 0.0;
  double s = std::sqrt(lambda / x);
  double a = s * (x / mu - 1.0);
  double b = s * (x / mu + 1.0);
  // Second term computed in log space: exp(2*lambda/mu) * Phi(-b) can
  // overflow/underflow separately while their product is tiny.
  double t2 = std::exp(2.0 * lambda / mu + detail::log_norm_sf(b));
  double c = detail::norm_cdf(a) + t2;
  return c < 1.0 ? c : 1.0;
}
inline double log_pdf(double mu, double lambda, double x) {
  if (x <= 0.0) return -kInf;
  double d = x - mu;
  return 0.5 * (std::log(lambda) - std::log(2.0 * kPi) - 3.0 * std::log(x)) -
         lambda * d * d / (2.0 * mu * mu * x);
}
double quantile(double mu, double lambda, double u);  // families.cpp
inline double mean(double mu, double /*lambda*/) { return mu; }
}  // namespace inverse_gaussian

// ------------------------------------------------------- BirnbaumSaunders
namespace birnbaum_saunders {
inline double xi(double beta, double x) {
  return std::sqrt(x / beta) - std::sqrt(beta / x);
}
inline double cdf(double beta, double gamma, double x) {
  if (x <= 0.0) return 0.0;
  return detail::norm_cdf(xi(beta, x) / gamma);
}
inline double log_pdf(double beta, double gamma, double x) {
  if (x <= 0.0) return -kInf;
  double z = xi(beta, x) / gamma;
  double dxi = (std::sqrt(x / beta) + std::sqrt(beta / x)) / (2.0 * gamma * x);
  return -0.5 * z * z - 0.91893853320467274178032973640561764 + std::log(dxi);
}
inline double quantile(double beta, double gamma, double u) {
  double t = 0.5 * gamma * detail::norm_quantile(u);
  double r = t + std::sqrt(t * t + 1.0);
  return beta * r * r;
}
inline double mean(double beta, double gamma) {
  return beta * (1.0 + 0.5 * gamma * gamma);
}
}  // namespace birnbaum_saunders

// ------------------------------------------------------------------ tLS
namespace tls {
// ln of the t_nu normalizing constant C = Gamma((nu+1)/2) /
// (sqrt(nu*pi) * Gamma(nu/2)).
inline double log_norm_const(double nu) {
  return detail::lgamma(0.5 * (nu + 1.0)) - detail::lgamma(0.5 * nu) -
         0.5 * std::log(nu * kPi);
}
inline double std_cdf(double nu, double t) {
  if (t == 0.0) return 0.5;
  double w = nu / (nu + t * t);
  double half_tail = 0.5 * detail::ibeta(0.5 * nu, 0.5, w);
  return t < 0.0 ? half_tail : 1.0 - half_tail;
}
inline double std_quantile(double nu, double u) {
  if (u == 0.5) return 0.0;
  double p2 = u < 0.5 ? 2.0 * u : 2.0 * (1.0 - u);
  double w = detail::ibeta_inv(0.5 * nu, 0.5, p2);
  double t = std::sqrt(nu * (1.0 - w) / w);
  return u < 0.5 ? -t : t;
}
inline double cdf(double mu, double sigma, double nu, double x) {
  return std_cdf(nu, (x - mu) / sigma);
}
inline double log_pdf(double mu, double sigma, double nu, double x) {
  double z = (x - mu) / sigma;
  return log_norm_const(nu) - std::log(sigma) -
         0.5 * (nu + 1.0) * std::log1p(z * z / nu);
}
inline double quantile(double mu, double sigma, double nu, double u) {
  return mu + sigma * std_quantile(nu, u);
}
inline double mean(double mu, double /*sigma*/, double nu) {
  return nu > 1.0 ? mu : kNaN;
}
}  // namespace tls

// ------------------------------------------------------------------- GEV
namespace gev {
// k is MATLAB's shape convention (maximum type). For |k| below this the
// Gumbel limit is used to avoid loss of significance.
inline constexpr double kShapeEps = 1e-12;

inline double cdf(double k, double sigma, double mu, double x) {
  double z = (x - mu) / sigma;
  if (std::fabs(k) < kShapeEps) return std::exp(-std::exp(-z));
  double t = 1.0 + k * z;
  if (t <= 0.0) return k > 0.0 ? 0.0 : 1.0;
  return std::exp(-std::pow(t, -1.0 / k));
}
inline double log_pdf(double k, double sigma, double mu, double x) {
  double z = (x - mu) / sigma;
  if (std::fabs(k) < kShapeEps) {
    if (z < -700.0) return -kInf;
    return -z - std::exp(-z) - std::log(sigma);
  }
  double t = 1.0 + k * z;
  if (t <= 0.0) return -kInf;
  double lt = std::log(t);
  return -(1.0 + 1.0 / k) * lt - std::exp(-lt / k) - std::log(sigma);
}
inline double quantile(double k, double sigma, double mu, double u) {
  double ll = -std::log(u);
  if (std::fabs(k) < kShapeEps) return mu - sigma * std::log(ll);
  return mu + sigma * std::expm1(-k * std::log(ll)) / k;
}
inline double mean(double k, double sigma, double mu) {
  if (std::fabs(k) < kShapeEps) return mu + kEulerGamma * sigma;
  if (k >= 1.0) return kInf;
  return mu + sigma * (detail::tgamma(1.0 - k) - 1.0) / k;
}
}  // namespace gev

// --------------------------------------------------------------- Poisson
namespace poisson {
inline bool is_count(double x) {
  return x >= 0.0 && std::floor(x) == x && x < 4.5e15;
}
inline double cdf(double lambda, double x) {
  if (x < 0.0) return 0.0;
  double k = std::floor(x);
  // P(K <= k) = Q(k+1, lambda)
  return detail::gamma_q(k + 1.0, lambda);
}
inline double log_pmf(double lambda, double x) {
  if (!is_count(x)) return -kInf;
  return x * std::log(lambda) - lambda - detail::lgamma(x + 1.0);
}
double quantile(double lambda, double u);  // families.cpp
inline double mean(double lambda) { return lambda; }
}  // namespace poisson

}  // namespace ltm::fam

#endif  // LTM_SRC_FAMILIES_HPP_
