#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "families.hpp"
#include "ltm/distributions.hpp"
#include "nelder_mead.hpp"
#include "special.hpp"

// Maximum-likelihood fitting. Closed forms where they exist (Normal,
// Lognormal, Poisson, Rayleigh, HalfNormal, InverseGaussian); otherwise
// Nelder-Mead on the negative log-likelihood with parameters
// log-transformed onto the real line and method-of-moments starting
// points. The three-parameter families run three starts.

namespace ltm {

namespace {

using detail::kInf;

struct Stats {
  std::size_t n = 0;
  double sum = 0.0, sum_sq = 0.0;   // about x
  double sum_log = 0.0;             // sum of ln x (valid if all_positive)
  double mean = 0.0, var = 0.0;     // population (1/n) variance
  double min = 0.0, max = 0.0;
  double median = 0.0, iqr = 0.0;
  bool all_positive = true;
  bool all_nonneg = true;
};

Stats compute_stats(const SampleSet& sample) {
  const auto& v = sample.values();
  Stats s;
  s.n = v.size();
  s.min = v.front();
  s.max = v.back();
  s.all_positive = v.front() > 0.0;
  s.all_nonneg = v.front() >= 0.0;
  for (double x : v) {
    s.sum += x;
    s.sum_sq += x * x;
    if (s.all_positive) s.sum_log += std::log(x);
  }
  double n = static_cast<double>(s.n);
  s.mean = s.sum / n;
  s.var = std::max(0.0, s.sum_sq / n - s.mean * s.mean);
  auto quant = [&](double q) {
    double idx = q * (n - 1.0);
    std::size_t lo = static_cast<std::size_t>(idx);
    double frac = idx - static_cast<double>(lo);
    return lo + 1 < s.n ? v[lo] * (1.0 - frac) + v[lo + 1] * frac : v[lo];
  };
  s.median = quant(0.5);
  s.iqr = quant(0.75) - quant(0.25);
  return s;
}

void require_min_size(FamilyId family, std::size_t n) {
  std::size_t need = param_names(family).size() >= 3 ? 3 : 2;
  if (param_names(family).size() == 1) need = 1;
  if (n < need)
    fail("degenerate-sample", std::string(family_name(family)) +
                                  " needs at least " + std::to_string(need) +
                                  " observations");
}

void require_positive_support(FamilyId family, const Stats& s) {
  if (!s.all_positive)
    fail("support-violation", std::string(family_name(family)) +
                                  " requires strictly positive data");
}

FittedModel finish(FamilyId family, ParamVector params,
                   const SampleSet& sample) {
  validate_params(family, params);
  double ll = log_likelihood(family, params, sample);
  return FittedModel{family, params, ll, sample.size()};
}

// ---------------------------------------------------------- simplex fits

struct TransformedFit {
  // Maps the unconstrained optimizer space to family parameters.
  std::function<ParamVector(const double*)> decode;
  std::function<double(const ParamVector&)> nll;
};

FittedModel simplex_fit(FamilyId family, const SampleSet& sample,
                        const TransformedFit& tf,
                        const std::vector<std::vector<double>>& starts,
                        const std::vector<double>& step) {
  auto objective = [&](const double* t) {
    ParamVector p = tf.decode(t);
    return tf.nll(p);
  };
  detail::NmResult best;
  for (const auto& start : starts) {
    auto r = detail::nelder_mead(objective, start, step, 1e-10, 4000);
    // one polish pass from the found optimum with a smaller simplex
    std::vector<double> fine(step.size());
    for (std::size_t i = 0; i < step.size(); ++i) fine[i] = 0.05 * step[i];
    auto r2 = detail::nelder_mead(objective, r.x, fine, 1e-11, 2000);
    if (r2.f < r.f) r = r2;
    if (r.f < best.f) best = r;
  }
  if (!std::isfinite(best.f))
    fail("fit-failed", std::string(family_name(family)) +
                           ": likelihood not finite at any candidate");
  if (!best.converged)
    fail("fit-failed",
         std::string(family_name(family)) + ": simplex did not converge");
  ParamVector p = tf.decode(best.x.data());
  validate_params(family, p);
  return FittedModel{family, p, -best.f, sample.size()};
}

double nll_generic(FamilyId family, const ParamVector& p,
                   const SampleSet& sample) {
  double ll = log_likelihood(family, p, sample);
  return -ll;
}

}  // namespace

FittedModel mle_fit(FamilyId family, const SampleSet& sample) {
  Stats s = compute_stats(sample);
  require_min_size(family, s.n);
  if (s.max == s.min)
    fail("degenerate-sample", "sample has zero variance");

  const double n = static_cast<double>(s.n);

  switch (family) {
    case FamilyId::Normal: {
      ParamVector p{s.mean, std::sqrt(s.var)};
      return finish(family, p, sample);
    }
    case FamilyId::Lognormal: {
      require_positive_support(family, s);
      double lmean = s.sum_log / n;
      double lvar = 0.0;
      for (double x : sample.values()) {
        double d = std::log(x) - lmean;
        lvar += d * d;
      }
      lvar /= n;
      if (lvar <= 0.0) fail("degenerate-sample", "zero variance in log domain");
      return finish(family, ParamVector{lmean, std::sqrt(lvar)}, sample);
    }
    case FamilyId::Poisson: {
      if (!s.all_nonneg)
        fail("support-violation", "Poisson requires nonnegative data");
      if (s.mean <= 0.0) fail("degenerate-sample", "zero mean");
      return finish(family, ParamVector{s.mean}, sample);
    }
    case FamilyId::Rayleigh: {
      if (!s.all_nonneg)
        fail("support-violation", "Rayleigh requires nonnegative data");
      return finish(family, ParamVector{std::sqrt(s.sum_sq / (2.0 * n))},
                    sample);
    }
    case FamilyId::HalfNormal: {
      if (!s.all_nonneg)
        fail("support-violation", "HalfNormal requires nonnegative data");
      return finish(family, ParamVector{std::sqrt(s.sum_sq / n)}, sample);
    }
    case FamilyId::InverseGaussian: {
      require_positive_support(family, s);
      double inv_diff = 0.0;
      for (double x : sample.values()) inv_diff += 1.0 / x - 1.0 / s.mean;
      if (inv_diff <= 0.0) fail("degenerate-sample", "zero dispersion");
      return finish(family, ParamVector{s.mean, n / inv_diff}, sample);
    }

    case FamilyId::Gamma: {
      require_positive_support(family, s);
      double a0 = s.var > 0.0 ? s.mean * s.mean / s.var : 10.0;
      a0 = std::clamp(a0, 1e-3, 1e6);
      double b0 = s.mean / a0;
      const double S = s.sum, SL = s.sum_log;
      TransformedFit tf{
          [](const double* t) {
            return ParamVector{std::exp(t[0]), std::exp(t[1])};
          },
          [&](const ParamVector& p) {
            double a = p[0], b = p[1];
            return n * (detail::lgamma(a) + a * std::log(b)) +
                   (1.0 - a) * SL + S / b;
          }};
      return simplex_fit(family, sample, tf,
                         {{std::log(a0), std::log(b0)}}, {0.3, 0.3});
    }
    case FamilyId::Nakagami: {
      require_positive_support(family, s);
      // Work on squares: X^2 ~ Gamma(mu, omega/mu).
      double m2 = s.sum_sq / n;
      double v2 = 0.0;
      for (double x : sample.values()) {
        double d = x * x - m2;
        v2 += d * d;
      }
      v2 /= n;
      double mu0 = v2 > 0.0 ? std::clamp(m2 * m2 / v2, 0.5, 1e6) : 1.0;
      const double S2 = s.sum_sq, SL = s.sum_log;
      TransformedFit tf{
          [](const double* t) {
            return ParamVector{0.5 + std::exp(t[0]), std::exp(t[1])};
          },
          [&](const ParamVector& p) {
            double mu = p[0], om = p[1];
            return -n * (std::log(2.0) + mu * std::log(mu / om) -
                         detail::lgamma(mu)) -
                   (2.0 * mu - 1.0) * SL + mu / om * S2;
          }};
      return simplex_fit(family, sample, tf,
                         {{std::log(std::max(mu0 - 0.5, 1e-3)), std::log(m2)}},
                         {0.3, 0.3});
    }
    case FamilyId::Weibull: {
      require_positive_support(family, s);
      double lmean = s.sum_log / n;
      double lvar = 0.0;
      for (double x : sample.values()) {
        double d = std::log(x) - lmean;
        lvar += d * d;
      }
      lvar = std::max(lvar / n, 1e-12);
      double k0 = detail::kPi / std::sqrt(6.0 * lvar);
      double la0 = lmean + detail::kEulerGamma / k0;
      TransformedFit tf{
          [](const double* t) {
            return ParamVector{std::exp(t[0]), std::exp(t[1])};
          },
          [&](const ParamVector& p) {
            return nll_generic(family, p, sample);
          }};
      return simplex_fit(family, sample, tf, {{la0, std::log(k0)}},
                         {0.2, 0.2});
    }
    case FamilyId::Logistic: {
      double sig0 = std::max(std::sqrt(s.var) * std::sqrt(3.0) / detail::kPi,
                             1e-12);
      TransformedFit tf{
          [](const double* t) { return ParamVector{t[0], std::exp(t[1])}; },
          [&](const ParamVector& p) { return nll_generic(family, p, sample); }};
      return simplex_fit(family, sample, tf, {{s.mean, std::log(sig0)}},
                         {0.1 * sig0 + 1e-9, 0.2});
    }
    case FamilyId::Loglogistic: {
      require_positive_support(family, s);
      double lmean = s.sum_log / n;
      double lvar = 0.0;
      for (double x : sample.values()) {
        double d = std::log(x) - lmean;
        lvar += d * d;
      }
      lvar = std::max(lvar / n, 1e-12);
      double sig0 = std::sqrt(3.0 * lvar) / detail::kPi;
      TransformedFit tf{
          [](const double* t) { return ParamVector{t[0], std::exp(t[1])}; },
          [&](const ParamVector& p) { return nll_generic(family, p, sample); }};
      return simplex_fit(family, sample, tf, {{lmean, std::log(sig0)}},
                         {0.1 * sig0 + 1e-9, 0.2});
    }
    case FamilyId::ExtremeValue: {
      double sig0 = std::max(std::sqrt(6.0 * s.var) / detail::kPi, 1e-12);
      double mu0 = s.mean + detail::kEulerGamma * sig0;
      TransformedFit tf{
          [](const double* t) { return ParamVector{t[0], std::exp(t[1])}; },
          [&](const ParamVector& p) { return nll_generic(family, p, sample); }};
      return simplex_fit(family, sample, tf, {{mu0, std::log(sig0)}},
                         {0.1 * sig0 + 1e-9, 0.2});
    }
    case FamilyId::BirnbaumSaunders: {
      require_positive_support(family, s);
      double beta0 = s.median;
      double g0 = s.mean > beta0 ? std::sqrt(2.0 * (s.mean / beta0 - 1.0))
                                 : std::sqrt(s.var) / s.mean;
      g0 = std::clamp(g0, 1e-3, 1e3);
      TransformedFit tf{
          [](const double* t) {
            return ParamVector{std::exp(t[0]), std::exp(t[1])};
          },
          [&](const ParamVector& p) { return nll_generic(family, p, sample); }};
      return simplex_fit(family, sample, tf,
                         {{std::log(beta0), std::log(g0)}}, {0.2, 0.2});
    }

    case FamilyId::TLocationScale: {
      double sd = std::sqrt(s.var);
      double rob = s.iqr > 0.0 ? s.iqr / 1.349 : sd;
      std::vector<std::vector<double>> starts;
      for (double nu0 : {1.5, 4.0, 12.0}) {
        double sig0 = nu0 > 2.5 ? sd * std::sqrt((nu0 - 2.0) / nu0) : rob;
        sig0 = std::max(sig0, 1e-12);
        starts.push_back({s.median, std::log(sig0), std::log(nu0)});
      }
      TransformedFit tf{
          [](const double* t) {
            return ParamVector{t[0], std::exp(t[1]), std::exp(t[2])};
          },
          [&](const ParamVector& p) { return nll_generic(family, p, sample); }};
      return simplex_fit(family, sample, tf, starts,
                         {0.1 * rob + 1e-9, 0.25, 0.4});
    }
    case FamilyId::GeneralizedExtremeValue: {
      double sig0 = std::max(std::sqrt(6.0 * s.var) / detail::kPi, 1e-12);
      double mu0 = s.mean - detail::kEulerGamma * sig0;
      std::vector<std::vector<double>> starts = {
          {-0.2, std::log(sig0), mu0},
          {1e-4, std::log(sig0), mu0},
          {0.2, std::log(sig0), mu0}};
      TransformedFit tf{
          [](const double* t) {
            return ParamVector{t[0], std::exp(t[1]), t[2]};
          },
          [&](const ParamVector& p) { return nll_generic(family, p, sample); }};
      return simplex_fit(family, sample, tf, starts,
                         {0.1, 0.25, 0.1 * sig0 + 1e-9});
    }

    default:
      fail("unknown-family", "unhandled family in mle_fit");
  }
}

}  // namespace ltm
