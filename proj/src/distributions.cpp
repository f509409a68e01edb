#include "ltm/distributions.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "families.hpp"
#include "special.hpp"

namespace ltm {

namespace {

constexpr FamilyId kAllFamilies[kNumFamilies] = {
    FamilyId::BirnbaumSaunders,
    FamilyId::ExtremeValue,
    FamilyId::Gamma,
    FamilyId::GeneralizedExtremeValue,
    FamilyId::HalfNormal,
    FamilyId::InverseGaussian,
    FamilyId::Logistic,
    FamilyId::Loglogistic,
    FamilyId::Lognormal,
    FamilyId::Nakagami,
    FamilyId::Normal,
    FamilyId::Poisson,
    FamilyId::Rayleigh,
    FamilyId::TLocationScale,
    FamilyId::Weibull,
};

constexpr std::string_view kFamilyNames[kNumFamilies] = {
    "BirnbaumSaunders", "ExtremeValue", "Gamma", "GeneralizedExtremeValue",
    "HalfNormal",       "InverseGaussian", "Logistic", "Loglogistic",
    "Lognormal",        "Nakagami",     "Normal", "Poisson",
    "Rayleigh",         "tLocationScale", "Weibull",
};

struct Schema {
  std::size_t arity;
  std::string_view names[3];
};

const Schema& schema(FamilyId family) {
  static const Schema kSchemas[kNumFamilies] = {
      {2, {"beta", "gamma", ""}},   // BirnbaumSaunders
      {2, {"mu", "sigma", ""}},     // ExtremeValue
      {2, {"a", "b", ""}},          // Gamma
      {3, {"k", "sigma", "mu"}},    // GeneralizedExtremeValue
      {1, {"sigma", "", ""}},       // HalfNormal
      {2, {"mu", "lambda", ""}},    // InverseGaussian
      {2, {"mu", "sigma", ""}},     // Logistic
      {2, {"mu", "sigma", ""}},     // Loglogistic
      {2, {"mu", "sigma", ""}},     // Lognormal
      {2, {"mu", "omega", ""}},     // Nakagami
      {2, {"mu", "sigma", ""}},     // Normal
      {1, {"lambda", "", ""}},      // Poisson
      {1, {"sigma", "", ""}},       // Rayleigh
      {3, {"mu", "sigma", "nu"}},   // TLocationScale
      {2, {"a", "b", ""}},          // Weibull
  };
  return kSchemas[static_cast<std::size_t>(family)];
}

}  // namespace

std::span<const FamilyId> all_families() { return kAllFamilies; }

std::string_view family_name(FamilyId family) {
  return kFamilyNames[static_cast<std::size_t>(family)];
}

FamilyId family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumFamilies; ++i)
    if (kFamilyNames[i] == name) return kAllFamilies[i];
  fail("unknown-family", "no distribution family named '" + std::string(name) +
                             "'");
}

std::span<const std::string_view> param_names(FamilyId family) {
  const Schema& s = schema(family);
  return {s.names, s.arity};
}

ParamVector::ParamVector(std::initializer_list<double> values) {
  if (values.size() > 3) fail("invalid-params", "at most 3 parameters");
  size_ = values.size();
  std::copy(values.begin(), values.end(), v_.begin());
}

ParamVector ParamVector::for_family(FamilyId family,
                                    std::span<const double> values) {
  const Schema& s = schema(family);
  if (values.size() != s.arity)
    fail("invalid-params",
         std::string(family_name(family)) + " takes " +
             std::to_string(s.arity) + " parameter(s), got " +
             std::to_string(values.size()));
  ParamVector p;
  p.size_ = values.size();
  std::copy(values.begin(), values.end(), p.v_.begin());
  validate_params(family, p);
  return p;
}

void validate_params(FamilyId family, const ParamVector& p) {
  const Schema& s = schema(family);
  auto bad = [&](std::string_view why) {
    fail("invalid-params", std::string(family_name(family)) + ": " +
                               std::string(why));
  };
  if (p.size() != s.arity) bad("wrong parameter count");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!std::isfinite(p[i])) bad("parameters must be finite");

  switch (family) {
    case FamilyId::BirnbaumSaunders:
      if (p[0] <= 0.0 || p[1] <= 0.0) bad("beta > 0 and gamma > 0 required");
      break;
    case FamilyId::ExtremeValue:
    case FamilyId::Logistic:
    case FamilyId::Loglogistic:
    case FamilyId::Lognormal:
    case FamilyId::Normal:
      if (p[1] <= 0.0) bad("sigma > 0 required");
      break;
    case FamilyId::Gamma:
    case FamilyId::Weibull:
      if (p[0] <= 0.0 || p[1] <= 0.0) bad("a > 0 and b > 0 required");
      break;
    case FamilyId::GeneralizedExtremeValue:
      if (p[1] <= 0.0) bad("sigma > 0 required");
      break;
    case FamilyId::HalfNormal:
    case FamilyId::Rayleigh:
      if (p[0] <= 0.0) bad("sigma > 0 required");
      break;
    case FamilyId::InverseGaussian:
      if (p[0] <= 0.0 || p[1] <= 0.0) bad("mu > 0 and lambda > 0 required");
      break;
    case FamilyId::Nakagami:
      if (p[0] < 0.5) bad("mu >= 0.5 required");
      if (p[1] <= 0.0) bad("omega > 0 required");
      break;
    case FamilyId::Poisson:
      if (p[0] <= 0.0) bad("lambda > 0 required");
      break;
    case FamilyId::TLocationScale:
      if (p[1] <= 0.0) bad("sigma > 0 required");
      if (p[2] <= 0.0) bad("nu > 0 required");
      break;
  }
}

SampleSet::SampleSet(std::vector<double> values, bool require_positive)
    : values_(std::move(values)) {
  if (values_.empty()) fail("empty-sample", "sample must be nonempty");
  for (double v : values_) {
    if (!std::isfinite(v)) fail("invalid-sample", "sample values must be finite");
    if (require_positive && v <= 0.0)
      fail("invalid-sample", "size data must be positive");
  }
  std::sort(values_.begin(), values_.end());
}

Ecdf::Ecdf(const SampleSet& sample) : n_(sample.size()) {
  const auto& v = sample.values();
  xs_.reserve(v.size());
  ks_.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (xs_.empty() || v[i] != xs_.back()) {
      xs_.push_back(v[i]);
      ks_.push_back(i + 1);
    } else {
      ks_.back() = i + 1;
    }
  }
}

double Ecdf::operator()(double x) const noexcept {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.begin()) return 0.0;
  return static_cast<double>(ks_[static_cast<std::size_t>(it - xs_.begin()) -
                                 1]) /
         static_cast<double>(n_);
}

Ecdf ecdf(const SampleSet& sample) { return Ecdf(sample); }

double cdf(FamilyId family, const ParamVector& p, double x) {
  validate_params(family, p);
  switch (family) {
    case FamilyId::BirnbaumSaunders:
      return fam::birnbaum_saunders::cdf(p[0], p[1], x);
    case FamilyId::ExtremeValue:
      return fam::gumbel_min::cdf(p[0], p[1], x);
    case FamilyId::Gamma:
      return fam::gamma_dist::cdf(p[0], p[1], x);
    case FamilyId::GeneralizedExtremeValue:
      return fam::gev::cdf(p[0], p[1], p[2], x);
    case FamilyId::HalfNormal:
      return fam::halfnormal::cdf(p[0], x);
    case FamilyId::InverseGaussian:
      return fam::inverse_gaussian::cdf(p[0], p[1], x);
    case FamilyId::Logistic:
      return fam::logistic::cdf(p[0], p[1], x);
    case FamilyId::Loglogistic:
      return fam::loglogistic::cdf(p[0], p[1], x);
    case FamilyId::Lognormal:
      return fam::lognormal::cdf(p[0], p[1], x);
    case FamilyId::Nakagami:
      return fam::nakagami::cdf(p[0], p[1], x);
    case FamilyId::Normal:
      return fam::normal::cdf(p[0], p[1], x);
    case FamilyId::Poisson:
      return fam::poisson::cdf(p[0], x);
    case FamilyId::Rayleigh:
      return fam::rayleigh::cdf(p[0], x);
    case FamilyId::TLocationScale:
      return fam::tls::cdf(p[0], p[1], p[2], x);
    case FamilyId::Weibull:
      return fam::weibull::cdf(p[0], p[1], x);
  }
  return 0.0;
}

namespace detail_dist {

double log_pdf(FamilyId family, const ParamVector& p, double x) {
  switch (family) {
    case FamilyId::BirnbaumSaunders:
      return fam::birnbaum_saunders::log_pdf(p[0], p[1], x);
    case FamilyId::ExtremeValue:
      return fam::gumbel_min::log_pdf(p[0], p[1], x);
    case FamilyId::Gamma:
      return fam::gamma_dist::log_pdf(p[0], p[1], x);
    case FamilyId::GeneralizedExtremeValue:
      return fam::gev::log_pdf(p[0], p[1], p[2], x);
    case FamilyId::HalfNormal:
      return fam::halfnormal::log_pdf(p[0], x);
    case FamilyId::InverseGaussian:
      return fam::inverse_gaussian::log_pdf(p[0], p[1], x);
    case FamilyId::Logistic:
      return fam::logistic::log_pdf(p[0], p[1], x);
    case FamilyId::Loglogistic:
      return fam::loglogistic::log_pdf(p[0], p[1], x);
    case FamilyId::Lognormal:
      return fam::lognormal::log_pdf(p[0], p[1], x);
    case FamilyId::Nakagami:
      return fam::nakagami::log_pdf(p[0], p[1], x);
    case FamilyId::Normal:
      return fam::normal::log_pdf(p[0], p[1], x);
    case FamilyId::Poisson:
      return fam::poisson::log_pmf(p[0], x);
    case FamilyId::Rayleigh:
      return fam::rayleigh::log_pdf(p[0], x);
    case FamilyId::TLocationScale:
      return fam::tls::log_pdf(p[0], p[1], p[2], x);
    case FamilyId::Weibull:
      return fam::weibull::log_pdf(p[0], p[1], x);
  }
  return fam::kNaN;
}

}  // namespace detail_dist

double pdf(FamilyId family, const ParamVector& p, double x) {
  validate_params(family, p);
  double lp = detail_dist::log_pdf(family, p, x);
  return lp == -fam::kInf ? 0.0 : std::exp(lp);
}

double quantile(FamilyId family, const ParamVector& p, double u) {
  validate_params(family, p);
  if (!(u > 0.0 && u < 1.0))
    fail("u-out-of-range", "quantile requires 0 < u < 1");
  switch (family) {
    case FamilyId::BirnbaumSaunders:
      return fam::birnbaum_saunders::quantile(p[0], p[1], u);
    case FamilyId::ExtremeValue:
      return fam::gumbel_min::quantile(p[0], p[1], u);
    case FamilyId::Gamma:
      return fam::gamma_dist::quantile(p[0], p[1], u);
    case FamilyId::GeneralizedExtremeValue:
      return fam::gev::quantile(p[0], p[1], p[2], u);
    case FamilyId::HalfNormal:
      return fam::halfnormal::quantile(p[0], u);
    case FamilyId::InverseGaussian:
      return fam::inverse_gaussian::quantile(p[0], p[1], u);
    case FamilyId::Logistic:
      return fam::logistic::quantile(p[0], p[1], u);
    case FamilyId::Loglogistic:
      return fam::loglogistic::quantile(p[0], p[1], u);
    case FamilyId::Lognormal:
      return fam::lognormal::quantile(p[0], p[1], u);
    case FamilyId::Nakagami:
      return fam::nakagami::quantile(p[0], p[1], u);
    case FamilyId::Normal:
      return fam::normal::quantile(p[0], p[1], u);
    case FamilyId::Poisson:
      return fam::poisson::quantile(p[0], u);
    case FamilyId::Rayleigh:
      return fam::rayleigh::quantile(p[0], u);
    case FamilyId::TLocationScale:
      return fam::tls::quantile(p[0], p[1], p[2], u);
    case FamilyId::Weibull:
      return fam::weibull::quantile(p[0], p[1], u);
  }
  return fam::kNaN;
}

double log_likelihood(FamilyId family, const ParamVector& p,
                      const SampleSet& sample) {
  validate_params(family, p);
  double total = 0.0;
  for (double x : sample.values()) {
    double lp = detail_dist::log_pdf(family, p, x);
    if (lp == -fam::kInf) return -fam::kInf;
    total += lp;
  }
  return total;
}

double analytic_mean(FamilyId family, const ParamVector& p) {
  validate_params(family, p);
  switch (family) {
    case FamilyId::BirnbaumSaunders:
      return fam::birnbaum_saunders::mean(p[0], p[1]);
    case FamilyId::ExtremeValue:
      return fam::gumbel_min::mean(p[0], p[1]);
    case FamilyId::Gamma:
      return fam::gamma_dist::mean(p[0], p[1]);
    case FamilyId::GeneralizedExtremeValue:
      return fam::gev::mean(p[0], p[1], p[2]);
    case FamilyId::HalfNormal:
      return fam::halfnormal::mean(p[0]);
    case FamilyId::InverseGaussian:
      return fam::inverse_gaussian::mean(p[0], p[1]);
    case FamilyId::Logistic:
      return fam::logistic::mean(p[0], p[1]);
    case FamilyId::Loglogistic:
      return fam::loglogistic::mean(p[0], p[1]);
    case FamilyId::Lognormal:
      return fam::lognormal::mean(p[0], p[1]);
    case FamilyId::Nakagami:
      return fam::nakagami::mean(p[0], p[1]);
    case FamilyId::Normal:
      return fam::normal::mean(p[0], p[1]);
    case FamilyId::Poisson:
      return fam::poisson::mean(p[0]);
    case FamilyId::Rayleigh:
      return fam::rayleigh::mean(p[0]);
    case FamilyId::TLocationScale:
      return fam::tls::mean(p[0], p[1], p[2]);
    case FamilyId::Weibull:
      return fam::weibull::mean(p[0], p[1]);
  }
  return fam::kNaN;
}

namespace {

std::string format_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string format_full(double v) {
  if (v == -fam::kInf) return "-inf";
  if (v == fam::kInf) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string fitted_model_json(const FittedModel& m) {
  std::string out = "{\"family\": \"";
  out += family_name(m.family);
  out += "\", \"params\": {";
  auto names = param_names(m.family);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += "\"";
    out += names[i];
    out += "\": ";
    out += format_sig6(m.params[i]);
  }
  out += "}, \"log_likelihood\": ";
  out += format_full(m.log_likelihood);
  out += ", \"sample_size\": ";
  out += std::to_string(m.sample_size);
  out += "}";
  return out;
}

std::string fitted_model_csv_header() {
  return "family,params,log_likelihood,sample_size";
}

std::string fitted_model_csv_row(const FittedModel& m) {
  std::string out(family_name(m.family));
  out += ",";
  auto names = param_names(m.family);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ";";
    out += names[i];
    out += "=";
    out += format_sig6(m.params[i]);
  }
  out += ",";
  out += format_full(m.log_likelihood);
  out += ",";
  out += std::to_string(m.sample_size);
  return out;
}

}  // namespace ltm
