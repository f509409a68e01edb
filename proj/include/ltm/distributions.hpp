#ifndef LTM_DISTRIBUTIONS_HPP_
#define LTM_DISTRIBUTIONS_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltm/errors.hpp"

namespace ltm {

/// The fifteen candidate distribution families. The enumerator order is
/// the canonical (ASCII-lexicographic) report order.
enum class FamilyId {
  BirnbaumSaunders,
  ExtremeValue,  // minimum-type Gumbel
  Gamma,
  GeneralizedExtremeValue,
  HalfNormal,
  InverseGaussian,
  Logistic,
  Loglogistic,
  Lognormal,
  Nakagami,
  Normal,
  Poisson,
  Rayleigh,
  TLocationScale,
  Weibull,
};

inline constexpr std::size_t kNumFamilies = 15;

/// All families, in canonical order.
std::span<const FamilyId> all_families();

std::string_view family_name(FamilyId family);
FamilyId family_from_name(std::string_view name);  // throws unknown-family

/// Names of the parameters of `family`, in storage order.
std::span<const std::string_view> param_names(FamilyId family);

/// Named real parameters of one distribution family, stored as a flat
/// fixed-capacity array (families have 1..3 parameters).
class ParamVector {
 public:
  ParamVector() = default;
  ParamVector(std::initializer_list<double> values);

  static ParamVector for_family(FamilyId family,
                                std::span<const double> values);

  std::size_t size() const noexcept { return size_; }
  double operator[](std::size_t i) const noexcept { return v_[i]; }
  double& operator[](std::size_t i) noexcept { return v_[i]; }
  std::span<const double> values() const noexcept { return {v_.data(), size_}; }

  bool operator==(const ParamVector& other) const noexcept {
    return size_ == other.size_ &&
           std::equal(v_.begin(), v_.begin() + size_, other.v_.begin());
  }

 private:
  std::array<double, 3> v_{};
  std::size_t size_ = 0;
};

/// Throws invalid-params unless `params` has the right arity for
/// `family` and every value lies inside its declared domain.
void validate_params(FamilyId family, const ParamVector& params);

/// Nonempty sample of sizes in kilobytes (1 kB = 1000 bytes), sorted
/// ascending on construction. Values must be finite; construction with
/// `require_positive` (the default for size data) additionally rejects
/// nonpositive entries.
class SampleSet {
 public:
  explicit SampleSet(std::vector<double> values, bool require_positive = true);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

 private:
  std::vector<double> values_;  // sorted ascending
};

/// Empirical CDF: right-continuous step function with value
/// count(values <= x) / N. Stores unique support points and cumulative
/// counts; duplicates accumulate into a single step.
class Ecdf {
 public:
  explicit Ecdf(const SampleSet& sample);

  double operator()(double x) const noexcept;  // F~(x)
  std::size_t sample_size() const noexcept { return n_; }
  const std::vector<double>& support() const noexcept { return xs_; }
  /// Cumulative count at support()[i] (i.e. N * F~(x_i)).
  const std::vector<std::size_t>& cum_counts() const noexcept { return ks_; }

 private:
  std::vector<double> xs_;
  std::vector<std::size_t> ks_;
  std::size_t n_ = 0;
};

/// A fitted distribution: family, estimated parameters, and the
/// log-likelihood achieved on the sample that produced the fit.
struct FittedModel {
  FamilyId family{};
  ParamVector params;
  double log_likelihood = 0.0;
  std::size_t sample_size = 0;
};

// Core family operations. All are pure functions; `params` is validated
// on every call and invalid-params is thrown on domain violations.

/// CDF of `family` at x. Nondecreasing in x with limits 0 and 1; for
/// Poisson a right-continuous step function over nonnegative integers.
double cdf(FamilyId family, const ParamVector& params, double x);

/// Density (probability mass for Poisson) at x.
double pdf(FamilyId family, const ParamVector& params, double x);

/// Inverse CDF at u in (0,1) (for Poisson: smallest k with cdf(k) >= u).
double quantile(FamilyId family, const ParamVector& params, double u);

/// Sum of ln pdf over the sample; -inf when any point lies outside the
/// support of the family.
double log_likelihood(FamilyId family, const ParamVector& params,
                      const SampleSet& sample);

/// Maximum-likelihood fit. Closed forms where they exist, otherwise
/// Nelder-Mead simplex on the negative log-likelihood with
/// method-of-moments initialization (three starts for the
/// three-parameter families). Throws degenerate-sample for zero-variance
/// data, support-violation when the sample leaves the family's support,
/// and fit-failed when the optimizer does not converge.
FittedModel mle_fit(FamilyId family, const SampleSet& sample);

Ecdf ecdf(const SampleSet& sample);

/// Analytic mean of the family (throws invalid-params; +inf/-inf when
/// the mean does not exist, e.g. tLocationScale with nu <= 1).
double analytic_mean(FamilyId family, const ParamVector& params);

/// Flat fitted-model report: family name, name=value pairs at 6
/// significant digits, log-likelihood, sample size.
std::string fitted_model_json(const FittedModel& model);
std::string fitted_model_csv_row(const FittedModel& model);
std::string fitted_model_csv_header();

}  // namespace ltm

#endif  // LTM_DISTRIBUTIONS_HPP_
