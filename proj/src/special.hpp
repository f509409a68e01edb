#ifndef LTM_SRC_SPECIAL_HPP_
#define LTM_SRC_SPECIAL_HPP_

// Internal numeric helpers shared by the family math and the bootstrap
// kernels. Thin wrappers over Boost.Math plus a fast normal quantile.

#include <cmath>
#include <limits>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

namespace ltm::detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline double lgamma(double x) { return boost::math::lgamma(x); }
inline double tgamma(double x) { return boost::math::tgamma(x); }
inline double digamma(double x) { return boost::math::digamma(x); }
inline double trigamma(double x) { return boost::math::trigamma(x); }

// Regularized incomplete gamma P(a,x), Q(a,x) and inverses.
inline double gamma_p(double a, double x) { return boost::math::gamma_p(a, x); }
inline double gamma_q(double a, double x) { return boost::math::gamma_q(a, x); }
inline double gamma_p_inv(double a, double p) {
  return boost::math::gamma_p_inv(a, p);
}

// Regularized incomplete beta I_x(a,b) and inverse.
inline double ibeta(double a, double b, double x) {
  return boost::math::ibeta(a, b, x);
}
inline double ibeta_inv(double a, double b, double p) {
  return boost::math::ibeta_inv(a, b, p);
}

inline double norm_pdf(double z) {
  return 0.3989422804014326779399460599343819 * std::exp(-0.5 * z * z);
}

inline double norm_cdf(double z) {
  return 0.5 * std::erfc(-z * 0.7071067811865475244008443621048490);
}

// ln P(Z > z), stable for large positive z.
inline double log_norm_sf(double z) {
  if (z < 37.0) {
    double sf = 0.5 * std::erfc(z * 0.7071067811865475244008443621048490);
    if (sf > 0.0) return std::log(sf);
  }
  // Asymptotic expansion of Mills' ratio.
  double z2 = z * z;
  double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2);
  return -0.5 * z2 - std::log(z * 2.5066282746310005024157652848110453) +
         std::log(series);
}

/// Inverse standard normal CDF, Wichura's PPND16 (AS 241). Relative
/// accuracy about 1e-15 over (0,1).
inline double norm_quantile(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        q * (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                   6.7265770927008700853e4) *
                      r +
                  4.5921953931549871457e4) *
                     r +
                 1.3731693765509461125e4) *
                    r +
                1.9715909503065514427e3) *
                   r +
               1.3314166789178437745e2) *
                  r +
              3.3871328727963666080e0);
    const double den =
        (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
              3.9307895800092710610e4) *
                 r +
             2.1213794301586595867e4) *
                r +
            5.3941960214247511077e3) *
               r +
           6.8718700749205790830e2) *
              r +
          4.2313330701600911252e1) *
             r +
         1.0);
    return num / den;
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  if (r <= 0.0) return (q < 0.0) ? -kInf : kInf;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) *
                 r +
             1.27045825245236838258e0) *
                r +
            3.64784832476320460504e0) *
               r +
           5.76949722146069140550e0) *
              r +
          4.63033784615654529590e0) *
             r +
         1.42343711074968357734e0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) *
                 r +
             1.48103976427480074590e-1) *
                r +
            6.89767334985100004550e-1) *
               r +
           1.67638483018380384940e0) *
              r +
          2.05319162663775882187e0) *
             r +
         1.0);
    val = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) *
                 r +
             2.65321895265761230930e-2) *
                r +
            2.96560571828504891230e-1) *
               r +
           1.78482653991729133580e0) *
              r +
          5.46378491116411436990e0) *
             r +
         6.65790464350110377720e0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) *
                  r +
              1.84631831751005468180e-5) *
                 r +
             7.86869131145613259100e-4) *
                r +
            1.48753612908506148525e-2) *
               r +
           1.36929880922735805310e-1) *
              r +
          5.99832206555887937690e-1) *
             r +
         1.0);
    val = num / den;
  }
  return (q < 0.0) ? -val : val;
}

}  // namespace ltm::detail

#endif  // LTM_SRC_SPECIAL_HPP_
