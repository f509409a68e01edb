#ifndef LTM_SRC_NELDER_MEAD_HPP_
#define LTM_SRC_NELDER_MEAD_HPP_

// Derivative-free simplex minimizer for the low-dimensional (<= 3)
// negative log-likelihood surfaces used by mle_fit.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace ltm::detail {

struct NmResult {
  std::vector<double> x;
  double f = std::numeric_limits<double>::infinity();
  bool converged = false;
  int evals = 0;
};

/// Minimizes `f` starting from `x0` with per-dimension initial steps.
/// Convergence: simplex function spread below `ftol` (absolute) or
/// `max_evals` exhausted.
inline NmResult nelder_mead(const std::function<double(const double*)>& f,
                            std::vector<double> x0,
                            const std::vector<double>& step, double ftol,
                            int max_evals) {
  const std::size_t n = x0.size();
  struct Vertex {
    std::vector<double> x;
    double f;
  };
  std::vector<Vertex> s(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    double v = f(x.data());
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  s[0] = {x0, eval(x0)};
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v{x0, 0.0};
    v.x[i] += step[i];
    v.f = eval(v.x);
    s[i + 1] = std::move(v);
  }

  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (evals < max_evals) {
    std::sort(s.begin(), s.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (s[n].f - s[0].f <= ftol && std::isfinite(s[n].f)) {
      return {s[0].x, s[0].f, true, evals};
    }
    for (std::size_t j = 0; j < n; ++j) {
      double c = 0.0;
      for (std::size_t i = 0; i < n; ++i) c += s[i].x[j];
      centroid[j] = c / static_cast<double>(n);
    }
    auto blend = [&](std::vector<double>& out, double coef) {
      for (std::size_t j = 0; j < n; ++j)
        out[j] = centroid[j] + coef * (centroid[j] - s[n].x[j]);
    };
    blend(xr, 1.0);
    double fr = eval(xr);
    if (fr < s[0].f) {
      blend(xe, 2.0);
      double fe = eval(xe);
      if (fe < fr)
        s[n] = {xe, fe};
      else
        s[n] = {xr, fr};
    } else if (fr < s[n - 1].f) {
      s[n] = {xr, fr};
    } else {
      if (fr < s[n].f) {
        blend(xc, 0.5);  // outside contraction
      } else {
        blend(xc, -0.5);  // inside contraction
      }
      double fc = eval(xc);
      if (fc < std::min(fr, s[n].f)) {
        s[n] = {xc, fc};
      } else {
        // shrink toward best
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j)
            s[i].x[j] = s[0].x[j] + 0.5 * (s[i].x[j] - s[0].x[j]);
          s[i].f = eval(s[i].x);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(),
            [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  return {s[0].x, s[0].f, false, evals};
}

}  // namespace ltm::detail

#endif  // LTM_SRC_NELDER_MEAD_HPP_
