#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fbl/errors.hpp"

namespace fbl {

struct PicardOptions {
  int max_iterations = 50;
  /// Stop once ‖u_{n+1} - u_n‖ falls below this.
  double tolerance = 1e-10;
  /// Smallness level η and fitted bilinear constant C_fit.
  double eta = 0.1;
  double c_fit = 1.0;
  /// Consecutive non-contracting steps tolerated before giving up.
  int divergence_window = 3;
};

template <class T>
struct PicardResult {
  T solution;
  double y_norm = 0.0;
  std::vector<double> iterate_norms;
  std::vector<double> increments;
  /// increments[n] / increments[n-1]
  std::vector<double> rates;
  int iterations = 0;
  bool converged = false;
  /// ‖u - y - B(u, u)‖ at the returned iterate.
  double residual = 0.0;

  /// 4ηC_fit; the fixed point is certified when ‖y‖ ≤ η and this is < 1.
  double contraction_bound = 0.0;
  bool certified = false;

  double final_norm() const { return iterate_norms.empty() ? 0.0 : iterate_norms.back(); }
  double max_rate() const {
    double m = 0.0;
    for (double r : rates) m = std::max(m, r);
    return m;
  }
};

struct NoObserver {
  template <class T>
  void operator()(const T&, double) const noexcept {}
};

/// Picard iteration u_{n+1} = y + B(u_n, u_n) from u_0 = start, in a Banach
/// space with norm `norm`. T needs +, - and copy. `observe(u_n, ‖u_n‖)` sees
/// every iterate, u_0 included. Throws NumericDivergence when the step size
/// fails to shrink for `divergence_window` consecutive steps or becomes
/// non-finite; the exception carries the history so far.
template <class T, class Bilinear, class Norm, class Observer = NoObserver>
PicardResult<T> picard_solve_from(const T& y, const T& start, Bilinear&& bilinear, Norm&& norm,
                                  const PicardOptions& options, Observer&& observe = {}) {
  PicardResult<T> out{start, 0.0, {}, {}, {}};
  out.y_norm = norm(y);
  out.contraction_bound = 4.0 * options.eta * options.c_fit;
  out.certified = out.y_norm <= options.eta && out.contraction_bound < 1.0;
  out.iterate_norms.push_back(&start == &y ? out.y_norm : norm(start));
  observe(out.solution, out.iterate_norms.back());

  int growing = 0;
  for (int n = 1; n <= options.max_iterations; ++n) {
    T next = y + bilinear(out.solution, out.solution);
    const double step = norm(next - out.solution);
    out.solution = std::move(next);
    out.iterations = n;
    out.iterate_norms.push_back(norm(out.solution));
    observe(out.solution, out.iterate_norms.back());
    if (!std::isfinite(step) || !std::isfinite(out.iterate_norms.back()))
      throw NumericDivergence("Picard iteration produced a non-finite iterate", out.iterate_norms,
                              out.rates);
    if (!out.increments.empty() && out.increments.back() > 0.0) {
      const double rate = step / out.increments.back();
      out.rates.push_back(rate);
      growing = rate >= 1.0 ? growing + 1 : 0;
      if (growing >= options.divergence_window)
        throw NumericDivergence("Picard iteration stopped contracting (rate >= 1 for " +
                                    std::to_string(growing) + " consecutive steps)",
                                out.iterate_norms, out.rates);
    }
    out.increments.push_back(step);
    if (step < options.tolerance) {
      out.converged = true;
      break;
    }
  }
  out.residual = norm(out.solution - y - bilinear(out.solution, out.solution));
  return out;
}

/// The standard start u_0 = y.
template <class T, class Bilinear, class Norm, class Observer = NoObserver>
PicardResult<T> picard_solve(const T& y, Bilinear&& bilinear, Norm&& norm,
                             const PicardOptions& options, Observer&& observe = {}) {
  return picard_solve_from(y, y, std::forward<Bilinear>(bilinear), std::forward<Norm>(norm),
                           options, std::forward<Observer>(observe));
}

}  // namespace fbl
