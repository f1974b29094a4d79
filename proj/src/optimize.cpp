#include "ldpcball/optimize.hpp"

#include <cmath>

#include "ldpcball/errors.hpp"

namespace ldpcball {

void OptimizationSettings::validate() const {
  if (grid_points < 2 || inner_grid_points < 2 || crossover_grid < 2) {
    throw DomainError("optimization grids need at least 2 points");
  }
  if (!(x_tol > 0.0 && f_tol > 0.0 && crossover_tol > 0.0 && sign_eps >= 0.0)) {
    throw DomainError("optimization tolerances must be positive");
  }
  if (max_iter == 0) throw DomainError("max_iter must be positive");
}

OptimizationSettings OptimizationSettings::inner() const {
  OptimizationSettings s = *this;
  s.grid_points = inner_grid_points;
  return s;
}

Minimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                        const OptimizationSettings& settings) {
  if (!(lo <= hi)) throw DomainError("minimize_scalar: empty interval");
  if (lo == hi) return {lo, f(lo)};

  const std::size_t points = settings.grid_points;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  auto grid_x = [&](std::size_t i) { return i + 1 == points ? hi : lo + step * static_cast<double>(i); };

  Minimum best{lo, f(lo)};
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < points; ++i) {
    const double x = grid_x(i);
    const double fx = f(x);
    if (fx < best.fx) {
      best = {x, fx};
      best_i = i;
    }
  }

  double a = grid_x(best_i == 0 ? 0 : best_i - 1);
  double b = grid_x(best_i + 1 >= points ? points - 1 : best_i + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c);
  double fd = f(d);

  for (std::size_t it = 0; it < settings.max_iter && b - a > settings.x_tol; ++it) {
    if (std::abs(fc - fd) <= settings.f_tol) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
  }

  if (fc < best.fx) best = {c, fc};
  if (fd < best.fx) best = {d, fd};
  return best;
}

}  // namespace ldpcball
