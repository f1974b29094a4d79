#pragma once

#include <cstddef>
#include <functional>

namespace ldpcball {

struct OptimizationSettings {
  std::size_t grid_points = 2048;       // coarse grid for 1-D minimization
  std::size_t inner_grid_points = 256;  // grid for R_LP evaluated inside another minimization
  double x_tol = 1e-9;
  double f_tol = 1e-10;
  std::size_t max_iter = 200;
  std::size_t crossover_grid = 32;  // sign-pattern grid for crossover()
  double crossover_tol = 1e-5;
  double sign_eps = 1e-9;  // A - B counts as positive only above this

  /// Throws DomainError on non-positive tolerances or fewer than 2 grid points.
  void validate() const;
  /// Copy with grid_points replaced by inner_grid_points.
  OptimizationSettings inner() const;
};

struct Minimum {
  double x = 0.0;
  double fx = 0.0;
};

/// Minimizes f on [lo, hi]: evaluates a uniform grid (endpoints included),
/// then refines the best grid cell's neighbourhood by golden-section search.
/// The result is never worse than the best grid point.
Minimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                        const OptimizationSettings& settings = {});

}  // namespace ldpcball
