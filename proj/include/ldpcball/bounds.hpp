#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "ldpcball/optimize.hpp"

namespace ldpcball {

/// Binary entropy with H(0) = H(1) = 0.
double entropy(double p);

/// 1/2 - sqrt(δ(1-δ)).
double jpl_rho(double delta);

double gv(double delta);
/// First JPL bound H(1/2 - sqrt(δ(1-δ))).
double jpl1(double delta);
/// Second JPL (MRRW-II) bound: min over u in (0, 1-2δ] of
/// 1 + g(u²) - g(u² + 2δu + 2δ), g(x) = H((1 - sqrt(1-x))/2), clamped to [0, jpl1].
double jpl2(double delta, const OptimizationSettings& settings = {});

/// ρ + H(2ρ)/2 for δ >= 1/2 - sqrt(2)/3, else 1/3 + H(1/3)/2.
double r3_bound(double delta);
/// H(ρ) - (ρ/2)·log2(1/((1-ρ)^4 + 4ρ(1-ρ)^3 + 6ρ²(1-ρ)²)).
double r4_bound(double delta);
/// jpl1(δ) - r4_bound(δ) before clamping, accurate where both round to the same double.
double r4_gap(double delta);
/// jpl1(δ) - chernoff_constant(w, ρ), floored at 0.
double cor13_bound(std::size_t w, double delta);

inline constexpr double r3_threshold = 0.02859547920896832;  // 1/2 - sqrt(2)/3

struct BoundValue {
  double value = 0.0;
  double t = 0.0;  // minimizing shortening fraction (0 for closed forms)
};

enum class InnerBound {
  lax,     // always substitute the weight-specific bound for R_LP
  strict,  // substitute only where jpl1 and jpl2 agree to 1e-9
};

/// Ben-Haim–Litsyn bounds. Variant 1: 1 - H(δ/2)/H((1-(1-δ)^w)/2).
/// Variants 4 and 5: min over t in [0, 1-2δ] of (1-t)·R_LP(δ/(1-t)) + t - t/w
/// (variant 4) or + t - t/(w-1) (variant 5), with R_LP = jpl2.
BoundValue bh_bound_detail(int variant, std::size_t w, double delta, const OptimizationSettings& settings = {});
double bh_bound(int variant, std::size_t w, double delta, const OptimizationSettings& settings = {});

/// The LP bound with the weight-specific bound substituted: min(jpl2, r3) for
/// w = 3, min(jpl2, r4, cor13(4)) for w = 4, min(jpl2, cor13(w)) for w >= 5.
double substituted_lp_bound(std::size_t w, double delta, InnerBound mode,
                            const OptimizationSettings& settings = {});

/// bh_bound variants 4/5 with substituted_lp_bound in place of R_LP.
BoundValue improved_bound_detail(int variant, std::size_t w, double delta, InnerBound mode = InnerBound::lax,
                                 const OptimizationSettings& settings = {});
double improved_bound(int variant, std::size_t w, double delta, InnerBound mode = InnerBound::lax,
                      const OptimizationSettings& settings = {});

/// Smallest δ in [lo, hi] at which bh_bound_detail's minimizer is t = 0 and
/// stays 0 up to hi (grid of settings.crossover_grid points, then bisection).
double zero_shortening_onset(int variant, std::size_t w, double lo, double hi,
                             const OptimizationSettings& settings = {});

class CrossoverError : public std::runtime_error {
 public:
  CrossoverError(const std::string& what, std::string pattern)
      : std::runtime_error(what + ": sign pattern " + pattern), pattern_(std::move(pattern)) {}
  const std::string& pattern() const noexcept { return pattern_; }

 private:
  std::string pattern_;
};

/// Location where a(δ) - b(δ) > sign_eps switches truth value. The predicate is
/// sampled on settings.crossover_grid points of [lo, hi]; exactly one switch is
/// required (else CrossoverError). The switching cell is bisected to crossover_tol.
double crossover(const std::function<double(double)>& a, const std::function<double(double)>& b, double lo,
                 double hi, const OptimizationSettings& settings = {});

}  // namespace ldpcball
