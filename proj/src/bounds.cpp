#include "ldpcball/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "ldpcball/errors.hpp"
#include "ldpcball/partition.hpp"

namespace ldpcball {

namespace {

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 0.5)) throw DomainError("delta must lie in [0, 1/2]");
}

void check_w(std::size_t w) {
  if (w < 3) throw DomainError("w must be at least 3");
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double g_mrrw(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return entropy((1.0 - std::sqrt(1.0 - x)) / 2.0);
}

double shortening_penalty(int variant, std::size_t w) {
  const auto wd = static_cast<double>(w);
  if (variant == 4) return 1.0 - 1.0 / wd;
  if (variant == 5) return 1.0 - 1.0 / (wd - 1.0);
  throw DomainError("bh variant must be 1, 4 or 5");
}

// min over t in [0, 1-2δ] of (1-t)·lp(δ/(1-t)) + t·penalty.
template <class Lp>
BoundValue shortened_minimum(double delta, double penalty, Lp&& lp, const OptimizationSettings& settings) {
  const double t_max = 1.0 - 2.0 * delta;
  auto objective = [&](double t) {
    const double d = t >= t_max ? 0.5 : std::min(0.5, delta / (1.0 - t));
    return (1.0 - t) * lp(d) + t * penalty;
  };
  const auto m = minimize_scalar(objective, 0.0, t_max, settings);
  return {clamp01(m.fx), m.x};
}

}  // namespace

double entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("entropy: p must lie in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -(p * std::log(p) + (1.0 - p) * std::log1p(-p)) / std::numbers::ln2;
}

double jpl_rho(double delta) {
  check_delta(delta);
  return std::max(0.0, 0.5 - std::sqrt(delta * (1.0 - delta)));
}

double gv(double delta) {
  check_delta(delta);
  return std::max(0.0, 1.0 - entropy(delta));
}

double jpl1(double delta) { return entropy(jpl_rho(delta)); }

double jpl2(double delta, const OptimizationSettings& settings) {
  check_delta(delta);
  if (delta == 0.0) return 1.0;
  if (delta == 0.5) return 0.0;
  const double first = jpl1(delta);
  auto objective = [delta](double u) { return 1.0 + g_mrrw(u * u) - g_mrrw(u * u + 2.0 * delta * u + 2.0 * delta); };
  const auto m = minimize_scalar(objective, 0.0, 1.0 - 2.0 * delta, settings);
  return std::clamp(m.fx, 0.0, first);
}

double r3_bound(double delta) {
  check_delta(delta);
  if (delta < r3_threshold) return 1.0 / 3.0 + entropy(1.0 / 3.0) / 2.0;
  const double rho = jpl_rho(delta);
  return clamp01(rho + entropy(std::min(1.0, 2.0 * rho)) / 2.0);
}

double r4_gap(double delta) {
  const double rho = jpl_rho(delta);
  // The base is 1 - P(at least 3 of 4 Bernoulli(ρ)), so log1p keeps the tiny
  // ρ^4-order gap near δ = 1/2.
  const double tail = 4.0 * rho * rho * rho * (1.0 - rho) + rho * rho * rho * rho;
  return -rho / 2.0 * std::log1p(-tail) / std::log(2.0);
}

double r4_bound(double delta) { return clamp01(entropy(jpl_rho(delta)) - r4_gap(delta)); }

double cor13_bound(std::size_t w, double delta) {
  check_w(w);
  const double rho = jpl_rho(delta);
  const double first = entropy(rho);
  if (rho <= 0.0 || rho >= 0.5) return first;  // c(w, ρ) vanishes at ρ = 0; ρ = 1/2 is the δ = 0 limit
  return std::max(0.0, first - chernoff_constant(w, rho));
}

BoundValue bh_bound_detail(int variant, std::size_t w, double delta, const OptimizationSettings& settings) {
  check_w(w);
  check_delta(delta);
  settings.validate();
  if (variant == 1) {
    if (delta == 0.0) return {1.0, 0.0};
    const double denom = entropy((1.0 - std::pow(1.0 - delta, static_cast<double>(w))) / 2.0);
    return {clamp01(1.0 - entropy(delta / 2.0) / denom), 0.0};
  }
  const double penalty = shortening_penalty(variant, w);
  if (delta == 0.0) return {1.0, 0.0};
  if (delta == 0.5) return {0.0, 0.0};
  const auto inner = settings.inner();
  return shortened_minimum(delta, penalty, [&inner](double d) { return jpl2(d, inner); }, settings);
}

double bh_bound(int variant, std::size_t w, double delta, const OptimizationSettings& settings) {
  return bh_bound_detail(variant, w, delta, settings).value;
}

double substituted_lp_bound(std::size_t w, double delta, InnerBound mode, const OptimizationSettings& settings) {
  check_w(w);
  const double lp = jpl2(delta, settings);
  if (mode == InnerBound::strict && std::abs(jpl1(delta) - lp) > 1e-9) return lp;
  if (w == 3) return std::min(lp, r3_bound(delta));
  if (w == 4) return std::min({lp, r4_bound(delta), cor13_bound(4, delta)});
  return std::min(lp, cor13_bound(w, delta));
}

BoundValue improved_bound_detail(int variant, std::size_t w, double delta, InnerBound mode,
                                 const OptimizationSettings& settings) {
  check_w(w);
  check_delta(delta);
  settings.validate();
  const double penalty = shortening_penalty(variant, w);
  if (delta == 0.0) return {substituted_lp_bound(w, 0.0, mode, settings), 0.0};
  if (delta == 0.5) return {0.0, 0.0};
  const auto inner = settings.inner();
  return shortened_minimum(
      delta, penalty, [&](double d) { return substituted_lp_bound(w, d, mode, inner); }, settings);
}

double improved_bound(int variant, std::size_t w, double delta, InnerBound mode,
                      const OptimizationSettings& settings) {
  return improved_bound_detail(variant, w, delta, mode, settings).value;
}

namespace {

std::vector<double> sample_points(double lo, double hi, std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return xs;
}

// Bisects [a, b] with pred(a) != pred(b) down to tol; returns the midpoint.
double bisect(const std::function<bool(double)>& pred, double a, double b, double tol) {
  const bool left = pred(a);
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (pred(mid) == left) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double crossover(const std::function<double(double)>& a, const std::function<double(double)>& b, double lo,
                 double hi, const OptimizationSettings& settings) {
  settings.validate();
  if (!(lo < hi)) throw DomainError("crossover: need lo < hi");
  auto positive = [&](double x) { return a(x) - b(x) > settings.sign_eps; };

  const auto xs = sample_points(lo, hi, settings.crossover_grid);
  std::string pattern;
  std::vector<std::size_t> switches;
  bool prev = false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool s = positive(xs[i]);
    pattern += s ? '+' : '-';
    if (i > 0 && s != prev) switches.push_back(i);
    prev = s;
  }
  if (switches.empty()) throw CrossoverError("no sign change", pattern);
  if (switches.size() > 1) throw CrossoverError("multiple sign changes", pattern);
  const auto i = switches.front();
  return bisect(positive, xs[i - 1], xs[i], settings.crossover_tol);
}

double zero_shortening_onset(int variant, std::size_t w, double lo, double hi, const OptimizationSettings& settings) {
  settings.validate();
  auto at_zero = [&](double d) { return bh_bound_detail(variant, w, d, settings).t <= settings.x_tol; };
  const auto xs = sample_points(lo, hi, settings.crossover_grid);
  std::size_t first = xs.size();
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (!at_zero(xs[i])) break;
    first = i;
  }
  if (first == xs.size()) throw DomainError("zero_shortening_onset: minimizer is not t = 0 at hi");
  if (first == 0) return lo;
  return bisect(at_zero, xs[first - 1], xs[first], settings.crossover_tol);
}

}  // namespace ldpcball
