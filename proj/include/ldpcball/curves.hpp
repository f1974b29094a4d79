#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ldpcball/bounds.hpp"
#include "ldpcball/optimize.hpp"

namespace ldpcball {

inline constexpr const char* version_string = "0.1.0";

/// A sampled bound: (δ, rate) pairs on a uniform grid.
struct BoundCurve {
  std::string kind;
  std::optional<std::size_t> w;
  std::vector<std::pair<double, double>> samples;
};

/// Every curve name understood by curve_value.
const std::vector<std::string>& known_curves();
bool is_known_curve(const std::string& name);
/// True for curves that depend on the weight parameter.
bool curve_uses_w(const std::string& name);

/// Default ensemble: jpl1, jpl2, r3, bh1, bh4, bh5, improved4, improved5; w = 4 adds r4 and cor13.
std::vector<std::string> default_curves(std::size_t w);

/// Evaluates a named curve. Names: gv, jpl1, jpl2, r3, r4, cor13, bh1, bh4, bh5, improved4, improved5.
double curve_value(const std::string& name, std::size_t w, double delta, InnerBound mode = InnerBound::lax,
                   const OptimizationSettings& settings = {});

/// min, min + step, ... while <= max (with a 1e-9 relative slack on the last point).
std::vector<double> delta_grid(double min, double max, double step);

/// Samples each named curve on the grid; the δ points are evaluated in parallel.
std::vector<BoundCurve> sample_curves(const std::vector<std::string>& names, std::size_t w,
                                      const std::vector<double>& grid, InnerBound mode = InnerBound::lax,
                                      const OptimizationSettings& settings = {});

/// Header `delta,<names>` then one row per δ, values printed with %.9g.
void write_csv(std::ostream& out, const std::vector<BoundCurve>& curves);

nlohmann::json curves_to_json(const std::vector<BoundCurve>& curves, std::size_t w, InnerBound mode,
                              const OptimizationSettings& settings);

std::string format_g9(double x);

}  // namespace ldpcball
