#include "ldpcball/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ldpcball/errors.hpp"
#include "ldpcball/kernels.hpp"

namespace ldpcball {

const std::vector<std::string>& known_curves() {
  static const std::vector<std::string> names{"gv",  "jpl1", "jpl2", "r3",        "r4",       "cor13",
                                              "bh1", "bh4",  "bh5",  "improved4", "improved5"};
  return names;
}

bool is_known_curve(const std::string& name) {
  const auto& k = known_curves();
  return std::find(k.begin(), k.end(), name) != k.end();
}

bool curve_uses_w(const std::string& name) {
  return name == "cor13" || name.starts_with("bh") || name.starts_with("improved");
}

std::vector<std::string> default_curves(std::size_t w) {
  std::vector<std::string> names{"jpl1", "jpl2", "r3", "bh1", "bh4", "bh5", "improved4", "improved5"};
  if (w == 4) {
    names.insert(names.begin() + 3, {"r4", "cor13"});
  }
  return names;
}

double curve_value(const std::string& name, std::size_t w, double delta, InnerBound mode,
                   const OptimizationSettings& settings) {
  if (name == "gv") return gv(delta);
  if (name == "jpl1") return jpl1(delta);
  if (name == "jpl2") return jpl2(delta, settings);
  if (name == "r3") return r3_bound(delta);
  if (name == "r4") return r4_bound(delta);
  if (name == "cor13") return cor13_bound(w, delta);
  if (name == "bh1") return bh_bound(1, w, delta, settings);
  if (name == "bh4") return bh_bound(4, w, delta, settings);
  if (name == "bh5") return bh_bound(5, w, delta, settings);
  if (name == "improved4") return improved_bound(4, w, delta, mode, settings);
  if (name == "improved5") return improved_bound(5, w, delta, mode, settings);
  throw DomainError("unknown curve: " + name);
}

std::vector<double> delta_grid(double min, double max, double step) {
  if (!(step > 0.0)) throw DomainError("delta step must be positive");
  if (!(min >= 0.0 && max <= 0.5 && min <= max)) throw DomainError("delta range must satisfy 0 <= min <= max <= 1/2");
  const auto count = static_cast<std::size_t>(std::floor((max - min) / step * (1.0 + 1e-9) + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = std::min(max, min + step * static_cast<double>(i));
  return grid;
}

std::vector<BoundCurve> sample_curves(const std::vector<std::string>& names, std::size_t w,
                                      const std::vector<double>& grid, InnerBound mode,
                                      const OptimizationSettings& settings) {
  settings.validate();
  for (const auto& name : names) {
    if (!is_known_curve(name)) throw DomainError("unknown curve: " + name);
  }
  const auto rows = kernels::omp::map_grid<std::vector<double>>(grid, [&](double delta) {
    std::vector<double> row;
    row.reserve(names.size());
    for (const auto& name : names) row.push_back(curve_value(name, w, delta, mode, settings));
    return row;
  });

  std::vector<BoundCurve> curves;
  for (std::size_t c = 0; c < names.size(); ++c) {
    BoundCurve curve{names[c], curve_uses_w(names[c]) ? std::optional<std::size_t>(w) : std::nullopt, {}};
    curve.samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) curve.samples.emplace_back(grid[i], rows[i][c]);
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::string format_g9(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<BoundCurve>& curves) {
  out << "delta";
  for (const auto& c : curves) out << ',' << c.kind;
  out << '\n';
  if (curves.empty()) return;
  for (std::size_t i = 0; i < curves.front().samples.size(); ++i) {
    out << format_g9(curves.front().samples[i].first);
    for (const auto& c : curves) out << ',' << format_g9(c.samples[i].second);
    out << '\n';
  }
}

nlohmann::json curves_to_json(const std::vector<BoundCurve>& curves, std::size_t w, InnerBound mode,
                              const OptimizationSettings& settings) {
  nlohmann::json j;
  j["version"] = version_string;
  j["w"] = w;
  j["inner_bound_mode"] = mode == InnerBound::strict ? "strict" : "lax";
  j["settings"] = {{"grid_points", settings.grid_points},
                   {"inner_grid_points", settings.inner_grid_points},
                   {"x_tol", settings.x_tol},
                   {"f_tol", settings.f_tol},
                   {"max_iter", settings.max_iter}};
  auto& arr = j["curves"] = nlohmann::json::array();
  for (const auto& c : curves) {
    nlohmann::json cj{{"kind", c.kind}};
    cj["w"] = c.w ? nlohmann::json(*c.w) : nlohmann::json(nullptr);
    auto& samples = cj["samples"] = nlohmann::json::array();
    for (const auto& [d, r] : c.samples) samples.push_back({d, r});
    arr.push_back(std::move(cj));
  }
  return j;
}

}  // namespace ldpcball
