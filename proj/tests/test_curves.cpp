#include <doctest.h>

#include <sstream>

#include "ldpcball/curves.hpp"
#include "ldpcball/errors.hpp"

using namespace ldpcball;

TEST_CASE("delta grid") {
  CHECK(delta_grid(0.001, 0.5, 0.001).size() == 500);
  CHECK(delta_grid(0.5, 0.5, 0.001) == std::vector<double>{0.5});
  CHECK(delta_grid(0.0, 0.5, 0.1).size() == 6);
  CHECK_THROWS_AS(delta_grid(0.1, 0.6, 0.1), DomainError);
  CHECK_THROWS_AS(delta_grid(0.1, 0.2, 0.0), DomainError);
}

TEST_CASE("curve registry") {
  for (const auto& name : known_curves()) CHECK_NOTHROW(curve_value(name, 4, 0.2));
  CHECK_THROWS_AS(curve_value("nope", 3, 0.2), DomainError);
  CHECK(default_curves(3) ==
        std::vector<std::string>{"jpl1", "jpl2", "r3", "bh1", "bh4", "bh5", "improved4", "improved5"});
  const auto four = default_curves(4);
  CHECK(std::find(four.begin(), four.end(), "r4") != four.end());
  CHECK(std::find(four.begin(), four.end(), "cor13") != four.end());
}

TEST_CASE("CSV and JSON emission") {
  const auto curves = sample_curves({"gv"}, 3, {0.5});
  std::ostringstream out;
  write_csv(out, curves);
  CHECK(out.str() == "delta,gv\n0.5,0\n");

  const auto pair = sample_curves({"jpl1", "r4"}, 4, delta_grid(0.1, 0.2, 0.05));
  std::ostringstream csv;
  write_csv(csv, pair);
  CHECK(csv.str().rfind("delta,jpl1,r4\n0.1,0.721928095,", 0) == 0);
  for (std::size_t i = 0; i < pair[0].samples.size(); ++i) CHECK(pair[1].samples[i].second < pair[0].samples[i].second);

  const auto j = curves_to_json(pair, 4, InnerBound::lax, {});
  CHECK(j["version"] == version_string);
  CHECK(j["curves"].size() == 2);
  CHECK(j["settings"]["grid_points"] == 2048);
  CHECK(format_g9(-0.0) == "0");
  CHECK(format_g9(0.1234567891234) == "0.123456789");
}

TEST_CASE("parallel and serial sweeps agree") {
  const auto grid = delta_grid(0.02, 0.5, 0.04);
  const auto par = sample_curves({"jpl2", "bh4"}, 3, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(par[0].samples[i].second == jpl2(grid[i]));
    CHECK(par[1].samples[i].second == bh_bound(4, 3, grid[i]));
  }
}
