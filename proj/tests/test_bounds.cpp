#include <doctest.h>

#include <cmath>

#include "ldpcball/bounds.hpp"
#include "ldpcball/errors.hpp"
#include "ldpcball/optimize.hpp"
#include "ldpcball/partition.hpp"

using namespace ldpcball;

TEST_CASE("entropy and GV") {
  CHECK(entropy(0.5) == 1.0);
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(1.0 / 3) == doctest::Approx(0.918295834054490).epsilon(1e-13));
  CHECK_THROWS_AS(entropy(-0.1), DomainError);
  CHECK(gv(0.5) == 0.0);
  CHECK(gv(0.0) == 1.0);
  CHECK(gv(0.11) == doctest::Approx(0.500084041835472).epsilon(1e-12));
  CHECK_THROWS_AS(gv(0.6), DomainError);
}

TEST_CASE("first and second JPL bounds") {
  CHECK(jpl1(0.5) == 0.0);
  CHECK(jpl1(0.0) == 1.0);
  CHECK(jpl1(0.1) == doctest::Approx(0.721928094887362).epsilon(1e-13));
  CHECK(jpl2(0.5) == 0.0);
  // Fine-grid high-precision oracle over u.
  CHECK(jpl2(0.1) == doctest::Approx(0.692740743079).epsilon(1e-9));
  CHECK(jpl1(0.15) - jpl2(0.15) > 1e-4);
  for (int i = 280; i <= 500; ++i) CHECK(std::abs(jpl1(i / 1000.0) - jpl2(i / 1000.0)) <= 1e-6);
  for (int i = 1; i <= 500; ++i) CHECK(jpl2(i / 1000.0) <= jpl1(i / 1000.0));
}

TEST_CASE("weight-three bound") {
  const double plateau = 1.0 / 3 + entropy(1.0 / 3) / 2;
  CHECK(plateau == doctest::Approx(0.792481250360578).epsilon(1e-13));
  CHECK(r3_bound(0.01) == plateau);
  CHECK(r3_bound(0.0) == plateau);
  CHECK(r3_bound(0.5) == 0.0);
  CHECK(r3_bound(0.1) == doctest::Approx(0.685475297227334).epsilon(1e-12));
  CHECK(r3_threshold == doctest::Approx(0.5 - std::sqrt(2.0) / 3).epsilon(1e-15));
  CHECK(std::abs(r3_bound(r3_threshold + 1e-12) - plateau) < 1e-9);
  for (int i = 2; i < 500; ++i) CHECK(r3_bound(i / 1000.0) < jpl1(i / 1000.0));
}

TEST_CASE("weight-four bound and corollary bound") {
  CHECK(r4_bound(0.5) == 0.0);
  CHECK(r4_bound(0.0) == doctest::Approx(1 - 0.25 * std::log2(16.0 / 11)).epsilon(1e-13));
  CHECK(r4_bound(0.0) == doctest::Approx(0.864857904659324).epsilon(1e-13));
  // Near δ = 1/2 the gap is of order ρ^4 and the two values round to the same double.
  for (int i = 1; i < 500; ++i) {
    const double d = i / 1000.0;
    CHECK(r4_gap(d) > 0.0);
    CHECK(r4_bound(d) <= jpl1(d));
    if (r4_gap(d) > 1e-12 * jpl1(d)) CHECK(r4_bound(d) < jpl1(d));
  }
  CHECK(r4_gap(0.3) == doctest::Approx(jpl1(0.3) - r4_bound(0.3)).epsilon(1e-9));

  CHECK(cor13_bound(3, 0.5) == 0.0);
  CHECK(jpl1(0.1) - cor13_bound(3, 0.1) == doctest::Approx(chernoff_constant(3, 0.2)).epsilon(1e-3));
  for (int i = 1; i < 500; ++i) {
    const double d = i / 1000.0;
    CHECK(cor13_bound(3, d) <= jpl1(d));
    CHECK(chernoff_constant(3, jpl_rho(d)) > 0.0);
  }
  CHECK_THROWS_AS(cor13_bound(2, 0.1), DomainError);
}

TEST_CASE("Ben-Haim–Litsyn bounds") {
  CHECK(bh_bound(1, 3, 0.2) == doctest::Approx(0.414946896686243).epsilon(1e-12));
  // Tends to 1 - 1/w as δ -> 0, slowly.
  CHECK(bh_bound(1, 3, 1e-12) == doctest::Approx(2.0 / 3.0).epsilon(0.05));
  for (double d : {0.05, 0.15, 0.3, 0.45}) {
    CHECK(bh_bound(4, 3, d) <= jpl2(d) + 1e-12);
    CHECK(bh_bound(5, 4, d) <= jpl2(d) + 1e-12);
  }
  CHECK_THROWS_AS(bh_bound(2, 3, 0.2), DomainError);
  CHECK_THROWS_AS(bh_bound(4, 2, 0.2), DomainError);
  // Deterministic given settings.
  CHECK(bh_bound(4, 3, 0.33) == bh_bound(4, 3, 0.33));
}

TEST_CASE("improved bounds") {
  for (double d : {0.05, 0.2, 0.3, 0.4, 0.45}) {
    CHECK(improved_bound(4, 3, d) <= bh_bound(4, 3, d) + 1e-12);
    CHECK(improved_bound(5, 3, d) <= bh_bound(5, 3, d) + 1e-12);
    CHECK(improved_bound(4, 4, d) <= bh_bound(4, 4, d) + 1e-12);
    CHECK(improved_bound(4, 6, d) <= bh_bound(4, 6, d) + 1e-12);
  }
  // Footnote magnitude holds in the middle of the range.
  const double gap = bh_bound(4, 3, 0.3) - improved_bound(4, 3, 0.3);
  CHECK(gap > 1e-5);
  CHECK(gap < 1e-3);
  for (double d : {0.29, 0.35, 0.42, 0.48}) {
    CHECK(std::abs(improved_bound(4, 3, d, InnerBound::strict) - improved_bound(4, 3, d, InnerBound::lax)) < 1e-9);
  }
  // Below the coincidence region strict mode keeps the LP bound.
  CHECK(substituted_lp_bound(3, 0.1, InnerBound::strict) == jpl2(0.1));
  CHECK(substituted_lp_bound(3, 0.1, InnerBound::lax) == std::min(jpl2(0.1), r3_bound(0.1)));
}

TEST_CASE("minimize_scalar") {
  const auto m = minimize_scalar([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, 0.0, 1.0);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-4));
  CHECK(m.fx == doctest::Approx(1.0).epsilon(1e-12));
  const auto edge = minimize_scalar([](double x) { return x; }, 0.2, 0.7);
  CHECK(edge.x == 0.2);
  CHECK(minimize_scalar([](double x) { return -x; }, 0.2, 0.7).x == 0.7);
  // Two basins: the grid finds the deeper one.
  const auto two = minimize_scalar([](double x) { return std::min((x - 0.1) * (x - 0.1), (x - 0.8) * (x - 0.8) - 0.01); },
                                   0.0, 1.0);
  CHECK(two.x == doctest::Approx(0.8).epsilon(1e-4));
  OptimizationSettings bad;
  bad.x_tol = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("crossover") {
  auto f = [](double x) { return x; };
  auto g = [](double) { return 0.3; };
  CHECK(crossover(f, g, 0.0, 1.0) == doctest::Approx(0.3).epsilon(1e-4));
  try {
    (void)crossover(f, f, 0.0, 1.0);
    FAIL("expected CrossoverError");
  } catch (const CrossoverError& e) {
    CHECK(e.pattern().find('+') == std::string::npos);
  }
  auto wave = [](double x) { return std::sin(20 * x); };
  auto zero = [](double) { return 0.0; };
  CHECK_THROWS_AS(crossover(wave, zero, 0.1, 1.0), CrossoverError);

  const double sep = crossover([](double d) { return jpl1(d); }, [](double d) { return jpl2(d); }, 0.2, 0.3);
  CHECK(sep == doctest::Approx(0.273).epsilon(0.003 / 0.273));
}

TEST_CASE("bounds are non-increasing and ordered") {
  double prev[6] = {2, 2, 2, 2, 2, 2};
  for (int i = 1; i <= 500; i += 7) {
    const double d = i / 1000.0;
    const double v[6] = {gv(d), jpl1(d), jpl2(d), r3_bound(d), r4_bound(d), bh_bound(1, 3, d)};
    for (int k = 0; k < 6; ++k) {
      // The r4 closed form rises from 0.8649 at δ = 0 to about 0.914 near δ = 0.008.
      if (k != 4 || d > 0.01) CHECK(v[k] <= prev[k] + 1e-12);
      CHECK(v[k] >= 0.0);
      CHECK(v[k] <= 1.0);
      prev[k] = v[k];
    }
    CHECK(gv(d) <= jpl2(d) + 1e-12);
  }
}
