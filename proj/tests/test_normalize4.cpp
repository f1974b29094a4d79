#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "ldpcball/coset_table.hpp"
#include "ldpcball/errors.hpp"
#include "ldpcball/harness.hpp"
#include "ldpcball/normalize4.hpp"

using namespace ldpcball;
using fixtures::bits;

TEST_CASE("eliminate_I1") {
  const auto code = fixtures::example5(4);
  const auto p = partition_coordinates(code);
  CHECK(p.classes[1] == std::vector<std::size_t>{4, 5});
  CHECK(eliminate_I1(bits("00010"), p, code) == bits("00100"));
  CHECK(eliminate_I1(bits("10100"), p, code) == bits("10100"));
  for (std::uint64_t x = 0; x < 32; ++x) {
    const auto u = BitVector::from_word(5, x);
    const auto once = eliminate_I1(u, p, code);
    CHECK(eliminate_I1(once, p, code) == once);
    CHECK_FALSE(once.get(4));
    CHECK_FALSE(once.get(5));
    CHECK(coset_id(once, code.basis()) == coset_id(u, code.basis()));
  }
  auto broken = p;
  broken.tuples[broken.tuple_of[4]].coords = {5};
  CHECK_THROWS_AS(eliminate_I1(bits("00010"), broken, code), DomainError);
}

TEST_CASE("normalize_representative on the all-ones dual") {
  const auto code = fixtures::ones4();
  const auto p = partition_coordinates(code);
  CHECK(normalize_representative(bits("1110"), p, code) == bits("0001"));
  CHECK(normalize_representative(bits("1100"), p, code) == bits("1100"));
  CHECK(normalize_representative(BitVector(4), p, code).is_zero());
  CHECK(normalize_representative(bits("1111"), p, code).is_zero());
  CHECK_THROWS_AS(normalize_representative(bits("11100"), partition_coordinates(fixtures::example5(3)),
                                           fixtures::example5(3)),
                  DomainError);
}

TEST_CASE("diameter bound") {
  const auto code = fixtures::ones4();
  const auto p = partition_coordinates(code);
  CHECK(diameter_bound(p) == doctest::Approx(2.0));
  CHECK(diameter(build_table(code)) == 2);

  const LinearCode singles(3, 4, {bits("100"), bits("010"), bits("001")});
  CHECK(diameter_bound(partition_coordinates(singles)) == 0.0);
}

TEST_CASE("structure probability") {
  AlphaProfile a;
  a.alpha = {0.0, 0.0, 0.0, 1.0};
  CHECK(structure_probability(0.0, a, 50) == 0.0);
  CHECK(structure_probability(0.5, a, 4) == doctest::Approx(-0.540568381362703).epsilon(1e-13));
  CHECK(structure_probability(0.3, AlphaProfile{}, 50) == 0.0);
  CHECK(base4(0.25) == doctest::Approx(0.94921875).epsilon(1e-15));
  CHECK_THROWS_AS(structure_probability(0.6, a, 4), DomainError);

  const auto m = max_structure_probability(0.25, 100);
  CHECK(m.log2_probability == doctest::Approx(-0.939843704927739).epsilon(1e-13));
  CHECK(m.argmax.alpha[3] == doctest::Approx(0.5));
  CHECK(m.argmax.alpha[0] == doctest::Approx(0.5));
  const auto zero = max_structure_probability(0.0, 100);
  CHECK(zero.log2_probability == 0.0);
  CHECK(zero.argmax.alpha[3] == 0.0);
}

TEST_CASE("closed-form maximum dominates the grid over the feasible simplex") {
  for (int i = 1; i <= 9; ++i) {
    const double rho = 0.05 * i;
    const auto g = grid_check_max_structure(rho, 100, 0.01);
    CHECK_MESSAGE(g.closed_form_dominates, "rho " << rho);
    CHECK_MESSAGE(g.argmax_matches, "rho " << rho);
    CHECK(std::abs(g.grid_max - g.closed_form) <= 1e-9);  // 2ρ lies on the grid
  }
}

TEST_CASE("fourth-root inequality") {
  const auto half = lemma44_values(0.5);
  CHECK(half.lhs == doctest::Approx(0.910580143418936).epsilon(1e-13));
  CHECK(half.rhs3 == doctest::Approx(std::cbrt(0.5)));
  CHECK(half.rhs2 == doctest::Approx(std::sqrt(0.75)));
  CHECK(half.holds);
  const auto zero = lemma44_values(0.0);
  CHECK(zero.lhs == 1.0);
  CHECK(zero.holds);
  for (int i = 0; i <= 500; ++i) CHECK(lemma44_check(i / 1000.0));
}

TEST_CASE("normalization exhaustively on generated w=4 codes") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GeneratorConfig c;
    c.n = 8 + seed % 4;
    c.w = 4;
    c.m = c.n / 3 + 1;
    c.seed = seed;
    const auto code = generate_code(c);
    const auto table = build_table(code);
    const auto p = partition_coordinates(code);
    CHECK_FALSE(check_normalization(table, p).has_value());
    CHECK_FALSE(check_diameter_bound(table, p).has_value());
    const std::vector<double> rhos{0.05, 0.1, 0.2, 0.3, 0.4, 0.45};
    CHECK_FALSE(check_structure_probability(table, p, rhos).has_value());
  }
}

TEST_CASE("structured probability on the all-ones dual") {
  // Every vector of weight <= 2 is minimum weight in its coset, and those are
  // exactly the vectors meeting the single 4-tuple in <= 2 coordinates.
  const auto code = fixtures::ones4();
  const auto table = build_table(code);
  const auto p = partition_coordinates(code);
  for (double rho : {0.1, 0.25, 0.5}) {
    const double exact = exact_structured_min_weight_probability(table, p, rho);
    const double q = 1 - rho;
    const double expected = std::pow(q, 4) + 4 * rho * std::pow(q, 3) + 6 * rho * rho * q * q;
    CHECK(exact == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::log2(exact) <= structure_probability(rho, AlphaProfile::from_partition(p), 4) + 1e-12);
  }
}
