#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "ldpcball/coset_table.hpp"
#include "ldpcball/errors.hpp"
#include "ldpcball/harness.hpp"
#include "ldpcball/partition.hpp"

using namespace ldpcball;
using fixtures::bits;

using Sizes = std::vector<std::size_t>;

TEST_CASE("partition of the example code") {
  const auto code = fixtures::example5();
  const auto p = partition_coordinates(code);
  CHECK(p.classes[3] == Sizes{1, 2, 3});
  CHECK(p.classes[2].empty());
  CHECK(p.classes[1] == Sizes{4, 5});
  CHECK(p.class_sizes() == Sizes{2, 0, 3});
  CHECK_FALSE(check_partition_invariants(code, p).has_value());
  REQUIRE(p.tuples.size() == 3);
  CHECK(p.tuples[0].source == 0);
  CHECK(p.tuples[1].coords == Sizes{4});
  CHECK(p.tuples[1].source == 1);
  CHECK(p.tuples[2].coords == Sizes{5});
  CHECK(p.tuples[2].source == 2);
  CHECK(tuple_containment_count(p, 3, bits("11100")) == 1);
  CHECK(tuple_containment_count(p, 3, bits("11111")) == 1);
  CHECK(tuple_containment_count(p, 1, bits("11111")) == 2);
  CHECK(tuple_containment_count(p, 3, BitVector(5)) == 0);

  const auto j = to_json(p);
  CHECK(j["I"]["3"] == nlohmann::json({1, 2, 3}));
  CHECK(j["tuples"][1]["source"] == 2);
}

TEST_CASE("partition edge cases") {
  const auto p2 = partition_coordinates(fixtures::full2());
  CHECK(p2.classes[1] == Sizes{1, 2});
  CHECK(p2.classes[2].empty());
  CHECK(p2.classes[3].empty());
  const auto p4 = partition_coordinates(fixtures::ones4());
  CHECK(p4.classes[4] == Sizes{1, 2, 3, 4});
}

TEST_CASE("partition invariants detect corruption") {
  const auto code = fixtures::example5();
  auto p = partition_coordinates(code);
  p.tuples[1].source = 0;  // {1,2,3} does not contain coordinate 4
  CHECK(check_partition_invariants(code, p).has_value());

  auto q = partition_coordinates(code);
  std::swap(q.classes[1], q.classes[3]);
  CHECK(check_partition_invariants(code, q).has_value());
}

TEST_CASE("partition invariants on generated codes") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GeneratorConfig c;
    c.n = 6 + seed % 40;
    c.w = 3 + seed % 4;
    c.m = (c.n + c.w - 1) / c.w + seed % 5;
    c.seed = seed;
    c.mode = seed % 2 ? GeneratorMode::regular_tanner : GeneratorMode::uniform_support;
    const auto code = generate_code(c);
    const auto p = partition_coordinates(code);
    const auto bad = check_partition_invariants(code, p);
    CHECK_MESSAGE(!bad, (bad ? *bad : std::string()));
    for (std::size_t k = 1; k <= p.w; ++k) CHECK(p.classes[k].size() % k == 0);
  }
}

TEST_CASE("heavy class") {
  const auto h = find_heavy_class(Sizes{2, 0, 3}, 5, 3, 0.25);
  CHECK(h.k == 3);
  CHECK(h.A == doctest::Approx(128.0));
  CHECK(h.size == 3);

  const auto all1 = find_heavy_class(Sizes{10, 0, 0, 0}, 10, 4, 0.3);
  CHECK(all1.k == 1);

  CHECK_THROWS_AS(find_heavy_class(Sizes{1, 1}, 2, 2, 0.3), DomainError);
  CHECK_THROWS_AS(find_heavy_class(Sizes{1, 1, 1}, 4, 3, 0.3), DomainError);
  CHECK_THROWS_AS(find_heavy_class(Sizes{1, 1, 1}, 3, 3, 0.5), DomainError);
}

TEST_CASE("heavy class certificate is maximal and strict") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t w = 3 + rng() % 3;
    const std::size_t n = 1 + rng() % 200;
    Sizes sizes(w, 0);
    for (std::size_t i = 0; i < n; ++i) ++sizes[rng() % w];
    const double rho = 0.01 + 0.48 * static_cast<double>(rng() % 1000) / 1000.0;
    const auto h = find_heavy_class(sizes, n, w, rho);
    const double A = 2.0 / std::pow(rho, double(w));
    const double floor = double(n) / (2.0 * double(w) * std::pow(A, double(w)));
    double tail = 0;
    for (std::size_t k = h.k + 1; k <= w; ++k) tail += double(sizes[k - 1]);
    CHECK(double(sizes[h.k - 1]) > A * tail);
    CHECK(double(sizes[h.k - 1]) > floor);
    // No larger k qualifies.
    for (std::size_t k = h.k + 1; k <= w; ++k) {
      double t = 0;
      for (std::size_t j = k + 1; j <= w; ++j) t += double(sizes[j - 1]);
      CHECK_FALSE((double(sizes[k - 1]) > A * t && double(sizes[k - 1]) > floor));
    }
  }
}

TEST_CASE("heavy class exists for every composition") {
  const std::vector<double> rhos{0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.45, 0.499};
  CHECK(exhaustive_heavy_class_check(30, 4, rhos) > 5000);
  CHECK(random_heavy_class_check(10000, 1000, 4, 17) == 10000);
}

TEST_CASE("chernoff constant") {
  CHECK(chernoff_constant(3, 0.25) == doctest::Approx(7.46452477703e-11).epsilon(1e-9));
  CHECK(chernoff_constant(3, 0.2) == doctest::Approx(5.1295823676e-12).epsilon(1e-9));
  double prev = 0.0;
  for (int i = 1; i < 500; ++i) {
    const double c = chernoff_constant(4, i / 1000.0);
    CHECK(c > prev);
    prev = c;
  }
  CHECK(chernoff_constant(3, 1e-6) < 1e-60);
  CHECK_THROWS_AS(chernoff_constant(2, 0.2), DomainError);
  CHECK_THROWS_AS(chernoff_constant(3, 0.5), DomainError);
}

TEST_CASE("tuple claim and chernoff on the example") {
  const auto code = fixtures::example5();
  const auto table = build_table(code);
  const auto p = partition_coordinates(code);
  const auto o = check_tuple_claim(table, p, 0.25);
  CHECK(o.heavy.k == 3);
  CHECK(o.t == 1);
  CHECK(o.limit == doctest::Approx(0.0078125));
  CHECK(o.worst == 0);
  CHECK_FALSE(o.witness.has_value());
  CHECK(verify_leader_tuple_claim(code, table, 0.25).passed());

  const auto c = evaluate_chernoff(table, p, 0.25);
  CHECK(c.exact_p == doctest::Approx(0.474609375));
  CHECK(c.bound == doctest::Approx(0.998048781107475).epsilon(1e-12));
  CHECK(c.holds);
  CHECK(chernoff_check(code, table, 0.25).passed());

  const auto single = fixtures::full2();
  CHECK(verify_leader_tuple_claim(single, build_table(single), 0.3).passed());
}

TEST_CASE("tuple claim catches a planted fault") {
  const auto code = fixtures::example5();
  // Pretend the coset of 11100 (= C⊥) needs weight 3: 11100 becomes "minimum weight".
  const auto table = build_table(code).with_leader_weight(0, 3);
  const auto o = check_tuple_claim(table, partition_coordinates(code), 0.25);
  REQUIRE(o.witness.has_value());
  CHECK(*o.witness == bits("11100"));
}

TEST_CASE("monte carlo leader probability") {
  const auto code = fixtures::example5();
  const auto strict = montecarlo_leader_probability(code, 0.25, 200000, 1, LeaderMode::strict);
  CHECK(strict.ci_low <= 0.474609375);
  CHECK(strict.ci_high >= 0.474609375);
  const auto loose = montecarlo_leader_probability(code, 0.25, 200000, 1, LeaderMode::min_weight);
  // Counts every minimum-weight member: 0.75^5 + 5 * 0.25 * 0.75^4.
  CHECK(loose.ci_low <= 0.6328125);
  CHECK(loose.ci_high >= 0.6328125);
  CHECK(loose.hits >= strict.hits);

  const auto again = montecarlo_leader_probability(code, 0.25, 200000, 1, LeaderMode::strict);
  CHECK(again.hits == strict.hits);

  const auto single = montecarlo_leader_probability(fixtures::full2(), 0.3, 100000, 5);
  CHECK(single.ci_low <= 0.49);
  CHECK(single.ci_high >= 0.49);
  CHECK(montecarlo_leader_probability(code, 1e-9, 1000, 2).estimate == 1.0);
  CHECK_THROWS_AS(montecarlo_leader_probability(code, 0.25, 0, 1), DomainError);
}
