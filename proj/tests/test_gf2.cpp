#include <doctest.h>

#include <filesystem>
#include <random>

#include "fixtures.hpp"
#include "ldpcball/code_io.hpp"
#include "ldpcball/errors.hpp"
#include "ldpcball/linear_code.hpp"

using namespace ldpcball;
using fixtures::bits;

TEST_CASE("xor_add") {
  CHECK(xor_add(bits("11100"), bits("00110")) == bits("11010"));
  const auto v = bits("10110");
  CHECK(xor_add(v, v).is_zero());
  CHECK(xor_add(v, BitVector(5)) == v);
  CHECK_THROWS_AS(xor_add(bits("101"), bits("1010")), DomainError);
}

TEST_CASE("bitvector accessors") {
  auto v = BitVector::from_support(70, std::vector<std::size_t>{1, 64, 65, 70});
  CHECK(v.weight() == 4);
  CHECK(v.get(65));
  CHECK_FALSE(v.get(2));
  CHECK(v.support() == std::vector<std::size_t>{1, 64, 65, 70});
  v.flip(65);
  CHECK(v.weight() == 3);
  CHECK_THROWS_AS(v.get(0), DomainError);
  CHECK_THROWS_AS(v.set(71), DomainError);
  CHECK(BitVector::from_word(5, 0b10010).to_string() == "01001");
  CHECK(bits("01001").low_word() == 0b10010);
  CHECK_THROWS_AS(BitVector::from_string("01a"), ParseError);
  CHECK(bits("0110").overlap(bits("0111")) == 2);
  CHECK(bits("0110").is_subset_of(bits("0111")));
  CHECK_FALSE(bits("1110").is_subset_of(bits("0111")));
}

TEST_CASE("lex_compare") {
  CHECK(lex_compare(bits("00001"), bits("01000")) == std::strong_ordering::less);
  CHECK(lex_compare(bits("01000"), bits("00001")) == std::strong_ordering::greater);
  CHECK(lex_compare(bits("10101"), bits("10101")) == std::strong_ordering::equal);
  CHECK(lex_compare(bits("00010"), bits("00100")) == std::strong_ordering::less);
  CHECK_THROWS_AS(lex_compare(bits("0"), bits("00")), DomainError);
}

TEST_CASE("reduce_echelon") {
  const std::vector<BitVector> rows{bits("11100"), bits("00110"), bits("01001")};
  const auto b = reduce_echelon(rows, 5);
  CHECK(b.rank() == 3);
  CHECK(b.pivots == std::vector<std::size_t>{1, 2, 3});
  CHECK(b.free_columns == std::vector<std::size_t>{4, 5});

  const std::vector<BitVector> dup{bits("11000"), bits("11000")};
  CHECK(reduce_echelon(dup, 5).rank() == 1);
  const std::vector<BitVector> zeros{BitVector(5)};
  CHECK(reduce_echelon(zeros, 5).rank() == 0);
}

TEST_CASE("canonical_rep identifies cosets") {
  const auto code = fixtures::example5();
  const auto& basis = code.basis();
  CHECK(canonical_rep(bits("11100"), basis).is_zero());
  CHECK(canonical_rep(bits("10000"), basis) == canonical_rep(bits("01100"), basis));
  CHECK(coset_id(bits("10000"), basis) == coset_id(bits("01100"), basis));
  CHECK(coset_id(bits("10000"), basis) != coset_id(bits("00010"), basis));
  CHECK(in_span(bits("10101"), basis) == in_span(xor_add(bits("10101"), bits("00110")), basis));
}

TEST_CASE("canonical_rep property: same output iff difference in span") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 10;
    std::vector<BitVector> rows;
    for (int r = 0; r < 4; ++r) rows.push_back(BitVector::from_word(n, rng() & 0x3FF));
    const auto basis = reduce_echelon(rows, n);
    for (int k = 0; k < 50; ++k) {
      const auto x = BitVector::from_word(n, rng() & 0x3FF);
      const auto y = BitVector::from_word(n, rng() & 0x3FF);
      const bool same = canonical_rep(x, basis) == canonical_rep(y, basis);
      CHECK(same == in_span(xor_add(x, y), basis));
      CHECK((coset_id(x, basis) ^ coset_id(y, basis)) == coset_id(xor_add(x, y), basis));
      for (auto p : basis.pivots) CHECK_FALSE(canonical_rep(x, basis).get(p));
    }
  }
}

TEST_CASE("LinearCode validation") {
  CHECK_THROWS_AS(LinearCode(3, 3, {bits("110")}), DomainError);   // coordinate 3 uncovered
  CHECK_THROWS_AS(LinearCode(3, 1, {bits("110"), bits("001")}), DomainError);  // weight above w
  CHECK_THROWS_AS(LinearCode(3, 3, {bits("000"), bits("111")}), DomainError);
  const auto code = fixtures::example5();
  CHECK(code.dual_dim() == 3);
  CHECK(code.code_dim() == 2);
  CHECK(code.first_row_containing(3) == 0);
  CHECK(code.first_row_containing(4) == 1);
  CHECK(code.first_row_containing(5) == 2);
}

TEST_CASE("code file round trip") {
  const auto code = parse_code(fixtures::example5_text);
  CHECK(code == fixtures::example5());
  CHECK(format_code(code) == fixtures::example5_text);
  CHECK(format_code(parse_code("5 3 3\n3 2 1\n 4 3\n5 2\n")) == fixtures::example5_text);

  const auto path = std::filesystem::temp_directory_path() / "ldpcball_roundtrip.cc";
  write_code_file(path, code);
  CHECK(read_code_file(path) == code);
  std::filesystem::remove(path);
}

TEST_CASE("code file errors name the problem") {
  auto message = [](const char* text) {
    try {
      (void)parse_code(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("5 3 3\n1 2 3\n3 4\n").find("line") != std::string::npos);
  CHECK(message("4 1 3\n1 2 3\n").find("uncovered coordinates: 4") != std::string::npos);
  CHECK(message("3 1 3\n1 1 2\n").find("line 2") != std::string::npos);
  CHECK(message("3 1 3\n1 4\n").find("line 2") != std::string::npos);
  CHECK(message("4 1 2\n1 2 3 4\n").find("line 2") != std::string::npos);
  CHECK(message("").find("empty") != std::string::npos);
}

TEST_CASE("alist input") {
  // 5 columns, 3 checks: rows {1,2,3}, {3,4}, {2,5}.
  const char* alist =
      "5 3\n"
      "2 3\n"
      "1 2 2 1 1\n"
      "3 2 2\n"
      "1 0\n1 3\n1 2\n2 0\n3 0\n"
      "1 2 3\n3 4 0\n2 5 0\n";
  const auto code = parse_alist(alist);
  CHECK(code.n() == 5);
  CHECK(code.w() == 3);
  CHECK(code.dual_spanning() == fixtures::example5().dual_spanning());
  CHECK_THROWS_AS(parse_alist("5 3\n2 3\n"), ParseError);
}
