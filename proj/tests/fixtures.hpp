#pragma once

#include <string>
#include <vector>

#include "ldpcball/bitvector.hpp"
#include "ldpcball/linear_code.hpp"

namespace fixtures {

inline ldpcball::BitVector bits(const std::string& s) { return ldpcball::BitVector::from_string(s); }

// Five coordinates, dual spanned by 11100, 00110, 01001.
inline ldpcball::LinearCode example5(std::size_t w = 3) {
  return ldpcball::LinearCode(5, w, {bits("11100"), bits("00110"), bits("01001")});
}

// Dual spanned by the single all-ones word of length 4.
inline ldpcball::LinearCode ones4() { return ldpcball::LinearCode(4, 4, {bits("1111")}); }

// Dual is all of F_2^2: a single coset.
inline ldpcball::LinearCode full2() { return ldpcball::LinearCode(2, 3, {bits("10"), bits("01")}); }

inline const char* example5_text = "5 3 3\n1 2 3\n3 4\n2 5\n";

}  // namespace fixtures
