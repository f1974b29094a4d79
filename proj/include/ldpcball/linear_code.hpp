#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldpcball/bitvector.hpp"

namespace ldpcball {

/// Reduced row-echelon basis of a GF(2) span.
///
/// Pivots are chosen by the smallest-index rule: columns are scanned 1..n and
/// each takes the first remaining row with a one there. Every pivot column is
/// set in exactly one row. Rows are ordered by pivot.
struct EchelonBasis {
  std::size_t n = 0;
  std::vector<BitVector> rows;
  std::vector<std::size_t> pivots;        // 1-based, strictly increasing
  std::vector<std::size_t> free_columns;  // 1-based complement of pivots

  std::size_t rank() const noexcept { return rows.size(); }
};

/// Zero vectors are dropped. Throws DomainError when lengths differ.
EchelonBasis reduce_echelon(std::span<const BitVector> vectors, std::size_t n);

/// The member of x + span(basis) that is zero on every pivot column.
BitVector canonical_rep(const BitVector& x, const EchelonBasis& basis);

/// Free-column bit pattern of canonical_rep(x): bit i is coordinate free_columns[i].
/// Requires at most 64 free columns.
std::uint64_t coset_id(const BitVector& x, const EchelonBasis& basis);

bool in_span(const BitVector& x, const EchelonBasis& basis);

/// Binary linear code C given by a spanning set of its dual C⊥.
///
/// Invariants checked at construction: every spanning vector is nonzero with
/// weight at most w, and together they cover all coordinates 1..n.
class LinearCode {
 public:
  LinearCode(std::size_t n, std::size_t w, std::vector<BitVector> dual_spanning);

  std::size_t n() const noexcept { return n_; }
  std::size_t w() const noexcept { return w_; }
  std::size_t m() const noexcept { return dual_spanning_.size(); }
  const std::vector<BitVector>& dual_spanning() const noexcept { return dual_spanning_; }
  const EchelonBasis& basis() const noexcept { return basis_; }
  std::size_t dual_dim() const noexcept { return basis_.rank(); }
  std::size_t code_dim() const noexcept { return n_ - basis_.rank(); }

  /// Index (0-based) of the first spanning vector whose support contains i.
  std::size_t first_row_containing(std::size_t i) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.w_ == b.w_ && a.dual_spanning_ == b.dual_spanning_;
  }

 private:
  std::size_t n_;
  std::size_t w_;
  std::vector<BitVector> dual_spanning_;
  EchelonBasis basis_;
  std::vector<std::size_t> first_row_;
};

}  // namespace ldpcball
