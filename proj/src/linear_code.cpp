#include "ldpcball/linear_code.hpp"

#include <string>
#include <utility>

#include "ldpcball/errors.hpp"

namespace ldpcball {

EchelonBasis reduce_echelon(std::span<const BitVector> vectors, std::size_t n) {
  std::vector<BitVector> work;
  work.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != n) throw DomainError("reduce_echelon: vector length differs from n");
    if (!v.is_zero()) work.push_back(v);
  }

  EchelonBasis basis;
  basis.n = n;
  std::size_t next = 0;  // rows [0, next) are pivot rows
  for (std::size_t col = 1; col <= n && next < work.size(); ++col) {
    std::size_t pick = next;
    while (pick < work.size() && !work[pick].get(col)) ++pick;
    if (pick == work.size()) continue;
    std::swap(work[next], work[pick]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != next && work[r].get(col)) work[r] ^= work[next];
    }
    basis.pivots.push_back(col);
    ++next;
  }
  work.resize(next);
  basis.rows = std::move(work);

  std::size_t p = 0;
  for (std::size_t col = 1; col <= n; ++col) {
    if (p < basis.pivots.size() && basis.pivots[p] == col) {
      ++p;
    } else {
      basis.free_columns.push_back(col);
    }
  }
  return basis;
}

BitVector canonical_rep(const BitVector& x, const EchelonBasis& basis) {
  if (x.size() != basis.n) throw DomainError("canonical_rep: length mismatch");
  BitVector out = x;
  for (std::size_t r = 0; r < basis.rows.size(); ++r) {
    if (out.get(basis.pivots[r])) out ^= basis.rows[r];
  }
  return out;
}

std::uint64_t coset_id(const BitVector& x, const EchelonBasis& basis) {
  if (basis.free_columns.size() > 64) {
    throw ResourceError("coset_id: too many free columns", basis.free_columns.size(), 64);
  }
  const BitVector rep = canonical_rep(x, basis);
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < basis.free_columns.size(); ++i) {
    if (rep.get(basis.free_columns[i])) id |= std::uint64_t{1} << i;
  }
  return id;
}

bool in_span(const BitVector& x, const EchelonBasis& basis) { return canonical_rep(x, basis).is_zero(); }

LinearCode::LinearCode(std::size_t n, std::size_t w, std::vector<BitVector> dual_spanning)
    : n_(n), w_(w), dual_spanning_(std::move(dual_spanning)) {
  if (n_ == 0) throw DomainError("block length must be positive");
  if (w_ == 0) throw DomainError("max dual weight must be positive");
  first_row_.assign(n_ + 1, dual_spanning_.size());
  for (std::size_t r = 0; r < dual_spanning_.size(); ++r) {
    const auto& v = dual_spanning_[r];
    if (v.size() != n_) throw DomainError("spanning vector " + std::to_string(r + 1) + " has wrong length");
    const auto wt = v.weight();
    if (wt == 0) throw DomainError("spanning vector " + std::to_string(r + 1) + " is zero");
    if (wt > w_) {
      throw DomainError("spanning vector " + std::to_string(r + 1) + " has weight " + std::to_string(wt) +
                        " > w=" + std::to_string(w_));
    }
    for (auto i : v.support()) {
      if (first_row_[i] == dual_spanning_.size()) first_row_[i] = r;
    }
  }
  for (std::size_t i = 1; i <= n_; ++i) {
    if (first_row_[i] == dual_spanning_.size()) {
      throw DomainError("coordinate " + std::to_string(i) + " is not covered by any spanning vector");
    }
  }
  basis_ = reduce_echelon(dual_spanning_, n_);
}

std::size_t LinearCode::first_row_containing(std::size_t i) const {
  if (i == 0 || i > n_) throw DomainError("coordinate out of range");
  return first_row_[i];
}

}  // namespace ldpcball
