#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ldpcball/bitvector.hpp"
#include "ldpcball/linear_code.hpp"

namespace ldpcball {

using CosetId = std::uint64_t;

/// build_table refuses codes with more than 2^26 cosets.
inline constexpr std::size_t max_table_code_dim = 26;
/// Coset enumeration (2^dual_dim members) refuses larger duals.
inline constexpr std::size_t max_enum_dual_dim = 26;
/// Leader weights are stored in one byte.
inline constexpr std::size_t max_table_length = 255;

/// Coset counts per leader weight: sizes[k] = |S_k|, k = 0..diameter.
struct SphereProfile {
  std::vector<std::uint64_t> sizes;
};

/// The coset leader graph of a code: every coset of C⊥ with its leader weight.
///
/// A coset is identified by the free-column bit pattern of its canonical
/// representative, so ids form the group Z_2^code_dim and the coset of x ⊕ y
/// has id id(x) ^ id(y). generator_images()[j-1] is the id of e_j.
class CosetTable {
 public:
  const LinearCode& code() const noexcept { return code_; }
  const EchelonBasis& basis() const noexcept { return code_.basis(); }
  std::size_t n() const noexcept { return code_.n(); }
  std::size_t code_dim() const noexcept { return code_.code_dim(); }
  std::uint64_t coset_count() const noexcept { return std::uint64_t{1} << code_dim(); }

  std::span<const std::uint8_t> leader_weights() const noexcept { return leader_weight_; }
  std::uint8_t leader_weight(CosetId id) const { return leader_weight_.at(id); }
  std::span<const std::uint64_t> generator_images() const noexcept { return images_; }

  CosetId id_of(const BitVector& x) const;
  /// Fast path for n <= 64 with bit j-1 holding coordinate j.
  CosetId id_of_word(std::uint64_t x) const;

  /// Copy with one leader weight replaced. Used to plant faults when testing
  /// the verification suites; never produced by build_table.
  CosetTable with_leader_weight(CosetId id, std::uint8_t weight) const;

  friend CosetTable build_table(const LinearCode& code);
  friend CosetTable build_table_serial(const LinearCode& code);

 private:
  CosetTable(LinearCode code, std::vector<std::uint64_t> images, std::vector<std::uint8_t> weights)
      : code_(std::move(code)), images_(std::move(images)), leader_weight_(std::move(weights)) {}

  LinearCode code_;
  std::vector<std::uint64_t> images_;
  std::vector<std::uint8_t> leader_weight_;
};

/// BFS from the zero coset over edges c -> c ^ image(e_j). Throws
/// ResourceError when code_dim > 26 or n > 255.
CosetTable build_table(const LinearCode& code);
/// Same table via the serial reference BFS.
CosetTable build_table_serial(const LinearCode& code);

SphereProfile sphere_profile(const CosetTable& table);
std::uint64_t ball_size(const CosetTable& table, std::size_t r);
std::size_t diameter(const CosetTable& table);

/// Σ over cosets of ρ^ℓ (1-ρ)^(n-ℓ), ℓ the leader weight: the probability that
/// a Bernoulli(ρ) vector is its coset's leader. Terms are formed in log space.
double exact_leader_probability(const CosetTable& table, double rho);

/// Generators j (with multiplicity) whose edge leads from `id` into the next sphere.
std::size_t next_sphere_neighbor_count(const CosetTable& table, CosetId id);

/// Minimum-weight member of x + C⊥, ties broken by lex_compare.
/// Enumerates 2^dual_dim members; ResourceError past max_enum_dual_dim.
BitVector coset_leader(const LinearCode& code, const BitVector& x);

/// True iff no member of x + C⊥ has strictly smaller weight.
bool is_min_weight_in_coset(const LinearCode& code, const BitVector& x);

}  // namespace ldpcball
