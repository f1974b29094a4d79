#pragma once

#include <array>
#include <cstddef>

#include "ldpcball/bitvector.hpp"
#include "ldpcball/coset_table.hpp"
#include "ldpcball/linear_code.hpp"
#include "ldpcball/partition.hpp"

namespace ldpcball {

/// Class fractions α_j = |I_j|/n for j = 1..4 (alpha[0] is α_1).
struct AlphaProfile {
  std::array<double, 4> alpha{1.0, 0.0, 0.0, 0.0};

  static AlphaProfile from_partition(const Partition& p);
  double sum() const noexcept { return alpha[0] + alpha[1] + alpha[2] + alpha[3]; }
  /// α_2/2 + α_3/3 + α_4/2
  double reach() const noexcept { return alpha[1] / 2.0 + alpha[2] / 3.0 + alpha[3] / 2.0; }
};

/// Clears s(u) ∩ I_1 by adding, for each such i, the source vector of i's
/// singleton tuple. The result lies in u + C⊥.
BitVector eliminate_I1(const BitVector& u, const Partition& p, const LinearCode& code);

enum class PairStep {
  single_pass,  // one sweep over the I_2 pairs
  fixpoint,     // re-sweep until no pair is fully contained
};

/// Three-step normalization for w = 4. Returns u_2 ∈ u + C⊥ with
/// |u_2| <= |u|, s(u_2) ∩ I_1 = s(u) ∩ I_1, and every j-tuple of I_j
/// (j = 2, 3, 4) meeting s(u_2) in at most ⌊j/2⌋ coordinates.
///
/// Within a step, tuples are visited by increasing smallest coordinate. The
/// step invariants are re-checked after every step; a failure throws
/// std::logic_error.
BitVector normalize_representative(const BitVector& u, const Partition& p, const LinearCode& code,
                                   PairStep mode = PairStep::single_pass);

/// True when x meets every j-tuple of I_j in at most ⌊j/2⌋ coordinates for
/// j = 2..w, and additionally misses I_1 when `include_I1` is set.
bool satisfies_tuple_caps(const BitVector& x, const Partition& p, bool include_I1);

/// (α_2/2 + α_3/3 + α_4/2) · n, computed from the class sizes.
double diameter_bound(const Partition& p);

double base4(double rho);  // (1-ρ)^4 + 4ρ(1-ρ)^3 + 6ρ²(1-ρ)²
double base3(double rho);  // (1-ρ)^3 + 3ρ(1-ρ)²

/// log2 of base4^{α_4 n/4} · base3^{α_3 n/3} · (1-ρ²)^{α_2 n/2}. Requires 0 <= ρ <= 1/2.
double structure_probability(double rho, const AlphaProfile& alphas, std::size_t n);

struct Lemma44Values {
  double lhs = 0.0;    // base4^{1/4}
  double rhs3 = 0.0;   // base3^{1/3}
  double rhs2 = 0.0;   // (1-ρ²)^{1/2}
  bool holds = false;  // lhs >= max(rhs3, rhs2) - 1e-12
};

Lemma44Values lemma44_values(double rho);
bool lemma44_check(double rho);

struct StructureMaximum {
  double log2_probability = 0.0;
  AlphaProfile argmax;
};

/// Closed-form maximum over Δ(ρ): α_4 = 2ρ, α_1 = 1-2ρ, value (ρn/2)·log2 base4(ρ).
StructureMaximum max_structure_probability(double rho, std::size_t n);

struct StructureGridCheck {
  double closed_form = 0.0;
  double grid_max = 0.0;
  AlphaProfile grid_argmax;
  bool closed_form_dominates = false;  // grid_max <= closed_form + 1e-9
  bool argmax_matches = false;         // grid argmax has α_2 = α_3 = 0 and α_4 within one step of 2ρ
};

/// Grid search over Δ(ρ) with the given step per α coordinate.
StructureGridCheck grid_check_max_structure(double rho, std::size_t n, double resolution = 0.01);

/// Probability that a Bernoulli(ρ) vector has minimum weight in its coset and
/// meets the j = 2..4 tuple caps. Exhaustive over F_2^n (n <= 30).
double exact_structured_min_weight_probability(const CosetTable& table, const Partition& p, double rho);

}  // namespace ldpcball
