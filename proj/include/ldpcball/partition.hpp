#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldpcball/bitvector.hpp"
#include "ldpcball/coset_table.hpp"
#include "ldpcball/linear_code.hpp"
#include "ldpcball/verification.hpp"

namespace ldpcball {

/// A k-subset U of class I_k together with the spanning vector it came from.
struct PartitionTuple {
  std::size_t k = 0;
  std::vector<std::size_t> coords;  // 1-based, ascending
  BitVector mask;
  std::size_t source = 0;  // 0-based row of dual_spanning
};

/// Coordinate classes I_1..I_w with tuple provenance.
struct Partition {
  std::size_t n = 0;
  std::size_t w = 0;
  std::vector<std::vector<std::size_t>> classes;  // classes[k] = I_k, k = 1..w; classes[0] unused
  std::vector<PartitionTuple> tuples;             // creation order: k = w..1, rows in input order
  std::vector<std::size_t> class_of;              // class_of[i] for i = 1..n; [0] unused
  std::vector<std::size_t> tuple_of;              // index into tuples for coordinate i

  /// |I_1|, ..., |I_w|.
  std::vector<std::size_t> class_sizes() const;
  /// Indices into `tuples` of the level-k tuples, ordered by smallest coordinate.
  std::vector<std::size_t> tuples_at(std::size_t k) const;
  /// Union of the classes I_lo..I_hi as a mask.
  BitVector class_mask(std::size_t lo, std::size_t hi) const;
};

/// Greedy partition: for k = w down to 1, one pass over v_1..v_m in input order;
/// a vector with exactly k coordinates outside I_w ∪ … ∪ I_k (I_k growing
/// during the pass) donates them to I_k as one tuple.
Partition partition_coordinates(const LinearCode& code);

/// First violated partition invariant (disjoint cover, |I_k| divisible by k,
/// tuple provenance, tuples tiling their class), or nullopt.
std::optional<std::string> check_partition_invariants(const LinearCode& code, const Partition& p);

nlohmann::json to_json(const Partition& p);

struct HeavyClassCertificate {
  std::size_t k = 0;
  double A = 0.0;  // 2 / ρ^w
  double threshold_tail = 0.0;
  double threshold_floor = 0.0;
  std::size_t size = 0;  // |I_k|
};

/// Largest k with |I_k| > max(A·Σ_{j>k}|I_j|, n/(2wA^w)), both strict.
/// `sizes` holds |I_1|..|I_w|. Requires w >= 3, 0 < ρ < 1/2, Σ sizes = n.
HeavyClassCertificate find_heavy_class(std::span<const std::size_t> sizes, std::size_t n, std::size_t w,
                                       double rho);

/// (log2 e)/(8w²) · (ρ^w/2)^(w+1).
double chernoff_constant(std::size_t w, double rho);

/// Number of level-k tuples U with U ⊆ s(x).
std::size_t tuple_containment_count(const Partition& p, std::size_t k, const BitVector& x);

struct TupleClaimOutcome {
  HeavyClassCertificate heavy;
  std::size_t t = 0;      // number of level-k tuples
  double limit = 0.0;     // (ρ^k / 2) · t
  std::size_t worst = 0;  // most tuples contained by any minimum-weight element
  std::optional<BitVector> witness;
};

/// Checks every minimum-weight element of every coset (exhaustive over F_2^n,
/// n <= 30) against the tuple limit. Minimum weight is read from the table.
TupleClaimOutcome check_tuple_claim(const CosetTable& table, const Partition& p, double rho);

VerificationReport verify_leader_tuple_claim(const LinearCode& code, const CosetTable& table, double rho);

enum class LeaderMode {
  min_weight,  // x has minimum weight in its coset
  strict,      // x is the lexicographic coset leader
};

struct McEstimate {
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Fraction of Bernoulli(ρ) vectors that are coset leaders (per `mode`), with a
/// 95% normal-approximation interval. Samples are split into 64 fixed streams
/// seeded from (seed, stream), so the result does not depend on thread count.
McEstimate montecarlo_leader_probability(const LinearCode& code, double rho, std::uint64_t samples,
                                         std::uint64_t seed, LeaderMode mode = LeaderMode::min_weight);

struct ChernoffOutcome {
  HeavyClassCertificate heavy;
  std::size_t t = 0;
  double exact_p = 0.0;
  double bound = 0.0;  // exp(-ρ^k t / 8)
  bool holds = false;
};

ChernoffOutcome evaluate_chernoff(const CosetTable& table, const Partition& p, double rho);
VerificationReport chernoff_check(const LinearCode& code, const CosetTable& table, double rho);

}  // namespace ldpcball
