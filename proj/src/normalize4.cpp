#include "ldpcball/normalize4.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldpcball/errors.hpp"
#include "ldpcball/kernels.hpp"

namespace ldpcball {

namespace {

void require_w4(const Partition& p, const LinearCode& code) {
  if (p.w != 4 || code.w() != 4) throw DomainError("normalization requires a w = 4 code");
  if (p.n != code.n()) throw DomainError("partition does not belong to this code");
}

void check_rho(double rho) {
  if (!(rho >= 0.0 && rho <= 0.5)) throw DomainError("rho must lie in [0, 1/2]");
}

const BitVector& source_of(const PartitionTuple& t, const LinearCode& code) {
  if (t.source >= code.m()) throw DomainError("partition tuple has no valid source vector");
  return code.dual_spanning()[t.source];
}

BitVector restrict_to(const BitVector& x, const BitVector& mask) {
  BitVector out(x.size());
  for (auto i : x.support()) {
    if (mask.get(i)) out.set(i);
  }
  return out;
}

std::size_t worst_overlap(const BitVector& x, const Partition& p, std::size_t k) {
  std::size_t worst = 0;
  for (const auto& t : p.tuples) {
    if (t.k == k) worst = std::max(worst, t.mask.overlap(x));
  }
  return worst;
}

void step_assert(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("normalize_representative: " + what);
}

}  // namespace

AlphaProfile AlphaProfile::from_partition(const Partition& p) {
  if (p.w != 4) throw DomainError("AlphaProfile requires a w = 4 partition");
  AlphaProfile a;
  for (std::size_t j = 1; j <= 4; ++j) a.alpha[j - 1] = static_cast<double>(p.classes[j].size()) / static_cast<double>(p.n);
  return a;
}

BitVector eliminate_I1(const BitVector& u, const Partition& p, const LinearCode& code) {
  if (u.size() != p.n || p.n != code.n()) throw DomainError("eliminate_I1: length mismatch");
  BitVector out = u;
  for (auto i : p.classes.at(1)) {
    if (!out.get(i)) continue;
    const auto& t = p.tuples.at(p.tuple_of.at(i));
    if (t.k != 1 || t.coords.size() != 1 || t.coords.front() != i) {
      throw DomainError("eliminate_I1: coordinate " + std::to_string(i) + " lacks a singleton tuple");
    }
    out ^= source_of(t, code);
  }
  return out;
}

BitVector normalize_representative(const BitVector& u, const Partition& p, const LinearCode& code, PairStep mode) {
  require_w4(p, code);
  if (u.size() != p.n) throw DomainError("normalize_representative: length mismatch");

  const BitVector I1 = p.class_mask(1, 1);
  const BitVector I2 = p.class_mask(2, 2);
  const BitVector I3 = p.class_mask(3, 3);
  const BitVector in_I1 = restrict_to(u, I1);
  BitVector x = u;

  // Step 1: pairs of I_2 fully inside s(x).
  const auto pairs = p.tuples_at(2);
  const std::uint64_t cap = std::uint64_t{1} << std::min<std::size_t>(p.classes[2].size(), 63);
  std::uint64_t applied = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto idx : pairs) {
      const auto& t = p.tuples[idx];
      if (t.mask.overlap(x) != 2) continue;
      x ^= source_of(t, code);
      changed = true;
      if (++applied > cap) throw std::logic_error("normalize_representative: pair step exceeded its iteration cap");
    }
    if (mode == PairStep::single_pass) break;
  }
  const auto w1 = x.weight();
  step_assert(w1 <= u.weight(), "step 1 increased the weight");
  step_assert(restrict_to(x, I1) == in_I1, "step 1 changed the I_1 intersection");
  step_assert(worst_overlap(x, p, 2) <= 1, "step 1 left a contained I_2 pair");
  const BitVector in_I2 = restrict_to(x, I2);

  // Step 2: triples of I_3 hit at least twice.
  for (auto idx : p.tuples_at(3)) {
    const auto& t = p.tuples[idx];
    if (t.mask.overlap(x) >= 2) x ^= source_of(t, code);
  }
  const auto w2 = x.weight();
  step_assert(w2 <= w1, "step 2 increased the weight");
  step_assert(restrict_to(x, I1) == in_I1 && restrict_to(x, I2) == in_I2, "step 2 changed the I_1/I_2 intersection");
  step_assert(worst_overlap(x, p, 3) <= 1, "step 2 left an I_3 triple hit twice");
  const BitVector in_I3 = restrict_to(x, I3);

  // Step 3: 4-tuples of I_4 hit at least three times.
  for (auto idx : p.tuples_at(4)) {
    const auto& t = p.tuples[idx];
    if (t.mask.overlap(x) >= 3) x ^= source_of(t, code);
  }
  step_assert(x.weight() <= w2, "step 3 increased the weight");
  step_assert(restrict_to(x, I1) == in_I1 && restrict_to(x, I2) == in_I2 && restrict_to(x, I3) == in_I3,
              "step 3 changed the I_1/I_2/I_3 intersection");
  step_assert(worst_overlap(x, p, 4) <= 2, "step 3 left an I_4 tuple hit three times");
  return x;
}

bool satisfies_tuple_caps(const BitVector& x, const Partition& p, bool include_I1) {
  for (const auto& t : p.tuples) {
    if (t.k == 1 && !include_I1) continue;
    if (t.mask.overlap(x) > t.k / 2) return false;
  }
  return true;
}

double diameter_bound(const Partition& p) {
  auto size = [&p](std::size_t j) { return j <= p.w ? static_cast<double>(p.classes[j].size()) : 0.0; };
  return size(2) / 2.0 + size(3) / 3.0 + size(4) / 2.0;
}

double base4(double rho) {
  const double q = 1.0 - rho;
  return q * q * q * q + 4.0 * rho * q * q * q + 6.0 * rho * rho * q * q;
}

double base3(double rho) {
  const double q = 1.0 - rho;
  return q * q * q + 3.0 * rho * q * q;
}

double structure_probability(double rho, const AlphaProfile& a, std::size_t n) {
  check_rho(rho);
  const auto nn = static_cast<double>(n);
  return a.alpha[3] * nn / 4.0 * std::log2(base4(rho)) + a.alpha[2] * nn / 3.0 * std::log2(base3(rho)) +
         a.alpha[1] * nn / 2.0 * std::log2(1.0 - rho * rho);
}

Lemma44Values lemma44_values(double rho) {
  check_rho(rho);
  Lemma44Values v;
  v.lhs = std::pow(base4(rho), 0.25);
  v.rhs3 = std::cbrt(base3(rho));
  v.rhs2 = std::sqrt(1.0 - rho * rho);
  v.holds = v.lhs >= std::max(v.rhs3, v.rhs2) - 1e-12;
  return v;
}

bool lemma44_check(double rho) { return lemma44_values(rho).holds; }

StructureMaximum max_structure_probability(double rho, std::size_t n) {
  check_rho(rho);
  StructureMaximum m;
  m.argmax.alpha = {1.0 - 2.0 * rho, 0.0, 0.0, 2.0 * rho};
  m.log2_probability = rho * static_cast<double>(n) / 2.0 * std::log2(base4(rho));
  return m;
}

StructureGridCheck grid_check_max_structure(double rho, std::size_t n, double resolution) {
  check_rho(rho);
  if (!(resolution > 0.0 && resolution <= 0.5)) throw DomainError("grid resolution must lie in (0, 1/2]");
  StructureGridCheck c;
  c.closed_form = max_structure_probability(rho, n).log2_probability;
  c.grid_max = -std::numeric_limits<double>::infinity();

  const auto steps = static_cast<int>(std::lround(1.0 / resolution));
  for (int i2 = 0; i2 <= steps; ++i2) {
    for (int i3 = 0; i2 + i3 <= steps; ++i3) {
      for (int i4 = 0; i2 + i3 + i4 <= steps; ++i4) {
        AlphaProfile a;
        a.alpha = {1.0 - (i2 + i3 + i4) * resolution, i2 * resolution, i3 * resolution, i4 * resolution};
        if (a.alpha[0] < 0.0) a.alpha[0] = 0.0;
        if (a.reach() < rho - 1e-12) continue;
        const double v = structure_probability(rho, a, n);
        if (v > c.grid_max) {
          c.grid_max = v;
          c.grid_argmax = a;
        }
      }
    }
  }
  c.closed_form_dominates = c.grid_max <= c.closed_form + 1e-9;
  const auto& g = c.grid_argmax.alpha;
  c.argmax_matches = g[1] == 0.0 && g[2] == 0.0 && std::abs(g[3] - 2.0 * rho) <= resolution + 1e-12;
  return c;
}

double exact_structured_min_weight_probability(const CosetTable& table, const Partition& p, double rho) {
  check_rho(rho);
  if (table.n() > kernels::max_scan_length) {
    throw ResourceError("exhaustive scan over F_2^n: block length too large", table.n(), kernels::max_scan_length);
  }
  struct Cap {
    std::uint64_t mask;
    int limit;
  };
  std::vector<Cap> caps;
  for (const auto& t : p.tuples) {
    if (t.k >= 2) caps.push_back({t.mask.low_word(), static_cast<int>(t.k / 2)});
  }
  const auto weights = table.leader_weights();
  using Counts = std::vector<std::uint64_t>;
  const Counts counts = kernels::omp::scan_space(
      table.n(), table.generator_images(), Counts(table.n() + 1, 0),
      [&](Counts& acc, std::uint64_t x, std::uint64_t id, unsigned weight) {
        if (weight != weights[id]) return;
        for (const auto& c : caps) {
          if (std::popcount(x & c.mask) > c.limit) return;
        }
        ++acc[weight];
      },
      [](Counts& into, const Counts& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });

  const auto n = static_cast<double>(table.n());
  double total = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const auto kk = static_cast<double>(k);
    total += static_cast<double>(counts[k]) * std::pow(rho, kk) * std::pow(1.0 - rho, n - kk);
  }
  return total;
}

}  // namespace ldpcball
