#include "ldpcball/coset_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ldpcball/errors.hpp"
#include "ldpcball/kernels.hpp"

namespace ldpcball {

namespace {

void check_table_caps(const LinearCode& code) {
  if (code.code_dim() > max_table_code_dim) {
    throw ResourceError("coset table: too many cosets (code_dim)", code.code_dim(), max_table_code_dim);
  }
  if (code.n() > max_table_length) {
    throw ResourceError("coset table: block length exceeds one-byte leader weights", code.n(), max_table_length);
  }
}

std::vector<std::uint64_t> generator_images(const LinearCode& code) {
  std::vector<std::uint64_t> images(code.n());
  for (std::size_t j = 1; j <= code.n(); ++j) images[j - 1] = coset_id(BitVector::unit(code.n(), j), code.basis());
  return images;
}

void check_enum_cap(const LinearCode& code) {
  if (code.dual_dim() > max_enum_dual_dim) {
    throw ResourceError("coset enumeration: dual too large (dual_dim)", code.dual_dim(), max_enum_dual_dim);
  }
}

}  // namespace

CosetId CosetTable::id_of(const BitVector& x) const { return coset_id(x, code_.basis()); }

CosetId CosetTable::id_of_word(std::uint64_t x) const { return kernels::id_of_word(x, images_); }

CosetTable CosetTable::with_leader_weight(CosetId id, std::uint8_t weight) const {
  CosetTable copy = *this;
  copy.leader_weight_.at(id) = weight;
  return copy;
}

CosetTable build_table(const LinearCode& code) {
  check_table_caps(code);
  auto images = generator_images(code);
  auto weights = kernels::omp::bfs_leader_weights(images, code.code_dim());
  return CosetTable(code, std::move(images), std::move(weights));
}

CosetTable build_table_serial(const LinearCode& code) {
  check_table_caps(code);
  auto images = generator_images(code);
  auto weights = kernels::serial::bfs_leader_weights(images, code.code_dim());
  return CosetTable(code, std::move(images), std::move(weights));
}

SphereProfile sphere_profile(const CosetTable& table) {
  SphereProfile p;
  for (auto w : table.leader_weights()) {
    if (w >= p.sizes.size()) p.sizes.resize(std::size_t{w} + 1, 0);
    ++p.sizes[w];
  }
  return p;
}

std::uint64_t ball_size(const CosetTable& table, std::size_t r) {
  const auto sizes = sphere_profile(table).sizes;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < sizes.size() && k <= r; ++k) total += sizes[k];
  return total;
}

std::size_t diameter(const CosetTable& table) {
  const auto w = table.leader_weights();
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

double exact_leader_probability(const CosetTable& table, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("exact_leader_probability: rho must lie in (0, 1)");
  const auto sizes = sphere_profile(table).sizes;
  const auto n = static_cast<double>(table.n());
  const double log_rho = std::log(rho);
  const double log_q = std::log1p(-rho);
  double p = 0.0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] == 0) continue;
    const auto kk = static_cast<double>(k);
    p += std::exp(std::log(static_cast<double>(sizes[k])) + kk * log_rho + (n - kk) * log_q);
  }
  return p;
}

std::size_t next_sphere_neighbor_count(const CosetTable& table, CosetId id) {
  const auto here = table.leader_weight(id);
  std::size_t count = 0;
  for (auto g : table.generator_images()) {
    if (table.leader_weight(id ^ g) == here + 1) ++count;
  }
  return count;
}

BitVector coset_leader(const LinearCode& code, const BitVector& x) {
  check_enum_cap(code);
  if (x.size() != code.n()) throw DomainError("coset_leader: length mismatch");
  const auto& rows = code.basis().rows;
  // Start from the canonical representative so the result is independent of x.
  BitVector cur = canonical_rep(x, code.basis());
  BitVector best = cur;
  auto best_w = best.weight();
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    const auto w = cur.weight();
    if (w < best_w || (w == best_w && lex_compare(cur, best) < 0)) {
      best = cur;
      best_w = w;
    }
  }
  return best;
}

bool is_min_weight_in_coset(const LinearCode& code, const BitVector& x) {
  check_enum_cap(code);
  if (x.size() != code.n()) throw DomainError("is_min_weight_in_coset: length mismatch");
  const auto& rows = code.basis().rows;
  const auto target = x.weight();
  BitVector cur = x;
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (cur.weight() < target) return false;
  }
  return true;
}

}  // namespace ldpcball
