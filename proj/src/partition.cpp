#include "ldpcball/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ldpcball/errors.hpp"
#include "ldpcball/kernels.hpp"

namespace ldpcball {

std::vector<std::size_t> Partition::class_sizes() const {
  std::vector<std::size_t> sizes(w);
  for (std::size_t k = 1; k <= w; ++k) sizes[k - 1] = classes[k].size();
  return sizes;
}

std::vector<std::size_t> Partition::tuples_at(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (tuples[t].k == k) out.push_back(t);
  }
  std::sort(out.begin(), out.end(),
            [this](std::size_t a, std::size_t b) { return tuples[a].coords.front() < tuples[b].coords.front(); });
  return out;
}

BitVector Partition::class_mask(std::size_t lo, std::size_t hi) const {
  BitVector m(n);
  for (std::size_t k = lo; k <= hi && k <= w; ++k) {
    for (auto i : classes[k]) m.set(i);
  }
  return m;
}

Partition partition_coordinates(const LinearCode& code) {
  Partition p;
  p.n = code.n();
  p.w = code.w();
  p.classes.assign(p.w + 1, {});
  p.class_of.assign(p.n + 1, 0);
  p.tuple_of.assign(p.n + 1, 0);

  BitVector assigned(p.n);
  const auto& rows = code.dual_spanning();
  for (std::size_t k = p.w; k >= 1; --k) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& v = rows[r];
      if (v.weight() - v.overlap(assigned) != k) continue;
      PartitionTuple tuple;
      tuple.k = k;
      tuple.source = r;
      tuple.mask = BitVector(p.n);
      for (auto i : v.support()) {
        if (assigned.get(i)) continue;
        tuple.coords.push_back(i);
        tuple.mask.set(i);
        p.classes[k].push_back(i);
        p.class_of[i] = k;
        p.tuple_of[i] = p.tuples.size();
      }
      assigned ^= tuple.mask;
      p.tuples.push_back(std::move(tuple));
    }
  }
  for (auto& c : p.classes) std::sort(c.begin(), c.end());

  if (assigned.weight() != p.n) {
    throw std::logic_error("partition: coordinates left unassigned after the k=1 pass");
  }
  return p;
}

std::optional<std::string> check_partition_invariants(const LinearCode& code, const Partition& p) {
  if (p.n != code.n() || p.w != code.w() || p.classes.size() != p.w + 1) return "shape does not match code";
  std::vector<int> seen(p.n + 1, 0);
  for (std::size_t k = 1; k <= p.w; ++k) {
    if (p.classes[k].size() % k != 0) return "|I_" + std::to_string(k) + "| is not a multiple of k";
    for (auto i : p.classes[k]) {
      if (i < 1 || i > p.n) return "class I_" + std::to_string(k) + " holds out-of-range coordinate";
      if (seen[i]++ != 0) return "coordinate " + std::to_string(i) + " lies in two classes";
    }
  }
  for (std::size_t i = 1; i <= p.n; ++i) {
    if (seen[i] == 0) return "coordinate " + std::to_string(i) + " is unassigned";
  }

  std::vector<BitVector> tiled(p.w + 1, BitVector(p.n));
  for (const auto& t : p.tuples) {
    const std::string tag = "tuple from row " + std::to_string(t.source + 1);
    if (t.k < 1 || t.k > p.w || t.coords.size() != t.k) return tag + " has wrong size";
    if (t.source >= code.m()) return tag + " has invalid source";
    const auto& v = code.dual_spanning()[t.source];
    if (!t.mask.is_subset_of(v)) return tag + ": U not inside the source support";
    const BitVector rest = xor_add(v, t.mask);
    if (!rest.is_subset_of(p.class_mask(t.k + 1, p.w))) return tag + ": leftover support outside higher classes";
    if (t.mask.overlap(tiled[t.k]) != 0) return tag + ": overlaps another level-" + std::to_string(t.k) + " tuple";
    tiled[t.k] ^= t.mask;
  }
  for (std::size_t k = 1; k <= p.w; ++k) {
    if (tiled[k] != p.class_mask(k, k)) return "level-" + std::to_string(k) + " tuples do not tile I_k";
  }
  return std::nullopt;
}

nlohmann::json to_json(const Partition& p) {
  nlohmann::json j;
  auto& classes = j["I"] = nlohmann::json::object();
  for (std::size_t k = 1; k <= p.w; ++k) classes[std::to_string(k)] = p.classes[k];
  auto& tuples = j["tuples"] = nlohmann::json::array();
  for (const auto& t : p.tuples) tuples.push_back({{"k", t.k}, {"U", t.coords}, {"source", t.source + 1}});
  return j;
}

HeavyClassCertificate find_heavy_class(std::span<const std::size_t> sizes, std::size_t n, std::size_t w,
                                       double rho) {
  if (w < 3) throw DomainError("find_heavy_class: w must be at least 3");
  if (!(rho > 0.0 && rho < 0.5)) throw DomainError("find_heavy_class: rho must lie in (0, 1/2)");
  if (sizes.size() != w) throw DomainError("find_heavy_class: expected w class sizes");
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  if (total != n) throw DomainError("find_heavy_class: class sizes do not sum to n");

  const double A = 2.0 / std::pow(rho, static_cast<double>(w));
  if (!(A > std::ldexp(1.0, static_cast<int>(w) + 1))) {
    throw std::logic_error("find_heavy_class: expected A > 2^(w+1) for rho < 1/2");
  }
  const double floor = static_cast<double>(n) / (2.0 * static_cast<double>(w) * std::pow(A, static_cast<double>(w)));

  double tail = 0.0;  // Σ_{j>k} |I_j|
  for (std::size_t k = w; k >= 1; --k) {
    const auto size = sizes[k - 1];
    const double tail_threshold = A * tail;
    const auto s = static_cast<double>(size);
    if (s > tail_threshold && s > floor) return {k, A, tail_threshold, floor, size};
    tail += s;
  }
  throw std::logic_error("find_heavy_class: no qualifying class (arithmetic lemma violated)");
}

double chernoff_constant(std::size_t w, double rho) {
  if (w < 3) throw DomainError("chernoff_constant: w must be at least 3");
  if (!(rho > 0.0 && rho < 0.5)) throw DomainError("chernoff_constant: rho must lie in (0, 1/2)");
  const auto wd = static_cast<double>(w);
  return std::numbers::log2e / (8.0 * wd * wd) * std::pow(std::pow(rho, wd) / 2.0, wd + 1.0);
}

std::size_t tuple_containment_count(const Partition& p, std::size_t k, const BitVector& x) {
  std::size_t count = 0;
  for (const auto& t : p.tuples) {
    if (t.k == k && t.mask.is_subset_of(x)) ++count;
  }
  return count;
}

namespace {

void check_scan_cap(std::size_t n) {
  if (n > kernels::max_scan_length) {
    throw ResourceError("exhaustive scan over F_2^n: block length too large", n, kernels::max_scan_length);
  }
}

std::size_t level_tuple_count(const Partition& p, std::size_t k) { return p.classes[k].size() / k; }

}  // namespace

TupleClaimOutcome check_tuple_claim(const CosetTable& table, const Partition& p, double rho) {
  check_scan_cap(table.n());
  TupleClaimOutcome out;
  const auto sizes = p.class_sizes();
  out.heavy = find_heavy_class(sizes, p.n, p.w, rho);
  const auto k = out.heavy.k;
  out.t = level_tuple_count(p, k);
  out.limit = std::pow(rho, static_cast<double>(k)) / 2.0 * static_cast<double>(out.t);

  std::vector<std::uint64_t> masks;
  for (auto idx : p.tuples_at(k)) masks.push_back(p.tuples[idx].mask.low_word());

  struct Acc {
    std::size_t worst = 0;
    std::uint64_t witness = std::numeric_limits<std::uint64_t>::max();
  };
  const auto weights = table.leader_weights();
  const double limit = out.limit;
  const Acc acc = kernels::omp::scan_space(
      table.n(), table.generator_images(), Acc{},
      [&](Acc& a, std::uint64_t x, std::uint64_t id, unsigned weight) {
        if (weight != weights[id]) return;
        std::size_t c = 0;
        for (auto m : masks) c += (x & m) == m;
        a.worst = std::max(a.worst, c);
        if (static_cast<double>(c) > limit && x < a.witness) a.witness = x;
      },
      [](Acc& into, const Acc& from) {
        into.worst = std::max(into.worst, from.worst);
        into.witness = std::min(into.witness, from.witness);
      });
  out.worst = acc.worst;
  if (acc.witness != std::numeric_limits<std::uint64_t>::max()) out.witness = BitVector::from_word(table.n(), acc.witness);
  return out;
}

VerificationReport verify_leader_tuple_claim(const LinearCode& code, const CosetTable& table, double rho) {
  VerificationReport report;
  report.suite = "tuple-claim";
  report.instances = 1;
  const auto p = partition_coordinates(code);
  const auto o = check_tuple_claim(table, p, rho);
  report.details = {{"k", o.heavy.k}, {"t", o.t}, {"limit", o.limit}, {"worst", o.worst}, {"rho", rho}};
  if (o.witness) {
    report.violations.push_back(make_violation(
        code, "tuple-claim", {{"x", o.witness->to_string()}, {"k", o.heavy.k}, {"limit", o.limit}, {"rho", rho}}));
  }
  return report;
}

namespace {

bool word_lex_less(std::uint64_t a, std::uint64_t b) {
  const auto d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) == 0;
}

// Coset membership tests on word-packed vectors (n <= 64).
bool word_is_leader(std::uint64_t x, std::span<const std::uint64_t> rows, LeaderMode mode) {
  const auto wx = std::popcount(x);
  std::uint64_t cur = x;
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    const auto wc = std::popcount(cur);
    if (wc < wx) return false;
    if (mode == LeaderMode::strict && wc == wx && word_lex_less(cur, x)) return false;
  }
  return true;
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

McEstimate montecarlo_leader_probability(const LinearCode& code, double rho, std::uint64_t samples,
                                         std::uint64_t seed, LeaderMode mode) {
  if (samples == 0) throw DomainError("montecarlo: samples must be positive");
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("montecarlo: rho must lie in [0, 1]");
  if (code.dual_dim() > max_enum_dual_dim) {
    throw ResourceError("montecarlo: dual too large to enumerate cosets", code.dual_dim(), max_enum_dual_dim);
  }

  constexpr std::uint32_t streams = 64;
  const std::size_t n = code.n();
  const bool word_path = n <= 64;
  std::vector<std::uint64_t> rows;
  if (word_path) {
    for (const auto& r : code.basis().rows) rows.push_back(r.low_word());
  }

  std::vector<std::uint64_t> hits(streams, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(streams); ++s) {
    const auto stream = static_cast<std::uint32_t>(s);
    const std::uint64_t quota = samples / streams + (stream < samples % streams ? 1 : 0);
    auto rng = stream_rng(seed, stream);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < quota; ++i) {
      if (word_path) {
        std::uint64_t x = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (unit_uniform(rng) < rho) x |= std::uint64_t{1} << j;
        }
        h += word_is_leader(x, rows, mode);
      } else {
        BitVector x(n);
        for (std::size_t j = 1; j <= n; ++j) {
          if (unit_uniform(rng) < rho) x.set(j);
        }
        h += mode == LeaderMode::strict ? coset_leader(code, x) == x : is_min_weight_in_coset(code, x);
      }
    }
    hits[stream] = h;
  }

  McEstimate est;
  est.samples = samples;
  for (auto h : hits) est.hits += h;
  est.estimate = static_cast<double>(est.hits) / static_cast<double>(samples);
  const double half = 1.959963984540054 * std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  est.ci_low = std::max(0.0, est.estimate - half);
  est.ci_high = std::min(1.0, est.estimate + half);
  return est;
}

ChernoffOutcome evaluate_chernoff(const CosetTable& table, const Partition& p, double rho) {
  ChernoffOutcome o;
  o.heavy = find_heavy_class(p.class_sizes(), p.n, p.w, rho);
  o.t = level_tuple_count(p, o.heavy.k);
  o.exact_p = exact_leader_probability(table, rho);
  o.bound = std::exp(-std::pow(rho, static_cast<double>(o.heavy.k)) * static_cast<double>(o.t) / 8.0);
  // Relative slack of a few ulps for the rounding in the exact sum.
  o.holds = o.exact_p <= o.bound * (1.0 + 1e-12);
  return o;
}

VerificationReport chernoff_check(const LinearCode& code, const CosetTable& table, double rho) {
  VerificationReport report;
  report.suite = "chernoff";
  report.instances = 1;
  const auto o = evaluate_chernoff(table, partition_coordinates(code), rho);
  report.details = {{"k", o.heavy.k}, {"t", o.t}, {"exact_p", o.exact_p}, {"bound", o.bound}, {"rho", rho}};
  if (!o.holds) {
    report.violations.push_back(make_violation(code, "chernoff", {{"exact_p", o.exact_p}, {"bound", o.bound}, {"rho", rho}}));
  }
  return report;
}

}  // namespace ldpcball
