#include "ldpcball/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ldpcball/bounds.hpp"
#include "ldpcball/errors.hpp"
#include "ldpcball/kernels.hpp"
#include "ldpcball/normalize4.hpp"

namespace ldpcball {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr std::size_t max_generator_attempts = 1000;
constexpr std::size_t max_row_redraws = 64;

std::vector<std::size_t> random_subset(std::size_t n, std::size_t size, std::mt19937_64& rng) {
  // Floyd's algorithm; returns 1-based coordinates in ascending order.
  std::vector<std::size_t> picked;
  for (std::size_t j = n - size; j < n; ++j) {
    std::uniform_int_distribution<std::size_t> dist(0, j);
    const auto t = dist(rng);
    if (std::find(picked.begin(), picked.end(), t + 1) == picked.end()) {
      picked.push_back(t + 1);
    } else {
      picked.push_back(j + 1);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

bool contains_row(const std::vector<BitVector>& rows, const BitVector& v) {
  return std::find(rows.begin(), rows.end(), v) != rows.end();
}

std::optional<std::vector<BitVector>> draw_uniform(const GeneratorConfig& c, std::mt19937_64& rng) {
  const std::size_t size = std::min(c.w, c.n);
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < c.m; ++r) {
    for (std::size_t attempt = 0; attempt < max_row_redraws; ++attempt) {
      auto v = BitVector::from_support(c.n, random_subset(c.n, size, rng));
      if (!contains_row(rows, v)) {
        rows.push_back(std::move(v));
        break;
      }
    }
  }
  const std::size_t drawn = rows.size();  // rows that failed to be distinct are left to the patch

  for (std::size_t q = c.m - drawn; q <= c.m; ++q) {
    const std::size_t keep = c.m - q;
    BitVector cover(c.n);
    for (std::size_t r = 0; r < keep; ++r) {
      for (auto i : rows[r].support()) cover.set(i);
    }
    std::vector<std::size_t> missing;
    for (std::size_t i = 1; i <= c.n; ++i) {
      if (!cover.get(i)) missing.push_back(i);
    }
    if (missing.size() > q * c.w) continue;

    std::vector<BitVector> out(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(keep));
    const std::size_t groups = std::min(q, missing.size());
    std::vector<BitVector> patch;
    for (std::size_t g = 0; g < groups; ++g) {
      const std::size_t lo = missing.size() * g / groups;
      const std::size_t hi = missing.size() * (g + 1) / groups;
      patch.push_back(BitVector::from_support(c.n, std::span(missing).subspan(lo, hi - lo)));
    }
    bool ok = true;
    for (std::size_t extra = groups; extra < q && ok; ++extra) {
      ok = false;
      for (std::size_t attempt = 0; attempt < max_row_redraws; ++attempt) {
        auto v = BitVector::from_support(c.n, random_subset(c.n, size, rng));
        if (!contains_row(out, v) && !contains_row(patch, v)) {
          out.push_back(std::move(v));
          ok = true;
          break;
        }
      }
    }
    if (!ok) continue;
    for (auto& v : patch) out.push_back(std::move(v));
    return out;
  }
  return std::nullopt;
}

// Uniform rows would almost never give every column weight 2 when m·w is close
// to 2n. Each row instead takes the coordinates still short of two
// appearances first (most-needed first, ties random) and is topped up at random.
std::optional<std::vector<BitVector>> draw_uniform_covering(const GeneratorConfig& c, std::mt19937_64& rng) {
  const std::size_t size = std::min(c.w, c.n);
  std::vector<std::size_t> need(c.n + 1, 2);
  need[0] = 0;
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < c.m; ++r) {
    std::vector<std::size_t> order(c.n);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(), [&need](std::size_t a, std::size_t b) { return need[a] > need[b]; });
    BitVector v(c.n);
    std::size_t taken = 0;
    for (auto i : order) {
      if (taken == size || need[i] == 0) break;
      v.set(i);
      --need[i];
      ++taken;
    }
    for (auto i : random_subset(c.n, size, rng)) {
      if (taken == size) break;
      if (!v.get(i)) {
        v.set(i);
        ++taken;
      }
    }
    if (contains_row(rows, v)) return std::nullopt;
    rows.push_back(std::move(v));
  }
  return rows;
}

std::optional<std::vector<BitVector>> draw_tanner(const GeneratorConfig& c, std::mt19937_64& rng) {
  const std::size_t stubs = c.m * c.w;
  std::vector<std::size_t> column_stubs;
  column_stubs.reserve(stubs);
  for (std::size_t s = 0; s < stubs; ++s) column_stubs.push_back(s % c.n + 1);
  std::shuffle(column_stubs.begin(), column_stubs.end(), rng);

  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < c.m; ++r) {
    BitVector v(c.n);
    for (std::size_t s = r * c.w; s < (r + 1) * c.w; ++s) v.set(column_stubs[s]);
    if (contains_row(rows, v)) return std::nullopt;
    rows.push_back(std::move(v));
  }
  return rows;
}

bool column_weights_at_least_2(const std::vector<BitVector>& rows, std::size_t n) {
  std::vector<std::size_t> count(n + 1, 0);
  for (const auto& v : rows) {
    for (auto i : v.support()) ++count[i];
  }
  return std::all_of(count.begin() + 1, count.end(), [](std::size_t c) { return c >= 2; });
}

}  // namespace

void GeneratorConfig::validate() const {
  if (n == 0 || w == 0 || m == 0) throw DomainError("generator: n, w and m must be positive");
  if (m * w < n) {
    throw DomainError("generator: m*w = " + std::to_string(m * w) + " cannot cover n = " + std::to_string(n));
  }
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::optional<GeneratorMode> parse_generator_mode(const std::string& name) {
  if (name == "uniform-support") return GeneratorMode::uniform_support;
  if (name == "regular-tanner") return GeneratorMode::regular_tanner;
  return std::nullopt;
}

LinearCode generate_code(const GeneratorConfig& config) {
  config.validate();
  auto rng = seeded_engine(config.seed, 0);
  for (std::size_t attempt = 0; attempt < max_generator_attempts; ++attempt) {
    std::optional<std::vector<BitVector>> rows;
    if (config.mode == GeneratorMode::regular_tanner) {
      rows = draw_tanner(config, rng);
    } else {
      rows = config.require_column_weight_2 ? draw_uniform_covering(config, rng) : draw_uniform(config, rng);
    }
    if (!rows) continue;
    if (config.require_column_weight_2 && !column_weights_at_least_2(*rows, config.n)) continue;
    return LinearCode(config.n, config.w, std::move(*rows));
  }
  throw DomainError("generator: no valid code after " + std::to_string(max_generator_attempts) + " attempts");
}

GeneratorConfig instance_config(const BatchConfig& batch, std::size_t index) {
  if (batch.ws.empty()) throw DomainError("batch needs at least one weight");
  if (batch.n_min == 0 || batch.n_min > batch.n_max) throw DomainError("batch needs 1 <= n_min <= n_max");
  auto rng = seeded_engine(batch.seed, index);
  GeneratorConfig c;
  c.n = std::uniform_int_distribution<std::size_t>(batch.n_min, batch.n_max)(rng);
  c.w = batch.ws[index % batch.ws.size()];
  const std::size_t m_min = (c.n + c.w - 1) / c.w;
  c.m = std::uniform_int_distribution<std::size_t>(m_min, std::max(m_min, c.n / 2 + 1))(rng);
  c.seed = rng();
  c.mode = batch.mode;
  c.require_column_weight_2 = batch.require_column_weight_2;
  return c;
}

// ---------------------------------------------------------------------------
// Per-code checks

namespace {

void require_scan(std::size_t n) {
  if (n > kernels::max_scan_length) {
    throw ResourceError("exhaustive scan over F_2^n: block length too large", n, kernels::max_scan_length);
  }
}

std::string word_string(std::uint64_t x, std::size_t n) { return BitVector::from_word(n, x).to_string(); }

}  // namespace

std::optional<Violation> check_table_against_scan(const CosetTable& table) {
  require_scan(table.n());
  const auto scan = kernels::omp::min_weight_by_scan(table.generator_images(), table.n(), table.code_dim());
  const auto bfs = table.leader_weights();
  for (std::size_t id = 0; id < scan.size(); ++id) {
    if (scan[id] != bfs[id]) {
      return make_violation(table.code(), "bfs-vs-scan", {{"coset", id}, {"bfs", bfs[id]}, {"scan", scan[id]}});
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_ball_growth(const CosetTable& table) {
  const auto& code = table.code();
  const auto n = static_cast<std::int64_t>(table.n());
  const auto sizes = sphere_profile(table).sizes;
  const auto diam = static_cast<std::int64_t>(sizes.size()) - 1;

  for (std::int64_t r = 0; r < diam; ++r) {
    const auto lhs = static_cast<double>(sizes[r + 1]) * static_cast<double>(r + 1);
    const auto rhs = static_cast<double>(n - 2 * r) * static_cast<double>(sizes[r]);
    if (lhs > rhs) {
      return make_violation(code, "sphere-recursion", {{"r", r}, {"S_r", sizes[r]}, {"S_r+1", sizes[r + 1]}});
    }
  }
  const auto half = static_cast<double>((n + 1) / 2);
  for (std::int64_t r = 0; r <= diam; ++r) {
    double binom = 1.0;  // C(⌈n/2⌉, r)
    for (std::int64_t k = 0; k < r; ++k) binom = binom * (half - static_cast<double>(k)) / static_cast<double>(k + 1);
    const double cap = std::ldexp(std::max(binom, 0.0), static_cast<int>(r));
    const bool beyond = 2 * r > n;
    if (beyond || static_cast<double>(sizes[r]) > cap * (1.0 + 1e-12)) {
      return make_violation(code, "sphere-cap", {{"r", r}, {"S_r", sizes[r]}, {"cap", beyond ? 0.0 : cap}});
    }
  }
  const double rest = 1.0 / 3.0 + entropy(2.0 / 3.0) / 2.0;
  for (std::int64_t r = 0; r <= n; ++r) {
    const double rho = static_cast<double>(r) / static_cast<double>(n);
    const double exponent = static_cast<double>(n) * (rho <= 1.0 / 3.0 ? rho + entropy(2.0 * rho) / 2.0 : rest);
    const auto ball = ball_size(table, static_cast<std::size_t>(r));
    if (std::log2(static_cast<double>(ball)) > exponent + 1e-9) {
      return make_violation(code, "ball-cap", {{"r", r}, {"ball", ball}, {"log2_cap", exponent}});
    }
  }

  const auto weights = table.leader_weights();
  for (CosetId id = 0; id < table.coset_count(); ++id) {
    const auto count = static_cast<std::int64_t>(next_sphere_neighbor_count(table, id));
    if (count > n - 2 * static_cast<std::int64_t>(weights[id])) {
      return make_violation(code, "next-sphere-neighbours",
                            {{"coset", id}, {"weight", weights[id]}, {"count", count}});
    }
  }

  require_scan(table.n());
  std::vector<std::uint64_t> neighbourhood(table.n());
  for (std::size_t i = 1; i <= table.n(); ++i) {
    neighbourhood[i - 1] = code.dual_spanning()[code.first_row_containing(i)].low_word();
  }
  const auto images = table.generator_images();
  struct Acc {
    std::uint64_t witness = std::numeric_limits<std::uint64_t>::max();
    int part = 0;
  };
  const Acc acc = kernels::omp::scan_space(
      table.n(), images, Acc{},
      [&](Acc& a, std::uint64_t x, std::uint64_t id, unsigned weight) {
        if (weight != weights[id] || x >= a.witness) return;
        std::uint64_t u = 0;
        for (auto rest_bits = x; rest_bits != 0; rest_bits &= rest_bits - 1) {
          u |= neighbourhood[static_cast<std::size_t>(std::countr_zero(rest_bits))];
        }
        if (static_cast<unsigned>(std::popcount(u)) < 2 * weight) {
          a = {x, 2};
          return;
        }
        for (auto bits = u; bits != 0; bits &= bits - 1) {
          const auto j = static_cast<std::size_t>(std::countr_zero(bits));
          if (weights[id ^ images[j]] > weight) {
            a = {x, 1};
            return;
          }
        }
      },
      [](Acc& into, const Acc& from) {
        if (from.witness < into.witness) into = from;
      });
  if (acc.part != 0) {
    return make_violation(code, acc.part == 1 ? "neighbourhood-distance" : "neighbourhood-size",
                          {{"x", word_string(acc.witness, table.n())}});
  }
  return std::nullopt;
}

std::optional<Violation> check_ball_probability(const CosetTable& table, std::span<const double> rhos) {
  const auto n = table.n();
  for (double rho : rhos) {
    const auto r = static_cast<std::size_t>(std::floor(rho * static_cast<double>(n)));
    const double p = exact_leader_probability(table, rho);
    const double lower = static_cast<double>(ball_size(table, r)) * std::pow(rho, static_cast<double>(r)) *
                         std::pow(1.0 - rho, static_cast<double>(n - r));
    if (p < lower * (1.0 - 1e-12)) {
      return make_violation(table.code(), "leader-probability-vs-ball", {{"rho", rho}, {"p", p}, {"lower", lower}});
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_partition(const LinearCode& code, const Partition& p, std::span<const double> rhos) {
  if (auto bad = check_partition_invariants(code, p)) {
    return make_violation(code, "partition-invariants", {{"reason", *bad}, {"partition", to_json(p)}});
  }
  const auto sizes = p.class_sizes();
  for (double rho : rhos) {
    try {
      (void)find_heavy_class(sizes, p.n, p.w, rho);
    } catch (const std::logic_error& e) {
      return make_violation(code, "heavy-class", {{"rho", rho}, {"sizes", sizes}, {"reason", e.what()}});
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_tuple_claim_at(const CosetTable& table, const Partition& p,
                                              std::span<const double> rhos) {
  for (double rho : rhos) {
    const auto o = check_tuple_claim(table, p, rho);
    if (o.witness) {
      return make_violation(table.code(), "tuple-claim",
                            {{"rho", rho},
                             {"k", o.heavy.k},
                             {"t", o.t},
                             {"limit", o.limit},
                             {"x", o.witness->to_string()},
                             {"contained", tuple_containment_count(p, o.heavy.k, *o.witness)}});
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_chernoff_at(const CosetTable& table, const Partition& p, std::span<const double> rhos) {
  for (double rho : rhos) {
    const auto o = evaluate_chernoff(table, p, rho);
    if (!o.holds) {
      return make_violation(table.code(), "chernoff",
                            {{"rho", rho}, {"k", o.heavy.k}, {"t", o.t}, {"p", o.exact_p}, {"bound", o.bound}});
    }
  }
  return std::nullopt;
}

namespace {

std::optional<nlohmann::json> normalization_failure(const CosetTable& table, const Partition& p, std::uint64_t x) {
  const auto& code = table.code();
  const auto n = table.n();
  const auto u = BitVector::from_word(n, x);
  const auto id = table.id_of_word(x);
  const auto weight = u.weight();
  try {
    const auto a = normalize_representative(u, p, code, PairStep::single_pass);
    const auto b = normalize_representative(u, p, code, PairStep::fixpoint);
    if (a != b) return nlohmann::json{{"reason", "single-pass and fixpoint differ"}, {"single", a.to_string()}, {"fixpoint", b.to_string()}};
    if (table.id_of(a) != id) return nlohmann::json{{"reason", "coset changed"}, {"out", a.to_string()}};
    if (a.weight() > weight) return nlohmann::json{{"reason", "weight increased"}, {"out", a.to_string()}};
    if (weight == table.leader_weight(id) && !satisfies_tuple_caps(a, p, false)) {
      return nlohmann::json{{"reason", "minimum-weight input violates tuple caps"}, {"out", a.to_string()}};
    }
    const auto c = normalize_representative(eliminate_I1(u, p, code), p, code, PairStep::single_pass);
    if (table.id_of(c) != id) return nlohmann::json{{"reason", "I_1 elimination changed coset"}, {"out", c.to_string()}};
    if (!satisfies_tuple_caps(c, p, true)) {
      return nlohmann::json{{"reason", "caps fail after I_1 elimination"}, {"out", c.to_string()}};
    }
  } catch (const std::exception& e) {
    return nlohmann::json{{"reason", e.what()}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check_normalization(const CosetTable& table, const Partition& p) {
  require_scan(table.n());
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << table.n());
  std::int64_t first = total;
#pragma omp parallel for schedule(dynamic, 256) reduction(min : first)
  for (std::int64_t x = 0; x < total; ++x) {
    if (x < first && normalization_failure(table, p, static_cast<std::uint64_t>(x))) first = x;
  }
  if (first == total) return std::nullopt;
  auto data = *normalization_failure(table, p, static_cast<std::uint64_t>(first));
  data["x"] = word_string(static_cast<std::uint64_t>(first), table.n());
  return make_violation(table.code(), "normalization", std::move(data));
}

std::optional<Violation> check_diameter_bound(const CosetTable& table, const Partition& p) {
  const auto d = diameter(table);
  const double bound = diameter_bound(p);
  if (static_cast<double>(d) > bound + 1e-9) {
    return make_violation(table.code(), "diameter-bound",
                          {{"diameter", d}, {"bound", bound}, {"class_sizes", p.class_sizes()}});
  }
  return std::nullopt;
}

std::optional<Violation> check_structure_probability(const CosetTable& table, const Partition& p,
                                                     std::span<const double> rhos) {
  const auto n = table.n();
  const double reach = diameter_bound(p) / static_cast<double>(n);
  const auto alphas = AlphaProfile::from_partition(p);
  for (double rho : rhos) {
    if (rho > reach + 1e-12 || rho > 0.5) continue;
    const double exact = exact_structured_min_weight_probability(table, p, rho);
    const double own = structure_probability(rho, alphas, n);
    const double best = max_structure_probability(rho, n).log2_probability;
    const double lexact = std::log2(exact);
    if (lexact > own + 1e-9 || own > best + 1e-9) {
      return make_violation(table.code(), "structure-probability",
                            {{"rho", rho}, {"log2_exact", lexact}, {"log2_profile", own}, {"log2_max", best}});
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Heavy-class sweeps

namespace {

void heavy_or_throw(std::span<const std::size_t> sizes, std::size_t n, std::size_t w, double rho) {
  try {
    (void)find_heavy_class(sizes, n, w, rho);
  } catch (const std::logic_error& e) {
    std::string s;
    for (auto v : sizes) s += (s.empty() ? "" : ",") + std::to_string(v);
    throw std::logic_error("heavy class missing for sizes (" + s + "), rho " + std::to_string(rho));
  }
}

}  // namespace

std::size_t exhaustive_heavy_class_check(std::size_t n_max, std::size_t w_max, std::span<const double> rhos) {
  std::size_t checked = 0;
  for (std::size_t w = 3; w <= w_max; ++w) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::vector<std::size_t> sizes(w, 0);
      // Enumerate compositions of n into w nonnegative parts.
      auto recurse = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
        if (pos + 1 == w) {
          sizes[pos] = left;
          for (double rho : rhos) heavy_or_throw(sizes, n, w, rho);
          ++checked;
          return;
        }
        for (std::size_t s = 0; s <= left; ++s) {
          sizes[pos] = s;
          self(self, pos + 1, left - s);
        }
      };
      recurse(recurse, 0, n);
    }
  }
  return checked;
}

std::size_t random_heavy_class_check(std::size_t count, std::size_t n_max, std::size_t w_max, std::uint64_t seed) {
  auto rng = seeded_engine(seed, 0);
  std::uniform_real_distribution<double> rho_dist(1e-6, 0.5 - 1e-6);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, n_max)(rng);
    const auto w = std::uniform_int_distribution<std::size_t>(3, w_max)(rng);
    std::vector<std::size_t> cuts(w - 1);
    for (auto& c : cuts) c = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::size_t> sizes(w);
    std::size_t prev = 0;
    for (std::size_t k = 0; k + 1 < w; ++k) {
      sizes[k] = cuts[k] - prev;
      prev = cuts[k];
    }
    sizes[w - 1] = n - prev;
    heavy_or_throw(sizes, n, w, rho_dist(rng));
  }
  return count;
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma31",   "partition", "tuple-claim", "chernoff",
                                              "normalize4", "diameter4", "pprime4"};
  return names;
}

bool is_known_suite(const std::string& name) {
  const auto& s = suite_names();
  return std::find(s.begin(), s.end(), name) != s.end();
}

BatchConfig default_batch(const std::string& suite) {
  if (!is_known_suite(suite)) throw DomainError("unknown suite: " + suite);
  BatchConfig b;
  if (suite == "partition") {
    b.codes = 200;
    b.n_max = 24;
    b.ws = {3, 4};
  } else if (suite == "tuple-claim" || suite == "chernoff") {
    b.codes = 50;
  } else if (suite == "normalize4" || suite == "diameter4" || suite == "pprime4") {
    b.codes = 50;
    b.n_max = 14;
    b.ws = {4};
    b.rhos = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45};
  }
  return b;
}

namespace {

struct InstanceResult {
  std::optional<Violation> violation;
  std::optional<std::string> resource;
  nlohmann::json summary;
};

void require_weights(const std::string& suite, const BatchConfig& batch) {
  auto all = [&](auto pred) { return std::all_of(batch.ws.begin(), batch.ws.end(), pred); };
  if (batch.ws.empty()) throw DomainError("suite " + suite + ": no weights given");
  if (suite == "lemma31" && !all([](std::size_t w) { return w == 3; })) {
    throw DomainError("suite lemma31 applies to w = 3 codes only");
  }
  if ((suite == "normalize4" || suite == "diameter4" || suite == "pprime4") &&
      !all([](std::size_t w) { return w == 4; })) {
    throw DomainError("suite " + suite + " applies to w = 4 codes only");
  }
  if (!all([](std::size_t w) { return w >= 3; })) throw DomainError("suite " + suite + " needs w >= 3");
  for (double rho : batch.rhos) {
    if (!(rho > 0.0 && rho < 0.5)) throw DomainError("suite rho values must lie in (0, 1/2)");
  }
}

std::optional<Violation> run_instance_checks(const std::string& suite, const LinearCode& code,
                                             const BatchConfig& batch, const SuiteHooks& hooks, std::size_t index) {
  Partition partition = partition_coordinates(code);
  if (hooks.mutate_partition) hooks.mutate_partition(index, partition);

  if (suite == "partition") return check_partition(code, partition, batch.rhos);

  CosetTable table = build_table(code);
  if (hooks.mutate_table) table = hooks.mutate_table(index, std::move(table));
  if (auto v = check_table_against_scan(table)) return v;

  if (suite == "lemma31") {
    if (auto v = check_ball_growth(table)) return v;
    return check_ball_probability(table, batch.rhos);
  }
  if (auto bad = check_partition_invariants(code, partition)) {
    return make_violation(code, "partition-invariants", {{"reason", *bad}});
  }
  if (suite == "tuple-claim") return check_tuple_claim_at(table, partition, batch.rhos);
  if (suite == "chernoff") return check_chernoff_at(table, partition, batch.rhos);
  if (suite == "normalize4") return check_normalization(table, partition);
  if (suite == "diameter4") return check_diameter_bound(table, partition);
  return check_structure_probability(table, partition, batch.rhos);
}

}  // namespace

VerificationReport run_suite(const std::string& name, const BatchConfig& batch, const SuiteHooks& hooks) {
  if (!is_known_suite(name)) throw DomainError("unknown suite: " + name);
  require_weights(name, batch);
  const auto start = Clock::now();

  std::vector<InstanceResult> results(batch.codes);
  const auto count = static_cast<std::int64_t>(batch.codes);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto index = static_cast<std::size_t>(i);
    auto& res = results[index];
    if (seconds_since(start) > batch.global_cap_seconds) {
      res.resource = "skipped: global time cap of " + std::to_string(batch.global_cap_seconds) + " s reached";
      continue;
    }
    const auto t0 = Clock::now();
    try {
      const auto cfg = instance_config(batch, index);
      const auto code = generate_code(cfg);
      res.summary = {{"index", index},        {"n", code.n()},
                     {"w", code.w()},         {"m", code.m()},
                     {"code_dim", code.code_dim()}, {"fingerprint", code_fingerprint(code)}};
      res.violation = run_instance_checks(name, code, batch, hooks, index);
    } catch (const ResourceError& e) {
      res.resource = e.what();
    } catch (const std::exception& e) {
      res.violation = Violation{"", {{"check", "exception"}, {"index", index}, {"message", e.what()}}};
    }
    const double elapsed = seconds_since(t0);
    res.summary["seconds"] = elapsed;
    if (elapsed > batch.instance_cap_seconds && !res.resource) {
      res.resource = "instance took " + std::to_string(elapsed) + " s, over the cap of " +
                     std::to_string(batch.instance_cap_seconds) + " s";
    }
  }

  VerificationReport report;
  report.suite = name;
  report.instances = batch.codes;
  auto& per_instance = report.details["instances"] = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& r = results[i];
    if (r.violation) {
      r.violation->witness["index"] = i;
      report.violations.push_back(std::move(*r.violation));
    }
    if (r.resource) report.resource_failures.push_back({i, *r.resource});
    per_instance.push_back(std::move(r.summary));
  }
  report.details["config"] = {{"codes", batch.codes}, {"n_min", batch.n_min}, {"n_max", batch.n_max},
                              {"ws", batch.ws},       {"seed", batch.seed},   {"rhos", batch.rhos}};
  report.wall_seconds = seconds_since(start);
  return report;
}

}  // namespace ldpcball
