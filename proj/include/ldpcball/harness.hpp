#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldpcball/coset_table.hpp"
#include "ldpcball/linear_code.hpp"
#include "ldpcball/partition.hpp"
#include "ldpcball/verification.hpp"

namespace ldpcball {

enum class GeneratorMode {
  uniform_support,  // each row a uniform w-subset; last rows patched for coverage
  regular_tanner,   // configuration model with near-regular column degrees
};

struct GeneratorConfig {
  std::size_t n = 0;
  std::size_t w = 3;
  std::size_t m = 0;  // number of dual spanning rows
  std::uint64_t seed = 0;
  GeneratorMode mode = GeneratorMode::uniform_support;
  bool require_column_weight_2 = false;

  /// Throws DomainError when n, w or m is zero or m·w < n.
  void validate() const;
};

/// Deterministic in the config. Rows are pairwise distinct and cover 1..n.
/// With require_column_weight_2 in uniform mode, rows are drawn to cover every
/// coordinate twice first, so they are no longer uniform subsets.
LinearCode generate_code(const GeneratorConfig& config);

/// 64-bit generator seeded from (seed, stream) through std::seed_seq.
std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream);

std::optional<GeneratorMode> parse_generator_mode(const std::string& name);

struct BatchConfig {
  std::size_t codes = 100;
  std::size_t n_min = 8;
  std::size_t n_max = 16;
  std::vector<std::size_t> ws{3};  // weight of instance i is ws[i % ws.size()]
  std::uint64_t seed = 0;
  std::vector<double> rhos{0.1, 0.2, 0.3, 0.4};
  GeneratorMode mode = GeneratorMode::uniform_support;
  bool require_column_weight_2 = false;
  double instance_cap_seconds = 10.0;
  double global_cap_seconds = 600.0;
};

/// Generator settings of instance `index`: n, w and m drawn from a stream
/// derived from (batch.seed, index); m is uniform in [⌈n/w⌉, ⌊n/2⌋ + 1].
GeneratorConfig instance_config(const BatchConfig& batch, std::size_t index);

/// Fault-injection points for testing the checkers themselves.
struct SuiteHooks {
  std::function<CosetTable(std::size_t instance, CosetTable)> mutate_table;
  std::function<void(std::size_t instance, Partition&)> mutate_partition;
};

/// lemma31, partition, tuple-claim, chernoff, normalize4, diameter4, pprime4.
const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

/// Batch defaults for a suite (weights, n range, ρ values).
BatchConfig default_batch(const std::string& suite);

/// Runs the named suite over freshly generated codes. Instances run
/// concurrently and are merged by index; each contributes at most one
/// violation. Resource caps and time caps are reported, not thrown.
VerificationReport run_suite(const std::string& name, const BatchConfig& batch, const SuiteHooks& hooks = {});

// Per-code checks used by the suites. Each returns the first violation found.

/// Sphere recursion, sphere and ball caps, next-sphere counts, and both
/// parts of the local-neighbourhood lemma over every minimum-weight element.
std::optional<Violation> check_ball_growth(const CosetTable& table);
/// BFS leader weights against an independent exhaustive minimum-weight scan.
std::optional<Violation> check_table_against_scan(const CosetTable& table);
/// p(ρ) >= |B(⌊ρn⌋)| ρ^⌊ρn⌋ (1-ρ)^(n-⌊ρn⌋).
std::optional<Violation> check_ball_probability(const CosetTable& table, std::span<const double> rhos);
/// Partition invariants plus find_heavy_class on its class sizes.
std::optional<Violation> check_partition(const LinearCode& code, const Partition& p, std::span<const double> rhos);
std::optional<Violation> check_tuple_claim_at(const CosetTable& table, const Partition& p, std::span<const double> rhos);
std::optional<Violation> check_chernoff_at(const CosetTable& table, const Partition& p, std::span<const double> rhos);
/// Exhaustive over F_2^n: coset and weight preservation, single-pass vs
/// fixpoint agreement, caps for minimum-weight inputs, and all caps after
/// eliminate_I1 followed by normalization.
std::optional<Violation> check_normalization(const CosetTable& table, const Partition& p);
std::optional<Violation> check_diameter_bound(const CosetTable& table, const Partition& p);
/// Exact structured minimum-weight probability against the closed-form maximum
/// for every ρ in `rhos` with ρ <= D/n.
std::optional<Violation> check_structure_probability(const CosetTable& table, const Partition& p,
                                                     std::span<const double> rhos);

/// find_heavy_class on every composition of n into w parts (n <= n_max,
/// 3 <= w <= w_max) for each ρ. Returns the number of compositions checked;
/// throws std::logic_error naming the first failure.
std::size_t exhaustive_heavy_class_check(std::size_t n_max, std::size_t w_max, std::span<const double> rhos);
/// `count` random compositions (n <= n_max, w in [3, w_max], ρ uniform in (0, 1/2)).
std::size_t random_heavy_class_check(std::size_t count, std::size_t n_max, std::size_t w_max, std::uint64_t seed);

}  // namespace ldpcball
