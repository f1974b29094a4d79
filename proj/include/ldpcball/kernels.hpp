#pragma once

// Data-parallel kernels behind the coset-graph and bound modules.
//
// Every kernel exists twice: `serial::` is the straightforward reference kept
// for testing, `omp::` is the OpenMP version used by the library. Both must
// produce identical integer results; floating reductions agree to rounding
// (the OpenMP scan merges per-chunk partials in chunk order, so its result is
// independent of the thread count).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ldpcball::kernels {

inline constexpr std::uint8_t unvisited = 0xFF;

/// Longest block length for which exhaustive F_2^n scans are allowed.
inline constexpr std::size_t max_scan_length = 30;

/// Coset id of a word-packed vector: XOR of the images of its set bits.
inline std::uint64_t id_of_word(std::uint64_t x, std::span<const std::uint64_t> images) {
  std::uint64_t id = 0;
  while (x != 0) {
    id ^= images[static_cast<std::size_t>(std::countr_zero(x))];
    x &= x - 1;
  }
  return id;
}

namespace serial {

/// Queue-based BFS over the Cayley graph on Z_2^code_dim with the given
/// generator images. Entry c is the distance of coset c from coset 0.
std::vector<std::uint8_t> bfs_leader_weights(std::span<const std::uint64_t> images, std::size_t code_dim);

/// Minimum Hamming weight per coset by visiting every vector of F_2^n.
std::vector<std::uint8_t> min_weight_by_scan(std::span<const std::uint64_t> images, std::size_t n,
                                             std::size_t code_dim);

/// Visits every x in F_2^n in Gray-code order as visit(acc, x, coset_id, weight).
template <class Acc, class Visit>
Acc scan_space(std::size_t n, std::span<const std::uint64_t> images, Acc acc, Visit&& visit) {
  std::uint64_t x = 0;
  std::uint64_t id = 0;
  unsigned weight = 0;
  visit(acc, x, id, weight);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    x ^= std::uint64_t{1} << j;
    id ^= images[j];
    weight = ((x >> j) & 1U) ? weight + 1 : weight - 1;
    visit(acc, x, id, weight);
  }
  return acc;
}

template <class T, class F>
std::vector<T> map_grid(std::span<const double> grid, F&& f) {
  std::vector<T> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
  return out;
}

}  // namespace serial

namespace omp {

/// Level-synchronous BFS; each level scans the frontier in parallel and
/// claims unvisited neighbours with relaxed atomic stores.
std::vector<std::uint8_t> bfs_leader_weights(std::span<const std::uint64_t> images, std::size_t code_dim);

std::vector<std::uint8_t> min_weight_by_scan(std::span<const std::uint64_t> images, std::size_t n,
                                             std::size_t code_dim);

/// Chunked parallel scan. The high `split` bits select a chunk; each chunk
/// Gray-codes its low bits into a private accumulator copied from `init`.
/// Partials are merged in chunk order with merge(into, from).
template <class Acc, class Visit, class Merge>
Acc scan_space(std::size_t n, std::span<const std::uint64_t> images, const Acc& init, Visit&& visit,
               Merge&& merge) {
  const std::size_t split = n > 10 ? 8 : 0;
  const std::size_t low = n - split;
  const std::int64_t chunks = std::int64_t{1} << split;
  std::vector<Acc> partial(static_cast<std::size_t>(chunks), init);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    Acc& acc = partial[static_cast<std::size_t>(c)];
    std::uint64_t x = static_cast<std::uint64_t>(c) << low;
    std::uint64_t id = id_of_word(x, images);
    unsigned weight = static_cast<unsigned>(std::popcount(x));
    visit(acc, x, id, weight);
    const std::uint64_t total = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < total; ++i) {
      const auto j = static_cast<std::size_t>(std::countr_zero(i));
      x ^= std::uint64_t{1} << j;
      id ^= images[j];
      weight = ((x >> j) & 1U) ? weight + 1 : weight - 1;
      visit(acc, x, id, weight);
    }
  }

  Acc out = init;
  for (auto& p : partial) merge(out, p);
  return out;
}

template <class T, class F>
std::vector<T> map_grid(std::span<const double> grid, F&& f) {
  std::vector<T> out(grid.size());
  const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = f(grid[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace omp

}  // namespace ldpcball::kernels
