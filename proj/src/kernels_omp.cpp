#include <atomic>

#include "ldpcball/kernels.hpp"

namespace ldpcball::kernels::omp {

std::vector<std::uint8_t> bfs_leader_weights(std::span<const std::uint64_t> images, std::size_t code_dim) {
  const auto count = static_cast<std::int64_t>(std::size_t{1} << code_dim);
  std::vector<std::uint8_t> dist(static_cast<std::size_t>(count), unvisited);
  dist[0] = 0;

  for (std::uint8_t level = 0;; ++level) {
    bool grew = false;
#pragma omp parallel for schedule(static) reduction(|| : grew)
    for (std::int64_t c = 0; c < count; ++c) {
      std::atomic_ref<std::uint8_t> here(dist[static_cast<std::size_t>(c)]);
      if (here.load(std::memory_order_relaxed) != level) continue;
      for (auto g : images) {
        std::atomic_ref<std::uint8_t> nb(dist[static_cast<std::size_t>(c) ^ g]);
        if (nb.load(std::memory_order_relaxed) == unvisited) {
          nb.store(static_cast<std::uint8_t>(level + 1), std::memory_order_relaxed);
          grew = true;
        }
      }
    }
    if (!grew || level + 1 == unvisited) break;
  }
  return dist;
}

std::vector<std::uint8_t> min_weight_by_scan(std::span<const std::uint64_t> images, std::size_t n,
                                             std::size_t code_dim) {
  // Min is exact and order-free, so one shared table with atomic min suffices.
  std::vector<std::uint8_t> best(std::size_t{1} << code_dim, unvisited);
  struct Nothing {};
  scan_space(
      n, images, Nothing{},
      [&best](Nothing&, std::uint64_t, std::uint64_t id, unsigned weight) {
        std::atomic_ref<std::uint8_t> slot(best[id]);
        auto cur = slot.load(std::memory_order_relaxed);
        const auto w = static_cast<std::uint8_t>(weight);
        while (w < cur && !slot.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
        }
      },
      [](Nothing&, const Nothing&) {});
  return best;
}

}  // namespace ldpcball::kernels::omp
