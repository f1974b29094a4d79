#include <deque>

#include "ldpcball/kernels.hpp"

namespace ldpcball::kernels::serial {

std::vector<std::uint8_t> bfs_leader_weights(std::span<const std::uint64_t> images, std::size_t code_dim) {
  std::vector<std::uint8_t> dist(std::size_t{1} << code_dim, unvisited);
  std::deque<std::uint64_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (auto g : images) {
      const auto nb = c ^ g;
      if (dist[nb] == unvisited) {
        dist[nb] = static_cast<std::uint8_t>(dist[c] + 1);
        queue.push_back(nb);
      }
    }
  }
  return dist;
}

std::vector<std::uint8_t> min_weight_by_scan(std::span<const std::uint64_t> images, std::size_t n,
                                             std::size_t code_dim) {
  std::vector<std::uint8_t> best(std::size_t{1} << code_dim, unvisited);
  return scan_space(n, images, std::move(best),
                    [](std::vector<std::uint8_t>& acc, std::uint64_t, std::uint64_t id, unsigned weight) {
                      if (weight < acc[id]) acc[id] = static_cast<std::uint8_t>(weight);
                    });
}

}  // namespace ldpcball::kernels::serial
