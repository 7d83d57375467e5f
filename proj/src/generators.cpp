#include <algorithm>
#include <random>

#include "mbi/errors.hpp"
#include "mbi/graph.hpp"

namespace mbi {

Graph generate_pa(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0) throw ArgumentError("generate_pa: n must be positive");
  if (d == 0) throw ArgumentError("generate_pa: attachment degree must be at least 1");
  if (n < d + 1) throw ArgumentError("generate_pa: need n >= d + 1");

  Graph g(n, /*directed=*/true);
  std::mt19937_64 rng(seed);
  const std::size_t seed_nodes = std::min(n, d + kPaSeedExtra);

  // Each node owns one ticket plus one per received arc, so a uniform ticket
  // draw picks node w with probability proportional to in-degree(w) + 1.
  std::vector<NodeId> tickets;
  tickets.reserve(n + n * d + seed_nodes * seed_nodes);
  for (NodeId u = 0; u < seed_nodes; ++u) {
    tickets.push_back(u);
    for (NodeId v = 0; v < seed_nodes; ++v) {
      if (u == v) continue;
      g.insert_edge({u, v});
    }
  }
  for (NodeId v = 0; v < seed_nodes; ++v)
    for (std::size_t i = 0; i + 1 < seed_nodes; ++i) tickets.push_back(v);

  std::vector<NodeId> chosen;
  for (NodeId u = static_cast<NodeId>(seed_nodes); u < n; ++u) {
    chosen.clear();
    while (chosen.size() < d) {
      std::uniform_int_distribution<std::size_t> pick(0, tickets.size() - 1);
      const NodeId target = tickets[pick(rng)];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (NodeId target : chosen) {
      g.insert_edge({u, target});
      tickets.push_back(target);
    }
    tickets.push_back(u);
  }
  return g;
}

Graph generate_er(std::size_t n, double p, std::uint64_t seed, bool directed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("generate_er: p must lie in [0,1]");
  Graph g(n, directed);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (coin(rng)) g.insert_edge({u, v});
    }
  }
  return g;
}

}  // namespace mbi
