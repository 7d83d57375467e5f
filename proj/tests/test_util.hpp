#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "mbi/graph.hpp"

namespace testutil {

inline mbi::Graph make_graph(std::size_t n, bool directed,
                             std::initializer_list<std::pair<mbi::NodeId, mbi::NodeId>> arcs) {
  mbi::Graph g(n, directed);
  for (auto [u, v] : arcs) g.insert_edge({u, v});
  return g;
}

inline mbi::Graph path4() { return make_graph(4, true, {{0, 1}, {1, 2}, {2, 3}}); }

// Random positive weights on an existing topology.
template <class Rng>
mbi::Graph with_random_weights(const mbi::Graph& g, Rng& rng) {
  mbi::Graph w(g.size(), g.directed(), /*weighted=*/true);
  std::uniform_int_distribution<int> pick(1, 4);
  for (const auto& [arc, weight] : g.edges()) w.insert_edge({arc.first, arc.second, 0.5 * pick(rng)});
  return w;
}


// Same node set, every arc turned into an undirected edge.
inline mbi::Graph to_undirected(const mbi::Graph& g) {
  mbi::Graph h(g.size(), /*directed=*/false);
  for (const auto& [arc, w] : g.edges())
    if (!h.has_arc(arc.first, arc.second)) h.insert_edge({arc.first, arc.second});
  return h;
}

}  // namespace testutil
