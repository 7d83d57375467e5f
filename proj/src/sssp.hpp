#pragma once

// Single-source shortest paths with path counting, shared by the static
// betweenness kernels and the all-pairs initialization.

#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "mbi/checked.hpp"
#include "mbi/distance.hpp"
#include "mbi/graph.hpp"

namespace mbi::detail {

struct SsspScratch {
  std::vector<NodeId> order;               // settled nodes, nondecreasing distance
  std::vector<std::vector<NodeId>> preds;  // only filled when requested
  std::vector<NodeId> queue;

  void reset_preds(std::size_t n) {
    if (preds.size() != n) preds.assign(n, {});
    for (NodeId t : order) preds[t].clear();
  }
};

/// Fills dist/sigma (length n) for source s. Unweighted graphs run a BFS,
/// weighted graphs a Dijkstra with tolerance-aware equality. When
/// `with_preds` is set, scratch.preds[t] lists shortest-path predecessors.
inline void single_source(const Graph& g, NodeId s, std::span<double> dist, std::span<PathCount> sigma,
                          SsspScratch& scratch, bool with_preds) {
  const std::size_t n = g.size();
  if (with_preds) scratch.reset_preds(n);
  scratch.order.clear();
  std::fill(dist.begin(), dist.end(), kUnreachable);
  std::fill(sigma.begin(), sigma.end(), PathCount{0});
  dist[s] = 0.0;
  sigma[s] = 1;

  if (!g.weighted()) {
    auto& q = scratch.queue;
    q.clear();
    q.push_back(s);
    for (std::size_t head = 0; head < q.size(); ++head) {
      const NodeId t = q[head];
      scratch.order.push_back(t);
      const double next = dist[t] + 1.0;
      for (const Arc& a : g.out_arcs(t)) {
        const NodeId w = a.node;
        if (dist[w] == kUnreachable) {
          dist[w] = next;
          q.push_back(w);
        }
        if (dist[w] == next) {
          sigma[w] = checked_add(sigma[w], sigma[t]);
          if (with_preds) scratch.preds[w].push_back(t);
        }
      }
    }
    return;
  }

  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  std::vector<char> settled(n, 0);
  pq.push({0.0, s});
  while (!pq.empty()) {
    auto [dt, t] = pq.top();
    pq.pop();
    if (settled[t] || dt > dist[t]) continue;
    settled[t] = 1;
    scratch.order.push_back(t);
    for (const Arc& a : g.out_arcs(t)) {
      const NodeId w = a.node;
      if (settled[w]) continue;
      const double nd = dist[t] + a.weight;
      switch (compare_path(nd, dist[w], kWeightedTolerance)) {
        case PathOrder::kShorter:
          dist[w] = nd;
          sigma[w] = sigma[t];
          if (with_preds) scratch.preds[w].assign(1, t);
          pq.push({nd, w});
          break;
        case PathOrder::kEqual:
          sigma[w] = checked_add(sigma[w], sigma[t]);
          if (with_preds) scratch.preds[w].push_back(t);
          break;
        case PathOrder::kLonger:
          break;
      }
    }
  }
}

}  // namespace mbi::detail
