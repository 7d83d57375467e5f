#pragma once

#include <cstddef>
#include <vector>

#include "mbi/apsp.hpp"
#include "mbi/graph.hpp"

namespace mbi {

struct SigmaPair {
  PathCount sigma;
  PathCount sigma_x;
};

/// Counters for one update; the cost of a pass is dominated by
/// pairs_examined = sum over affected targets t of |S(parent(t))|.
struct UpdateStats {
  bool noop = true;
  std::size_t affected_sources = 0;
  std::size_t affected_targets = 0;
  std::size_t pairs_examined = 0;
  std::size_t affected_pairs = 0;

  UpdateStats& operator+=(const UpdateStats& o) {
    noop = noop && o.noop;
    affected_sources += o.affected_sources;
    affected_targets += o.affected_targets;
    pairs_examined += o.pairs_examined;
    affected_pairs += o.affected_pairs;
    return *this;
  }
};

/// Nodes s with d(s,u) + w <= d(s,v) for the arc (e.u, e.v), found by a
/// pruned search from u over incoming arcs. Empty when the update cannot
/// shorten or tie d(u,v).
std::vector<NodeId> find_affected_sources(const Graph& g, const ApspState& st, const EdgeUpdate& e);

/// New counts for a pair whose distance strictly drops through (u,v):
/// every old shortest path is discarded.
SigmaPair update_sigma_gr(const ApspState& st, NodeId s, NodeId t, NodeId u, NodeId v);

/// New counts for a pair that gains equal-length paths through (u,v).
SigmaPair update_sigma_eq(const ApspState& st, NodeId s, NodeId t, NodeId u, NodeId v);

/// Brings `st` from graph g to g + e and adjusts the cached betweenness.
/// `g` is the graph before the update and is not modified. Undirected
/// graphs run one directed pass per orientation. With a journal attached
/// the update can be undone exactly through rollback().
UpdateStats apply_insertion(const Graph& g, ApspState& st, const EdgeUpdate& e, Journal* journal = nullptr);

/// apply_insertion followed by g.insert_edge(e).
UpdateStats insert_and_update(Graph& g, ApspState& st, const EdgeUpdate& e);

}  // namespace mbi
