#include "mbi/si_update.hpp"

#include <stdexcept>
#include <string>

#include "mbi/errors.hpp"

namespace mbi {

namespace {

// Scratch reused across updates on the same thread. Visit marks are epoch
// stamps so a pass never pays O(n) to clear them.
struct Workspace {
  std::vector<std::uint32_t> src_mark;
  std::vector<std::uint32_t> tgt_mark;
  std::uint32_t epoch = 0;
  std::vector<NodeId> queue;
  std::vector<NodeId> parent;
  std::vector<std::vector<NodeId>> sources;

  void begin(std::size_t n) {
    if (src_mark.size() != n) {
      src_mark.assign(n, 0);
      tgt_mark.assign(n, 0);
      parent.assign(n, 0);
      sources.assign(n, {});
      epoch = 0;
    }
    if (++epoch == 0) {
      std::fill(src_mark.begin(), src_mark.end(), 0);
      std::fill(tgt_mark.begin(), tgt_mark.end(), 0);
      epoch = 1;
    }
  }
};

Workspace& workspace() {
  thread_local Workspace ws;
  return ws;
}

// Affected sources of v for arc (u,v,w); appends into `out`.
void collect_sources(const Graph& g, const ApspState& st, NodeId u, NodeId v, double w, Workspace& ws,
                     std::vector<NodeId>& out) {
  const double tol = st.tolerance();
  out.clear();
  if (compare_path(w, st.dist(u, v), tol) == PathOrder::kLonger) return;
  out.push_back(u);
  ws.src_mark[u] = ws.epoch;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const NodeId s = out[head];
    for (const Arc& a : g.in_arcs(s)) {
      const NodeId p = a.node;
      if (ws.src_mark[p] == ws.epoch) continue;
      if (compare_path(concat(st.dist(p, u), w), st.dist(p, v), tol) == PathOrder::kLonger) continue;
      ws.src_mark[p] = ws.epoch;
      out.push_back(p);
    }
  }
}

void check_exclusive(const ApspState& st, NodeId s, NodeId t, NodeId u, NodeId v) {
  if (st.sigma_x(s, u) != 0 && st.sigma_x(v, t) != 0)
    throw std::logic_error("target lies on both the s-u and v-t segments of a new shortest path (" +
                           std::to_string(s) + "," + std::to_string(t) + ")");
}

// One directed pass for arc (u,v) with weight w.
UpdateStats run_pass(const Graph& g, ApspState& st, NodeId u, NodeId v, double w, Journal* journal) {
  UpdateStats stats;
  const double tol = st.tolerance();
  if (compare_path(w, st.dist(u, v), tol) == PathOrder::kLonger) return stats;
  stats.noop = false;

  Workspace& ws = workspace();
  ws.begin(st.size());
  collect_sources(g, st, u, v, w, ws, ws.sources[v]);
  stats.affected_sources = ws.sources[v].size();

  const NodeId x = st.target();
  PairWriter writer(st, journal);
  auto& queue = ws.queue;
  queue.clear();
  queue.push_back(v);
  ws.tgt_mark[v] = ws.epoch;
  ws.parent[v] = v;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId t = queue[head];
    const double d_vt = st.dist(v, t);
    const std::vector<NodeId>& candidates = ws.sources[ws.parent[t]];
    std::vector<NodeId>& own = ws.sources[t];
    if (t != v) own.clear();

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const NodeId s = candidates[i];
      ++stats.pairs_examined;
      const double through = st.dist(s, u) + w + d_vt;
      const double d_st = st.dist(s, t);
      const PathOrder order = compare_path(through, d_st, tol);
      if (order == PathOrder::kLonger) continue;
      ++stats.affected_pairs;

      const bool counts = s != x && t != x;
      if (counts && st.sigma(s, t) != 0)
        writer.add_betweenness(-static_cast<double>(st.sigma_x(s, t)) / static_cast<double>(st.sigma(s, t)));
      const SigmaPair next =
          order == PathOrder::kShorter ? update_sigma_gr(st, s, t, u, v) : update_sigma_eq(st, s, t, u, v);
      writer.set(s, t, order == PathOrder::kShorter ? through : d_st, next.sigma, next.sigma_x);
      if (counts)
        writer.add_betweenness(static_cast<double>(next.sigma_x) / static_cast<double>(next.sigma));
      if (t != v) own.push_back(s);
    }

    for (const Arc& a : g.out_arcs(t)) {
      const NodeId next = a.node;
      if (ws.tgt_mark[next] == ws.epoch) continue;
      const double d_vn = st.dist(v, next);
      // only descend along shortest paths from v, so parent(next) is a
      // predecessor and S(next) is contained in S(parent(next))
      if (compare_path(d_vt + a.weight, d_vn, tol) != PathOrder::kEqual) continue;
      if (compare_path(w + d_vn, st.dist(u, next), tol) == PathOrder::kLonger) continue;
      ws.tgt_mark[next] = ws.epoch;
      ws.parent[next] = t;
      queue.push_back(next);
    }
  }
  stats.affected_targets = queue.size();
  return stats;
}

}  // namespace

std::vector<NodeId> find_affected_sources(const Graph& g, const ApspState& st, const EdgeUpdate& e) {
  if (e.u >= st.size() || e.v >= st.size()) throw ArgumentError("find_affected_sources: node out of range");
  Workspace& ws = workspace();
  ws.begin(st.size());
  std::vector<NodeId> out;
  collect_sources(g, st, e.u, e.v, e.weight, ws, out);
  return out;
}

SigmaPair update_sigma_gr(const ApspState& st, NodeId s, NodeId t, NodeId u, NodeId v) {
  check_exclusive(st, s, t, u, v);
  const PathCount su = st.sigma(s, u);
  const PathCount vt = st.sigma(v, t);
  return {checked_mul(su, vt),
          checked_add(checked_mul(st.sigma_x(s, u), vt), checked_mul(su, st.sigma_x(v, t)))};
}

SigmaPair update_sigma_eq(const ApspState& st, NodeId s, NodeId t, NodeId u, NodeId v) {
  const SigmaPair fresh = update_sigma_gr(st, s, t, u, v);
  return {checked_add(st.sigma(s, t), fresh.sigma), checked_add(st.sigma_x(s, t), fresh.sigma_x)};
}

UpdateStats apply_insertion(const Graph& g, ApspState& st, const EdgeUpdate& e, Journal* journal) {
  if (st.size() != g.size()) throw ArgumentError("apply_insertion: state and graph sizes differ");
  g.validate(e);
  UpdateStats stats = run_pass(g, st, e.u, e.v, e.weight, journal);
  if (!g.directed()) stats += run_pass(g, st, e.v, e.u, e.weight, journal);
  return stats;
}

UpdateStats insert_and_update(Graph& g, ApspState& st, const EdgeUpdate& e) {
  UpdateStats stats = apply_insertion(g, st, e);
  g.insert_edge(e);
  return stats;
}

}  // namespace mbi
