#include "mbi/bc_static.hpp"

#include <algorithm>

#include <omp.h>

#include "sssp.hpp"

namespace mbi {

namespace {

struct BrandesScratch {
  explicit BrandesScratch(std::size_t n) : dist(n), sigma(n), delta(n) {}
  std::vector<double> dist;
  std::vector<PathCount> sigma;
  std::vector<double> delta;
  detail::SsspScratch sssp;
};

// Adds the dependencies of source s into `acc`.
void accumulate_source(const Graph& g, NodeId s, BrandesScratch& ws, std::span<double> acc) {
  detail::single_source(g, s, ws.dist, ws.sigma, ws.sssp, /*with_preds=*/true);
  for (NodeId t : ws.sssp.order) ws.delta[t] = 0.0;
  const auto& order = ws.sssp.order;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId w = *it;
    const double coeff = (1.0 + ws.delta[w]) / static_cast<double>(ws.sigma[w]);
    for (NodeId p : ws.sssp.preds[w]) ws.delta[p] += static_cast<double>(ws.sigma[p]) * coeff;
    if (w != s) acc[w] += ws.delta[w];
  }
}

}  // namespace

std::vector<double> brandes_all_serial(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<double> b(n, 0.0);
  BrandesScratch ws(n);
  for (NodeId s = 0; s < n; ++s) accumulate_source(g, s, ws, b);
  return b;
}

std::vector<double> brandes_all(const Graph& g) {
  const std::size_t n = g.size();
  const int threads = omp_get_max_threads();
  if (threads <= 1 || n < 64) return brandes_all_serial(g);

  std::vector<std::vector<double>> partial(threads);
#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
    partial[tid].assign(n, 0.0);
    BrandesScratch ws(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s)
      accumulate_source(g, static_cast<NodeId>(s), ws, partial[tid]);
  }
  std::vector<double> b(n, 0.0);
  for (const auto& part : partial)
    for (std::size_t v = 0; v < n; ++v) b[v] += part[v];
  return b;
}

double betweenness_of(const Graph& g, NodeId x) {
  if (x >= g.size()) throw ArgumentError("betweenness_of: node out of range");
  const std::size_t n = g.size();
  std::vector<double> b(n, 0.0);
  BrandesScratch ws(n);
  for (NodeId s = 0; s < n; ++s) {
    if (s == x) continue;  // x contributes nothing as a source
    accumulate_source(g, s, ws, b);
  }
  return b[x];
}

std::vector<std::size_t> ranks(std::span<const double> b) {
  std::vector<double> sorted(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> r(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) {
    const double bar = b[v] + 1e-9 * std::max(1.0, std::abs(b[v]));
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), bar);
    r[v] = static_cast<std::size_t>(above) + 1;
  }
  return r;
}

}  // namespace mbi
