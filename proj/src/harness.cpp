#include "mbi/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "mbi/bc_static.hpp"
#include "mbi/errors.hpp"

namespace mbi {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> r(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

EdgeUpdate random_absent_edge(const Graph& g, std::mt19937_64& rng) {
  const std::size_t n = g.size();
  if (n < 2 || g.arc_count() >= n * (n - 1)) throw ArgumentError("graph is complete: no absent edge to insert");
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  while (true) {
    const NodeId u = pick(rng);
    const NodeId v = pick(rng);
    if (u != v && !g.has_arc(u, v)) return {u, v, 1.0};
  }
}

bool states_equivalent(const ApspState& a, const ApspState& b, double b_tol) {
  if (a.size() != b.size() || a.target() != b.target()) return false;
  if (a.sigma_table() != b.sigma_table() || a.sigma_x_table() != b.sigma_x_table()) return false;
  if (a.weighted()) {
    const auto& da = a.dist_table();
    const auto& db = b.dist_table();
    for (std::size_t i = 0; i < da.size(); ++i) {
      if (reachable(da[i]) != reachable(db[i])) return false;
      if (reachable(da[i]) && std::abs(da[i] - db[i]) > kWeightedTolerance) return false;
    }
  } else if (a.dist_table() != b.dist_table()) {
    return false;
  }
  return std::abs(a.betweenness() - b.betweenness()) <= b_tol;
}

BenchReport run_update_bench(Graph& g, const BenchOptions& opts) {
  if (g.size() < 2) throw ArgumentError("benchmark needs at least two nodes");
  std::mt19937_64 rng(opts.seed);
  BenchReport report;
  if (opts.target) {
    if (*opts.target >= g.size()) throw ArgumentError("benchmark target out of range");
    report.target = *opts.target;
  } else {
    report.target = std::uniform_int_distribution<NodeId>(0, static_cast<NodeId>(g.size() - 1))(rng);
  }
  const NodeId x = report.target;
  ApspState st = init_apsp(g, x);
  Journal journal;

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    BenchTrial rec;
    rec.edge = random_absent_edge(g, rng);

    double best = 0.0;
    const std::size_t reps = std::max<std::size_t>(1, opts.repeat);
    for (std::size_t r = 0; r + 1 < reps; ++r) {
      const auto t0 = Clock::now();
      apply_insertion(g, st, rec.edge, &journal);
      const auto t1 = Clock::now();
      rollback(st, journal);
      const double ms = elapsed_ms(t0, t1);
      best = r == 0 ? ms : std::min(best, ms);
    }
    const auto t0 = Clock::now();
    rec.stats = apply_insertion(g, st, rec.edge);
    const auto t1 = Clock::now();
    rec.si_ms = reps == 1 ? elapsed_ms(t0, t1) : std::min(best, elapsed_ms(t0, t1));
    g.insert_edge(rec.edge);

    const auto s0 = Clock::now();
    const double b_static = betweenness_of(g, x);
    const auto s1 = Clock::now();
    rec.static_ms = elapsed_ms(s0, s1);
    rec.speedup = rec.si_ms > 0.0 ? rec.static_ms / rec.si_ms : std::numeric_limits<double>::infinity();

    const double tol = 1e-9 * std::max(1.0, std::abs(b_static));
    const ApspState fresh = init_apsp(g, x);
    rec.equivalent = states_equivalent(st, fresh, tol) && std::abs(st.betweenness() - b_static) <= tol;
    report.all_equivalent = report.all_equivalent && rec.equivalent;
    report.trials.push_back(rec);
  }

  std::vector<double> si, stat, speed, pairs;
  for (const BenchTrial& t : report.trials) {
    si.push_back(t.si_ms);
    stat.push_back(t.static_ms);
    speed.push_back(t.speedup);
    pairs.push_back(static_cast<double>(t.stats.affected_pairs));
  }
  report.si_ms = summarize(si);
  report.static_ms = summarize(stat);
  report.speedup = summarize(speed);
  report.speedup_geomean = geometric_mean(speed);
  report.spearman_time_vs_pairs = spearman(si, pairs);
  return report;
}

Summary summarize(std::span<const double> xs) {
  Summary s;
  if (xs.empty()) return s;
  const double n = static_cast<double>(xs.size());
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double sq = 0.0;
  for (double x : xs) sq += (x - s.mean) * (x - s.mean);
  s.stddev = xs.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

double geometric_mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double log_sum = 0.0;
  for (double x : xs) log_sum += std::log(x);
  return std::exp(log_sum / static_cast<double>(xs.size()));
}

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) return 0.0;
  const std::vector<double> ra = average_ranks(a);
  const std::vector<double> rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (va == 0.0 || vb == 0.0) return 0.0;
  return cov / std::sqrt(va * vb);
}

}  // namespace mbi
