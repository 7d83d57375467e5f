#include "mbi/improve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include <omp.h>

#include "mbi/apsp.hpp"
#include "mbi/bc_static.hpp"
#include "mbi/errors.hpp"
#include "mbi/si_update.hpp"

namespace mbi {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_target(const Graph& g, NodeId v) {
  if (v >= g.size()) throw ArgumentError("target node " + std::to_string(v) + " out of range");
}

// b_v after tentatively adding (u,v); the state is restored before return.
double probe(const Graph& g, ApspState& st, NodeId u, NodeId v, Journal& journal) {
  apply_insertion(g, st, {u, v, 1.0}, &journal);
  const double value = st.betweenness();
  rollback(st, journal);
  return value;
}

// Index of the largest value; the earliest index wins ties.
std::size_t argmax_first(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

void evaluate_all(const Graph& g, ApspState& base, std::span<const NodeId> candidates, NodeId v, int threads,
                  std::vector<double>& values) {
  values.assign(candidates.size(), 0.0);
  if (threads == 1) {
    Journal journal;
    for (std::size_t i = 0; i < candidates.size(); ++i) values[i] = probe(g, base, candidates[i], v, journal);
    return;
  }
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
  {
    ApspState local = base;
    Journal journal;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        values[i] = probe(g, local, candidates[i], v, journal);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

ImprovementSolution insert_in_order(const Graph& g, NodeId v, std::span<const NodeId> tails) {
  const auto start = Clock::now();
  ImprovementSolution sol;
  sol.target = v;
  Graph cur = g;
  ApspState st = init_apsp(cur, v);
  sol.initial = st.betweenness();
  for (NodeId u : tails) {
    insert_and_update(cur, st, {u, v, 1.0});
    sol.tails.push_back(u);
    sol.trace.push_back(st.betweenness());
    sol.elapsed_ms.push_back(ms_since(start));
  }
  sol.evaluations = tails.size();
  return sol;
}

}  // namespace

std::vector<NodeId> improvement_candidates(const Graph& g, NodeId v) {
  check_target(g, v);
  std::vector<char> excluded(g.size(), 0);
  excluded[v] = 1;
  for (const Arc& a : g.in_arcs(v)) excluded[a.node] = 1;
  std::vector<NodeId> out;
  for (NodeId u = 0; u < g.size(); ++u)
    if (!excluded[u]) out.push_back(u);
  return out;
}

ImprovementSolution greedy_mbi(const Graph& g, NodeId v, std::size_t k, GreedyOptions opts) {
  const auto start = Clock::now();
  std::vector<NodeId> candidates = improvement_candidates(g, v);
  ImprovementSolution sol;
  sol.target = v;
  Graph cur = g;
  ApspState base = init_apsp(cur, v);
  sol.initial = base.betweenness();

  std::vector<double> values;
  for (std::size_t round = 0; round < k && !candidates.empty(); ++round) {
    evaluate_all(cur, base, candidates, v, opts.threads, values);
    sol.evaluations += candidates.size();
    const std::size_t best = argmax_first(values);
    const NodeId u = candidates[best];
    insert_and_update(cur, base, {u, v, 1.0});
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
    sol.tails.push_back(u);
    sol.trace.push_back(base.betweenness());
    sol.elapsed_ms.push_back(ms_since(start));
  }
  return sol;
}

ImprovementSolution greedy_mbi_pruned(const Graph& g, NodeId v, std::size_t k) {
  if (!g.directed()) throw ArgumentError("pruned greedy relies on submodularity, which holds only for directed graphs");
  const auto start = Clock::now();
  std::vector<NodeId> candidates = improvement_candidates(g, v);
  ImprovementSolution sol;
  sol.target = v;
  Graph cur = g;
  ApspState base = init_apsp(cur, v);
  sol.initial = base.betweenness();

  std::vector<double> gain(g.size(), 0.0);  // last observed marginal gain per tail
  Journal journal;
  for (std::size_t round = 0; round < k && !candidates.empty(); ++round) {
    const double current = base.betweenness();
    bool any = false;
    double lower = 0.0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const NodeId u = candidates[i];
      // the first candidate of a round is always evaluated, which keeps ties
      // resolved by smallest id exactly as in the plain greedy
      // the bound gets a little slack so rounding never skips a tie
      if (round > 0 && any && !(lower < current + gain[u] + 1e-9 * std::max(1.0, std::abs(lower)))) continue;
      const double value = probe(cur, base, u, v, journal);
      ++sol.evaluations;
      gain[u] = value - current;
      if (!any || value > lower) {
        lower = value;
        best = i;
      }
      any = true;
    }
    const NodeId u = candidates[best];
    insert_and_update(cur, base, {u, v, 1.0});
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
    sol.tails.push_back(u);
    sol.trace.push_back(base.betweenness());
    sol.elapsed_ms.push_back(ms_since(start));
  }
  return sol;
}

ImprovementSolution brute_force_optimum(const Graph& g, NodeId v, std::size_t k, std::uint64_t budget) {
  const auto start = Clock::now();
  const std::vector<NodeId> candidates = improvement_candidates(g, v);
  const std::size_t c = candidates.size();
  const std::size_t pick = std::min(k, c);

  // C(c, pick), saturating just above the budget
  std::uint64_t subsets = 1;
  for (std::size_t i = 0; i < pick; ++i) {
    const std::uint64_t num = c - i;
    if (subsets > std::numeric_limits<std::uint64_t>::max() / num) {
      subsets = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    subsets = subsets * num / (i + 1);
  }
  if (subsets > budget)
    throw CapacityError("exhaustive search needs " +
                        (subsets == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                              : std::to_string(subsets)) +
                        " subsets, budget is " + std::to_string(budget));

  ImprovementSolution sol;
  sol.target = v;
  sol.initial = betweenness_of(g, v);

  std::vector<std::size_t> idx(pick);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> best_idx = idx;
  double best_value = -1.0;
  while (true) {
    Graph h = g;
    for (std::size_t i : idx) h.insert_edge({candidates[i], v, 1.0});
    const double value = betweenness_of(h, v);
    ++sol.evaluations;
    if (value > best_value + 1e-9 * std::max(1.0, std::abs(best_value))) {
      best_value = value;
      best_idx = idx;
    }
    // next combination in lexicographic order
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == c - pick + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }

  for (std::size_t i : best_idx) sol.tails.push_back(candidates[i]);
  sol.trace = static_trace(g, sol);
  sol.elapsed_ms.assign(sol.tails.size(), ms_since(start));
  return sol;
}

ImprovementSolution baseline(const Graph& g, NodeId v, std::size_t k, BaselineKind kind, std::uint64_t seed) {
  std::vector<NodeId> candidates = improvement_candidates(g, v);
  const std::size_t pick = std::min(k, candidates.size());
  switch (kind) {
    case BaselineKind::kTopDegree: {
      std::stable_sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId b) {
        return g.out_arcs(a).size() > g.out_arcs(b).size();
      });
      break;
    }
    case BaselineKind::kTopBetweenness: {
      const std::vector<double> b = brandes_all(g);
      std::stable_sort(candidates.begin(), candidates.end(), [&](NodeId a, NodeId c) { return b[a] > b[c]; });
      break;
    }
    case BaselineKind::kRandom: {
      std::mt19937_64 rng(seed);
      std::shuffle(candidates.begin(), candidates.end(), rng);
      break;
    }
  }
  candidates.resize(pick);
  return insert_in_order(g, v, candidates);
}

std::vector<double> static_trace(const Graph& g, const ImprovementSolution& sol) {
  Graph h = g;
  std::vector<double> trace;
  trace.reserve(sol.tails.size());
  for (NodeId u : sol.tails) {
    h.insert_edge({u, sol.target, 1.0});
    trace.push_back(betweenness_of(h, sol.target));
  }
  return trace;
}

Graph augmented(const Graph& g, const ImprovementSolution& sol) {
  Graph h = g;
  for (NodeId u : sol.tails) h.insert_edge({u, sol.target, 1.0});
  return h;
}

std::optional<double> percentage_betweenness(double b, std::size_t n) {
  if (n < 3) return std::nullopt;
  return b * 100.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

RankReport rank_report(std::span<const double> b_before, std::span<const double> b_after, NodeId v) {
  if (b_before.size() != b_after.size()) throw ArgumentError("rank_report: node sets differ");
  if (v >= b_before.size()) throw ArgumentError("rank_report: node out of range");
  const std::size_t n = b_before.size();
  RankReport rep;
  rep.b_before = b_before[v];
  rep.b_after = b_after[v];
  rep.r_before = ranks(b_before)[v];
  rep.r_after = ranks(b_after)[v];
  rep.rho = static_cast<std::int64_t>(rep.r_before) - static_cast<std::int64_t>(rep.r_after);
  rep.pct_b_before = percentage_betweenness(rep.b_before, n);
  rep.pct_b_after = percentage_betweenness(rep.b_after, n);
  rep.pct_r_before = static_cast<double>(rep.r_before) * 100.0 / static_cast<double>(n);
  rep.pct_r_after = static_cast<double>(rep.r_after) * 100.0 / static_cast<double>(n);
  return rep;
}

RankReport rank_report(const Graph& before, const Graph& after, NodeId v) {
  if (before.size() != after.size()) throw ArgumentError("rank_report: node sets differ");
  const std::vector<double> b0 = brandes_all(before);
  const std::vector<double> b1 = brandes_all(after);
  return rank_report(b0, b1, v);
}

std::vector<NodeId> sample_pivots(std::span<const double> b, std::size_t count, std::uint64_t seed) {
  const std::size_t n = b.size();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) { return b[x] > b[y]; });

  count = std::min(count, n);
  const std::size_t quarter = (n + 3) / 4;
  std::mt19937_64 rng(seed);
  std::vector<NodeId> pivots;
  for (std::size_t part = 0; part < 4; ++part) {
    const std::size_t lo = std::min(n, part * quarter);
    const std::size_t hi = std::min(n, lo + quarter);
    const std::size_t share = count / 4 + (part < count % 4 ? 1 : 0);
    std::vector<NodeId> interval(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                 order.begin() + static_cast<std::ptrdiff_t>(hi));
    std::shuffle(interval.begin(), interval.end(), rng);
    for (std::size_t i = 0; i < std::min(share, interval.size()); ++i) pivots.push_back(interval[i]);
  }
  return pivots;
}

}  // namespace mbi
