#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mbi/graph.hpp"

namespace mbi {

/// Arcs added into `target`, in the order they were committed.
struct ImprovementSolution {
  NodeId target = 0;
  double initial = 0.0;               // b_target before any addition
  std::vector<NodeId> tails;          // edge i is (tails[i], target)
  std::vector<double> trace;          // b_target after each addition
  std::vector<double> elapsed_ms;     // cumulative solver time at each commit
  std::size_t evaluations = 0;        // betweenness evaluations performed

  double final_value() const { return trace.empty() ? initial : trace.back(); }
};

/// Tails that may still be connected to v: every node other than v that is
/// not already an in-neighbour of v.
std::vector<NodeId> improvement_candidates(const Graph& g, NodeId v);

struct GreedyOptions {
  /// Worker threads for candidate evaluation; 0 keeps the OpenMP default.
  int threads = 1;
};

/// k rounds; each round evaluates every candidate with the incremental
/// update and commits the best one (ties: smallest id).
ImprovementSolution greedy_mbi(const Graph& g, NodeId v, std::size_t k, GreedyOptions opts = {});

/// Lazy variant that skips candidates whose last recorded gain cannot beat
/// the round's best value. Directed graphs only.
ImprovementSolution greedy_mbi_pruned(const Graph& g, NodeId v, std::size_t k);

inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000;

/// Exhaustive search over k-subsets of candidates with static
/// recomputation. Ties go to the lexicographically smallest id set.
/// Throws CapacityError when C(|candidates|, k) exceeds `budget`.
ImprovementSolution brute_force_optimum(const Graph& g, NodeId v, std::size_t k,
                                        std::uint64_t budget = kDefaultSubsetBudget);

enum class BaselineKind { kTopDegree, kTopBetweenness, kRandom };

/// Picks k tails on the original graph by degree (out-degree if directed),
/// by betweenness, or uniformly at random, then inserts them in order.
ImprovementSolution baseline(const Graph& g, NodeId v, std::size_t k, BaselineKind kind, std::uint64_t seed = 0);

/// Recomputes b_target after every prefix of the solution with static
/// Brandes. Used to cross-check solver traces.
std::vector<double> static_trace(const Graph& g, const ImprovementSolution& sol);

/// Graph g with all edges of the solution added.
Graph augmented(const Graph& g, const ImprovementSolution& sol);

struct RankReport {
  double b_before = 0.0;
  double b_after = 0.0;
  std::size_t r_before = 0;
  std::size_t r_after = 0;
  std::int64_t rho = 0;  // r_before - r_after
  std::optional<double> pct_b_before, pct_b_after;  // absent when n < 3
  double pct_r_before = 0.0;
  double pct_r_after = 0.0;
};

/// Betweenness b * 100 / ((n-1)(n-2)); absent when n < 3.
std::optional<double> percentage_betweenness(double b, std::size_t n);

RankReport rank_report(const Graph& before, const Graph& after, NodeId v);
RankReport rank_report(std::span<const double> b_before, std::span<const double> b_after, NodeId v);

/// Pivots stratified by initial rank: nodes sorted by betweenness
/// (descending, ties by id) are cut into four intervals at multiples of
/// ceil(n/4) and an equal share of `count` is drawn from each.
std::vector<NodeId> sample_pivots(std::span<const double> b, std::size_t count, std::uint64_t seed);

}  // namespace mbi
