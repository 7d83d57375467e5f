#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mbi/apsp.hpp"
#include "mbi/graph.hpp"
#include "mbi/si_update.hpp"

namespace mbi {

/// Uniformly random ordered pair (u,v), u != v, with no arc u->v, by
/// rejection sampling. Throws ArgumentError when the graph is complete.
EdgeUpdate random_absent_edge(const Graph& g, std::mt19937_64& rng);

/// Distances equal (within the weighted tolerance for weighted graphs),
/// counts exactly equal and |b_a - b_b| <= b_tol.
bool states_equivalent(const ApspState& a, const ApspState& b, double b_tol);

struct BenchOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::optional<NodeId> target;  // random when unset
  std::size_t repeat = 1;        // incremental timing: best of `repeat`
};

struct BenchTrial {
  EdgeUpdate edge;
  UpdateStats stats;
  double si_ms = 0.0;
  double static_ms = 0.0;
  double speedup = 0.0;
  bool equivalent = false;
};

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct BenchReport {
  NodeId target = 0;
  std::vector<BenchTrial> trials;
  Summary si_ms, static_ms, speedup;
  double speedup_geomean = 0.0;
  double spearman_time_vs_pairs = 0.0;  // SI time against affected pairs
  bool all_equivalent = true;
};

/// Inserts `trials` random absent edges one after another. Each trial times
/// the incremental update against a single-threaded static recomputation of
/// the target's betweenness, then checks the updated state against a fresh
/// initialization. `g` ends up with all inserted edges.
BenchReport run_update_bench(Graph& g, const BenchOptions& opts);

Summary summarize(std::span<const double> xs);
double geometric_mean(std::span<const double> xs);
/// Spearman rank correlation with average ranks for ties; 0 when either
/// side is constant.
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace mbi
