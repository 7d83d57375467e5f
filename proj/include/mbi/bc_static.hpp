#pragma once

#include <span>
#include <vector>

#include "mbi/graph.hpp"

namespace mbi {

/// Exact betweenness of every node (Brandes), summed over ordered pairs.
///
/// Sources are split across OpenMP threads; each thread accumulates into
/// its own buffer and the buffers are added in thread order. The result is
/// deterministic for a fixed thread count and agrees with the serial
/// reference to within 1e-9 relative, not bit-for-bit.
std::vector<double> brandes_all(const Graph& g);

/// Single-threaded reference, sources visited in id order.
std::vector<double> brandes_all_serial(const Graph& g);

/// Betweenness of x alone. Always single-threaded, so it is the static
/// recomputation baseline for timing.
double betweenness_of(const Graph& g, NodeId x);

/// Rank r_v = 1 + #{u : b_u > b_v}; ties share a rank. Two values closer
/// than 1e-9 relative are treated as tied to absorb summation noise.
std::vector<std::size_t> ranks(std::span<const double> b);

}  // namespace mbi
