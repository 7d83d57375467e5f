#include "mbi/apsp.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <span>
#include <string>

#include <omp.h>

#include "mbi/errors.hpp"
#include "sssp.hpp"

namespace mbi {

std::size_t apsp_memory_cap_bytes() {
  std::size_t mb = kDefaultMemCapMb;
  if (const char* env = std::getenv("BC_MEM_CAP_MB")) {
    std::size_t parsed = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, parsed);
    if (ec == std::errc() && ptr == end) mb = parsed;
  }
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  return mb > kMax / (1024 * 1024) ? kMax : mb * 1024 * 1024;
}

std::size_t apsp_table_bytes(std::size_t n) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kPerEntry = sizeof(double) + 2 * sizeof(PathCount);
  if (n != 0 && n > kMax / n) return kMax;
  const std::size_t cells = n * n;
  return cells > kMax / kPerEntry ? kMax : cells * kPerEntry;
}

ApspState ApspState::allocate(const Graph& g, NodeId x) {
  const std::size_t n = g.size();
  if (x >= n) throw ArgumentError("init_apsp: target node " + std::to_string(x) + " out of range");
  const std::size_t need = apsp_table_bytes(n);
  const std::size_t cap = apsp_memory_cap_bytes();
  if (need > cap)
    throw CapacityError("all-pairs state for n=" + std::to_string(n) + " needs " + std::to_string(need >> 20) +
                        " MiB, cap is " + std::to_string(cap >> 20) + " MiB (BC_MEM_CAP_MB)");
  ApspState st;
  st.n_ = n;
  st.x_ = x;
  st.weighted_ = g.weighted();
  st.dist_.resize(n * n);
  st.sigma_.resize(n * n);
  st.sigma_x_.resize(n * n);
  return st;
}

void ApspState::fill_through_x_row(NodeId s) {
  const double tol = tolerance();
  const double d_sx = dist(s, x_);
  const PathCount s_sx = sigma(s, x_);
  for (NodeId t = 0; t < n_; ++t) {
    PathCount through = 0;
    if (reachable(d_sx)) {
      const double via = concat(d_sx, dist(x_, t));
      if (compare_path(via, dist(s, t), tol) == PathOrder::kEqual) through = checked_mul(s_sx, sigma(x_, t));
    }
    sigma_x_[at(s, t)] = through;
  }
}

double ApspState::resum_betweenness() const {
  double b = 0.0;
  for (NodeId s = 0; s < n_; ++s) {
    if (s == x_) continue;
    double row = 0.0;
    for (NodeId t = 0; t < n_; ++t) {
      if (t == s || t == x_) continue;
      const PathCount total = sigma(s, t);
      if (total == 0) continue;
      row += static_cast<double>(sigma_x(s, t)) / static_cast<double>(total);
    }
    b += row;
  }
  return b;
}

namespace {

void fill_row(const Graph& g, NodeId s, std::span<double> dist, std::span<PathCount> sigma,
              detail::SsspScratch& scratch) {
  detail::single_source(g, s, dist, sigma, scratch, /*with_preds=*/false);
}

}  // namespace

ApspState init_apsp_serial(const Graph& g, NodeId x) {
  ApspState st = ApspState::allocate(g, x);
  const std::size_t n = st.n_;
  detail::SsspScratch scratch;
  for (NodeId s = 0; s < n; ++s)
    fill_row(g, s, std::span(st.dist_).subspan(s * n, n), std::span(st.sigma_).subspan(s * n, n), scratch);
  for (NodeId s = 0; s < n; ++s) st.fill_through_x_row(s);
  st.b_x_ = st.resum_betweenness();
  return st;
}

ApspState init_apsp(const Graph& g, NodeId x) {
  ApspState st = ApspState::allocate(g, x);
  const auto n = static_cast<std::int64_t>(st.n_);
  // Overflow inside a parallel region cannot propagate as an exception.
  bool overflow = false;
#pragma omp parallel
  {
    detail::SsspScratch scratch;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < n; ++s) {
      try {
        fill_row(g, static_cast<NodeId>(s), std::span(st.dist_).subspan(s * n, n),
                 std::span(st.sigma_).subspan(s * n, n), scratch);
      } catch (const OverflowError&) {
#pragma omp atomic write
        overflow = true;
      }
    }
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < n; ++s) {
      try {
        st.fill_through_x_row(static_cast<NodeId>(s));
      } catch (const OverflowError&) {
#pragma omp atomic write
        overflow = true;
      }
    }
  }
  if (overflow) throw OverflowError("shortest-path count overflow during initialization");
  st.b_x_ = st.resum_betweenness();
  return st;
}

void rollback(ApspState& st, Journal& journal) {
  auto& entries = journal.entries_;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    st.dist_[it->index] = it->dist;
    st.sigma_[it->index] = it->sigma;
    st.sigma_x_[it->index] = it->sigma_x;
  }
  if (journal.has_b_) st.b_x_ = journal.b_x_;
  journal.clear();
}

}  // namespace mbi
