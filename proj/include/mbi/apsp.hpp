#pragma once

#include <cstddef>
#include <vector>

#include "mbi/checked.hpp"
#include "mbi/distance.hpp"
#include "mbi/graph.hpp"

namespace mbi {

class Journal;

/// Default ceiling on the bytes held by the three n x n tables.
inline constexpr std::size_t kDefaultMemCapMb = 4096;

/// Cap in bytes: BC_MEM_CAP_MB from the environment if set and valid,
/// otherwise kDefaultMemCapMb.
std::size_t apsp_memory_cap_bytes();

/// Bytes needed by the tables for an n-node graph (saturating).
std::size_t apsp_table_bytes(std::size_t n);

/// All-pairs distances and path counts, plus the number of shortest paths
/// through one fixed node x and the betweenness of x.
///
/// Invariants kept by init_apsp and apply_insertion:
///   dist(s,s) = 0, sigma(s,s) = 1;
///   dist(s,t) unreachable iff sigma(s,t) = 0;
///   sigma_x(s,t) = sigma(s,x) * sigma(x,t) when d(s,t) = d(s,x) + d(x,t),
///   else 0. Endpoints count as "through", so sigma_x(x,t) = sigma(x,t);
///   the update formulas rely on this when x is an end of the new arc.
///   Pairs with s = x or t = x never enter the betweenness sum.
class ApspState {
 public:
  ApspState() = default;

  NodeId target() const noexcept { return x_; }
  std::size_t size() const noexcept { return n_; }
  bool weighted() const noexcept { return weighted_; }
  /// Comparison tolerance for path lengths (0 for unweighted graphs).
  double tolerance() const noexcept { return weighted_ ? kWeightedTolerance : 0.0; }

  double dist(NodeId s, NodeId t) const { return dist_[at(s, t)]; }
  PathCount sigma(NodeId s, NodeId t) const { return sigma_[at(s, t)]; }
  PathCount sigma_x(NodeId s, NodeId t) const { return sigma_x_[at(s, t)]; }

  /// Cached betweenness of x, adjusted incrementally by updates.
  double betweenness() const noexcept { return b_x_; }

  /// Fresh summation of sigma_x / sigma over all eligible pairs.
  double resum_betweenness() const;

  const std::vector<double>& dist_table() const noexcept { return dist_; }
  const std::vector<PathCount>& sigma_table() const noexcept { return sigma_; }
  const std::vector<PathCount>& sigma_x_table() const noexcept { return sigma_x_; }

  bool operator==(const ApspState&) const = default;

 private:
  friend ApspState init_apsp(const Graph& g, NodeId x);
  friend ApspState init_apsp_serial(const Graph& g, NodeId x);
  friend class PairWriter;
  friend void rollback(ApspState& st, Journal& journal);

  std::size_t at(NodeId s, NodeId t) const noexcept { return static_cast<std::size_t>(s) * n_ + t; }
  static ApspState allocate(const Graph& g, NodeId x);
  void fill_through_x_row(NodeId s);

  std::size_t n_ = 0;
  NodeId x_ = 0;
  bool weighted_ = false;
  std::vector<double> dist_;
  std::vector<PathCount> sigma_;
  std::vector<PathCount> sigma_x_;
  double b_x_ = 0.0;
};

/// Builds the state with one SSSP per source, rows filled in parallel.
/// Throws CapacityError before allocating when the tables would exceed
/// apsp_memory_cap_bytes().
ApspState init_apsp(const Graph& g, NodeId x);

/// Single-threaded reference for init_apsp; produces identical tables.
ApspState init_apsp_serial(const Graph& g, NodeId x);

/// Saved entries that let an update be undone in place.
class Journal {
 public:
  void clear() {
    entries_.clear();
    has_b_ = false;
  }
  bool empty() const noexcept { return entries_.empty() && !has_b_; }

 private:
  friend class PairWriter;
  friend void rollback(ApspState& st, Journal& journal);

  struct Entry {
    std::size_t index;
    double dist;
    PathCount sigma;
    PathCount sigma_x;
  };
  std::vector<Entry> entries_;
  double b_x_ = 0.0;
  bool has_b_ = false;
};

/// Restores every entry recorded in `journal` and clears it.
void rollback(ApspState& st, Journal& journal);

/// Narrow write access used by the incremental update. Records the previous
/// value of each touched pair when a journal is attached.
class PairWriter {
 public:
  PairWriter(ApspState& st, Journal* journal) : st_(st), journal_(journal) {
    if (journal_ && !journal_->has_b_) {
      journal_->b_x_ = st.b_x_;
      journal_->has_b_ = true;
    }
  }

  void set(NodeId s, NodeId t, double dist, PathCount sigma, PathCount sigma_x) {
    const std::size_t i = st_.at(s, t);
    if (journal_) journal_->entries_.push_back({i, st_.dist_[i], st_.sigma_[i], st_.sigma_x_[i]});
    st_.dist_[i] = dist;
    st_.sigma_[i] = sigma;
    st_.sigma_x_[i] = sigma_x;
  }
  void add_betweenness(double delta) { st_.b_x_ += delta; }

 private:
  ApspState& st_;
  Journal* journal_;
};

}  // namespace mbi
