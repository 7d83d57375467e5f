#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mbi {

using NodeId = std::uint32_t;
using Label = std::uint64_t;

struct Arc {
  NodeId node;
  double weight;
};

/// Insertion of arc (u,v) with weight `weight`, or a decrease of its weight
/// when the arc already exists.
struct EdgeUpdate {
  NodeId u;
  NodeId v;
  double weight = 1.0;
};

enum class UpdateKind { kInsertion, kDecrease };

struct LoadResult;

/// Simple directed or undirected graph with positive weights.
///
/// Undirected graphs are stored as symmetric digraphs: an edge {u,v} appears
/// as arc (u,v) and arc (v,u) in both adjacency orientations. All shortest
/// path code therefore works on ordered pairs regardless of orientation.

class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, bool directed, bool weighted = false);

  std::size_t size() const noexcept { return out_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }

  /// Number of arcs in the underlying digraph (2 per undirected edge).
  std::size_t arc_count() const noexcept { return arcs_; }
  /// Number of edges as the user sees them (arcs, or unordered pairs).
  std::size_t edge_count() const noexcept { return directed_ ? arcs_ : arcs_ / 2; }

  std::span<const Arc> out_arcs(NodeId u) const { return out_[u]; }
  std::span<const Arc> in_arcs(NodeId v) const { return in_[v]; }

  bool has_arc(NodeId u, NodeId v) const;
  std::optional<double> arc_weight(NodeId u, NodeId v) const;

  /// Checks `e` against the graph without mutating it. Throws ArgumentError
  /// for unknown nodes or bad weights and RejectionError for self-loops,
  /// duplicate insertions and non-decreasing weight changes.
  UpdateKind validate(const EdgeUpdate& e) const;

  /// Applies an insertion or weight decrease to both orientations (and both
  /// directions for undirected graphs).
  UpdateKind insert_edge(const EdgeUpdate& e);

  /// Original external ids in first-seen order; defaults to 0..n-1.
  const std::vector<Label>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<Label> labels);
  std::optional<NodeId> find_label(Label label) const;

  /// All arcs (u,v,w); undirected graphs report each edge once with u < v.
  std::vector<std::pair<std::pair<NodeId, NodeId>, double>> edges() const;

 private:
  friend LoadResult load_edge_list(std::istream& in, bool directed, bool weighted);

  void add_arc(NodeId u, NodeId v, double w);
  void set_arc_weight(NodeId u, NodeId v, double w);

  bool directed_ = true;
  bool weighted_ = false;
  std::size_t arcs_ = 0;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<Label> labels_;
};

struct LoadResult {
  Graph graph;
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;
};

/// Parses "u v" / "u v w" lines; '#' starts a comment. External ids are
/// remapped to 0..n-1 in first-seen order. Weights are ignored when
/// `weighted` is false.
LoadResult load_edge_list(std::istream& in, bool directed, bool weighted);
LoadResult load_edge_list_file(const std::string& path, bool directed, bool weighted);

/// Writes the graph in the format read by load_edge_list, using labels.
void write_edge_list(std::ostream& out, const Graph& g);

/// Directed preferential attachment. A complete digraph on
/// min(n, d + kPaSeedExtra) nodes seeds the process; every later node
/// sends d arcs to distinct earlier nodes picked with probability
/// proportional to in-degree + 1.
inline constexpr std::size_t kPaSeedExtra = 6;
Graph generate_pa(std::size_t n, std::size_t d, std::uint64_t seed);

/// G(n,p) over ordered (directed) or unordered (undirected) pairs.
Graph generate_er(std::size_t n, double p, std::uint64_t seed, bool directed);

}  // namespace mbi
