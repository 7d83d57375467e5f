#include "mbi/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mbi/errors.hpp"

namespace mbi {

Graph::Graph(std::size_t n, bool directed, bool weighted)
    : directed_(directed), weighted_(weighted), out_(n), in_(n), labels_(n) {
  for (std::size_t i = 0; i < n; ++i) labels_[i] = i;
}

bool Graph::has_arc(NodeId u, NodeId v) const { return arc_weight(u, v).has_value(); }

std::optional<double> Graph::arc_weight(NodeId u, NodeId v) const {
  if (u >= size() || v >= size()) return std::nullopt;
  // scan whichever side is shorter
  if (out_[u].size() <= in_[v].size()) {
    for (const Arc& a : out_[u])
      if (a.node == v) return a.weight;
  } else {
    for (const Arc& a : in_[v])
      if (a.node == u) return a.weight;
  }
  return std::nullopt;
}

UpdateKind Graph::validate(const EdgeUpdate& e) const {
  if (e.u >= size() || e.v >= size())
    throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") references a node outside 0.." + std::to_string(size()));
  if (e.u == e.v) throw RejectionError("self-loop on node " + std::to_string(e.u));
  if (!(e.weight > 0.0) || !std::isfinite(e.weight))
    throw ArgumentError("edge weight must be a positive finite number");
  if (!weighted_ && e.weight != 1.0) throw ArgumentError("unweighted graph accepts only weight 1");
  if (auto w = arc_weight(e.u, e.v)) {
    if (e.weight < *w) return UpdateKind::kDecrease;
    throw RejectionError("arc (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") already present");
  }
  return UpdateKind::kInsertion;
}

void Graph::add_arc(NodeId u, NodeId v, double w) {
  out_[u].push_back({v, w});
  in_[v].push_back({u, w});
  ++arcs_;
}

void Graph::set_arc_weight(NodeId u, NodeId v, double w) {
  for (Arc& a : out_[u])
    if (a.node == v) a.weight = w;
  for (Arc& a : in_[v])
    if (a.node == u) a.weight = w;
}

UpdateKind Graph::insert_edge(const EdgeUpdate& e) {
  const UpdateKind kind = validate(e);
  if (kind == UpdateKind::kDecrease) {
    set_arc_weight(e.u, e.v, e.weight);
    if (!directed_) set_arc_weight(e.v, e.u, e.weight);
  } else {
    add_arc(e.u, e.v, e.weight);
    if (!directed_) add_arc(e.v, e.u, e.weight);
  }
  return kind;
}

void Graph::set_labels(std::vector<Label> labels) {
  if (labels.size() != size()) throw ArgumentError("label count does not match node count");
  labels_ = std::move(labels);
}

std::optional<NodeId> Graph::find_label(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

std::vector<std::pair<std::pair<NodeId, NodeId>, double>> Graph::edges() const {
  std::vector<std::pair<std::pair<NodeId, NodeId>, double>> result;
  result.reserve(edge_count());
  for (NodeId u = 0; u < size(); ++u)
    for (const Arc& a : out_[u])
      if (directed_ || u < a.node) result.push_back({{u, a.node}, a.weight});
  return result;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

Label parse_label(std::string_view tok, std::size_t line) {
  Label value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "node id '" + std::string(tok) + "' is not a non-negative integer");
  return value;
}

double parse_weight(std::string_view tok, std::size_t line) {
  double w = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "weight '" + std::string(tok) + "' is not a number");
  if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line, "weight must be positive and finite");
  return w;
}

struct PairHash {
  std::size_t operator()(std::uint64_t key) const noexcept { return std::hash<std::uint64_t>{}(key); }
};

}  // namespace

LoadResult load_edge_list(std::istream& in, bool directed, bool weighted) {
  std::unordered_map<Label, NodeId> ids;
  std::vector<Label> labels;
  struct RawArc {
    NodeId u, v;
    double w;
  };
  std::vector<RawArc> arcs;
  std::unordered_set<std::uint64_t, PairHash> seen;
  LoadResult result;

  auto intern = [&](Label label) {
    auto [it, fresh] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (fresh) labels.push_back(label);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3)
      throw ParseError(line_no, "expected 'u v' or 'u v w', got " + std::to_string(tokens.size()) + " tokens");
    const Label a = parse_label(tokens[0], line_no);
    const Label b = parse_label(tokens[1], line_no);
    double w = 1.0;
    if (tokens.size() == 3) {
      const double parsed = parse_weight(tokens[2], line_no);
      if (weighted) w = parsed;
    }
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    if (u == v) {
      ++result.dropped_self_loops;
      continue;
    }
    NodeId lo = u, hi = v;
    if (!directed && lo > hi) std::swap(lo, hi);
    const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    if (!seen.insert(key).second) {
      ++result.dropped_duplicates;
      continue;
    }
    arcs.push_back({u, v, w});
  }

  Graph g(labels.size(), directed, weighted);
  for (const RawArc& a : arcs) {
    g.add_arc(a.u, a.v, a.w);
    if (!directed) g.add_arc(a.v, a.u, a.w);
  }
  g.set_labels(std::move(labels));
  result.graph = std::move(g);
  return result;
}

LoadResult load_edge_list_file(const std::string& path, bool directed, bool weighted) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open graph file '" + path + "'");
  return load_edge_list(in, directed, weighted);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto& labels = g.labels();
  for (const auto& [arc, w] : g.edges()) {
    out << labels[arc.first] << ' ' << labels[arc.second];
    if (g.weighted()) {
      char buf[32];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w);
      out << ' ' << std::string_view(buf, end - buf);
    }
    out << '\n';
  }
}

}  // namespace mbi
