#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "mbi/errors.hpp"
#include "mbi/graph.hpp"
#include "test_util.hpp"

using namespace mbi;

namespace {

LoadResult parse(const std::string& text, bool directed = true, bool weighted = false) {
  std::istringstream in(text);
  return load_edge_list(in, directed, weighted);
}

std::set<std::pair<NodeId, NodeId>> arc_set(const Graph& g) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (NodeId u = 0; u < g.size(); ++u)
    for (const Arc& a : g.out_arcs(u)) out.insert({u, a.node});
  return out;
}

void expect_transpose_consistent(const Graph& g) {
  for (NodeId u = 0; u < g.size(); ++u)
    for (const Arc& a : g.out_arcs(u)) {
      bool found = false;
      for (const Arc& b : g.in_arcs(a.node))
        if (b.node == u) {
          found = true;
          EXPECT_EQ(a.weight, b.weight);
        }
      EXPECT_TRUE(found) << u << "->" << a.node;
    }
  std::size_t in_total = 0;
  for (NodeId v = 0; v < g.size(); ++v) in_total += g.in_arcs(v).size();
  EXPECT_EQ(in_total, g.arc_count());
}

}  // namespace

TEST(LoadEdgeList, SimplePath) {
  auto r = parse("0 1\n1 2\n");
  EXPECT_EQ(r.graph.size(), 3u);
  EXPECT_EQ(arc_set(r.graph), (std::set<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}}));
}

TEST(LoadEdgeList, Empty) {
  auto r = parse("");
  EXPECT_EQ(r.graph.size(), 0u);
  EXPECT_EQ(r.graph.arc_count(), 0u);
}

TEST(LoadEdgeList, DuplicatesDropped) {
  auto r = parse("5 9\n9 5\n5 9\n");
  EXPECT_EQ(r.graph.arc_count(), 2u);
  EXPECT_EQ(r.dropped_duplicates, 1u);
  EXPECT_EQ(r.graph.labels(), (std::vector<Label>{5, 9}));
}

TEST(LoadEdgeList, UndirectedTreatsReverseAsDuplicate) {
  auto r = parse("5 9\n9 5\n", /*directed=*/false);
  EXPECT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.graph.arc_count(), 2u);
  EXPECT_EQ(r.dropped_duplicates, 1u);
}

TEST(LoadEdgeList, CommentsBlankLinesAndSelfLoops) {
  auto r = parse("# header\n\n3 4 # trailing\n4 4\n  4\t7  \n");
  EXPECT_EQ(r.graph.size(), 3u);
  EXPECT_EQ(r.graph.arc_count(), 2u);
  EXPECT_EQ(r.dropped_self_loops, 1u);
  EXPECT_EQ(r.graph.find_label(7), NodeId{2});
}

TEST(LoadEdgeList, Weights) {
  auto r = parse("0 1 2.5\n1 2 0.5\n", true, true);
  EXPECT_TRUE(r.graph.weighted());
  EXPECT_EQ(r.graph.arc_weight(0, 1), 2.5);
  // weights ignored for unweighted loads
  auto u = parse("0 1 2.5\n", true, false);
  EXPECT_EQ(u.graph.arc_weight(0, 1), 1.0);
}

TEST(LoadEdgeList, ErrorsNameTheLine) {
  auto line_of = [](const std::string& text, bool weighted) {
    try {
      parse(text, true, weighted);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("0 1\n1\n", false), 2u);
  EXPECT_EQ(line_of("0 1\n1 2 3 4\n", false), 2u);
  EXPECT_EQ(line_of("# c\n0 x\n", false), 2u);
  EXPECT_EQ(line_of("0 1 0\n", true), 1u);
  EXPECT_EQ(line_of("0 1 -2\n", true), 1u);
  EXPECT_EQ(line_of("0 1 abc\n", true), 1u);
  EXPECT_EQ(line_of("-1 2\n", false), 1u);
}

TEST(LoadEdgeList, RoundTripReproducesDeduplicatedEdges) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    const bool directed = round % 2 == 0;
    std::ostringstream text;
    std::uniform_int_distribution<int> id(0, 30);
    for (int i = 0; i < 80; ++i) text << id(rng) * 7 + 100 << ' ' << id(rng) * 7 + 100 << '\n';
    auto first = parse(text.str(), directed);
    std::ostringstream out;
    write_edge_list(out, first.graph);
    auto second = parse(out.str(), directed);
    EXPECT_EQ(second.dropped_duplicates, 0u);
    std::set<std::pair<Label, Label>> a, b;
    for (auto [arc, w] : first.graph.edges())
      a.insert({first.graph.labels()[arc.first], first.graph.labels()[arc.second]});
    for (auto [arc, w] : second.graph.edges()) {
      Label x = second.graph.labels()[arc.first], y = second.graph.labels()[arc.second];
      if (!directed && !a.count({x, y})) std::swap(x, y);
      b.insert({x, y});
    }
    EXPECT_EQ(a, b);
  }
}

TEST(InsertEdge, AddsArc) {
  Graph g = testutil::make_graph(3, true, {{0, 1}, {1, 2}});
  g.insert_edge({0, 2});
  EXPECT_EQ(arc_set(g), (std::set<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(g.arc_count(), 3u);
  expect_transpose_consistent(g);
}

TEST(InsertEdge, Rejections) {
  Graph g = testutil::make_graph(3, true, {{0, 1}, {1, 2}});
  EXPECT_THROW(g.insert_edge({1, 1}), RejectionError);
  EXPECT_THROW(g.insert_edge({0, 1}), RejectionError);
  EXPECT_THROW(g.insert_edge({0, 7}), ArgumentError);
  EXPECT_THROW(g.insert_edge({0, 2, 2.0}), ArgumentError);  // unweighted graph
  EXPECT_EQ(g.arc_count(), 2u);
}

TEST(InsertEdge, UndirectedAddsBothDirections) {
  Graph g(3, false);
  g.insert_edge({0, 2});
  EXPECT_TRUE(g.has_arc(0, 2));
  EXPECT_TRUE(g.has_arc(2, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.insert_edge({2, 0}), RejectionError);
}

TEST(InsertEdge, WeightDecrease) {
  Graph g(2, true, true);
  g.insert_edge({0, 1, 3.0});
  EXPECT_EQ(g.insert_edge({0, 1, 1.5}), UpdateKind::kDecrease);
  EXPECT_EQ(g.arc_weight(0, 1), 1.5);
  EXPECT_EQ(g.arc_count(), 1u);
  EXPECT_THROW(g.insert_edge({0, 1, 1.5}), RejectionError);
  EXPECT_THROW(g.insert_edge({0, 1, 4.0}), RejectionError);
  expect_transpose_consistent(g);
}

TEST(GeneratePa, TableScale) {
  // 100 nodes with attachment degree 1 lands near 130 arcs
  for (std::uint64_t seed : {1, 2, 3}) {
    Graph g = generate_pa(100, 1, seed);
    EXPECT_EQ(g.size(), 100u);
    EXPECT_GE(g.arc_count(), 120u);
    EXPECT_LE(g.arc_count(), 140u);
  }
}

TEST(GeneratePa, Deterministic) {
  EXPECT_EQ(generate_pa(5, 1, 42).edges(), generate_pa(5, 1, 42).edges());
  EXPECT_EQ(generate_pa(300, 2, 9).edges(), generate_pa(300, 2, 9).edges());
  EXPECT_NE(generate_pa(300, 2, 9).edges(), generate_pa(300, 2, 10).edges());
}

TEST(GeneratePa, OutDegreeOfLaterNodes) {
  Graph g = generate_pa(50, 2, 7);
  const std::size_t seed_nodes = 2 + kPaSeedExtra;
  for (NodeId u = seed_nodes; u < g.size(); ++u) {
    EXPECT_EQ(g.out_arcs(u).size(), 2u);
    for (const Arc& a : g.out_arcs(u)) EXPECT_LT(a.node, u);
  }
  expect_transpose_consistent(g);
}

TEST(GeneratePa, BadArguments) {
  EXPECT_THROW(generate_pa(0, 1, 1), ArgumentError);
  EXPECT_THROW(generate_pa(5, 0, 1), ArgumentError);
  EXPECT_THROW(generate_pa(3, 3, 1), ArgumentError);
  EXPECT_NO_THROW(generate_pa(4, 3, 1));
}

TEST(GenerateEr, Extremes) {
  EXPECT_EQ(generate_er(10, 0.0, 1, true).arc_count(), 0u);
  EXPECT_EQ(generate_er(4, 1.0, 1, true).arc_count(), 12u);
  EXPECT_EQ(generate_er(4, 1.0, 1, false).edge_count(), 6u);
  EXPECT_THROW(generate_er(4, 1.5, 1, true), ArgumentError);
  EXPECT_THROW(generate_er(4, -0.1, 1, true), ArgumentError);
}

TEST(GenerateEr, Deterministic) {
  EXPECT_EQ(generate_er(50, 0.1, 7, true).edges(), generate_er(50, 0.1, 7, true).edges());
  Graph g = generate_er(50, 0.1, 7, false);
  expect_transpose_consistent(g);
}
