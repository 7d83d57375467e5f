#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "mbi/bc_static.hpp"
#include "mbi/improve.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace mbi;
using testutil::make_graph;

TEST(BrandesAll, DirectedPath) {
  EXPECT_EQ(brandes_all(testutil::path4()), (std::vector<double>{0, 2, 2, 0}));
}

TEST(BrandesAll, CompleteDigraphIsZero) {
  for (double b : brandes_all(generate_er(4, 1.0, 0, true))) EXPECT_EQ(b, 0.0);
}

TEST(BrandesAll, DirectedTriangle) {
  Graph g = make_graph(3, true, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(brandes_all(g), (std::vector<double>{1, 1, 1}));
}

TEST(BrandesAll, UndirectedCountsOrderedPairs) {
  Graph g = make_graph(3, false, {{0, 1}, {1, 2}});
  EXPECT_EQ(brandes_all(g), (std::vector<double>{0, 2, 0}));
}

TEST(BetweennessOf, Examples) {
  EXPECT_EQ(betweenness_of(testutil::path4(), 1), 2.0);
  Graph g = make_graph(5, true, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(betweenness_of(g, 4), 0.0);
  Graph er = generate_er(50, 0.1, 7, true);
  EXPECT_NEAR(betweenness_of(er, 3), brandes_all(er)[3], 1e-9);
}

TEST(Ranks, Examples) {
  EXPECT_EQ(ranks(std::vector<double>{0, 0, 0}), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(ranks(std::vector<double>{2, 1, 0, 0}), (std::vector<std::size_t>{1, 2, 3, 3}));
  EXPECT_EQ(ranks(std::vector<double>{5, 5, 1}), (std::vector<std::size_t>{1, 1, 3}));
  EXPECT_TRUE(ranks(std::vector<double>{}).empty());
}

TEST(Ranks, MinimumRankIsOne) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> val(0, 10);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> b(1 + i % 13);
    for (double& x : b) x = std::floor(val(rng));
    auto r = ranks(b);
    EXPECT_EQ(*std::min_element(r.begin(), r.end()), 1u);
  }
}

// Small random graphs against exhaustive path enumeration.
TEST(BrandesAll, MatchesPathEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const bool directed = trial % 3 != 0;
    Graph g = generate_er(n, 0.3, rng(), directed);
    if (trial % 4 == 1) g = testutil::with_random_weights(g, rng);
    const auto b = brandes_all(g);
    double total = 0.0, total_oracle = 0.0;
    for (NodeId x = 0; x < n; ++x) {
      const double expect = oracle::betweenness(g, x);
      EXPECT_NEAR(b[x], expect, 1e-9) << "trial " << trial << " node " << x;
      total += b[x];
      total_oracle += expect;
      EXPECT_GE(b[x], 0.0);
      EXPECT_LE(b[x], static_cast<double>((n - 1) * (n - 2)));
    }
    EXPECT_NEAR(total, total_oracle, 1e-9);
  }
}

TEST(BrandesAll, SerialAndParallelAgree) {
  for (std::uint64_t seed : {1, 2}) {
    Graph g = generate_pa(400, 2, seed);
    auto a = brandes_all(g);
    auto b = brandes_all_serial(g);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9 * std::max(1.0, b[i]));
  }
}

// The ranking example from the problem motivation: adding (u,v) raises both
// b_u and b_v but nobody changes place.
TEST(BrandesAll, RankingExampleGraph) {
  enum : NodeId { a, b, c, u, v, d, e };
  Graph g = make_graph(7, true, {{u, c}, {v, u}, {b, u}, {a, u}, {d, v}, {v, e}});
  Graph h = g;
  h.insert_edge({u, v});
  for (const Graph* gr : {&g, &h}) {
    const auto bc = brandes_all(*gr);
    for (NodeId x = 0; x < 7; ++x) EXPECT_NEAR(bc[x], oracle::betweenness(*gr, x), 1e-12);
  }
  const RankReport rep = rank_report(g, h, v);
  EXPECT_GT(rep.b_after, rep.b_before);
  EXPECT_EQ(rep.rho, 0);
  EXPECT_EQ(rep.r_before, 2u);
}
