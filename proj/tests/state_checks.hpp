#pragma once

#include <gtest/gtest.h>

#include "mbi/apsp.hpp"
#include "oracle.hpp"

namespace testutil {

/// Checks the five structural invariants of an ApspState.
inline void expect_invariants(const mbi::ApspState& st, const char* where = "") {
  using mbi::NodeId;
  const NodeId x = st.target();
  const double tol = st.tolerance();
  for (NodeId s = 0; s < st.size(); ++s) {
    ASSERT_EQ(st.dist(s, s), 0.0) << where;
    ASSERT_EQ(st.sigma(s, s), 1u) << where;
    ASSERT_EQ(st.sigma_x(s, s), s == x ? 1u : 0u) << where;
    for (NodeId t = 0; t < st.size(); ++t) {
      ASSERT_EQ(mbi::reachable(st.dist(s, t)), st.sigma(s, t) != 0) << where << " (" << s << "," << t << ")";
      ASSERT_LE(st.sigma_x(s, t), st.sigma(s, t)) << where;
      mbi::PathCount expect = 0;
      if (mbi::reachable(st.dist(s, x)) && mbi::reachable(st.dist(x, t)) &&
          std::abs(st.dist(s, x) + st.dist(x, t) - st.dist(s, t)) <= tol)
        expect = st.sigma(s, x) * st.sigma(x, t);
      ASSERT_EQ(st.sigma_x(s, t), expect) << where << " (" << s << "," << t << ")";
    }
  }
  ASSERT_NEAR(st.betweenness(), st.resum_betweenness(), 1e-9) << where;
}

/// Distances match Floyd-Warshall; counts match path enumeration.
inline void expect_matches_enumeration(const mbi::Graph& g, const mbi::ApspState& st) {
  using mbi::NodeId;
  const auto fw = oracle::floyd_warshall(g);
  for (NodeId s = 0; s < g.size(); ++s)
    for (NodeId t = 0; t < g.size(); ++t) {
      if (fw[s][t] == oracle::kInf) {
        ASSERT_FALSE(mbi::reachable(st.dist(s, t)));
      } else {
        ASSERT_NEAR(st.dist(s, t), fw[s][t], 1e-9);
      }
      const auto c = oracle::census(g, s, t, st.target());
      ASSERT_EQ(st.sigma(s, t), c.count) << s << "," << t;
      ASSERT_EQ(st.sigma_x(s, t), c.through) << s << "," << t;
    }
}

}  // namespace testutil
