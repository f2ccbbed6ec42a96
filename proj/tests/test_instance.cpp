#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pcrpp/multigraph.hpp"
#include "pcrpp/shortest_paths.hpp"
#include "test_util.hpp"

namespace pcrpp {
namespace {

using testing::barrier;

void expect_error(const std::string& text, const std::string& what) {
  try {
    parse_instance_string(text);
    FAIL() << "expected error containing " << what;
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(what), std::string::npos) << e.what();
  }
}

TEST(Parse, HeaderAndEdges) {
  const Instance inst = parse_instance_string("3 3 1\n1 2 1 0\n2 3 1 2\n1 3 4 0\n");
  EXPECT_EQ(inst.vertex_count(), 3);
  EXPECT_EQ(inst.root(), 0);
  EXPECT_EQ(inst.label(inst.root()), 1);
  EXPECT_EQ(inst.edge_count(), 3);
}

TEST(Parse, BarrierFile) {
  const Instance inst = testing::load("barrier_01.txt");
  EXPECT_EQ(inst.vertex_count(), 3);
  EXPECT_EQ(inst.edge_count(), 3);
  const int ab = inst.edge_index(1, 2);
  ASSERT_GE(ab, 0);
  EXPECT_DOUBLE_EQ(inst.edges()[ab].p, 1.3);
  EXPECT_DOUBLE_EQ(inst.edges()[inst.edge_index(0, 1)].w, 0.1);
  EXPECT_DOUBLE_EQ(inst.total_profit(), 1.3);
}

TEST(Parse, CommentsAndOptMax) {
  const Instance inst = parse_instance_string("# c\n2 1 2\n# mid\n1 2 3 4\nOPTMAX 1.5\n");
  EXPECT_EQ(inst.root(), 1);
  ASSERT_TRUE(inst.opt_max().has_value());
  EXPECT_DOUBLE_EQ(*inst.opt_max(), 1.5);
}

TEST(Parse, Errors) {
  expect_error("3 1 1\n1 2 -1 0\n", "negative length");
  expect_error("3 1 1\n1 2 1 -2\n", "negative profit");
  expect_error("3 2 1\n1 2 1 0\n2 1 1 0\n", "duplicate edge");
  expect_error("3 1 1\n2 2 1 0\n", "loop edge");
  expect_error("3 1 4\n1 2 1 0\n", "root out of range");
  expect_error("x y z\n", "malformed header");
  expect_error("", "malformed header");
}

TEST(Parse, DropsVerticesOutsideRootComponent) {
  const Instance inst = parse_instance_string("5 3 1\n1 2 1 1\n3 4 1 7\n4 5 2 0\n");
  EXPECT_EQ(inst.vertex_count(), 2);
  EXPECT_EQ(inst.edge_count(), 1);
  EXPECT_DOUBLE_EQ(inst.detached_profit(), 7.0);
  EXPECT_DOUBLE_EQ(inst.total_profit(), 1.0);
}

TEST(Parse, SerializeRoundTrip) {
  for (int s = 0; s < 20; ++s) {
    Instance inst = gen_random(s, {6, 9, 10, 10, 0.5});
    inst.set_opt_max(3.25);
    const Instance back = parse_instance_string(serialize_instance(inst));
    ASSERT_EQ(back.vertex_count(), inst.vertex_count());
    ASSERT_EQ(back.root(), inst.root());
    ASSERT_EQ(back.edge_count(), inst.edge_count());
    for (int i = 0; i < inst.edge_count(); ++i) {
      EXPECT_EQ(back.edges()[i].u, inst.edges()[i].u);
      EXPECT_EQ(back.edges()[i].v, inst.edges()[i].v);
      EXPECT_EQ(back.edges()[i].w, inst.edges()[i].w);
      EXPECT_EQ(back.edges()[i].p, inst.edges()[i].p);
    }
    EXPECT_EQ(back.opt_max(), inst.opt_max());
  }
}

TEST(Objective, EmptyWalkCollectsNothing) {
  const Instance inst = barrier(0.1);
  EXPECT_DOUBLE_EQ(objective(inst, trivial_walk(inst)), 1.3);
}

TEST(Objective, BarrierTriangle) {
  const Instance inst = barrier(0.1);
  EXPECT_NEAR(objective(inst, Walk{{0, 1, 2, 0}}), 2.1, 1e-12);
}

TEST(Objective, RepeatedTraversalsCountLength) {
  const Instance inst = testing::single_edge();
  EXPECT_DOUBLE_EQ(objective(inst, Walk{{0, 1, 0}}), 2.0);
  EXPECT_DOUBLE_EQ(objective(inst, Walk{{0, 1, 0, 1, 0}}), 4.0);
}

TEST(Objective, RejectsBadWalks) {
  const Instance inst = parse_instance_string("3 2 1\n1 2 1 0\n2 3 1 0\n");
  EXPECT_THROW(objective(inst, Walk{{0, 2, 0}}), Error);
  EXPECT_THROW(objective(inst, Walk{{0, 1}}), Error);
}

TEST(Objective, NonnegativeOnRandomWalks) {
  std::mt19937 rng(5);
  for (int s = 0; s < 30; ++s) {
    const Instance inst = gen_random(s, {5, 7, 10, 10, 0.5});
    Walk walk{{inst.root()}};
    for (int step = 0; step < 6; ++step) {
      const auto& inc = inst.incident(walk.vertices.back());
      const Edge& e = inst.edges()[inc[rng() % inc.size()]];
      walk.vertices.push_back(e.u == walk.vertices.back() ? e.v : e.u);
    }
    // Walk back along the same vertices to close it.
    for (int k = static_cast<int>(walk.vertices.size()) - 2; k >= 0; --k) {
      walk.vertices.push_back(walk.vertices[k]);
    }
    EXPECT_GE(objective(inst, walk), 0.0);
  }
}

TEST(Euler, EmptyMultigraph) {
  const Walk w = euler_tour(Multigraph(3), 1);
  EXPECT_EQ(w.vertices, std::vector<int>{1});
}

TEST(Euler, Triangle) {
  Multigraph m(3);
  m.add(0, 1);
  m.add(1, 2);
  m.add(0, 2);
  const Walk w = euler_tour(m, 0);
  EXPECT_EQ(w.length(), 3);
  EXPECT_EQ(w.vertices.front(), 0);
  EXPECT_EQ(w.vertices.back(), 0);
  std::vector<int> sorted(w.vertices.begin(), w.vertices.end() - 1);
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2}));
}

TEST(Euler, DoubledEdge) {
  Multigraph m(2);
  m.add(0, 1, 2);
  EXPECT_EQ(euler_tour(m, 0).vertices, (std::vector<int>{0, 1, 0}));
}

TEST(Euler, Errors) {
  Multigraph odd(3);
  odd.add(0, 1);
  EXPECT_THROW(euler_tour(odd, 0), Error);
  Multigraph away(3);
  away.add(1, 2, 2);
  EXPECT_THROW(euler_tour(away, 0), Error);
}

TEST(Euler, ExactMultiplicities) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    Multigraph m(n);
    // A union of random closed walks from vertex 0 is connected and Eulerian.
    for (int c = 0; c < 3; ++c) {
      int cur = 0;
      std::vector<int> seq{0};
      for (int s = 0; s < 4; ++s) {
        int nxt = static_cast<int>(rng() % n);
        if (nxt == cur) nxt = (nxt + 1) % n;
        seq.push_back(nxt);
        cur = nxt;
      }
      if (cur != 0) seq.push_back(0);
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) m.add(seq[i], seq[i + 1]);
    }
    const Walk w = euler_tour(m, 0);
    Multigraph back(n);
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) back.add(w.vertices[i], w.vertices[i + 1]);
    EXPECT_EQ(back, m);
  }
}

TEST(OddVertices, Examples) {
  EXPECT_TRUE(odd_vertices(Multigraph(4)).empty());
  Multigraph one(4);
  one.add(1, 3);
  EXPECT_EQ(odd_vertices(one), (std::vector<int>{1, 3}));
  Multigraph tri(3);
  tri.add(0, 1);
  tri.add(1, 2);
  tri.add(0, 2);
  EXPECT_TRUE(odd_vertices(tri).empty());
}

TEST(OddVertices, EvenCardinality) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Multigraph m(6);
    for (int e = 0; e < 8; ++e) {
      const int a = static_cast<int>(rng() % 6);
      const int b = static_cast<int>(rng() % 6);
      if (a != b) m.add(a, b, 1 + static_cast<int>(rng() % 3));
    }
    EXPECT_EQ(odd_vertices(m).size() % 2, 0u);
  }
}

TEST(ShortestPaths, Examples) {
  const Instance inst = barrier(0.1);
  const ShortestPathTree t = shortest_paths(length_graph(inst), 0);
  EXPECT_DOUBLE_EQ(t.dist[0], 0.0);
  EXPECT_DOUBLE_EQ(t.dist[1], 0.1);
  EXPECT_DOUBLE_EQ(t.dist[2], 1.0);
  EXPECT_EQ(t.path_to(2), (std::vector<int>{0, 2}));

  WeightedGraph g{3, {{0, 1, 2.0}}};
  const ShortestPathTree u = shortest_paths(g, 0);
  EXPECT_EQ(u.dist[2], kInf);
  EXPECT_EQ(u.pred[2], -1);
}

TEST(ShortestPaths, SmallestIdTieBreak) {
  // 0-1-3 and 0-2-3 both have length 2.
  WeightedGraph g{4, {{0, 2, 1.0}, {2, 3, 1.0}, {0, 1, 1.0}, {1, 3, 1.0}}};
  EXPECT_EQ(shortest_paths(g, 0).path_to(3), (std::vector<int>{0, 1, 3}));
}

}  // namespace
}  // namespace pcrpp
