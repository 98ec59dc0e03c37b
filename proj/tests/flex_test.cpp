#include <gtest/gtest.h>

#include <numbers>

#include "support/oracles.hpp"

using namespace nacflex;

namespace {

// 0-1-2-3-0 coloured red, blue, red, blue around the cycle.
struct C4Fixture {
  Graph g = Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EdgeColouring c = EdgeColouring::from_red_edges(g, {{0, 1}, {2, 3}});
};

bool near(const Vec2& a, const Vec2& b, double tol) { return std::abs(a[0] - b[0]) < tol && std::abs(a[1] - b[1]) < tol; }

}  // namespace

TEST(Flex, C4FixturePositions) {
  C4Fixture fx;
  // Blue components {0,3},{1,2}; red components {0,1},{2,3}.
  const auto f = make_flex(fx.g, fx.c, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}});
  const auto p = sample_positions(f, 0.0);
  EXPECT_TRUE(near(p[0], {0, 0}, 1e-15));
  EXPECT_TRUE(near(p[1], {1, 0}, 1e-15));
  EXPECT_TRUE(near(p[2], {1, 1}, 1e-15));
  EXPECT_TRUE(near(p[3], {0, 1}, 1e-15));

  const auto rep = verify_flex(f, 64);
  EXPECT_LT(rep.max_edge_drift, 1e-9);
  // |p(2) - p(0)| = |(1,0) + Rot(theta)(0,1)| sweeps [0, 2].
  EXPECT_NEAR(rep.max_pair_variation, 2.0, 1e-2);
  EXPECT_EQ(std::pair(rep.varying_u, rep.varying_v), std::pair(Vertex{0}, Vertex{2}));
  EXPECT_NEAR(rep.min_edge_length, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(rep.edge_length_lower_bound, 1.0);
}

TEST(Flex, Periodic) {
  C4Fixture fx;
  RandomSource src(3, 0);
  const auto f = build_flex(fx.g, fx.c, src);
  const auto a = sample_positions(f, 0.0), b = sample_positions(f, 2 * std::numbers::pi);
  for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(near(a[v], b[v], 1e-12));
}

TEST(Flex, PathExample) {
  const Graph g = Graph::from_pairs(3, {{0, 1}, {1, 2}});
  const auto c = EdgeColouring::from_red_edges(g, {{0, 1}});
  RandomSource src(1, 0);
  const auto f = build_flex(g, c, src);
  EXPECT_EQ(f.red_components.count, 2u);
  EXPECT_EQ(f.blue_components.count, 2u);
  EXPECT_EQ(f.red_components.label[0], f.red_components.label[1]);
  EXPECT_EQ(f.blue_components.label[1], f.blue_components.label[2]);
  EXPECT_GE(min_pairwise_distance(f.x), kMinBaseSeparation);
  EXPECT_GE(min_pairwise_distance(f.y), kMinBaseSeparation);
}

TEST(Flex, RejectsNonNac) {
  const Graph k3 = Graph::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
  RandomSource src(1, 0);
  oracle::for_each_colouring(k3, [&](const EdgeColouring& c) {
    try {
      build_flex(k3, c, src);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotNac);
    }
  });
}

TEST(Flex, MakeFlexValidatesVectors) {
  C4Fixture fx;
  EXPECT_THROW(make_flex(fx.g, fx.c, {{0, 0}}, {{0, 0}, {0, 1}}), Error);
  EXPECT_THROW(make_flex(fx.g, fx.c, {{0, 0}, {0, 0}}, {{0, 0}, {0, 1}}), Error);
}

TEST(Flex, IsolatedVertexCircles) {
  // Vertex 2 is alone in both colours and orbits x[B(2)] at radius |y[R(2)]|.
  const Graph g = Graph::from_pairs(4, {{0, 1}, {1, 3}});
  const auto c = EdgeColouring::from_red_edges(g, {{0, 1}});
  RandomSource src(5, 0);
  const auto f = build_flex(g, c, src);
  const Vec2 centre = f.x[f.blue_components.label[2]];
  const double radius = std::hypot(f.y[f.red_components.label[2]][0], f.y[f.red_components.label[2]][1]);
  for (double theta : theta_grid(16)) EXPECT_NEAR(distance(sample_positions(f, theta)[2], centre), radius, 1e-12);
}

TEST(Flex, TreeColouringsKeepLengths) {
  const Graph tree = Graph::from_pairs(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}});
  RandomSource src(2, 0);
  std::size_t checked = 0;
  oracle::for_each_colouring(tree, [&](const EdgeColouring& c) {
    if (!c.surjective()) return;
    const auto rep = verify_flex(build_flex(tree, c, src));
    EXPECT_LT(rep.max_edge_drift, 1e-9);
    EXPECT_GE(rep.min_edge_length, rep.edge_length_lower_bound - 1e-12);
    EXPECT_GE(rep.edge_length_lower_bound, kMinBaseSeparation);
    ++checked;
  });
  EXPECT_EQ(checked, 30u);
}

TEST(Flex, ThetaGrid) {
  const auto t = theta_grid(4);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0], 0.0);
  EXPECT_DOUBLE_EQ(t[2], std::numbers::pi);
}

TEST(Flex, EveryNacColouringUpToSixVertices) {
  std::size_t graphs = 0, colourings = 0, rigid_motions = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    oracle::for_each_connected_graph_up_to_iso(n, [&](const Graph& g) {
      ++graphs;
      const auto all = nac_enumerate(g);
      ASSERT_TRUE(all.complete);
      RandomSource src(n, graphs);
      for (const auto& c : all.colourings) {
        const auto rep = verify_flex(build_flex(g, c, src), 64);
        ASSERT_LT(rep.max_edge_drift, 1e-9) << to_edge_list(g);
        ASSERT_GT(rep.min_edge_length, 0.0);
        ASSERT_GE(rep.min_edge_length, rep.edge_length_lower_bound - 1e-12);
        rigid_motions += rep.max_pair_variation <= 1e-6;
        ++colourings;
      }
    });
  // Connected graphs on 2..6 vertices up to isomorphism: 1 + 2 + 6 + 21 + 112.
  EXPECT_EQ(graphs, 142u);
  EXPECT_GT(colourings, 1000u);
  EXPECT_EQ(rigid_motions, 0u);
}

TEST(FlexJson, Shape) {
  C4Fixture fx;
  const auto f = make_flex(fx.g, fx.c, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}});
  const auto j = flex_to_json(f, 8);
  EXPECT_EQ(j["theta"].size(), 8u);
  EXPECT_EQ(j["positions"].size(), 8u);
  EXPECT_EQ(j["positions"][0].size(), 4u);
  EXPECT_EQ(j["positions"][0][2], nlohmann::json::parse("[1.0,1.0]"));
  EXPECT_TRUE(j["report"].contains("max_edge_drift"));
}
