#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sfenc/errors.hpp"
#include "sfenc/graph.hpp"
#include "sfenc/models.hpp"

using namespace sfenc;

namespace {

InteractionGraph torus_gse() {
  HubbardSpec s;
  s.lx = s.ly = 3;
  s.periodic = true;
  return hubbard_gse_graph(s);
}

}  // namespace

TEST(Graph, ValidationRejectsBadInput) {
  EXPECT_THROW(InteractionGraph::from_pairs(2, {{0, 0}}), StructuralError);
  EXPECT_THROW(InteractionGraph::from_pairs(3, {{0, 1}}), StructuralError);
  EXPECT_THROW(InteractionGraph::from_pairs(2, {{0, 2}}), Error);
  std::vector<EdgeInput> bad{{0, 1, 0, 0, std::nullopt}, {1, 2, 0, 0, std::nullopt}};
  EXPECT_THROW(InteractionGraph::build(3, bad), ValidationError);
}

TEST(Graph, DefaultPortsFollowNeighbourOrder) {
  const InteractionGraph g = InteractionGraph::from_pairs(3, {{0, 2}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.neighbor(0, 0), 1U);
  EXPECT_EQ(g.neighbor(0, 1), 2U);
  EXPECT_EQ(g.neighbor(2, 0), 0U);
}

TEST(Graph, SpanningTreeCounts) {
  EXPECT_EQ(spanning_tree(complete_graph(3)).tree_edges.size(), 2U);
  EXPECT_EQ(spanning_tree(complete_graph(4)).tree_edges.size(), 3U);
  EXPECT_EQ(spanning_tree(torus_gse()).tree_edges.size(), 17U);
}

TEST(Graph, FundamentalCycles) {
  const auto k3 = complete_graph(3);
  const auto loops3 = fundamental_cycles(k3, spanning_tree(k3));
  ASSERT_EQ(loops3.size(), 1U);
  EXPECT_EQ(loops3[0].length(), 3U);
  const auto tree = InteractionGraph::from_pairs(4, {{0, 1}, {1, 2}, {1, 3}});
  EXPECT_TRUE(fundamental_cycles(tree, spanning_tree(tree)).empty());
  const auto k4 = complete_graph(4);
  const auto loops4 = fundamental_cycles(k4, spanning_tree(k4));
  EXPECT_EQ(loops4.size(), 3U);
  for (const Path& p : loops4) EXPECT_TRUE(p.is_loop());
}

TEST(Graph, EulerianCycle) {
  EXPECT_EQ(eulerian_cycle(InteractionGraph::from_pairs(2, {{0, 1}, {0, 1}})).length(), 2U);
  EXPECT_EQ(eulerian_cycle(complete_graph(3)).length(), 3U);
  const Path k7 = eulerian_cycle(complete_graph(7));
  EXPECT_EQ(k7.length(), 21U);
  EXPECT_TRUE(k7.is_loop());
  std::vector<int> used(21, 0);
  for (EdgeId e : k7.edges) ++used[e];
  for (int u : used) EXPECT_EQ(u, 1);
  EXPECT_THROW(eulerian_cycle(complete_graph(4)), PreconditionError);
}

TEST(Graph, ThreeConnectivity) {
  EXPECT_TRUE(is_three_connected(complete_graph(4)));
  EXPECT_FALSE(is_three_connected(InteractionGraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}})));
  EXPECT_TRUE(is_three_connected(torus_gse()));
  EXPECT_THROW(is_three_connected(complete_graph(3)), PreconditionError);
}

TEST(Graph, MaxParallelEdges) {
  EXPECT_EQ(max_parallel_edges(complete_graph(5)), 1U);
  EXPECT_EQ(max_parallel_edges(torus_gse()), 2U);
  EXPECT_EQ(max_parallel_edges(InteractionGraph::from_pairs(2, {{0, 1}, {0, 1}, {1, 0}})), 3U);
}

TEST(Graph, NamedGraphs) {
  const auto oct = octahedron_graph();
  EXPECT_EQ(oct.num_vertices(), 6U);
  EXPECT_EQ(oct.num_edges(), 12U);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(oct.degree(v), 4U);
  EXPECT_EQ(cycle_graph(5).num_edges(), 5U);
}

TEST(Graph, RandomPortsStayBijective) {
  std::mt19937_64 rng(5);
  const auto g = complete_graph(6).with_random_ports(rng);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Port p = 0; p < g.degree(v); ++p) EXPECT_EQ(g.edge(g.incident(v)[p]).port_at(v), p);
  }
}

TEST(Graph, OrientationIsAntisymmetric) {
  const auto g = complete_graph(5);
  for (const Edge& e : g.edges()) {
    EXPECT_EQ(e.orientation_from(e.u), -e.orientation_from(e.v));
  }
}
