#include "adabet/graph.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "graphs.hpp"

namespace adabet {
namespace {

using testing::parse;

TEST(LoadEdgeList, PathGraph) {
  const Graph g = parse("0 1\n1 2");
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.out_degree(*g.find("1")), 2u);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(LoadEdgeList, CollapsesDuplicatesAndReverseDuplicates) {
  std::istringstream in("# comment\na b\na b\nb a");
  const auto [g, stats] = load_edge_list(in, false);
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(stats.duplicates_dropped, 2u);
  EXPECT_EQ(g.label(0), "a");
  EXPECT_EQ(g.label(1), "b");
}

TEST(LoadEdgeList, DirectedReverseAdjacency) {
  const Graph g = parse("0 1\n1 0", true);
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.out_degree(0), 1u);
  EXPECT_EQ(g.in_degree(0), 1u);
}

TEST(LoadEdgeList, DropsSelfLoops) {
  std::istringstream in("x x\nx y\n% other comment\n\n   \ny y\n");
  const auto [g, stats] = load_edge_list(in, false);
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(stats.self_loops_dropped, 2u);
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
  std::istringstream in("0 1\n# ok\n1 2 3\n");
  try {
    load_edge_list(in, false);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream single("0 1\n7\n");
  EXPECT_THROW(load_edge_list(single, false), ParseError);
}

TEST(LoadEdgeList, EmptyInputIsAnError) {
  std::istringstream in("# only comments\n\n");
  EXPECT_THROW(load_edge_list(in, false), std::runtime_error);
}

TEST(LoadEdgeList, MissingFileIsAnError) {
  EXPECT_THROW(load_edge_list(std::filesystem::path("/nonexistent/graph.txt"), false), std::runtime_error);
}

TEST(Degrees, Star) {
  const Graph g = testing::star_graph(5);
  EXPECT_EQ(g.out_degree(0), 4u);
  for (NodeId v = 1; v < 5; ++v) EXPECT_EQ(g.out_degree(v), 1u);
}

TEST(Degrees, IsolatedNode) {
  const std::vector<Arc> arcs{{0, 1}};
  const Graph g = Graph::from_arcs(3, arcs, false);
  EXPECT_EQ(g.out_degree(2), 0u);
  EXPECT_EQ(g.in_degree(2), 0u);
}

TEST(Degrees, DirectedSingleArc) {
  const Graph g = parse("0 1", true);
  EXPECT_EQ(g.out_degree(0), 1u);
  EXPECT_EQ(g.in_degree(0), 0u);
  EXPECT_EQ(g.in_degree(1), 1u);
  EXPECT_TRUE(g.has_arc(0, 1));
  EXPECT_FALSE(g.has_arc(1, 0));
}

TEST(Degrees, OutOfRangeThrows) {
  const Graph g = testing::path_graph(3);
  EXPECT_THROW(g.out_degree(3), std::out_of_range);
  EXPECT_THROW(g.in_degree(100), std::out_of_range);
}

// Structural invariants on random inputs with loops and repeats.
class GraphInvariants : public ::testing::TestWithParam<bool> {};

TEST_P(GraphInvariants, HoldOnRandomArcLists) {
  const bool directed = GetParam();
  Rng rng = make_rng(11, Stream::generator);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
    std::vector<Arc> arcs(rng() % 200);
    for (auto& a : arcs) a = {node(rng), node(rng)};
    const Graph g = Graph::from_arcs(n, arcs, directed);

    std::size_t out_sum = 0;
    std::size_t in_sum = 0;
    for (NodeId v = 0; v < n; ++v) {
      const auto out = g.out_neighbors(v);
      out_sum += out.size();
      in_sum += g.in_degree(v);
      EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
      EXPECT_EQ(std::adjacent_find(out.begin(), out.end()), out.end());
      for (const NodeId w : out) {
        ASSERT_LT(w, n);
        EXPECT_NE(w, v);
        const auto back = g.in_neighbors(w);
        EXPECT_TRUE(std::binary_search(back.begin(), back.end(), v));
        if (!directed) EXPECT_TRUE(g.has_arc(w, v));
      }
    }
    EXPECT_EQ(out_sum, g.num_arcs());
    EXPECT_EQ(in_sum, g.num_arcs());
    if (!directed) EXPECT_EQ(out_sum, 2 * g.num_edges());
  }
}

// Ids are reassigned by first appearance, so graphs are compared through
// their labels. Isolated nodes do not survive an edge list.
void expect_same_by_labels(const Graph& g, const Graph& h) {
  ASSERT_EQ(h.num_arcs(), g.num_arcs());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) continue;
    const auto hv = h.find(g.label(v));
    ASSERT_TRUE(hv.has_value());
    ASSERT_EQ(h.out_degree(*hv), g.out_degree(v));
    ASSERT_EQ(h.in_degree(*hv), g.in_degree(v));
    for (const NodeId w : g.out_neighbors(v)) EXPECT_TRUE(h.has_arc(*hv, *h.find(g.label(w))));
  }
}

Graph reload(const Graph& g) {
  std::ostringstream text;
  g.write_edge_list(text);
  std::istringstream in(text.str());
  return load_edge_list(in, g.directed()).graph;
}

TEST_P(GraphInvariants, EdgeListRoundTrip) {
  const bool directed = GetParam();
  Rng rng = make_rng(12, Stream::generator);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::gnp(30, 0.15, directed, rng);
    const Graph h = reload(g);
    expect_same_by_labels(g, h);
    const Graph again = reload(h);
    expect_same_by_labels(h, again);
    expect_same_by_labels(again, h);
  }
}

TEST(EdgeList, RoundTripKeepsDenseIdsWhenLabelsAreInOrder) {
  const Graph g = testing::path_graph(6);
  EXPECT_EQ(reload(g), g);
}

INSTANTIATE_TEST_SUITE_P(Both, GraphInvariants, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "directed" : "undirected"; });

}  // namespace
}  // namespace adabet
