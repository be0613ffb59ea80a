#include <gtest/gtest.h>

#include <sstream>

#include "dicactus/cactus.hpp"
#include "dicactus/digraph.hpp"
#include "dicactus/generators.hpp"
#include "dicactus/oracle.hpp"
#include "fixtures.hpp"

namespace dicactus {
namespace {

using testing::sample5_graph;
using testing::cactus7_graph;

ParseErrorKind parse_kind(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseErrorKind::kMissingHeader;
}

TEST(ParseEdgeListTest, ReadsSevenVertexCactus) {
  const Digraph g = parse_edge_list(
      "# cactus\n7 9\n1 2\n2 3\n3 1\n1 4\n4 5\n5 6\n6 1\n1 7\n7 1\n");
  EXPECT_EQ(g, cactus7_graph());
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 9u);
}

TEST(ParseEdgeListTest, SingleVertexNoEdges) {
  const Digraph g = parse_edge_list("1 0\n");
  EXPECT_EQ(g.order(), 1u);
  EXPECT_TRUE(g.edges().empty());
}

TEST(ParseEdgeListTest, AcceptsCrlfCommentsAndBlankLines) {
  const Digraph g = parse_edge_list("# c\r\n2 2\r\n\r\n1 2\r\n  # inner\r\n2 1\r\n");
  EXPECT_EQ(g, testing::digon());
}

TEST(ParseEdgeListTest, DistinctErrors) {
  EXPECT_EQ(parse_kind("2 1\n1 1\n"), ParseErrorKind::kSelfLoop);
  EXPECT_EQ(parse_kind("2 2\n1 2\n1 2\n"), ParseErrorKind::kDuplicateEdge);
  EXPECT_EQ(parse_kind("2 1\n1 3\n"), ParseErrorKind::kVertexOutOfRange);
  EXPECT_EQ(parse_kind("2 1\n0 1\n"), ParseErrorKind::kVertexOutOfRange);
  EXPECT_EQ(parse_kind("2 1\n1 x\n"), ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_kind("2 1\n1 2 3\n"), ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_kind("2 1\n-1 2\n"), ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_kind("0 0\n"), ParseErrorKind::kMalformedLine);
  EXPECT_EQ(parse_kind("2 2\n1 2\n"), ParseErrorKind::kEdgeCountMismatch);
  EXPECT_EQ(parse_kind("2 1\n1 2\n2 1\n"), ParseErrorKind::kEdgeCountMismatch);
  EXPECT_EQ(parse_kind("# nothing\n"), ParseErrorKind::kMissingHeader);
}

TEST(ParseEdgeListTest, ErrorNamesTheLine) {
  try {
    parse_edge_list("# header next\n3 2\n1 2\n2 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(ParseEdgeListTest, WriteThenParseIsIdentityOnGeneratedGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Digraph g = random_balanced_digraph({seed, 2 + seed % 9, seed % 5, 0});
    EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  }
}

TEST(DigraphTest, ConstructorRejectsInvalidEdges) {
  EXPECT_THROW(Digraph(0, {}), GraphError);
  EXPECT_THROW(Digraph(2, {{1, 1}}), GraphError);
  EXPECT_THROW(Digraph(2, {{1, 2}, {1, 2}}), GraphError);
  EXPECT_THROW(Digraph(2, {{1, 3}}), GraphError);
}

TEST(DigraphTest, Balanced) {
  EXPECT_TRUE(is_balanced(sample5_graph()));
  EXPECT_FALSE(is_balanced(Digraph(2, {{1, 2}})));
  EXPECT_TRUE(is_balanced(directed_cycle(5)));
}

TEST(DigraphTest, StronglyConnected) {
  EXPECT_TRUE(is_strongly_connected(directed_cycle(5)));
  EXPECT_TRUE(is_strongly_connected(cactus7_graph()));
  EXPECT_FALSE(is_strongly_connected(Digraph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}})));
  EXPECT_TRUE(is_strongly_connected(Digraph(1, {})));
}

TEST(DigraphTest, DistanceMatrix) {
  const IntegerMatrix d1 = distance_matrix(sample5_graph());
  EXPECT_EQ(d1(0, 4), 2);
  EXPECT_EQ(d1(4, 0), 1);
  const IntegerMatrix d2 = distance_matrix(cactus7_graph());
  EXPECT_EQ(d2(1, 5), 5);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(d2(k, k), 0);
  EXPECT_EQ(distance_matrix(Digraph(1, {})), IntegerMatrix{{0}});
}

TEST(DigraphTest, DistanceMatrixNamesUnreachablePair) {
  try {
    distance_matrix(Digraph(3, {{1, 2}, {2, 1}, {3, 1}}));
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_EQ(e.unreachable(), (std::pair<std::size_t, std::size_t>{1, 3}));
  }
}

TEST(DigraphTest, Laplacian) {
  EXPECT_EQ(laplacian(sample5_graph()), testing::sample5_laplacian());
  EXPECT_EQ(laplacian(testing::digon()), (IntegerMatrix{{1, -1}, {-1, 1}}));
  const IntegerMatrix l = laplacian(cactus7_graph());
  for (const auto& s : l.row_sums()) EXPECT_EQ(s, 0);
  for (const auto& s : l.column_sums()) EXPECT_EQ(s, 0);
}

TEST(DigraphTest, LaplacianAnnihilatesOnesOnBalancedGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const IntegerMatrix l = laplacian(random_balanced_digraph({seed, 2 + seed % 11, seed % 6, 0}));
    for (const auto& s : l.row_sums()) ASSERT_EQ(s, 0);
    for (const auto& s : l.column_sums()) ASSERT_EQ(s, 0);
  }
}

TEST(ReachabilityPartitionTest, SevenVertexCactus) {
  const VertexPartition p = reachability_partition(cactus7_graph(), 1, 2);
  EXPECT_EQ(p.forward, (VertexSet{4, 5, 6, 7}));
  EXPECT_EQ(p.backward, (VertexSet{3}));
  const VertexPartition q = reachability_partition(cactus7_graph(), 4, 5);
  EXPECT_TRUE(q.forward.empty());
  EXPECT_EQ(q.backward, (VertexSet{1, 2, 3, 6, 7}));
}

TEST(ReachabilityPartitionTest, DigonAndErrors) {
  const VertexPartition p = reachability_partition(testing::digon(), 1, 2);
  EXPECT_TRUE(p.forward.empty());
  EXPECT_TRUE(p.backward.empty());
  EXPECT_THROW(reachability_partition(testing::digon(), 1, 1), PreconditionError);
  EXPECT_THROW(reachability_partition(testing::digon(), 1, 3), PreconditionError);
}

TEST(ReachabilityPartitionTest, CoReachOnSevenVertexCactus) {
  const VertexPartition p = reachability_partition(cactus7_graph(), 1, 2);
  EXPECT_EQ(p.co_reach, (VertexSet{3, 4, 5, 6, 7}));
}

TEST(RelabelTest, PermutationToEnds) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i == j) continue;
        const auto perm = permutation_to_ends(n, i, j);
        EXPECT_EQ(perm[i - 1], 1u);
        EXPECT_EQ(perm[j - 1], n);
        auto sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v = 1; v <= n; ++v) EXPECT_EQ(sorted[v - 1], v);
      }
    }
  }
}

TEST(CactusTest, Examples) {
  EXPECT_TRUE(is_directed_cactus(cactus7_graph()));
  EXPECT_FALSE(is_directed_cactus(sample5_graph()));
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_TRUE(is_directed_cactus(directed_cycle(n)));
  EXPECT_TRUE(is_directed_cactus(Digraph(1, {})));
  EXPECT_FALSE(is_directed_cactus(Digraph(2, {{1, 2}})));
}

TEST(CactusTest, FiveVertexSampleEdgeOnTwoCycles) {
  // Edge (2,4) lies on 2->4->2 and on 1->2->4->1.
  int hits = 0;
  for (const auto& cycle : oracle::enumerate_directed_cycles(sample5_graph())) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] == 2 && cycle[(k + 1) % cycle.size()] == 4) ++hits;
    }
  }
  EXPECT_GE(hits, 2);
}

TEST(CactusTest, DigonsFormTheirOwnBlocks) {
  const auto blocks = biconnected_blocks(cactus7_graph());
  ASSERT_EQ(blocks.size(), 3u);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  EXPECT_EQ(total, 9u);
}

// Two triangles sharing an edge pair of vertices: strongly connected, balanced
// but two cycles share two vertices.
TEST(CactusTest, CyclesSharingTwoVerticesAreRejected) {
  const Digraph g(4, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 1}, {1, 4}, {4, 2}});
  EXPECT_FALSE(is_directed_cactus(g));
  EXPECT_FALSE(oracle::is_directed_cactus_by_enumeration(g));
}

TEST(CactusTest, AgreesWithCycleEnumeration) {
  int cacti = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    const std::size_t n = rng.uniform(1, 8);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = 1; v <= n; ++v)
        if (u != v && rng.uniform(0, 99) < 30) edges.push_back({u, v});
    const Digraph g(n, edges);
    if (g.size() > 3 * n) continue;
    const bool fast = is_directed_cactus(g);
    cacti += fast;
    ASSERT_EQ(fast, oracle::is_directed_cactus_by_enumeration(g)) << write_edge_list(g);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Digraph g = seed % 2 == 0
                          ? random_directed_cactus({seed, 1 + seed % 5, 4, 10})
                          : random_balanced_digraph({seed, 2 + seed % 7, seed % 3, 0});
    if (g.size() > 3 * g.order()) continue;
    const bool fast = is_directed_cactus(g);
    cacti += fast;
    ASSERT_EQ(fast, oracle::is_directed_cactus_by_enumeration(g)) << write_edge_list(g);
  }
  EXPECT_GT(cacti, 100);
}

}  // namespace
}  // namespace dicactus
