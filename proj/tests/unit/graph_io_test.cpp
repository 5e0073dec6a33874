#include "egr/graph_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "egr/families.hpp"
#include "oracles.hpp"

namespace egr {
namespace {

TEST(EdgeList, SortedCanonicalIds) {
  const Adjacency adj(relations(parse_family("wenger:n=1,q=2")));
  std::ostringstream out;
  write_edge_list(adj, out);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  while (std::getline(in, line)) {
    ASSERT_EQ(line[0], 'P');
    const auto space = line.find(' ');
    ASSERT_EQ(line[space + 1], 'L');
    edges.emplace_back(std::stoul(line.substr(1, space - 1)), std::stoul(line.substr(space + 2)));
  }
  ASSERT_EQ(edges.size(), 8u);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  for (const auto& [p, l] : edges) {
    EXPECT_LT(p, 4u);
    EXPECT_GE(l, 4u);
    EXPECT_TRUE(adj.has_edge(p, l));
  }
  EXPECT_EQ(edges.front(), (std::pair<std::uint32_t, std::uint32_t>{0, 4}));
}

TEST(Graph6, DecodesToTheSameGraph) {
  for (const char* text : {"wenger:n=1,q=2", "wenger:n=1,q=3", "wenger:n=2,q=3", "lwenger:m=2,q=4"}) {
    const Adjacency adj(relations(parse_family(text)));
    std::ostringstream out;
    write_graph6(adj, out);
    const std::string encoded = out.str();
    ASSERT_EQ(encoded.back(), '\n');
    EXPECT_EQ(encoded, graph6(adj));
    const auto m = testing::decode_graph6(encoded.substr(0, encoded.size() - 1));
    ASSERT_EQ(m.size(), adj.vertex_count());
    std::uint64_t ones = 0;
    for (std::uint32_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t j = 0; j < m.size(); ++j) {
        ASSERT_EQ(m[i][j], i != j && adj.has_edge(i, j)) << text << " " << i << " " << j;
        ones += m[i][j] ? 1 : 0;
      }
    }
    EXPECT_EQ(ones, 2 * adj.edge_count());
  }
}

TEST(Graph6, KnownSmallEncoding) {
  // W_1(2) has 8 vertices: header byte 63 + 8.
  const Adjacency adj(relations(parse_family("wenger:n=1,q=2")));
  EXPECT_EQ(graph6(adj)[0], static_cast<char>(63 + 8));
  // 128 vertices needs the long header.
  const Adjacency big(relations(parse_family("lwenger:m=2,q=4")));
  EXPECT_EQ(graph6(big)[0], '~');
}

}  // namespace
}  // namespace egr
