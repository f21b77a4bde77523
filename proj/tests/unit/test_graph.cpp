#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "cliquelab/cliques.hpp"
#include "cliquelab/generators.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/graph_io.hpp"
#include "cliquelab/rng.hpp"

using namespace cliquelab;

namespace {

std::vector<Graph> family_zoo(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.push_back(complete_graph(n));
    out.push_back(path_graph(n));
    if (n >= 3) out.push_back(cycle_graph(n));
    if (n >= 3) out.push_back(unicyclic_girth3_graph(n));
    for (std::size_t r = 1; r <= std::min<std::size_t>(n, 5); ++r) out.push_back(turan_graph(n, r));
    out.push_back(erdos_renyi_graph(n, {1, 2}, n));
  }
  for (std::size_t w = 1; w <= 4; ++w)
    for (std::size_t s = 1; s <= 3; ++s) out.push_back(multipartite_regular_graph(w, s));
  out.push_back(petersen_graph());
  out.push_back(Graph(4, "empty4"));
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cliquelab_test_" + name);
}

}  // namespace

TEST(Graph, FromEdgesDeduplicatesAndSorts) {
  const Graph g = Graph::from_edges(4, {{2, 0}, {0, 2}, {1, 3}, {0, 1}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(Graph, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), ParameterError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), ParameterError);
}

TEST(Graph, AdjacencyIsSymmetric) {
  for (const Graph& g : family_zoo(9)) {
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v : g.neighbors(u)) {
        EXPECT_NE(u, v);
        EXPECT_TRUE(g.adjacent(v, u)) << g.name();
      }
    }
  }
}

TEST(Graph, RelabelPreservesEdgeCount) {
  const Graph g = petersen_graph();
  std::vector<Vertex> perm{3, 1, 4, 0, 9, 2, 6, 5, 8, 7};
  const Graph h = g.relabeled(perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (const Edge& e : g.edges()) EXPECT_TRUE(h.adjacent(perm[e.u], perm[e.v]));
}

TEST(Generators, MultipartiteRegular) {
  const Graph g = multipartite_regular_graph(3, 2);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.edge_count(), 12u);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) EXPECT_EQ(g.adjacent(u, v), u % 3 != v % 3);
}

TEST(Generators, TuranSmall) {
  const Graph g = turan_graph(5, 2);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(turan_edge_count(5, 2), 6u);
  const auto sizes = turan_part_sizes(5, 2);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 2}));
}

TEST(Generators, TuranPartSizesDifferByAtMostOne) {
  for (std::size_t n = 1; n <= 30; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const auto sizes = turan_part_sizes(n, r);
      const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
      EXPECT_LE(*hi - *lo, 1u);
      EXPECT_TRUE(std::is_sorted(sizes.rbegin(), sizes.rend()));
      EXPECT_EQ(turan_graph(n, r).edge_count(), turan_edge_count(n, r));
    }
  }
}

TEST(Generators, TuranIsKr1Free) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t r = 1; r <= n; ++r) {
      const Graph g = turan_graph(n, r);
      EXPECT_TRUE(is_kr1_free(g, r)) << n << " " << r;
      EXPECT_EQ(clique_number(g), r);
    }
  }
}

TEST(Generators, UnicyclicGirth3) {
  const Graph g = unicyclic_girth3_graph(5);
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(count_cliques(g, 3), 1u);
}

TEST(Generators, ParameterErrors) {
  EXPECT_THROW(turan_graph(2, 3), ParameterError);
  EXPECT_THROW(turan_graph(3, 0), ParameterError);
  EXPECT_THROW(multipartite_regular_graph(0, 2), ParameterError);
  EXPECT_THROW(multipartite_regular_graph(2, 0), ParameterError);
  EXPECT_THROW(cycle_graph(2), ParameterError);
  EXPECT_THROW(erdos_renyi_graph(5, {1, 2}, std::nullopt), ParameterError);
  EXPECT_THROW(erdos_renyi_graph(5, {3, 2}, 1), ParameterError);
  EXPECT_THROW(parse_family("hypercube"), ParameterError);
}

TEST(Generators, ErdosRenyiReproducible) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = erdos_renyi_graph(15, {3, 10}, seed);
    const Graph b = erdos_renyi_graph(15, {3, 10}, seed);
    EXPECT_EQ(a.edges(), b.edges());
    EXPECT_LE(a.edge_count(), 105u);
  }
  EXPECT_EQ(erdos_renyi_graph(10, {0, 1}, 3).edge_count(), 0u);
  EXPECT_EQ(erdos_renyi_graph(10, {1, 1}, 3).edge_count(), 45u);
}

TEST(Generators, GenerateIsPure) {
  GraphSpec spec;
  spec.family = Family::erdos_renyi;
  spec.n = 12;
  spec.p = {1, 2};
  spec.seed = 99;
  EXPECT_EQ(generate(spec).edges(), generate(spec).edges());
  spec.family = Family::turan;
  spec.r = 4;
  EXPECT_EQ(generate(spec).edges(), turan_graph(12, 4).edges());
}

TEST(Generators, Petersen) {
  const Graph g = petersen_graph();
  EXPECT_EQ(g.order(), 10u);
  EXPECT_EQ(g.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(Generators, ParseProbability) {
  const auto half = parse_probability("1/2");
  EXPECT_EQ(half.num, 1u);
  EXPECT_EQ(half.den, 2u);
  const auto dec = parse_probability("0.35");
  EXPECT_EQ(dec.num, 7u);
  EXPECT_EQ(dec.den, 20u);
  EXPECT_EQ(parse_probability("1").num, 1u);
  EXPECT_THROW(parse_probability("1.5"), ParameterError);
  EXPECT_THROW(parse_probability("3/2"), ParameterError);
  EXPECT_THROW(parse_probability("x"), ParameterError);
}

TEST(Rng, FixedSequence) {
  // mt19937_64 with the default seed produces this as its 10000th output.
  std::mt19937_64 reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ULL);
  Rng a(5489), b(5489);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, BelowAndUnitRanges) {
  Rng rng(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.below(6);
    EXPECT_LT(v, 6u);
    seen.insert(v);
    const double u = rng.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(1, 1));
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(2, 0));
}

TEST(GraphIo, EdgeListTriangle) {
  const Graph g = parse_graph("0 1\n1 2\n0 2\n", GraphFormat::edge_list);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(clique_number(g), 3u);
}

TEST(GraphIo, EdgeListCommentsAndRemap) {
  const Graph g = parse_graph("# comment\n\n10 20  # trailing\n20 30\n10 20\n", GraphFormat::edge_list);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(GraphIo, DimacsTriangle) {
  const Graph g = parse_graph("c tri\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::dimacs_col);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(GraphIo, SelfLoopIsRejectedWithLine) {
  try {
    parse_graph("0 1\n0 0\n", GraphFormat::edge_list);
    FAIL() << "expected a self-loop error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::self_loop);
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_graph("p edge 2 1\ne 2 2\n", GraphFormat::dimacs_col), ParseError);
}

TEST(GraphIo, MalformedInput) {
  try {
    parse_graph("0 1\n1 2 3\n", GraphFormat::edge_list);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_graph("p edge 3 1\ne 1 4\n", GraphFormat::dimacs_col);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::id_range);
  }
  EXPECT_THROW(parse_graph("e 1 2\n", GraphFormat::dimacs_col), ParseError);
  EXPECT_THROW(parse_graph("a b\n", GraphFormat::edge_list), ParseError);
}

TEST(GraphIo, MissingFile) {
  EXPECT_THROW(load_graph("/nonexistent/graph.txt"), IoError);
}

TEST(GraphIo, SaveK3EdgeList) {
  std::ostringstream out;
  write_graph(out, complete_graph(3), GraphFormat::edge_list);
  EXPECT_EQ(out.str(), "# n 3 m 3\n0 1\n0 2\n1 2\n");
}

TEST(GraphIo, SaveEmptyGraph) {
  std::ostringstream out;
  write_graph(out, Graph(4), GraphFormat::edge_list);
  EXPECT_EQ(out.str(), "# n 4 m 0\n");
  const Graph back = parse_graph(out.str(), GraphFormat::edge_list);
  EXPECT_EQ(back.order(), 4u);
  EXPECT_EQ(back.edge_count(), 0u);
}

TEST(GraphIo, SaveDimacsOctahedron) {
  std::ostringstream out;
  write_graph(out, multipartite_regular_graph(3, 2), GraphFormat::dimacs_col);
  std::istringstream in(out.str());
  std::string line;
  std::size_t e_lines = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line == "p edge 6 12") header = true;
    if (line.rfind("e ", 0) == 0) ++e_lines;
  }
  EXPECT_TRUE(header);
  EXPECT_EQ(e_lines, 12u);
}

TEST(GraphIo, RoundTripBothFormats) {
  std::vector<Graph> zoo = family_zoo(12);
  zoo.push_back(complete_graph(50));
  zoo.push_back(turan_graph(50, 7));
  zoo.push_back(erdos_renyi_graph(50, {1, 3}, 11));
  zoo.push_back(path_graph(50));
  for (const Graph& g : zoo) {
    for (GraphFormat fmt : {GraphFormat::edge_list, GraphFormat::dimacs_col}) {
      const auto path = temp_file("roundtrip");
      save_graph(g, path, fmt);
      const Graph back = load_graph(path, fmt);
      EXPECT_EQ(back.order(), g.order()) << g.name();
      EXPECT_EQ(back.edges(), g.edges()) << g.name() << " " << to_string(fmt);
      std::filesystem::remove(path);
    }
  }
}

TEST(GraphIo, FormatGuessing) {
  EXPECT_EQ(guess_graph_format("a.col"), GraphFormat::dimacs_col);
  EXPECT_EQ(guess_graph_format("a.txt"), GraphFormat::edge_list);
  EXPECT_EQ(parse_graph_format("dimacs"), GraphFormat::dimacs_col);
  EXPECT_THROW(parse_graph_format("graphml"), ParameterError);
}
