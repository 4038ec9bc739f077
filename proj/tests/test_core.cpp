#include <gtest/gtest.h>
#include <zlib.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"

namespace sline {
namespace {

using test::toy_hypergraph;

std::vector<index_t> as_vector(std::span<const index_t> s) { return {s.begin(), s.end()}; }

void expect_dual_consistent(const Hypergraph& h) {
  std::size_t from_edges = 0;
  for (index_t e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    from_edges += vs.size();
    EXPECT_TRUE(std::adjacent_find(vs.begin(), vs.end(), std::greater_equal<>()) == vs.end());
    for (index_t v : vs) {
      ASSERT_LT(v, h.num_vertices());
      auto es = h.vertex(v);
      EXPECT_TRUE(std::binary_search(es.begin(), es.end(), e));
    }
  }
  std::size_t from_vertices = 0;
  for (index_t v = 0; v < h.num_vertices(); ++v) {
    auto es = h.vertex(v);
    from_vertices += es.size();
    EXPECT_TRUE(std::adjacent_find(es.begin(), es.end(), std::greater_equal<>()) == es.end());
    for (index_t e : es) {
      ASSERT_LT(e, h.num_edges());
      auto vs = h.edge(e);
      EXPECT_TRUE(std::binary_search(vs.begin(), vs.end(), v));
    }
  }
  EXPECT_EQ(from_edges, from_vertices);
  EXPECT_EQ(from_edges, h.num_incidences());
}

TEST(LoadBipartite, EdgeMajorPairs) {
  std::istringstream in("0 1\n0 2\n1 2\n1 3\n");
  auto h = load_bipartite(in);
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.num_vertices(), 4u);
  EXPECT_EQ(as_vector(h.edge(0)), (std::vector<index_t>{1, 2}));
  EXPECT_EQ(as_vector(h.edge(1)), (std::vector<index_t>{2, 3}));
  EXPECT_TRUE(h.vertex(0).empty());
}

TEST(LoadBipartite, DuplicatesCollapse) {
  std::istringstream a("0 1\n0 2\n1 2\n1 3\n");
  std::istringstream b("0 1\n0 2\n0 1\n1 2\n1 3\n");
  EXPECT_EQ(load_bipartite(a), load_bipartite(b));
}

TEST(LoadBipartite, VertexMajorSwapsColumns) {
  std::istringstream a("0 1\n0 2\n1 2\n1 3\n");
  std::istringstream b("1 0\n2 0\n2 1\n3 1\n");
  EXPECT_EQ(load_bipartite(a), load_bipartite(b, {Orientation::vertex_major}));
}

TEST(LoadBipartite, CommentsBlankLinesAndTabs) {
  std::istringstream in("# header\n\n0\t1\r\n  # indented comment\n1 1\n");
  auto h = load_bipartite(in);
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.num_incidences(), 2u);
}

TEST(LoadBipartite, ToyFile) {
  auto h = load_bipartite_file(test::toy_path());
  EXPECT_EQ(h.num_edges(), 4u);
  EXPECT_EQ(h.num_vertices(), 12u);
  EXPECT_EQ(h.edge_size(test::A), 4u);
  EXPECT_EQ(h.edge_size(test::B), 8u);
  EXPECT_EQ(h.edge_size(test::D), 2u);
  EXPECT_EQ(h, toy_hypergraph());
}

TEST(LoadBipartite, MalformedLineReportsLineNumber) {
  std::istringstream in("0 1\n# ok\n0 x\n");
  try {
    load_bipartite(in);
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream one_token("0 1\n5\n");
  EXPECT_THROW(load_bipartite(one_token), parse_error);
  std::istringstream three_tokens("0 1 2\n");
  EXPECT_THROW(load_bipartite(three_tokens), parse_error);
  std::istringstream fractional("0 1.5\n");
  EXPECT_THROW(load_bipartite(fractional), parse_error);
}

TEST(LoadBipartite, NegativeIdIsDomainError) {
  std::istringstream in("0 1\n-3 2\n");
  EXPECT_THROW(load_bipartite(in), std::domain_error);
}

TEST(LoadBipartite, SparseIdsAreCompactedWithMapping) {
  std::istringstream in("1000 7\n1000 900000\n5000000 7\n");
  auto h = load_bipartite(in);
  EXPECT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.num_vertices(), 2u);
  EXPECT_EQ(h.edge_labels(), (std::vector<label_t>{1000, 5000000}));
  EXPECT_EQ(h.vertex_labels(), (std::vector<label_t>{7, 900000}));
  EXPECT_EQ(h.edge_label(1), 5000000u);
  EXPECT_EQ(as_vector(h.edge(0)), (std::vector<index_t>{0, 1}));
}

TEST(LoadBipartite, ExplicitIdPolicies) {
  std::istringstream a("0 1\n0 3\n");
  auto compact = load_bipartite(a, {Orientation::edge_major, IdPolicy::compact});
  EXPECT_EQ(compact.num_vertices(), 2u);
  std::istringstream b("0 1\n0 9\n");
  auto verbatim = load_bipartite(b, {Orientation::edge_major, IdPolicy::verbatim});
  EXPECT_EQ(verbatim.num_vertices(), 10u);
}

TEST(LoadBipartite, EmptyInput) {
  std::istringstream in("# nothing\n");
  auto h = load_bipartite(in);
  EXPECT_EQ(h.num_edges(), 0u);
  EXPECT_EQ(h.num_vertices(), 0u);
}

TEST(LoadBipartite, GzipInput) {
  const std::string plain = "0 1\n0 2\n1 2\n1 3\n";
  std::string packed(compressBound(plain.size()) + 64, '\0');
  z_stream zs{};
  ASSERT_EQ(deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 16 + MAX_WBITS, 8, Z_DEFAULT_STRATEGY), Z_OK);
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(plain.data()));
  zs.avail_in = static_cast<uInt>(plain.size());
  zs.next_out = reinterpret_cast<Bytef*>(packed.data());
  zs.avail_out = static_cast<uInt>(packed.size());
  ASSERT_EQ(deflate(&zs, Z_FINISH), Z_STREAM_END);
  packed.resize(zs.total_out);
  deflateEnd(&zs);

  std::istringstream gz(packed);
  std::istringstream txt(plain);
  EXPECT_EQ(load_bipartite(gz), load_bipartite(txt));

  std::istringstream truncated(packed.substr(0, packed.size() / 2));
  EXPECT_THROW(load_bipartite(truncated), std::runtime_error);
}

TEST(Hypergraph, RejectsOutOfRangeIds) {
  EXPECT_THROW(Hypergraph::from_incidences({{0, 5}}, 3, 1), std::out_of_range);
  EXPECT_THROW(Hypergraph::from_incidences({{2, 0}}, 3, 1), std::out_of_range);
}

TEST(Hypergraph, EmptyEdgesAndIsolatedVertices) {
  auto h = Hypergraph::from_edge_lists({{}, {1}, {}}, 4);
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(h.edge_size(0), 0u);
  EXPECT_EQ(h.vertex_degree(3), 0u);
  expect_dual_consistent(h);
}

TEST(Dual, ToySwapsCardinalities) {
  auto d = dual(toy_hypergraph());
  EXPECT_EQ(d.num_edges(), 12u);
  EXPECT_EQ(d.num_vertices(), 4u);
  // vertex 10 (stored 9) lies in B, C and D
  EXPECT_EQ(as_vector(d.edge(9)), (std::vector<index_t>{test::B, test::C, test::D}));
}

TEST(Dual, EmptyAndSingleEdge) {
  Hypergraph empty;
  EXPECT_EQ(dual(empty), empty);
  auto single = Hypergraph::from_edge_lists({{0, 1}}, 2);
  auto d = dual(single);
  EXPECT_EQ(d.num_edges(), 2u);
  EXPECT_EQ(as_vector(d.edge(0)), std::vector<index_t>{0});
  EXPECT_EQ(as_vector(d.edge(1)), std::vector<index_t>{0});
}

TEST(Dual, InvolutionOnRandomHypergraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = test::random_hypergraph(rng);
    EXPECT_EQ(dual(dual(h)), h);
  }
}

TEST(DegreeStats, Toy) {
  auto st = degree_stats(toy_hypergraph());
  EXPECT_EQ(st.max_edge_size, 8u);
  EXPECT_DOUBLE_EQ(st.avg_edge_size, 4.5);
  EXPECT_EQ(st.max_vertex_degree, 3u);  // vertex 10
  EXPECT_EQ(st.edge_size_histogram, (std::map<std::size_t, std::size_t>{{2, 1}, {4, 2}, {8, 1}}));
}

TEST(DegreeStats, UniformHasSingleBucket) {
  auto h = Hypergraph::from_edge_lists({{0, 1, 2}, {1, 2, 3}, {0, 2, 4}}, 5);
  auto st = degree_stats(h);
  EXPECT_EQ(st.edge_size_histogram, (std::map<std::size_t, std::size_t>{{3, 3}}));
}

TEST(DegreeStats, HistogramTotalsEdgeCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = test::random_hypergraph(rng);
    auto st = degree_stats(h);
    std::size_t total = 0;
    for (auto [k, c] : st.edge_size_histogram) total += c;
    EXPECT_EQ(total, h.num_edges());
  }
}

// Shuffled lines with duplicates still give a dual-consistent structure, and
// writing then reloading reproduces it.
TEST(LoadBipartite, RandomizedConsistencyAndRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = test::random_hypergraph(rng);
    std::vector<std::pair<index_t, index_t>> lines;
    for (index_t e = 0; e < h.num_edges(); ++e)
      for (index_t v : h.edge(e)) {
        lines.emplace_back(e, v);
        if (rng() % 3 == 0) lines.emplace_back(e, v);
      }
    std::shuffle(lines.begin(), lines.end(), rng);
    std::ostringstream text;
    for (auto [e, v] : lines) text << e << ' ' << v << '\n';
    std::istringstream in(text.str());
    auto loaded = load_bipartite(in, {Orientation::edge_major, IdPolicy::verbatim});
    expect_dual_consistent(loaded);

    std::ostringstream written;
    write_bipartite(written, loaded);
    std::istringstream again(written.str());
    EXPECT_EQ(load_bipartite(again, {Orientation::edge_major, IdPolicy::verbatim}), loaded);
  }
}

TEST(LoadBipartite, RoundTripPreservesLabels) {
  std::istringstream in("1000 7\n1000 900000\n5000000 7\n");
  auto h = load_bipartite(in);
  std::ostringstream out;
  write_bipartite(out, h);
  std::istringstream again(out.str());
  EXPECT_EQ(load_bipartite(again), h);
}

}  // namespace
}  // namespace sline
