#include <doctest.h>

#include <set>
#include <sstream>

#include "support.hpp"
#include "zagreb/edge_list.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/profile.hpp"

using namespace zagreb;
using testing::cycle;
using testing::path;
using testing::star;

TEST_CASE("from_edge_list basics") {
  const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.adjacent(0, 1));
  CHECK(k2.adjacent(1, 0));

  const Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK_FALSE(c4.adjacent(0, 2));
  CHECK(c4.is_connected());
}

TEST_CASE("from_edge_list deduplicates both orientations") {
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{1, 2});
}

TEST_CASE("from_edge_list rejects bad pairs and names them") {
  try {
    Graph::from_edge_list(3, {{0, 0}});
    FAIL("self-loop accepted");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("self-loop (0,0)") != std::string::npos);
  }
  try {
    Graph::from_edge_list(3, {{0, 1}, {2, 3}});
    FAIL("out-of-range index accepted");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("(2,3)") != std::string::npos);
  }
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 1}}), GraphError);
}

TEST_CASE("large graphs work without the bitset rows") {
  const Graph g = path(100);
  CHECK_FALSE(g.has_bitsets());
  CHECK(g.adjacent(98, 99));
  CHECK_FALSE(g.adjacent(0, 99));
  CHECK(g.is_connected());
  CHECK(path(64).has_bitsets());
}

TEST_CASE("degree_profile") {
  const DegreeProfile c4 = degree_profile(cycle(4));
  CHECK(c4.vertices == 4);
  CHECK(c4.edges == 4);
  CHECK(c4.min_degree == 2);
  CHECK(c4.max_degree == 2);
  CHECK(c4.freq == Frequencies{{2, 4}});
  CHECK(c4.regular());

  CHECK_THROWS_AS(degree_profile(Graph::from_edge_list(0, {})), std::invalid_argument);
}

TEST_CASE("DegreeProfile::from_counts checks the handshake") {
  CHECK_NOTHROW(DegreeProfile::from_counts(3, {{1, 2}, {2, 2}}));
  CHECK_THROWS_AS(DegreeProfile::from_counts(4, {{1, 2}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeProfile::from_counts(1, {{1, 0}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("two_dist_profile") {
  const TwoDistProfile p4 = two_dist_profile(path(4));
  CHECK(p4.freq == Frequencies{{1, 4}});
  CHECK(p4.min_degree == 1);
  CHECK(p4.max_degree == 1);
  CHECK(p4.c3c4_free);
  CHECK(p4.first_zagreb == 10);
  CHECK(p4.leap_total() == 4);

  const TwoDistProfile k14 = two_dist_profile(star(4));
  CHECK(k14.freq == Frequencies{{0, 1}, {3, 4}});
  CHECK(two_distance_degrees(star(4))[0] == 0);

  // Two-distance degrees ignore vertices reachable only at distance 3+.
  CHECK(two_distance_degrees(path(6)) == std::vector<std::int64_t>{1, 1, 2, 2, 1, 1});
}

TEST_CASE("is_c3c4_free") {
  CHECK_FALSE(is_c3c4_free(cycle(3)));
  CHECK_FALSE(is_c3c4_free(cycle(4)));
  CHECK(is_c3c4_free(cycle(5)));
  CHECK(is_c3c4_free(cycle(6)));
  CHECK(is_c3c4_free(path(7)));
  CHECK(is_c3c4_free(star(5)));
  CHECK_FALSE(is_c3c4_free(testing::complete(4)));
  // C4 with a chord is a pair of triangles.
  CHECK_FALSE(is_c3c4_free(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})));
}

TEST_CASE("enumeration counts") {
  const std::uint64_t expected[] = {1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    CHECK(for_each_connected_graph(n, [](const Graph&, std::uint64_t) {}) == expected[n - 1]);
  }
  CHECK_THROWS_AS(ConnectedGraphEnumerator(0), std::out_of_range);
  CHECK_THROWS_AS(ConnectedGraphEnumerator(8), std::out_of_range);
}

TEST_CASE("enumerator yields each connected graph once") {
  std::set<std::vector<Edge>> seen;
  ConnectedGraphEnumerator it(4);
  while (auto g = it.next()) {
    CHECK(g->is_connected());
    CHECK(graph_from_mask(4, it.mask()) == *g);
    const auto edges = g->edges();
    CHECK(seen.insert({edges.begin(), edges.end()}).second);
  }
  CHECK(seen.size() == 38);
}

TEST_CASE("partitions cover the mask range") {
  for (std::uint64_t shards : {1u, 2u, 3u, 7u, 64u, 100u}) {
    std::uint64_t next = 0, total = 0;
    for (std::uint64_t s = 0; s < shards; ++s) {
      const MaskRange r = partition(5, s, shards);
      CHECK(r.begin == next);
      next = r.end;
      total += for_each_connected_graph(5, r, [](const Graph&, std::uint64_t) {});
    }
    CHECK(next == mask_count(5));
    CHECK(total == 728);
  }
  CHECK_THROWS(partition(5, 3, 3));
}

TEST_CASE("edge-list parsing") {
  std::istringstream in("# a path\n3 2\n0 1   # first\n\n1 2\n");
  const Graph g = read_edge_list(in);
  CHECK(g == path(3));

  std::istringstream short_file("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_file), EdgeListError);

  std::istringstream loop("3 1\n1 1\n");
  try {
    read_edge_list(loop);
    FAIL("self-loop accepted");
  } catch (const EdgeListError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream junk("2 1\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(junk), EdgeListError);
}

TEST_CASE("edge-list writing is canonical") {
  const Graph g = Graph::from_edge_list(4, {{3, 0}, {2, 1}, {1, 0}});
  CHECK(to_edge_list_text(g) == "4 3\n0 1\n0 3\n1 2\n");
  std::istringstream back(to_edge_list_text(g));
  CHECK(read_edge_list(back) == g);
}

TEST_CASE("C3C4-free enumeration matches the graph-level predicate") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::uint64_t> want;
    for_each_connected_graph(n, [&](const Graph& g, std::uint64_t mask) {
      if (is_c3c4_free(g)) {
        want.push_back(mask);
      }
    });
    std::vector<std::uint64_t> got;
    for_each_c3c4_free_connected_graph(n, [&](const Graph& g, std::uint64_t mask) {
      CHECK(g == graph_from_mask(n, mask));
      got.push_back(mask);
    });
    CHECK(got == want);
  }
}
