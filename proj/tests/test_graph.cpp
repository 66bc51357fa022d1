#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "at4/graph.hpp"
#include "at4/oracles.hpp"

using namespace at4;

namespace {

Graph cycle(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph petersen() {
  Graph g = Graph::empty(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph edges(int n, std::vector<std::pair<int, int>> es) {
  Graph g = Graph::empty(n);
  for (auto& [u, v] : es) g.add_edge(u, v);
  return g;
}

Spectrum spec(std::vector<std::pair<int, int>> vm) {
  std::vector<SpectrumEntry> e;
  for (auto& [v, m] : vm) e.push_back({Rat(v), Int(m)});
  return make_spectrum(e);
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(g.edge(0, 1));
  CHECK(g.edge(1, 0));
  CHECK_FALSE(g.edge(1, 3));
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 3);
  CHECK(g.edge_count() == 5);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
  CHECK(g.common_neighbors(1, 3) == 2);

  CHECK_THROWS_AS(g.add_edge(0, 0), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 4), DomainError);
  CHECK_THROWS_AS(g.add_edge(-1, 2), DomainError);
}

TEST_CASE("text round trip") {
  Graph g = edges(3, {{0, 1}, {1, 2}});
  std::string text = graph_to_text(g);
  Graph back = graph_from_text(text);
  CHECK(back.n == 3);
  CHECK(back.edge(0, 1));
  CHECK(back.edge(1, 2));
  CHECK_FALSE(back.edge(0, 2));
  CHECK(graph_to_text(back) == text);

  CHECK(graph_from_text("0\n").n == 0);
  CHECK(graph_from_text("2\n").edge_count() == 0);

  CHECK_THROWS_AS(graph_from_text(""), DomainError);
  CHECK_THROWS_AS(graph_from_text("x\n"), DomainError);
  CHECK_THROWS_AS(graph_from_text("3\n0 3\n"), DomainError);
  CHECK_THROWS_AS(graph_from_text("3\n0 0\n"), DomainError);
  CHECK_THROWS_AS(graph_from_text("3\n0\n"), DomainError);
  CHECK_THROWS_AS(graph_from_text("3\n0 1 junk\n"), DomainError);
  CHECK_THROWS_AS(graph_from_text("-2\n"), DomainError);
}

TEST_CASE("distances") {
  Graph c8 = cycle(8);
  std::vector<int> d = bfs_distances(c8, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, 4, 3, 2, 1});
  CHECK(is_connected(c8));
  CHECK(diameter(c8) == 4);

  std::vector<std::vector<int>> parts = distance_partition(c8, 0);
  REQUIRE(parts.size() == 5);
  CHECK(parts[0] == std::vector<int>{0});
  CHECK(parts[4] == std::vector<int>{4});
  CHECK(parts[2] == std::vector<int>{2, 6});

  Graph two = Graph::empty(2);
  CHECK_FALSE(is_connected(two));
  CHECK_THROWS_AS(diameter(two), DisconnectedGraph);
  CHECK_THROWS_AS(distance_partition(two, 0), DisconnectedGraph);
  CHECK(bfs_distances(two, 0) == std::vector<int>{0, -1});
}

TEST_CASE("distance regularity detection") {
  auto c8 = verify_drg(cycle(8));
  REQUIRE(c8.has_value());
  CHECK(*c8 == make_array({Rat(2), Rat(1), Rat(1), Rat(1)},
                          {Rat(1), Rat(1), Rat(1), Rat(2)}));

  // Odd cycle of diameter 4: distance regular with c4 = 1.
  auto c9 = verify_drg(cycle(9));
  REQUIRE(c9.has_value());
  CHECK(*c9 == make_array({Rat(2), Rat(1), Rat(1), Rat(1)},
                          {Rat(1), Rat(1), Rat(1), Rat(1)}));

  CHECK_FALSE(verify_drg(path(3)).has_value());    // not regular
  CHECK_FALSE(verify_drg(cycle(10)).has_value());  // diameter 5
  CHECK_FALSE(verify_drg(complete(4)).has_value());  // diameter 1
  CHECK_FALSE(verify_drg(petersen()).has_value());   // diameter 2
  CHECK_FALSE(verify_drg(Graph::empty(3)).has_value());

  // Regular, diameter 4, but c2 depends on the pair: two 8-cycles sharing
  // antipodal chords breaks the constancy. Simpler: the 3-cube with one
  // perfect matching doubled is 4-regular diameter 2; instead take the
  // circulant C12(1,5), which is 4-regular with diameter 3.
  Graph c12 = Graph::empty(12);
  for (int i = 0; i < 12; ++i) {
    c12.add_edge(i, (i + 1) % 12);
    c12.add_edge(i, (i + 5) % 12);
  }
  CHECK_FALSE(verify_drg(c12).has_value());
}

TEST_CASE("induced structures on the Johnson oracle") {
  Graph j = build_johnson_8_4();
  REQUIRE(j.n == 70);
  CHECK(j.labels.size() == 70);

  auto ia = verify_drg(j);
  REQUIRE(ia.has_value());
  CHECK(*ia == make_array({Rat(16), Rat(9), Rat(4), Rat(1)},
                          {Rat(1), Rat(4), Rat(9), Rat(16)}));

  Graph loc = local_graph(j, 0);
  CHECK(loc.n == 16);
  CHECK(loc.labels.size() == 16);
  auto degs_ok = [&](const Graph& g, int want) {
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) != want) return false;
    return true;
  };
  CHECK(degs_ok(loc, 6));

  Graph sub2 = second_subconstituent(j, 0);
  CHECK(sub2.n == 36);
  CHECK(degs_ok(sub2, 8));

  CHECK_THROWS_AS(induced_subgraph(j, {0, 0}), DomainError);
  CHECK_THROWS_AS(induced_subgraph(j, {0, 999}), DomainError);
}

TEST_CASE("mu graphs") {
  Graph j = build_johnson_8_4();
  std::vector<int> d = bfs_distances(j, 0);
  int y = -1;
  for (int v = 0; v < j.n; ++v)
    if (d[v] == 2) { y = v; break; }
  REQUIRE(y >= 0);

  Graph mu = mu_graph(j, 0, y);
  CHECK(mu.n == 4);
  for (int v = 0; v < mu.n; ++v) CHECK(mu.degree(v) == 2);  // K_{2,2}

  CHECK_THROWS_AS(mu_graph(j, 0, j.neighbors(0)[0]), WrongDistance);
  CHECK_THROWS_AS(mu_graph(j, 0, 0), WrongDistance);
}

TEST_CASE("antipodal classes") {
  auto classes = antipodal_classes(cycle(8));
  REQUIRE(classes.size() == 4);
  for (auto& cls : classes) CHECK(cls.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 4});

  Graph j = build_johnson_8_4();
  auto jc = antipodal_classes(j);
  CHECK(jc.size() == 35);
  // Classes are complementary 4-subsets of the 8-set.
  for (auto& cls : jc) {
    REQUIRE(cls.size() == 2);
    CHECK((j.labels[cls[0]] ^ j.labels[cls[1]]) == 0xffu);
  }

  // Path: distance-3 pairing is an equivalence with singleton middle classes.
  auto pc = antipodal_classes(path(4));
  REQUIRE(pc.size() == 3);
  CHECK(pc[0] == std::vector<int>{0, 3});
  CHECK(pc[1] == std::vector<int>{1});

  CHECK_THROWS_AS(antipodal_classes(complete(4)), NotAntipodal);
  CHECK_THROWS_AS(antipodal_classes(cycle(9)), NotAntipodal);
  CHECK_THROWS_AS(
      antipodal_classes(edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}})),
      NotAntipodal);
}

TEST_CASE("unions of mu graphs over a class") {
  Graph j = build_johnson_8_4();
  auto classes = antipodal_classes(j);
  std::vector<int> d = bfs_distances(j, 0);

  int found = 0;
  for (auto& cls : classes) {
    bool in2 = std::all_of(cls.begin(), cls.end(),
                           [&](int v) { return d[v] == 2; });
    if (!in2) continue;
    ++found;
    Graph h = h_union(j, 0, cls);
    CHECK(h.n == 8);  // q(p+q)
    for (int v = 0; v < h.n; ++v) CHECK(h.degree(v) == 2);
  }
  CHECK(found == 18);

  // Single member: the union degenerates to one mu-graph.
  int y = -1;
  for (int v = 0; v < j.n; ++v)
    if (d[v] == 2) { y = v; break; }
  CHECK(h_union(j, 0, {y}).n == 4);

  CHECK_THROWS_AS(h_union(j, 0, {}), BadClass);
  CHECK_THROWS_AS(h_union(j, 0, {y, y}), BadClass);
  CHECK_THROWS_AS(h_union(j, 0, {j.neighbors(0)[0]}), BadClass);
  // Two distance-2 vertices that are not antipodal to each other.
  int z = -1;
  for (int v = y + 1; v < j.n; ++v)
    if (d[v] == 2 && bfs_distances(j, y)[v] == 2) { z = v; break; }
  REQUIRE(z >= 0);
  CHECK_THROWS_AS(h_union(j, 0, {y, z}), BadClass);
}

TEST_CASE("triple counts") {
  Graph j = build_johnson_8_4();
  auto a = triple_alpha_sample(j, 1000000000L);
  REQUIRE(a.has_value());
  CHECK(*a == 2);

  // A graph where two triples disagree: counts 2 and 1.
  Graph bad = edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4},
                        {3, 4}, {2, 5}});
  CHECK_FALSE(triple_alpha_sample(bad, 1000000000L).has_value());

  // No valid triple at all.
  CHECK_FALSE(triple_alpha_sample(complete(4), 1000000000L).has_value());
}

TEST_CASE("exact spectra of small graphs") {
  CHECK(extract_spectrum(cycle(4)) == spec({{2, 1}, {0, 2}, {-2, 1}}));
  CHECK(extract_spectrum(complete(4)) == spec({{3, 1}, {-1, 3}}));
  CHECK(extract_spectrum(petersen()) == spec({{3, 1}, {1, 5}, {-2, 4}}));
  CHECK(extract_spectrum(Graph::empty(3)) == spec({{0, 3}}));
  CHECK(extract_spectrum(Graph::empty(0)).entries.empty());

  // Complete bipartite K_{9,9}.
  Graph k99 = Graph::empty(18);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) k99.add_edge(i, 9 + j);
  CHECK(extract_spectrum(k99) == spec({{9, 1}, {0, 16}, {-9, 1}}));

  CHECK_THROWS_AS(extract_spectrum(cycle(5)), IrrationalSpectrum);
}

TEST_CASE("spectrum verification is exact") {
  Graph j = build_johnson_8_4();
  Spectrum good = spec({{16, 1}, {8, 7}, {2, 20}, {-2, 28}, {-4, 14}});
  CHECK(verify_spectrum(j, good));

  // Swapped multiplicities keep the eigenvalue set but break the traces.
  Spectrum swapped = spec({{16, 1}, {8, 7}, {2, 28}, {-2, 20}, {-4, 14}});
  CHECK_FALSE(verify_spectrum(j, swapped));

  // Wrong eigenvalue set: annihilation fails.
  Spectrum wrong = spec({{16, 1}, {7, 7}, {2, 21}, {-2, 27}, {-4, 14}});
  CHECK_FALSE(verify_spectrum(j, wrong));

  // Wrong order.
  Spectrum short_ = spec({{16, 1}, {8, 7}, {2, 20}, {-2, 28}, {-4, 13}});
  CHECK_FALSE(verify_spectrum(j, short_));

  CHECK(verify_spectrum(cycle(4), spec({{2, 1}, {0, 2}, {-2, 1}})));
  CHECK_FALSE(verify_spectrum(cycle(4), spec({{2, 1}, {0, 3}})));
}

TEST_CASE("eigenvalue multiplicities via integer elimination") {
  Graph j = build_johnson_8_4();
  CHECK(eigenvalue_multiplicity(j, 2) == 20);
  CHECK(eigenvalue_multiplicity(j, -4) == 14);
  CHECK(eigenvalue_multiplicity(j, 3) == 0);
  CHECK(eigenvalue_multiplicity(j, 16) == 1);
}

TEST_CASE("adjacency power traces") {
  Graph j = build_johnson_8_4();
  std::vector<Int> t = adjacency_power_traces(j, 3);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == 70);
  CHECK(t[1] == 0);
  CHECK(t[2] == 1120);   // 2 * edges = n * k
  CHECK(t[3] == 6720);   // 6 * triangles = n * k * a1
}

TEST_CASE("halved cube oracle graph") {
  Graph h = build_halved_cube_8();
  REQUIRE(h.n == 128);
  auto ia = verify_drg(h);
  REQUIRE(ia.has_value());
  CHECK(*ia == make_array({Rat(28), Rat(15), Rat(6), Rat(1)},
                          {Rat(1), Rat(6), Rat(15), Rat(28)}));
  auto classes = antipodal_classes(h);
  CHECK(classes.size() == 64);
}
