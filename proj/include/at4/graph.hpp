#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "at4/errors.hpp"
#include "at4/intersection_array.hpp"
#include "at4/spectrum.hpp"

namespace at4 {

// Simple undirected graph over packed adjacency rows. Sized for the brute
// force work here (tens to low hundreds of vertices), not for scale.
struct Graph {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> bits;       // n rows of `words` 64-bit words
  std::vector<uint32_t> labels;     // optional vertex labels (bit masks)

  static Graph empty(int n);
  bool edge(int u, int v) const {
    return (bits[static_cast<size_t>(u) * words + (v >> 6)] >>
            (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  int degree(int u) const;
  int max_degree() const;
  long edge_count() const;
  std::vector<int> neighbors(int u) const;
  // |N(u) & N(v)| via word-wise intersection.
  int common_neighbors(int u, int v) const;
};

// Text form: first line n, then one "u v" line per edge, 0-based.
Graph graph_from_text(const std::string& text);  // DomainError on bad input
std::string graph_to_text(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, int x);  // -1 = unreached
bool is_connected(const Graph& g);
int diameter(const Graph& g);  // DisconnectedGraph if not connected

// Vertices grouped by distance from x; throws DisconnectedGraph.
std::vector<std::vector<int>> distance_partition(const Graph& g, int x);

// Exhaustive distance-regularity check. Empty unless the graph is connected,
// regular, of diameter exactly 4, with constant b_i/c_i over all pairs.
std::optional<IntersectionArray> verify_drg(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph local_graph(const Graph& g, int x);
Graph second_subconstituent(const Graph& g, int x);

// Induced on N(x) & N(y); requires distance(x,y) = 2 (WrongDistance).
Graph mu_graph(const Graph& g, int x, int y);

// Classes of the "distance 0 or diameter" relation, each sorted, ordered by
// least member. Throws NotAntipodal when the relation is not an equivalence,
// and for diameter <= 1 graphs, where antipodality does not apply.
std::vector<std::vector<int>> antipodal_classes(const Graph& g);

// Union of the mu-graphs from x to each member of cls, as an induced
// subgraph. cls must lie in the second subconstituent of x and be pairwise
// at maximal distance (BadClass).
Graph h_union(const Graph& g, int x, const std::vector<int>& cls);

// Common-neighbour count over triples (x,y,z), xy an edge, z at distance 2
// from both, enumerated lexicographically up to `samples` triples. Empty if
// the counts disagree or no triple exists.
std::optional<Int> triple_alpha_sample(const Graph& g, long samples);

// tr(A^j) for j = 0..jmax, exact.
std::vector<Int> adjacency_power_traces(const Graph& g, int jmax);

// n - rank(A - lambda I), computed fraction-free over the integers.
int eigenvalue_multiplicity(const Graph& g, const Int& lambda);

// Integer adjacency spectrum by kernel ranks over all integer candidates in
// [-max_degree, max_degree]. Throws IrrationalSpectrum when the multiplicities
// do not account for every vertex.
Spectrum extract_spectrum(const Graph& g);

// Exact verification of a claimed integer spectrum: the product of
// (A - lam I) over the claimed eigenvalues must vanish, and the claimed
// multiplicities must solve the trace equations (Vandermonde, exact).
bool verify_spectrum(const Graph& g, const Spectrum& claimed);

}  // namespace at4
