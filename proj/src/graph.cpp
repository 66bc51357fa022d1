#include "at4/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace at4 {

Graph Graph::empty(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  Graph g;
  g.n = n;
  g.words = (n + 63) / 64;
  g.bits.assign(static_cast<size_t>(n) * g.words, 0);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("loops not allowed");
  bits[static_cast<size_t>(u) * words + (v >> 6)] |= uint64_t(1) << (v & 63);
  bits[static_cast<size_t>(v) * words + (u >> 6)] |= uint64_t(1) << (u & 63);
}

int Graph::degree(int u) const {
  int d = 0;
  for (int w = 0; w < words; ++w)
    d += std::popcount(bits[static_cast<size_t>(u) * words + w]);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int u = 0; u < n; ++u) d = std::max(d, degree(u));
  return d;
}

long Graph::edge_count() const {
  long total = 0;
  for (int u = 0; u < n; ++u) total += degree(u);
  return total / 2;
}

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  for (int w = 0; w < words; ++w) {
    uint64_t word = bits[static_cast<size_t>(u) * words + w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

int Graph::common_neighbors(int u, int v) const {
  int d = 0;
  for (int w = 0; w < words; ++w)
    d += std::popcount(bits[static_cast<size_t>(u) * words + w] &
                       bits[static_cast<size_t>(v) * words + w]);
  return d;
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  long long n = -1;
  if (!(is >> n) || n < 0 || n > 1000000)
    throw DomainError("graph text: bad vertex count");
  Graph g = Graph::empty(static_cast<int>(n));
  long long u = 0, v = 0;
  while (is >> u) {
    if (!(is >> v)) throw DomainError("graph text: dangling edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("graph text: edge endpoint out of range");
    if (u == v) throw DomainError("graph text: loop");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!is.eof()) throw DomainError("graph text: trailing garbage");
  return g;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << g.n << '\n';
  for (int u = 0; u < g.n; ++u)
    for (int v : g.neighbors(u))
      if (u < v) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<int> bfs_distances(const Graph& g, int x) {
  if (x < 0 || x >= g.n) throw DomainError("bfs start out of range");
  std::vector<int> dist(g.n, -1);
  std::vector<int> queue;
  queue.reserve(g.n);
  queue.push_back(x);
  dist[x] = 0;
  for (size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int w = 0; w < g.words; ++w) {
      uint64_t word = g.bits[static_cast<size_t>(u) * g.words + w];
      while (word) {
        int v = w * 64 + std::countr_zero(word);
        word &= word - 1;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  for (int d : bfs_distances(g, 0))
    if (d < 0) return false;
  return true;
}

int diameter(const Graph& g) {
  if (g.n == 0) throw DisconnectedGraph("no vertices");
  int diam = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int d : bfs_distances(g, u)) {
      if (d < 0) throw DisconnectedGraph("vertex unreachable from " +
                                         std::to_string(u));
      diam = std::max(diam, d);
    }
  }
  return diam;
}

std::vector<std::vector<int>> distance_partition(const Graph& g, int x) {
  std::vector<int> dist = bfs_distances(g, x);
  int ecc = 0;
  for (int d : dist) {
    if (d < 0) throw DisconnectedGraph("vertex unreachable from " +
                                       std::to_string(x));
    ecc = std::max(ecc, d);
  }
  std::vector<std::vector<int>> parts(static_cast<size_t>(ecc) + 1);
  for (int v = 0; v < g.n; ++v) parts[dist[v]].push_back(v);
  return parts;
}

std::optional<IntersectionArray> verify_drg(const Graph& g) {
  if (g.n == 0 || !is_connected(g)) return std::nullopt;
  int k = g.degree(0);
  for (int u = 1; u < g.n; ++u)
    if (g.degree(u) != k) return std::nullopt;

  std::vector<std::vector<int>> dist(g.n);
  int diam = 0;
  for (int u = 0; u < g.n; ++u) {
    dist[u] = bfs_distances(g, u);
    for (int d : dist[u]) diam = std::max(diam, d);
  }
  if (diam != 4) return std::nullopt;

  // b[i], c[i] indexed by distance; -1 = not yet seen
  std::array<long, 5> bs, cs;
  bs.fill(-1);
  cs.fill(-1);
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      int i = dist[u][v];
      long ci = 0, bi = 0;
      for (int w : g.neighbors(v)) {
        if (dist[u][w] == i - 1) ++ci;
        if (dist[u][w] == i + 1) ++bi;
      }
      if (cs[i] < 0) cs[i] = ci;
      if (bs[i] < 0) bs[i] = bi;
      if (cs[i] != ci || bs[i] != bi) return std::nullopt;
    }
  }
  for (int i = 1; i <= 4; ++i)
    if (cs[i] < 0) return std::nullopt;  // some distance class empty
  if (bs[4] != 0) return std::nullopt;
  try {
    return make_array({Rat(k), Rat(bs[1]), Rat(bs[2]), Rat(bs[3])},
                      {Rat(cs[1]), Rat(cs[2]), Rat(cs[3]), Rat(cs[4])});
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.n)
      throw DomainError("induced subgraph vertex out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw DomainError("induced subgraph vertex repeated");
  }
  Graph h = Graph::empty(static_cast<int>(verts.size()));
  if (g.labels.size() == static_cast<size_t>(g.n)) {
    h.labels.resize(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) h.labels[i] = g.labels[verts[i]];
  }
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.edge(verts[i], verts[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph local_graph(const Graph& g, int x) {
  return induced_subgraph(g, g.neighbors(x));
}

Graph second_subconstituent(const Graph& g, int x) {
  std::vector<int> dist = bfs_distances(g, x);
  std::vector<int> verts;
  for (int v = 0; v < g.n; ++v)
    if (dist[v] == 2) verts.push_back(v);
  return induced_subgraph(g, verts);
}

Graph mu_graph(const Graph& g, int x, int y) {
  std::vector<int> dist = bfs_distances(g, x);
  if (y < 0 || y >= g.n || dist[y] != 2)
    throw WrongDistance("mu-graph endpoints must be at distance 2");
  std::vector<int> verts;
  for (int v : g.neighbors(x))
    if (g.edge(y, v)) verts.push_back(v);
  return induced_subgraph(g, verts);
}

std::vector<std::vector<int>> antipodal_classes(const Graph& g) {
  int diam = diameter(g);  // DisconnectedGraph propagates
  if (diam <= 1)
    throw NotAntipodal("diameter <= 1, antipodality does not apply");
  std::vector<std::vector<int>> cls(g.n);
  for (int u = 0; u < g.n; ++u) {
    std::vector<int> dist = bfs_distances(g, u);
    cls[u].push_back(u);
    for (int v = 0; v < g.n; ++v)
      if (dist[v] == diam) cls[u].push_back(v);
    std::sort(cls[u].begin(), cls[u].end());
  }
  std::vector<std::vector<int>> out;
  for (int u = 0; u < g.n; ++u) {
    for (int v : cls[u])
      if (cls[v] != cls[u])
        throw NotAntipodal("distance-" + std::to_string(diam) +
                           " relation is not an equivalence");
    if (cls[u].front() == u) out.push_back(cls[u]);
  }
  return out;
}

Graph h_union(const Graph& g, int x, const std::vector<int>& cls) {
  if (cls.empty()) throw BadClass("empty antipodal class");
  std::vector<int> sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) throw BadClass("repeated class member");
  std::vector<int> from_x = bfs_distances(g, x);
  for (int y : cls) {
    if (y < 0 || y >= g.n || from_x[y] != 2)
      throw BadClass("class member not in the second subconstituent");
  }
  for (int y : cls) {
    std::vector<int> dist = bfs_distances(g, y);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    for (int z : cls)
      if (z != y && dist[z] != ecc)
        throw BadClass("class members not pairwise at maximal distance");
  }
  std::vector<int> verts;
  for (int v : g.neighbors(x)) {
    for (int y : cls)
      if (g.edge(y, v)) {
        verts.push_back(v);
        break;
      }
  }
  return induced_subgraph(g, verts);
}

std::optional<Int> triple_alpha_sample(const Graph& g, long samples) {
  if (samples <= 0) return std::nullopt;
  std::vector<std::vector<int>> dist(g.n);
  for (int u = 0; u < g.n; ++u) dist[u] = bfs_distances(g, u);
  std::optional<Int> val;
  long count = 0;
  for (int x = 0; x < g.n; ++x) {
    for (int y = x + 1; y < g.n; ++y) {
      if (!g.edge(x, y)) continue;
      for (int z = 0; z < g.n; ++z) {
        if (z == x || z == y) continue;
        if (dist[x][z] != 2 || dist[y][z] != 2) continue;
        int c = 0;
        for (int w = 0; w < g.words; ++w)
          c += std::popcount(g.bits[static_cast<size_t>(x) * g.words + w] &
                             g.bits[static_cast<size_t>(y) * g.words + w] &
                             g.bits[static_cast<size_t>(z) * g.words + w]);
        if (!val)
          val = Int(c);
        else if (*val != c)
          return std::nullopt;
        if (++count >= samples) return val;
      }
    }
  }
  return val;
}

// ------------------------------------------------ exact matrix arithmetic

namespace {

struct IMat {
  int n = 0;
  std::vector<Int> a;

  static IMat zero(int n) {
    IMat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, Int(0));
    return m;
  }
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }
  bool is_zero() const {
    for (const Int& x : a)
      if (x != 0) return false;
    return true;
  }
};

// M <- M * (A - lam I), using neighbour sums instead of a full product.
void mul_shifted_adjacency(IMat& m, const Graph& g, const Int& lam) {
  IMat c = IMat::zero(m.n);
  std::vector<std::vector<int>> nb(g.n);
  for (int v = 0; v < g.n; ++v) nb[v] = g.neighbors(v);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      Int s = 0;
      for (int t : nb[j]) s += m.at(i, t);
      s -= lam * m.at(i, j);
      c.at(i, j) = s;
    }
  }
  m = std::move(c);
}

IMat shifted_adjacency(const Graph& g, const Int& lam) {
  IMat m = IMat::zero(g.n);
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.neighbors(u)) m.at(u, v) = 1;
    m.at(u, u) -= lam;
  }
  return m;
}

int bareiss_rank(IMat m) {
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < m.n && rank < m.n; ++col) {
    int piv = -1;
    for (int i = rank; i < m.n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    for (int i = rank + 1; i < m.n; ++i) {
      for (int j = col + 1; j < m.n; ++j) {
        Int t = m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j);
        if (!divides(prev, t))
          throw DomainError("fraction-free elimination lost exactness");
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Int> adjacency_power_traces(const Graph& g, int jmax) {
  if (jmax < 0) throw DomainError("negative power");
  std::vector<Int> out;
  IMat p = IMat::zero(g.n);
  for (int i = 0; i < g.n; ++i) p.at(i, i) = 1;
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) mul_shifted_adjacency(p, g, Int(0));
    Int tr = 0;
    for (int i = 0; i < g.n; ++i) tr += p.at(i, i);
    out.push_back(tr);
  }
  return out;
}

int eigenvalue_multiplicity(const Graph& g, const Int& lambda) {
  if (g.n == 0) return 0;
  return g.n - bareiss_rank(shifted_adjacency(g, lambda));
}

Spectrum extract_spectrum(const Graph& g) {
  if (g.n == 0) return make_spectrum({});
  Int hi = g.max_degree();
  std::vector<SpectrumEntry> found;
  Int total = 0;
  for (Int lam = hi; lam >= -hi; --lam) {
    int mult = eigenvalue_multiplicity(g, lam);
    if (mult > 0) {
      found.push_back({Rat(lam), Int(mult)});
      total += mult;
    }
  }
  if (total != g.n)
    throw IrrationalSpectrum("integer eigenspaces cover only " + str(total) +
                             " of " + std::to_string(g.n) + " dimensions");
  return make_spectrum(std::move(found));
}

bool verify_spectrum(const Graph& g, const Spectrum& claimed) {
  if (g.n == 0) return claimed.entries.empty();
  if (claimed.entries.empty() || claimed.order() != g.n) return false;
  for (const SpectrumEntry& e : claimed.entries)
    if (!is_integer(e.value)) return false;  // monic integer charpoly

  // annihilation: prod (A - lam I) over the claimed eigenvalues must vanish
  IMat m = shifted_adjacency(g, to_int(claimed.entries[0].value));
  for (size_t i = 1; i < claimed.entries.size(); ++i)
    mul_shifted_adjacency(m, g, to_int(claimed.entries[i].value));
  if (!m.is_zero()) return false;

  // multiplicities: power sums up to the number of distinct eigenvalues
  // (Vandermonde system has a unique solution)
  int d = static_cast<int>(claimed.entries.size()) - 1;
  std::vector<Int> tr = adjacency_power_traces(g, d);
  for (int j = 0; j <= d; ++j) {
    Rat lhs = 0;
    for (const SpectrumEntry& e : claimed.entries) {
      Rat pw = 1;
      for (int t = 0; t < j; ++t) pw *= e.value;
      lhs += Rat(e.mult) * pw;
    }
    if (lhs != Rat(tr[j])) return false;
  }
  return true;
}

}  // namespace at4
