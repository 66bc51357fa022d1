#include "at4/core.hpp"

#include <algorithm>
#include <sstream>

namespace at4 {

Params make_params(const Int& p, const Int& q, const Int& r) {
  if (p < 1 || q < 2 || r < 2)
    throw DomainError("need p >= 1, q >= 2, r >= 2, got (" + str(p) + "," +
                      str(q) + "," + str(r) + ")");
  return Params{p, q, r};
}

// ---------------------------------------------------------------- Spectrum

Int Spectrum::order() const {
  Int t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

Spectrum make_spectrum(std::vector<SpectrumEntry> entries) {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].mult < 1)
      throw DomainError("multiplicity < 1 for eigenvalue " +
                        str(entries[i].value));
    if (i > 0 && entries[i - 1].value == entries[i].value)
      throw DegenerateSpectrum("repeated eigenvalue " + str(entries[i].value));
    if (i > 0 && entries[i - 1].value < entries[i].value)
      throw DomainError("spectrum not strictly decreasing");
  }
  return Spectrum{std::move(entries)};
}

Spectrum make_spectrum_sorted(std::vector<SpectrumEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) {
              return x.value > y.value;
            });
  std::vector<SpectrumEntry> merged;
  for (auto& e : entries) {
    if (!merged.empty() && merged.back().value == e.value)
      merged.back().mult += e.mult;
    else
      merged.push_back(e);
  }
  std::vector<SpectrumEntry> kept;
  for (auto& e : merged) {
    if (e.mult < 0)
      throw DomainError("negative multiplicity for eigenvalue " + str(e.value));
    if (e.mult > 0) kept.push_back(e);
  }
  return Spectrum{std::move(kept)};
}

std::string str(const Spectrum& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.entries.size(); ++i) {
    if (i) os << ' ';
    const auto& e = s.entries[i];
    if (e.value < 0)
      os << '(' << str(e.value) << ')';
    else
      os << str(e.value);
    os << '^' << str(e.mult);
  }
  return os.str();
}

// ------------------------------------------------------- IntersectionArray

std::array<Rat, 5> IntersectionArray::a() const {
  const Rat& k = b[0];
  std::array<Rat, 5> out;
  out[0] = 0;
  for (int i = 1; i <= 3; ++i) out[i] = k - b[i] - c[i - 1];
  out[4] = k - c[3];
  return out;
}

std::array<Rat, 5> IntersectionArray::k() const {
  std::array<Rat, 5> out;
  out[0] = 1;
  for (int i = 0; i < 4; ++i) out[i + 1] = out[i] * b[i] / c[i];
  return out;
}

Rat IntersectionArray::order() const {
  std::array<Rat, 5> ks = k();
  Rat t = 0;
  for (const Rat& x : ks) t += x;
  return t;
}

bool IntersectionArray::integral() const {
  for (const Rat& x : b)
    if (!is_integer(x)) return false;
  for (const Rat& x : c)
    if (!is_integer(x)) return false;
  for (const Rat& x : k())
    if (!is_integer(x)) return false;
  return true;
}

IntersectionArray make_array(const std::array<Rat, 4>& b,
                             const std::array<Rat, 4>& c) {
  for (const Rat& x : b)
    if (x <= 0) throw DomainError("nonpositive b entry " + str(x));
  for (const Rat& x : c)
    if (x <= 0) throw DomainError("nonpositive c entry " + str(x));
  return IntersectionArray{b, c};
}

IntersectionArray antipodal_array(const Rat& k, const Rat& a1, const Rat& c2,
                                  const Int& r) {
  if (r < 2) throw DomainError("antipodal class size r must be >= 2");
  Rat b1 = k - a1 - 1;
  Rat b2 = Rat(r - 1) * c2;
  return make_array({k, b1, b2, Rat(1)}, {Rat(1), c2, b1, k});
}

std::string str(const IntersectionArray& ia) {
  std::ostringstream os;
  os << '{';
  for (int i = 0; i < 4; ++i) os << (i ? ", " : "") << str(ia.b[i]);
  os << "; ";
  for (int i = 0; i < 4; ++i) os << (i ? ", " : "") << str(ia.c[i]);
  os << '}';
  return os.str();
}

// ------------------------------------------------------------ closed forms

Int valency(const Params& pr) { return pr.q * (pr.p * pr.q + pr.p + pr.q); }

std::array<Int, 5> eigenvalues(const Params& pr) {
  Int s = pr.p * pr.q + pr.p + pr.q;
  Int th0 = pr.q * s;
  Int th4 = -pr.q * pr.q;
  return {th0, s, pr.p, -pr.q, th4};
}

IntersectionArray intersection_array(const Params& pr) {
  const Int &p = pr.p, &q = pr.q, &r = pr.r;
  Int k = valency(pr);
  Int b1 = (q * q - 1) * (p + 1);
  Rat c2 = rat(q * (p + q), r);
  Rat b2 = Rat(r - 1) * c2;
  return make_array({Rat(k), Rat(b1), b2, Rat(1)},
                    {Rat(1), c2, Rat(b1), Rat(k)});
}

std::array<Int, 5> intersection_numbers_a(const Params& pr) {
  Int a1 = pr.p * (pr.q + 1);
  Int a2 = pr.p * pr.q * pr.q;
  return {Int(0), a1, a2, a1, Int(0)};
}

std::array<Rat, 5> subconstituent_sizes(const Params& pr) {
  return intersection_array(pr).k();
}

Rat alpha(const Params& pr) { return rat(pr.p + pr.q, pr.r); }

LocalGraphData local_graph_data(const Params& pr) {
  const Int &p = pr.p, &q = pr.q;
  LocalGraphData d;
  d.order = valency(pr);
  d.valency = p * (q + 1);
  d.lambda = 2 * p - q;
  d.mu = p;
  Int s = p * q + p + q;
  d.mult_p = rat((q * q - 1) * s, p + q);
  d.mult_neg_q = rat(p * q * (p + 1) * (q + 1), p + q);
  return d;
}

Spectrum LocalGraphData::spectrum() const {
  if (!integral())
    throw DomainError("local multiplicities not integral");
  // mu = p and lambda = 2p-q pin the eigenvalue pair (p, -q).
  Int eig_p = mu;
  Int eig_neg_q = lambda - 2 * mu;
  return make_spectrum({{Rat(valency), Int(1)},
                        {Rat(eig_p), to_int(mult_p)},
                        {Rat(eig_neg_q), to_int(mult_neg_q)}});
}

std::pair<Rat, Rat> recover_a1_c2(const std::array<Rat, 5>& eigs,
                                  const Int& r) {
  for (int i = 1; i < 5; ++i)
    if (!(eigs[i - 1] > eigs[i]))
      throw DomainError("eigenvalues must be strictly decreasing");
  if (r < 1) throw DomainError("r must be >= 1");
  Rat a1 = eigs[1] + eigs[3];
  Rat c2 = (eigs[0] + eigs[2] * eigs[4]) / Rat(r);
  return {a1, c2};
}

bool verify_tight_identity(const Params& pr) {
  Int k = valency(pr);
  Int a1 = pr.p * (pr.q + 1);
  Int b1 = (pr.q * pr.q - 1) * (pr.p + 1);
  std::array<Int, 5> th = eigenvalues(pr);
  Rat f = rat(k, a1 + 1);
  Rat lhs = (Rat(th[1]) + f) * (Rat(th[4]) + f);
  Rat rhs = rat(-k * a1 * b1, (a1 + 1) * (a1 + 1));
  return lhs == rhs;
}

// ------------------------------------------------- quotient multiplicities

bool QuotientSpectrum::integral() const {
  for (const auto& e : entries)
    if (!is_integer(e.second)) return false;
  return true;
}

bool QuotientSpectrum::positive() const {
  for (const auto& e : entries)
    if (e.second <= 0) return false;
  return true;
}

Rat QuotientSpectrum::total() const {
  Rat t = 0;
  for (const auto& e : entries) t += e.second;
  return t;
}

Spectrum QuotientSpectrum::to_spectrum() const {
  if (!integral()) throw DomainError("multiplicities not integral");
  std::vector<SpectrumEntry> es;
  for (const auto& e : entries) es.push_back({Rat(e.first), to_int(e.second)});
  return make_spectrum(std::move(es));
}

namespace {

// Characteristic polynomial of the tridiagonal quotient matrix, monic,
// coefficients ascending. Three-term recurrence on leading principal minors.
std::vector<Rat> quotient_charpoly(const IntersectionArray& ia) {
  std::array<Rat, 5> a = ia.a();
  // off[i] = (super) b_i * (sub) c_{i+1}, the product across rows i, i+1
  std::array<Rat, 4> off;
  for (int i = 0; i < 4; ++i) off[i] = ia.b[i] * ia.c[i];

  std::vector<Rat> dm2{Rat(1)};            // D_0
  std::vector<Rat> dm1{-a[0], Rat(1)};     // D_1 = x - a_0
  for (int k = 2; k <= 5; ++k) {
    std::vector<Rat> d(dm1.size() + 1, Rat(0));
    for (size_t j = 0; j < dm1.size(); ++j) {
      d[j + 1] += dm1[j];            // x * D_{k-1}
      d[j] -= a[k - 1] * dm1[j];     // -a_{k-1} * D_{k-1}
    }
    for (size_t j = 0; j < dm2.size(); ++j) d[j] -= off[k - 2] * dm2[j];
    dm2 = std::move(dm1);
    dm1 = std::move(d);
  }
  return dm1;
}

Rat charpoly_eval(const std::vector<Rat>& f, const Rat& x) {
  Rat acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

// Divides f by (x - root) in place; remainder must vanish.
bool deflate(std::vector<Rat>& f, const Rat& root) {
  std::vector<Rat> g(f.size() - 1, Rat(0));
  Rat carry = 0;
  for (size_t i = f.size(); i-- > 1;) {
    carry = f[i] + carry * root;
    g[i - 1] = carry;
  }
  Rat rem = f[0] + carry * root;
  if (rem != 0) return false;
  f = std::move(g);
  return true;
}

QuotientSpectrum multiplicities_for_roots(const IntersectionArray& ia,
                                          const std::vector<Int>& roots) {
  std::array<Rat, 5> a = ia.a();
  std::array<Rat, 5> kv = ia.k();
  Rat n = ia.order();
  QuotientSpectrum out;
  for (const Int& th : roots) {
    // cosine sequence: u_0 = 1, u_1 = th/k, then the three-term recurrence
    std::array<Rat, 5> u;
    u[0] = 1;
    u[1] = Rat(th) / ia.b[0];
    for (int i = 1; i <= 3; ++i)
      u[i + 1] = ((Rat(th) - a[i]) * u[i] - ia.c[i - 1] * u[i - 1]) / ia.b[i];
    Rat denom = 0;
    for (int i = 0; i < 5; ++i) denom += u[i] * u[i] * kv[i];
    out.entries.emplace_back(th, n / denom);
  }
  return out;
}

}  // namespace

QuotientSpectrum global_multiplicities(const IntersectionArray& ia,
                                       const std::array<Int, 5>& roots) {
  if (!ia.integral()) throw NonIntegralArray("array " + str(ia));
  for (int i = 1; i < 5; ++i)
    if (!(roots[i - 1] > roots[i]))
      throw DomainError("candidate roots must be strictly decreasing");
  std::vector<Rat> f = quotient_charpoly(ia);
  for (const Int& th : roots)
    if (!deflate(f, Rat(th)))
      throw IrrationalSpectrum("candidate " + str(th) +
                               " is not an eigenvalue of " + str(ia));
  // monic degree 5 over five roots leaves the constant 1
  if (f.size() != 1 || f[0] != 1)
    throw IrrationalSpectrum("deflation left a nontrivial factor");
  return multiplicities_for_roots(ia, {roots.begin(), roots.end()});
}

QuotientSpectrum global_multiplicities(const IntersectionArray& ia) {
  if (!ia.integral()) throw NonIntegralArray("array " + str(ia));
  std::vector<Rat> f = quotient_charpoly(ia);
  Rat bound = ia.b[0];
  if (bound > 1000000)
    throw DomainError("hint-free eigenvalue scan capped at valency 10^6");
  std::vector<Int> roots;
  Int hi = to_int(bound);
  for (Int t = hi; t >= -hi && f.size() > 1; --t) {
    while (f.size() > 1 && charpoly_eval(f, Rat(t)) == 0) {
      roots.push_back(t);
      deflate(f, Rat(t));
    }
  }
  if (f.size() != 1)
    throw IrrationalSpectrum("characteristic polynomial of " + str(ia) +
                             " does not split over the integers");
  if (roots.size() != 5)
    throw IrrationalSpectrum("expected five integer eigenvalues");
  for (int i = 1; i < 5; ++i)
    if (roots[i - 1] == roots[i])
      throw DegenerateSpectrum("repeated quotient eigenvalue " +
                               str(roots[i]));
  return multiplicities_for_roots(ia, roots);
}

}  // namespace at4
