#include "at4/subconstituent2.hpp"

#include <sstream>

namespace at4 {

namespace {
void require_r2(const Params& pr) {
  if (pr.r != 2)
    throw DomainError("second-subconstituent spectra need r = 2, got r = " +
                      str(pr.r));
}
}  // namespace

TraceVector delta2_traces(const Params& pr) {
  require_r2(pr);
  std::array<Rat, 5> ks = subconstituent_sizes(pr);
  Rat k2 = ks[2];
  Int a1 = pr.p * (pr.q + 1);
  Int a2 = pr.p * pr.q * pr.q;
  Rat h = Rat(a1) - Rat(pr.r) * alpha(pr);  // equals q(p-1)
  TraceVector t;
  t.t0 = k2;
  t.t1 = 0;
  t.t2 = Rat(a2) * k2;
  t.t3 = Rat(a2) * k2 * h;
  return t;
}

bool Delta2Spectrum::integral() const {
  for (const Rat& m : mult)
    if (!is_integer(m)) return false;
  return true;
}

bool Delta2Spectrum::nonnegative() const {
  for (const Rat& m : mult)
    if (m < 0) return false;
  return true;
}

Rat Delta2Spectrum::total() const {
  Rat t = 0;
  for (const Rat& m : mult) t += m;
  return t;
}

Spectrum Delta2Spectrum::to_spectrum() const {
  if (!integral()) throw DomainError("multiplicities not integral");
  std::vector<SpectrumEntry> es;
  for (int i = 0; i < 6; ++i) es.push_back({Rat(value[i]), to_int(mult[i])});
  return make_spectrum_sorted(std::move(es));
}

Delta2Spectrum delta2_spectrum(const Params& pr) {
  require_r2(pr);
  const Int &p = pr.p, &q = pr.q;
  Int s = p * q + p + q;
  LocalGraphData loc = local_graph_data(pr);
  Delta2Spectrum d;
  d.value = {p * q * q, p * q, p + q - q * q, p, -q, -q * q};
  d.mult[0] = 1;
  d.mult[1] = loc.mult_p;
  d.mult[2] = loc.mult_neg_q;
  d.mult[3] = rat(-q * (p + 1) * (p - q * q * q + 2 * q) * s,
                  (p + q) * (p + q * q));
  d.mult[4] = Rat(p) * loc.mult_p;
  d.mult[5] =
      rat(p * (p - q + 2) * (q * q - 1) * s, (p + q) * (p + q * q));
  return d;
}

Rat delta2_m3_alternative(const Params& pr) {
  require_r2(pr);
  const Int &p = pr.p, &q = pr.q;
  Int w = q * q - 1;
  Rat first = Rat(w * (p * q + p - q * q * q - 3 * q * q + q + 2));
  Rat second = rat(2 * q * q * w, p + q);
  Rat third = rat(q * q * w * (q * q + q - 1) * (q + 2), p + q * q);
  return first - second + third;
}

std::optional<Delta2Tightness> delta2_tightness(const Params& pr) {
  require_r2(pr);
  const Int& q = pr.q;
  if (pr.p != q * q * q - 2 * q) return std::nullopt;
  Delta2Tightness out;
  out.induced = make_params(q * q * q - q * q - q, q, Int(2));
  Int k = q * q * q * (q * q - 2);
  Int b1 = (q - 1) * (q - 1) * (q - 1) * (q + 1) * (q + 1);
  Rat c2 = rat(q * q * q * (q - 1), 2);
  out.array = make_array({Rat(k), Rat(b1), c2, Rat(1)},
                         {Rat(1), c2, Rat(b1), Rat(k)});
  return out;
}

// --------------------------------------------------- predistance machinery

Rat poly_eval(const Poly& f, const Rat& x) {
  Rat acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

Rat spectrum_inner(const Spectrum& s, const Poly& f, const Poly& g) {
  Rat acc = 0;
  for (const auto& e : s.entries)
    acc += Rat(e.mult) * poly_eval(f, e.value) * poly_eval(g, e.value);
  return acc / Rat(s.order());
}

std::vector<Poly> predistance_polynomials(const Spectrum& s) {
  size_t d1 = s.distinct();
  if (d1 < 1 || d1 > 5)
    throw DomainError("need between 1 and 5 distinct eigenvalues, got " +
                      std::to_string(d1));
  // Gram-Schmidt over monomials, then scale so <p_i, p_i> = p_i(top).
  std::vector<Poly> q(d1);
  std::vector<Rat> norms(d1);
  for (size_t i = 0; i < d1; ++i) {
    Poly mono(i + 1, Rat(0));
    mono[i] = 1;
    q[i] = mono;
    for (size_t j = 0; j < i; ++j) {
      Rat coef = spectrum_inner(s, mono, q[j]) / norms[j];
      for (size_t t = 0; t < q[j].size(); ++t) q[i][t] -= coef * q[j][t];
    }
    norms[i] = spectrum_inner(s, q[i], q[i]);
    if (norms[i] == 0) throw DomainError("degenerate inner product");
  }
  std::vector<Poly> p(d1);
  for (size_t i = 0; i < d1; ++i) {
    Rat at_top = poly_eval(q[i], s.top());
    if (at_top == 0)
      throw DomainError("orthogonal polynomial vanishes at the top eigenvalue");
    Rat scale = at_top / norms[i];
    p[i] = q[i];
    for (Rat& c : p[i]) c *= scale;
  }
  return p;
}

Rat spectral_excess_value(const Spectrum& s) {
  if (s.distinct() != 5)
    throw DomainError("spectral excess check needs exactly 5 distinct "
                      "eigenvalues, got " +
                      std::to_string(s.distinct()));
  std::vector<Poly> p = predistance_polynomials(s);
  return poly_eval(p[4], s.top());
}

}  // namespace at4
