#pragma once

#include <array>
#include <optional>
#include <vector>

#include "at4/core.hpp"

namespace at4 {

// Everything in this header concerns the second subconstituent of an
// antipodal 2-cover, so operations reject r != 2 with DomainError.

// Power sums of the adjacency spectrum of the second subconstituent:
//   t0 = k2, t1 = 0, t2 = a2 k2, t3 = a2 k2 (a1 - 2 alpha).
struct TraceVector {
  Rat t0, t1, t2, t3;

  bool operator==(const TraceVector&) const = default;
};
TraceVector delta2_traces(const Params& pr);

// Six (eigenvalue, multiplicity) slots in fixed order:
//   values  pq^2, pq, p+q-q^2,  p,  -q, -q^2
//   mults      1, l1,      l2, m1,  m2,  m3.
// Slots may carry zero multiplicity (dropped by to_spectrum) and two slots
// can collide in value when p = q(q-2) (merged by to_spectrum).
struct Delta2Spectrum {
  std::array<Int, 6> value;
  std::array<Rat, 6> mult;

  bool integral() const;
  bool nonnegative() const;
  Rat total() const;          // equals k2
  Spectrum to_spectrum() const;
};
Delta2Spectrum delta2_spectrum(const Params& pr);

// Alternative closed form for the least-eigenvalue multiplicity m3; must
// agree with delta2_spectrum(pr).mult[5] identically.
Rat delta2_m3_alternative(const Params& pr);

// Populated exactly when p = q^3 - 2q: the second subconstituent is itself
// an antipodal tight candidate with the induced parameters and array.
struct Delta2Tightness {
  Params induced;           // (q^3 - q^2 - q, q, 2)
  IntersectionArray array;  // {q^3(q^2-2), (q-1)^3(q+1)^2, q^3(q-1)/2, 1; ...}

  bool operator==(const Delta2Tightness&) const = default;
};
std::optional<Delta2Tightness> delta2_tightness(const Params& pr);

// Dense polynomials with exact coefficients, ascending degree.
using Poly = std::vector<Rat>;

Rat poly_eval(const Poly& f, const Rat& x);

// <f,g> = (1/n) sum_i m_i f(lam_i) g(lam_i) over the spectrum's point masses.
Rat spectrum_inner(const Spectrum& s, const Poly& f, const Poly& g);

// Orthogonal basis p_0..p_d for the spectrum's inner product, normalised so
// that <p_i, p_i> = p_i(lam_0). Requires 1..5 distinct eigenvalues with
// positive multiplicities; throws DomainError beyond degree 4.
std::vector<Poly> predistance_polynomials(const Spectrum& s);

// p_d(lam_0) for a spectrum with exactly five distinct eigenvalues. Equals
// the number of diameter-distance neighbours when the spectrum comes from a
// distance-regular graph; equals 1 exactly on the tight second-subconstituent
// spectra handled here.
Rat spectral_excess_value(const Spectrum& s);

}  // namespace at4
