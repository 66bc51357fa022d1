#pragma once

#include <array>
#include <utility>
#include <vector>

#include "at4/errors.hpp"
#include "at4/intersection_array.hpp"
#include "at4/params.hpp"
#include "at4/spectrum.hpp"

namespace at4 {

// Valency: k = q(pq+p+q).
Int valency(const Params& pr);

// The five distinct eigenvalues, strictly decreasing:
//   q(pq+p+q), pq+p+q, p, -q, -q^2.
std::array<Int, 5> eigenvalues(const Params& pr);

// {q(pq+p+q), (q^2-1)(p+1), (r-1)q(p+q)/r, 1; 1, q(p+q)/r, (q^2-1)(p+1),
//  q(pq+p+q)}. Entries are exact rationals; integrality is a gate, not an
// assumption.
IntersectionArray intersection_array(const Params& pr);

// a0 = a4 = 0, a1 = a3 = p(q+1), a2 = p q^2.
std::array<Int, 5> intersection_numbers_a(const Params& pr);

// Subconstituent sizes k_0..k_4 taken from the intersection array.
std::array<Rat, 5> subconstituent_sizes(const Params& pr);

// alpha = (p+q)/r, the common mu-graph valency parameter of the triple count.
Rat alpha(const Params& pr);

// Local graph data: strongly regular (q(pq+p+q), p(q+1), 2p-q, p) with
// spectrum {p(q+1)^1, p^l1, (-q)^l2}.
struct LocalGraphData {
  Int order;       // q(pq+p+q)
  Int valency;     // p(q+1)
  Int lambda;      // 2p-q, negative values flag an impossible local graph
  Int mu;          // p
  Rat mult_p;      // l1 = (q^2-1)(pq+p+q)/(p+q)
  Rat mult_neg_q;  // l2 = pq(p+1)(q+1)/(p+q)

  bool integral() const { return is_integer(mult_p) && is_integer(mult_neg_q); }
  Spectrum spectrum() const;  // requires integral(); throws DomainError
};
LocalGraphData local_graph_data(const Params& pr);

// Inverts the eigenvalue list: a1 = th1 + th3, c2 = (th0 + th2*th4)/r.
// Total on strictly decreasing input; no membership test is applied.
std::pair<Rat, Rat> recover_a1_c2(const std::array<Rat, 5>& eigs, const Int& r);

// The fundamental identity at diameter 4:
//   (th1 + k/(a1+1)) (th4 + k/(a1+1)) = -k a1 b1 / (a1+1)^2,
// evaluated exactly from the parameter formulas.
bool verify_tight_identity(const Params& pr);

// Eigenvalue/multiplicity pairs of a diameter-4 array. Multiplicities are
// exact rationals; the caller decides what non-integrality means.
struct QuotientSpectrum {
  std::vector<std::pair<Int, Rat>> entries;  // values strictly decreasing

  bool integral() const;
  bool positive() const;
  Rat total() const;
  Spectrum to_spectrum() const;  // requires integral(); throws DomainError
};

// Multiplicities via the standard cosine-sequence formula
//   m(th) = n / sum_i u_i(th)^2 k_i.
// Eigenvalues are the integer roots of the degree-5 characteristic polynomial
// of the tridiagonal quotient matrix; the overload with `roots` divides the
// polynomial against those candidates instead of scanning. Throws
// NonIntegralArray when the array is not integral and IrrationalSpectrum when
// the polynomial does not split over the integers.
QuotientSpectrum global_multiplicities(const IntersectionArray& ia);
QuotientSpectrum global_multiplicities(const IntersectionArray& ia,
                                       const std::array<Int, 5>& roots);

}  // namespace at4
