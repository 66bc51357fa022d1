#pragma once

#include <array>

#include "at4/rational.hpp"

namespace at4 {

// Diameter-4 intersection array {b0,b1,b2,b3; c1,c2,c3,c4}, exact entries.
// Invariant (enforced by the factories): every b_i and c_i is positive.
struct IntersectionArray {
  std::array<Rat, 4> b;  // b0..b3
  std::array<Rat, 4> c;  // c1..c4

  Rat valency() const { return b[0]; }
  std::array<Rat, 5> a() const;  // a_i = b0 - b_i - c_i  (b4 = 0, c0 = 0)
  std::array<Rat, 5> k() const;  // k0 = 1, k_{i+1} = k_i b_i / c_{i+1}
  Rat order() const;             // sum of k_i
  bool integral() const;         // all b, c, k entries are integers

  bool operator==(const IntersectionArray&) const = default;
};

IntersectionArray make_array(const std::array<Rat, 4>& b,
                             const std::array<Rat, 4>& c);

// Antipodal diameter-4 array from (k, a1, c2, r):
//   {k, k-a1-1, (r-1)c2, 1; 1, c2, k-a1-1, k}.
// Throws DomainError when any entry fails positivity (degenerate input).
IntersectionArray antipodal_array(const Rat& k, const Rat& a1, const Rat& c2,
                                  const Int& r);

std::string str(const IntersectionArray& ia);  // "{b0,...;c1,...}"

}  // namespace at4
