#pragma once

#include <gmpxx.h>

#include <string>

namespace at4 {

// Exact scalars. Int is an arbitrary-precision integer, Rat a rational kept
// in lowest terms. All feasibility logic runs in these types; divisibility
// and integrality are decided exactly, never via floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(const Int& num, const Int& den) {
  Rat x(num, den);
  x.canonicalize();
  return x;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

// Requires is_integer(x).
inline Int to_int(const Rat& x) { return x.get_num(); }

inline bool is_even(const Int& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

inline bool divides(const Int& d, const Int& x) {
  return d != 0 && mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string str(const Int& x) { return x.get_str(); }
inline std::string str(const Rat& x) { return x.get_str(); }

}  // namespace at4
