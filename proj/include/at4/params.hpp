#pragma once

#include "at4/rational.hpp"

namespace at4 {

// Parameter triple (p, q, r) of an antipodal tight diameter-4 candidate:
// local graphs are strongly regular with nontrivial eigenvalues p and -q,
// and r is the size of the antipodal classes.
struct Params {
  Int p, q, r;

  bool operator==(const Params&) const = default;
};

// Domain: p >= 1, q >= 2, r >= 2. Throws DomainError otherwise.
Params make_params(const Int& p, const Int& q, const Int& r);

}  // namespace at4
