#pragma once

#include <string>
#include <vector>

#include "at4/graph.hpp"
#include "at4/params.hpp"

namespace at4 {

// The two concrete witnesses used to pin every formula in the library:
// J(8,4) realises (p,q,r) = (2,2,2) and the halved 8-cube realises (4,2,2).

// Vertices: 4-subsets of an 8-set (labels are bit masks), adjacent when the
// intersection has size 3.
Graph build_johnson_8_4();

// Vertices: even-weight bytes, adjacent at Hamming distance 2.
Graph build_halved_cube_8();

struct OracleCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct OracleRun {
  std::string oracle;  // "j84" or "halved8cube"
  Params params;
  std::vector<OracleCheck> checks;

  bool all_passed() const;
};

// Exhaustive invariant suite tying one oracle graph to the closed-form side:
// intersection array, subconstituent sizes, antipodal classes, global and
// local spectra, mu-graphs, unions of mu-graphs over antipodal classes,
// triple counts, the tight identity, and the second subconstituent.
OracleRun run_oracle_suite(const std::string& name);  // DomainError on name

}  // namespace at4
