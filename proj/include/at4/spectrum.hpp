#pragma once

#include <vector>

#include "at4/rational.hpp"

namespace at4 {

struct SpectrumEntry {
  Rat value;
  Int mult;

  bool operator==(const SpectrumEntry&) const = default;
};

// Eigenvalues with multiplicities, strictly decreasing, every mult >= 1.
struct Spectrum {
  std::vector<SpectrumEntry> entries;

  Int order() const;  // sum of multiplicities
  int distinct() const { return static_cast<int>(entries.size()); }
  const Rat& top() const { return entries.front().value; }
  const Rat& bottom() const { return entries.back().value; }

  bool operator==(const Spectrum&) const = default;
};

// Validates the invariant as given: strictly decreasing values, mult >= 1.
// Throws DegenerateSpectrum on a repeat, DomainError on order violations.
Spectrum make_spectrum(std::vector<SpectrumEntry> entries);

// Sorts descending, merges repeated values, drops zero multiplicities.
// Throws DomainError if a (merged) multiplicity is negative.
Spectrum make_spectrum_sorted(std::vector<SpectrumEntry> entries);

std::string str(const Spectrum& s);  // e.g. "16^1 2^20 (-4)^14"

}  // namespace at4
