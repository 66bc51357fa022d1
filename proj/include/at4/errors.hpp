#pragma once

#include <stdexcept>
#include <string>

namespace at4 {

// Arguments outside an operation's stated domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// An intersection array whose entries are not all integers.
struct NonIntegralArray : std::runtime_error {
  explicit NonIntegralArray(const std::string& m) : std::runtime_error(m) {}
};

// A spectrum with repeated eigenvalues where distinct ones are required.
struct DegenerateSpectrum : std::runtime_error {
  explicit DegenerateSpectrum(const std::string& m) : std::runtime_error(m) {}
};

// A vertex pair at the wrong distance for the requested subgraph.
struct WrongDistance : std::runtime_error {
  explicit WrongDistance(const std::string& m) : std::runtime_error(m) {}
};

// A vertex set that is not an antipodal class of the expected shape.
struct BadClass : std::runtime_error {
  explicit BadClass(const std::string& m) : std::runtime_error(m) {}
};

// The distance-diameter relation is not an equivalence on this graph.
struct NotAntipodal : std::runtime_error {
  explicit NotAntipodal(const std::string& m) : std::runtime_error(m) {}
};

struct DisconnectedGraph : std::runtime_error {
  explicit DisconnectedGraph(const std::string& m) : std::runtime_error(m) {}
};

// Adjacency spectrum has eigenvalues outside the integers.
struct IrrationalSpectrum : std::runtime_error {
  explicit IrrationalSpectrum(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace at4
