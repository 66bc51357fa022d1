#pragma once

#include <optional>
#include <string>
#include <vector>

#include "at4/params.hpp"

namespace at4 {

// Existence knowledge is data with provenance, never inferred from the
// computed gates. Explicit rows use the line format
//   status|p|q|r|name|source
// with status in {exists, nonexistent}. Three parameterised nonexistence
// rules travel with the registry as code: the q = 3 (mod 4) double family,
// the (q-2, q, 2) family, and the classified (qs, q, q) family.

enum class RegStatus { exists, nonexistent };

struct RegistryRow {
  RegStatus status;
  Int p, q, r;
  std::string name;    // empty for nonexistence rows
  std::string source;
};

struct RegistryHit {
  RegStatus status;
  std::string id;      // stable condition id, e.g. "g13.registry"
  std::string name;
  std::string source;
};

struct Registry {
  std::vector<RegistryRow> rows;
  bool rules_enabled = true;

  std::optional<RegistryHit> lookup_exists(const Params& pr) const;
  std::optional<RegistryHit> lookup_nonexistent(const Params& pr) const;

  std::string to_text() const;
};

// The bundled registry: the ten known graphs and the explicitly ruled-out
// open-table rows.
Registry builtin_registry();

// Parses the line format above; '#' starts a comment. Throws DomainError on
// malformed lines. The version header "at4-registry 1" is required.
Registry parse_registry(const std::string& text);

// builtin_registry(), unless the environment variable AT4_REGISTRY names a
// file, in which case that file is loaded instead.
Registry default_registry();

}  // namespace at4
