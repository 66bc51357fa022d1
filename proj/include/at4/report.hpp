#pragma once

#include <optional>
#include <string>
#include <vector>

#include "at4/feasibility.hpp"
#include "at4/oracles.hpp"

namespace at4 {

inline constexpr const char* kToolName = "at4feas";
inline constexpr const char* kVersion = "0.1.0";

enum class Format { table, json, csv };
std::optional<Format> parse_format(const std::string& name);

struct EnumerationRequest {
  Int qmin, qmax;
  std::optional<Int> pmax;                 // default per q: q^3 - 2q
  bool use_registry = true;
  std::vector<std::string> gate_prefixes;  // empty: all gates
};

struct EnumerationResult {
  EnumerationRequest request;
  std::vector<FeasibilityReport> survivors;  // (q,p,r) lexicographic
  long visited = 0;
  long n_exists = 0, n_open = 0, n_infeasible = 0, n_nonexistent = 0;
};

// Grid: q in [qmin,qmax], p in [1,pmax], r over the divisors >= 2 of p+q.
// Every candidate is visited exactly once and fully gated.
EnumerationResult run_enumeration(const EnumerationRequest& req,
                                  const Registry* reg);

// Scan of the equality-case divisibility (q+r) | r(r-2)(r-1)^2(r^2-r-1) for
// fixed r > 2, with p = (q^3 - rq)/(r-1) at the bound.
struct Lem1Row {
  Int q;
  Rat p;
  bool p_integral = false;
  std::optional<FeasibilityReport> report;  // present when p is integral
};
std::vector<Lem1Row> lem1_scan(const Int& r, const Registry* reg);

// The summary table of known and open parameter sets below 4096 vertices.
struct Table1Row {
  std::string id;     // "A1".."A10", "B1".."B13"
  Params params;
  std::string name;   // known graph name, or empty
  std::string status; // "exists" / "exists (unique)" / "open" / "does not exist"
  std::string mu_annotation;
  Int k;              // computed
  Rat alpha_value;    // computed
  Rat c2;             // computed
};
std::vector<Table1Row> table1_rows();

// Renderers: deterministic, no timestamps, byte-identical across runs.
std::string render_reports(const std::string& command,
                           const std::vector<FeasibilityReport>& reports,
                           bool used_registry, Format f);
std::string render_enumeration(const EnumerationResult& res, Format f);
std::string render_table1(const std::vector<Table1Row>& rows, Format f);
std::string render_lem1(const Int& r, const std::vector<Lem1Row>& rows,
                        Format f);
std::string render_oracle(const OracleRun& run, Format f);

// Full command-line driver. Returns the process exit code and fills `out`:
//   0 = ran to completion, 1 = oracle verification failure, 2 = bad input.
int cli_main(const std::vector<std::string>& args, std::string& out);

}  // namespace at4
