#pragma once

#include <optional>
#include <string>
#include <vector>

#include "at4/core.hpp"
#include "at4/registry.hpp"
#include "at4/subconstituent2.hpp"

namespace at4 {

// One gate outcome. Informational conditions never reject; inapplicable
// conditions (wrong r, no equality, ...) pass vacuously and render as "na".
struct ConditionResult {
  std::string id;       // stable identifier, e.g. "L2.3.iv.1a"
  bool passed = true;
  bool applicable = true;
  bool informational = false;
  std::string witness;  // the numbers behind the verdict
  std::string anchor;   // statement the condition implements

  bool failed() const { return applicable && !informational && !passed; }
};

// Canonical condition order used everywhere (reports, CSV columns).
const std::vector<std::string>& condition_id_catalog();

enum class CaseKind { conway_smith, q_minus_2_family, qs_family, generic, none };
std::string str(CaseKind c);

// Strongly regular parameter quadruple; all entries exact (integrality gated).
struct SrgParams {
  Rat n;
  Int k;
  Rat lambda, mu;

  bool operator==(const SrgParams&) const = default;
};

// Consequence of equality in the antipodal-class bound r = (p+q^3)/(p+q):
// each mu-graph is strongly regular with the data below.
struct MuEqualityData {
  SrgParams srg;    // (q(p+q)/r, p, (q-1)(q-2)+2(p-1)/(q+1), (p+q^3)/(q+1))
  Rat eig_mid;      // (p-q^2)/(1+q)
  Int eig_least;    // -q
  Rat mult_mid;     // p(q-1)(q+1)^2/(p+q^3)
  Rat mult_least;   // pq(1+p+q-q^2)/(p+q^3)

  bool integral() const;
  Spectrum to_spectrum() const;  // requires integral(); zero mults dropped
};

enum class Status { known_exists, open, infeasible, known_nonexistent };
std::string str(Status s);

struct FeasibilityReport {
  Params params;
  Status status = Status::open;
  CaseKind case_kind = CaseKind::none;
  bool krein_zero = false;        // p = q-2
  bool bound_equality = false;    // r(p+q) = p+q^3
  std::string registry_name;      // known graph name, if any
  std::string registry_source;    // nonexistence provenance, if any
  std::vector<ConditionResult> conditions;
  std::optional<MuEqualityData> mu_equality;
  std::optional<QuotientSpectrum> global_spec;  // absent if array non-integral
  std::optional<Delta2Spectrum> delta2;         // r = 2 only

  bool surviving() const {
    return status == Status::known_exists || status == Status::open;
  }
  const ConditionResult* find(const std::string& id) const;
  std::vector<std::string> failing_ids() const;
};

struct CheckOptions {
  const Registry* registry = nullptr;      // null: computed conditions only
  std::vector<std::string> gate_prefixes;  // empty: run all conditions
  const Spectrum* mu_candidate = nullptr;  // screen an imported mu-graph
  std::string mu_candidate_label;
};

// Individual gates. Each is pure; feasibility_report composes all of them.
ConditionResult check_parity(const Params& pr);          // c2 * c' even
ConditionResult check_tight_bound(const Params& pr);     // r(p+q) <= p+q^3
ConditionResult check_p_bound(const Params& pr);         // p <= q^3-2q
ConditionResult check_equality_divisibility(const Params& pr);
CaseKind classify_case(const Params& pr);
std::optional<MuEqualityData> mu_srg_at_equality(const Params& pr);
ConditionResult check_mu_complete_multipartite(const Params& pr);
ConditionResult check_mu_candidate(const Params& pr, const Spectrum& s);
std::vector<ConditionResult> check_basic(const Params& pr);

// True when every computed (non-registry) condition passes; used by the
// second-subconstituent descent chain.
bool computed_gates_pass(const Params& pr);

FeasibilityReport feasibility_report(const Params& pr,
                                     const CheckOptions& opt = {});

}  // namespace at4
