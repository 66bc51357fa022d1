// Acceptance battery: ten end-to-end criteria, one verdict line each.
// Exit code 0 only if every criterion holds.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "at4/feasibility.hpp"
#include "at4/oracles.hpp"
#include "at4/report.hpp"

using namespace at4;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& label,
               const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::ostringstream line;
  line << (o.ok ? "[PASS]" : "[FAIL]") << " C" << n << ": " << label;
  if (!o.detail.empty()) line << " (" << o.detail << ")";
  line << "\n";
  std::fputs(line.str().c_str(), stdout);
  if (!o.ok) ++failures;
}

Outcome fail(const std::string& detail) { return {false, detail}; }

const OracleCheck* find_check(const OracleRun& run, const std::string& name) {
  for (const OracleCheck& c : run.checks)
    if (c.name == name) return &c;
  return nullptr;
}

Spectrum spec(std::vector<std::pair<int, int>> vm) {
  std::vector<SpectrumEntry> e;
  for (auto& [v, m] : vm) e.push_back({Rat(v), Int(m)});
  return make_spectrum(e);
}

std::set<std::array<long, 3>> survivor_set(const EnumerationResult& res) {
  std::set<std::array<long, 3>> out;
  for (const FeasibilityReport& rep : res.survivors)
    out.insert({rep.params.p.get_si(), rep.params.q.get_si(),
                rep.params.r.get_si()});
  return out;
}

struct FrozenRow {
  const char* id;
  int p, q, r;
  long k;
  long alpha_num;
  long c2;
  const char* status;
};

// The 23-row summary table, frozen independently of the library formulas.
const FrozenRow kTable[] = {
    {"A1", 1, 2, 3, 10, 1, 2, "exists (unique)"},
    {"A2", 2, 2, 2, 16, 2, 4, "exists (unique)"},
    {"A3", 4, 2, 2, 28, 3, 6, "exists (unique)"},
    {"A4", 3, 3, 3, 45, 2, 6, "exists (unique)"},
    {"A5", 2, 4, 3, 56, 2, 8, "exists (unique)"},
    {"A6", 9, 3, 3, 117, 4, 12, "exists (unique)"},
    {"A7", 8, 4, 2, 176, 6, 24, "exists"},
    {"A8", 8, 4, 4, 176, 3, 12, "exists (unique)"},
    {"A9", 20, 4, 3, 416, 8, 32, "exists"},
    {"A10", 351, 9, 3, 31671, 120, 1080, "exists"},
    {"B1", 4, 4, 2, 96, 4, 16, "open"},
    {"B2", 3, 5, 2, 115, 4, 20, "does not exist"},
    {"B3", 3, 5, 4, 115, 2, 10, "open"},
    {"B4", 9, 3, 2, 117, 6, 18, "open"},
    {"B5", 8, 4, 3, 176, 4, 16, "open"},
    {"B6", 4, 6, 2, 204, 5, 30, "does not exist"},
    {"B7", 4, 6, 5, 204, 2, 12, "open"},
    {"B8", 21, 3, 2, 261, 12, 36, "does not exist"},
    {"B9", 6, 6, 2, 288, 6, 36, "open"},
    {"B10", 6, 6, 3, 288, 4, 24, "open"},
    {"B11", 5, 7, 2, 329, 6, 42, "does not exist"},
    {"B12", 16, 4, 2, 336, 10, 40, "open"},
    {"B13", 20, 4, 2, 416, 12, 48, "open"},
};

}  // namespace

int main() {
  std::optional<OracleRun> j84, h8;
  std::string oracle_error;
  try {
    j84 = run_oracle_suite("j84");
    h8 = run_oracle_suite("halved8cube");
  } catch (const std::exception& e) {
    oracle_error = e.what();
  }

  Registry reg = builtin_registry();
  CheckOptions with_reg{.registry = &reg};

  criterion(1, "summary table: all 23 rows carry the frozen exact data", [&] {
    std::vector<Table1Row> rows = table1_rows();
    if (rows.size() != 23) return fail("row count");
    for (size_t i = 0; i < rows.size(); ++i) {
      const FrozenRow& f = kTable[i];
      const Table1Row& t = rows[i];
      if (t.id != f.id) return fail(std::string("id at ") + f.id);
      if (t.params != make_params(f.p, f.q, f.r))
        return fail(std::string("params at ") + f.id);
      if (t.k != f.k || t.alpha_value != f.alpha_num || t.c2 != f.c2)
        return fail(std::string("k/alpha/c2 at ") + f.id);
      if (t.status != f.status) return fail(std::string("status at ") + f.id);
      if (t.id[0] == 'A' && t.name.empty())
        return fail(std::string("missing name at ") + f.id);
      if (t.mu_annotation.empty())
        return fail(std::string("missing mu annotation at ") + f.id);
      // The feasibility verdict must agree with the table status.
      Status s = feasibility_report(t.params, with_reg).status;
      Status want = t.id[0] == 'A' ? Status::known_exists
                    : t.status == std::string("does not exist")
                        ? Status::known_nonexistent
                        : Status::open;
      if (s != want) return fail(std::string("verdict at ") + f.id);
    }
    return Outcome{};
  });

  criterion(2, "Johnson graph J(8,4) realises every closed form for (2,2,2)",
            [&] {
              if (!j84) return fail(oracle_error);
              if (!j84->all_passed()) {
                for (const OracleCheck& c : j84->checks)
                  if (!c.passed) return fail(c.name + ": " + c.detail);
              }
              const OracleCheck* mu = find_check(*j84, "mu-graphs");
              if (!mu || mu->detail.find("K_{2 x 2}") == std::string::npos)
                return fail("mu-graphs not identified as K_{2 x 2}");
              return Outcome{};
            });

  criterion(
      3,
      "second subconstituent of the halved 8-cube is the (2,2,2) 2-cover",
      [&] {
        if (!h8) return fail(oracle_error);
        const OracleCheck* d = find_check(*h8, "delta2-descent");
        if (!d || !d->passed) return fail(d ? d->detail : "check missing");
        auto t = delta2_tightness(make_params(4, 2, 2));
        if (!t) return fail("no induced parameters at p = q^3 - 2q");
        if (!(t->induced == make_params(2, 2, 2)))
          return fail("induced parameters");
        if (!(t->array == make_array({Rat(16), Rat(9), Rat(4), Rat(1)},
                                     {Rat(1), Rat(4), Rat(9), Rat(16)})))
          return fail("induced array");
        const OracleCheck* s = find_check(*h8, "delta2-spectrum");
        if (!s || !s->passed) return fail("delta2-spectrum");
        return Outcome{};
      });

  criterion(
      4, "second-subconstituent power sums match the spectrum, q = 2..6",
      [&] {
        for (int q = 2; q <= 6; ++q) {
          long pmax = static_cast<long>(q) * q * q - 2 * q;
          for (long p = 1; p <= pmax; ++p) {
            Params pr = make_params(p, q, 2);
            Delta2Spectrum d = delta2_spectrum(pr);
            TraceVector t = delta2_traces(pr);
            Rat s0 = 0, s1 = 0, s2 = 0, s3 = 0;
            for (int i = 0; i < 6; ++i) {
              Rat v(d.value[i]);
              s0 += d.mult[i];
              s1 += d.mult[i] * v;
              s2 += d.mult[i] * v * v;
              s3 += d.mult[i] * v * v * v;
            }
            if (s0 != t.t0 || s1 != t.t1 || s2 != t.t2 || s3 != t.t3) {
              std::ostringstream w;
              w << "mismatch at (" << p << "," << q << ",2)";
              return fail(w.str());
            }
          }
        }
        if (!j84) return fail(oracle_error);
        Graph d2 = second_subconstituent(build_johnson_8_4(), 0);
        if (!(extract_spectrum(d2) ==
              delta2_spectrum(make_params(2, 2, 2)).to_spectrum()))
          return fail("measured second-subconstituent spectrum of J(8,4)");
        return Outcome{};
      });

  criterion(5, "spectral excess is 1 on the tight spectra, q = 2..5", [&] {
    for (int q : {2, 3, 4, 5}) {
      Params pr = make_params(static_cast<long>(q) * q * q - 2 * q, q, 2);
      Spectrum s = delta2_spectrum(pr).to_spectrum();
      if (s.distinct() != 5) return fail("slot count at q");
      if (spectral_excess_value(s) != 1) {
        std::ostringstream w;
        w << "excess != 1 at q = " << q;
        return fail(w.str());
      }
    }
    return Outcome{};
  });

  criterion(6, "(351,9,3) forces srg(1080,351,126,108) mu-graphs", [&] {
    auto eq = mu_srg_at_equality(make_params(351, 9, 3));
    if (!eq) return fail("no equality data");
    if (!(eq->srg == SrgParams{Rat(1080), Int(351), Rat(126), Rat(108)}))
      return fail("srg parameters");
    if (!eq->integral()) return fail("multiplicities not integral");
    if (!(eq->to_spectrum() == spec({{351, 1}, {27, 260}, {-9, 819}})))
      return fail("mu-graph spectrum");
    FeasibilityReport rep = feasibility_report(make_params(351, 9, 3), with_reg);
    if (rep.status != Status::known_exists) return fail("status");
    const ConditionResult* c = rep.find("T3.2.mu.int");
    if (!c || c->failed()) return fail("srg integrality gate");
    return Outcome{};
  });

  criterion(7, "q = 3 (mod 4) family dies on parity, q in {3, 7, 11}", [&] {
    FeasibilityReport fifteen = feasibility_report(make_params(15, 3, 2));
    if (fifteen.status != Status::infeasible) return fail("(15,3,2) status");
    const ConditionResult* odd = fifteen.find("L2.3.iv.1a");
    if (!odd || !odd->failed()) return fail("(15,3,2) missing parity kill");
    if (odd->witness.find("405") == std::string::npos ||
        odd->witness.find("odd") == std::string::npos)
      return fail("(15,3,2) witness");

    FeasibilityReport b8 = feasibility_report(make_params(21, 3, 2));
    if (b8.status != Status::infeasible) return fail("(21,3,2) status");
    const ConditionResult* d = b8.find("T4.4.descend");
    if (!d || !d->failed()) return fail("(21,3,2) descent");

    for (long q : {7L, 11L}) {
      long top = q * q * q - 2 * q;
      long low = q * q * q - q * q - q;
      for (long p : {top, low}) {
        if (computed_gates_pass(make_params(p, q, 2))) {
          std::ostringstream w;
          w << "(" << p << "," << q << ",2) slipped through";
          return fail(w.str());
        }
      }
    }
    return Outcome{};
  });

  criterion(8, "enumeration survivor sets are exact for q = 2 and q = 3",
            [&] {
              EnumerationResult r2 =
                  run_enumeration({.qmin = 2, .qmax = 2}, &reg);
              if (r2.visited != 7) return fail("q = 2 visited");
              if (survivor_set(r2) != std::set<std::array<long, 3>>{
                                          {1, 2, 3}, {2, 2, 2}, {4, 2, 2}})
                return fail("q = 2 survivors");

              EnumerationResult r3 =
                  run_enumeration({.qmin = 3, .qmax = 3}, &reg);
              if (r3.visited != 58) return fail("q = 3 visited");
              if (survivor_set(r3) != std::set<std::array<long, 3>>{
                                          {3, 3, 3}, {9, 3, 2}, {9, 3, 3}})
                return fail("q = 3 survivors");

              EnumerationResult bare = run_enumeration(
                  {.qmin = 3, .qmax = 3, .use_registry = false}, &reg);
              std::set<std::array<long, 3>> w = survivor_set(r3),
                                            wo = survivor_set(bare);
              if (!std::includes(wo.begin(), wo.end(), w.begin(), w.end()))
                return fail("knowledge-free run lost a survivor");
              std::set<std::array<long, 3>> diff;
              std::set_difference(wo.begin(), wo.end(), w.begin(), w.end(),
                                  std::inserter(diff, diff.begin()));
              if (diff != std::set<std::array<long, 3>>{{6, 3, 3}})
                return fail("knowledge-free difference");
              return Outcome{};
            });

  criterion(9, "divisibility scan at r = 3 yields the eight q values", [&] {
    std::vector<Lem1Row> rows = lem1_scan(3, &reg);
    std::vector<long> qs;
    for (const Lem1Row& row : rows) {
      if (!row.p_integral) return fail("ineligible row");
      qs.push_back(row.q.get_si());
    }
    if (qs != std::vector<long>{2, 3, 7, 9, 12, 17, 27, 57})
      return fail("q list");
    if (!rows[2].report || rows[2].report->status != Status::infeasible)
      return fail("(161,7,3) verdict");
    return Outcome{};
  });

  criterion(10, "property battery: identity, orthogonality, multiplicities",
            [&] {
              for (long q = 2; q <= 8; ++q)
                for (long p = 1; p <= 60; ++p)
                  for (long r = 2; r <= p + q; ++r) {
                    if ((p + q) % r != 0) continue;
                    if (!verify_tight_identity(make_params(p, q, r))) {
                      std::ostringstream w;
                      w << "identity fails at (" << p << "," << q << "," << r
                        << ")";
                      return fail(w.str());
                    }
                  }

              std::vector<Spectrum> specs;
              specs.push_back(
                  global_multiplicities(
                      intersection_array(make_params(2, 2, 2)))
                      .to_spectrum());
              specs.push_back(
                  global_multiplicities(
                      intersection_array(make_params(4, 2, 2)))
                      .to_spectrum());
              specs.push_back(
                  global_multiplicities(
                      intersection_array(make_params(1, 2, 3)))
                      .to_spectrum());
              for (int q : {2, 3, 4, 5})
                specs.push_back(
                    delta2_spectrum(
                        make_params(static_cast<long>(q) * q * q - 2 * q, q, 2))
                        .to_spectrum());
              specs.push_back(
                  mu_srg_at_equality(make_params(351, 9, 3))->to_spectrum());
              for (const Spectrum& s : specs) {
                std::vector<Poly> ps = predistance_polynomials(s);
                for (size_t i = 0; i < ps.size(); ++i) {
                  Rat norm = spectrum_inner(s, ps[i], ps[i]);
                  if (norm != poly_eval(ps[i], s.top()) || !(norm > 0))
                    return fail("normalisation");
                  for (size_t k = 0; k < i; ++k)
                    if (spectrum_inner(s, ps[i], ps[k]) != 0)
                      return fail("orthogonality");
                }
              }

              for (const Table1Row& t : table1_rows()) {
                IntersectionArray ia = intersection_array(t.params);
                QuotientSpectrum qs =
                    global_multiplicities(ia, eigenvalues(t.params));
                if (!qs.integral() || !qs.positive() ||
                    qs.total() != ia.order())
                  return fail(std::string("global multiplicities at ") + t.id);
                if (check_tight_bound(t.params).failed())
                  return fail(std::string("class-size bound at ") + t.id);
              }

              if (!j84 || !h8) return fail(oracle_error);
              for (const OracleRun* run : {&*j84, &*h8}) {
                const OracleCheck* hu = find_check(*run, "h-unions");
                if (!hu || !hu->passed) return fail("h-unions");
              }
              return Outcome{};
            });

  return failures == 0 ? 0 : 1;
}
