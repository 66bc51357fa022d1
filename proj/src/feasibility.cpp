#include "at4/feasibility.hpp"

#include <sstream>

namespace at4 {

namespace {

ConditionResult gate(const char* id, const char* anchor) {
  ConditionResult c;
  c.id = id;
  c.anchor = anchor;
  return c;
}

ConditionResult not_applicable(ConditionResult c, const std::string& note) {
  c.applicable = false;
  c.passed = true;
  c.witness = note;
  return c;
}

Int tight_bound_rhs(const Params& pr) { return pr.p + pr.q * pr.q * pr.q; }

bool at_equality(const Params& pr) {
  return pr.r * (pr.p + pr.q) == tight_bound_rhs(pr);
}

ConditionResult cond_tight_identity(const Params& pr) {
  ConditionResult c = gate("E1.tight", "fundamental identity at diameter 4");
  Int k = valency(pr);
  Int a1 = pr.p * (pr.q + 1);
  Int b1 = (pr.q * pr.q - 1) * (pr.p + 1);
  Rat rhs = rat(-k * a1 * b1, (a1 + 1) * (a1 + 1));
  c.passed = verify_tight_identity(pr);
  c.witness = c.passed ? "both sides equal " + str(rhs)
                       : "identity violated against " + str(rhs);
  return c;
}

ConditionResult cond_1a(const Params& pr) {
  ConditionResult c = gate("L2.3.iv.1a", "divisibility-and-parity of pq(p+q)/r");
  Rat v = rat(pr.p * pr.q * (pr.p + pr.q), pr.r);
  if (!is_integer(v)) {
    c.passed = false;
    c.witness = "pq(p+q)/r = " + str(v) + ", not an integer";
  } else if (!is_even(to_int(v))) {
    c.passed = false;
    c.witness = "pq(p+q)/r = " + str(v) + ", odd";
  } else {
    c.witness = "pq(p+q)/r = " + str(v) + ", even";
  }
  return c;
}

ConditionResult cond_1b(const Params& pr) {
  ConditionResult c = gate("L2.3.iv.1b", "class-size bound r(p+1) <= q(p+q)");
  Int lhs = pr.r * (pr.p + 1);
  Int rhs = pr.q * (pr.p + pr.q);
  c.passed = lhs <= rhs;
  c.witness = "r(p+1) = " + str(lhs) + (c.passed ? " <= " : " > ") +
              "q(p+q) = " + str(rhs);
  return c;
}

ConditionResult cond_1c(const Params& pr) {
  ConditionResult c = gate("L2.3.iv.1c", "r divides p+q");
  Int s = pr.p + pr.q;
  c.passed = divides(pr.r, s);
  c.witness = "r = " + str(pr.r) +
              (c.passed ? " divides p+q = " : " does not divide p+q = ") +
              str(s);
  return c;
}

ConditionResult cond_2(const Params& pr) {
  ConditionResult c = gate("L2.3.iv.2", "Krein condition p >= q-2");
  Int rhs = pr.q - 2;
  c.passed = pr.p >= rhs;
  c.witness = "p = " + str(pr.p) + (c.passed ? " >= " : " < ") +
              "q-2 = " + str(rhs);
  return c;
}

ConditionResult cond_krein0(const Params& pr) {
  ConditionResult c = gate("L2.3.iv.2.krein0", "vanishing Krein parameter");
  c.informational = true;
  if (pr.p == pr.q - 2)
    c.witness = "p = q-2, the top Krein parameter vanishes";
  else if (pr.p > pr.q - 2)
    c.witness = "p > q-2, top Krein parameter positive";
  else
    c.witness = "p < q-2";
  return c;
}

ConditionResult cond_3a(const Params& pr) {
  ConditionResult c = gate("L2.3.iv.3a", "(p+q) divides q^2(q^2-1)");
  Int d = pr.p + pr.q;
  Int v = pr.q * pr.q * (pr.q * pr.q - 1);
  c.passed = divides(d, v);
  c.witness = "p+q = " + str(d) +
              (c.passed ? " divides q^2(q^2-1) = " : " does not divide q^2(q^2-1) = ") +
              str(v);
  return c;
}

ConditionResult cond_3b(const Params& pr) {
  ConditionResult c =
      gate("L2.3.iv.3b", "(p+q^2) divides q^2(q^2-1)(q^2+q-1)(q+2)");
  Int d = pr.p + pr.q * pr.q;
  Int w = pr.q * pr.q - 1;
  Int v = pr.q * pr.q * w * (pr.q * pr.q + pr.q - 1) * (pr.q + 2);
  c.passed = divides(d, v);
  c.witness = "p+q^2 = " + str(d) + (c.passed ? " divides " : " does not divide ") +
              "q^2(q^2-1)(q^2+q-1)(q+2) = " + str(v);
  return c;
}

ConditionResult cond_local(const Params& pr) {
  ConditionResult c = gate("L2.3.ii.local", "local graph parameter lambda >= 0");
  Int lambda = 2 * pr.p - pr.q;
  c.passed = lambda >= 0;
  c.witness = "local lambda = 2p-q = " + str(lambda) +
              (c.passed ? " >= 0" : " < 0");
  return c;
}

ConditionResult cond_int_c2(const Params& pr) {
  ConditionResult c = gate("int.c2", "integrality of c2 = q(p+q)/r");
  Rat v = rat(pr.q * (pr.p + pr.q), pr.r);
  c.passed = is_integer(v);
  c.witness = "c2 = " + str(v) + (c.passed ? "" : ", not an integer");
  return c;
}

ConditionResult cond_int_ell1(const Params& pr) {
  ConditionResult c = gate("int.ell1", "integrality of the local multiplicity l1");
  Rat v = local_graph_data(pr).mult_p;
  c.passed = is_integer(v);
  c.witness = "l1 = " + str(v) + (c.passed ? "" : ", not an integer");
  return c;
}

ConditionResult cond_int_ell2(const Params& pr) {
  ConditionResult c = gate("int.ell2", "integrality of the local multiplicity l2");
  Rat v = local_graph_data(pr).mult_neg_q;
  c.passed = is_integer(v);
  c.witness = "l2 = " + str(v) + (c.passed ? "" : ", not an integer");
  return c;
}

ConditionResult cond_int_alpha(const Params& pr) {
  ConditionResult c = gate("int.alpha", "integrality of alpha = (p+q)/r");
  Rat v = alpha(pr);
  c.passed = is_integer(v);
  c.witness = "alpha = " + str(v) + (c.passed ? "" : ", not an integer");
  return c;
}

ConditionResult cond_int_array(const Params& pr) {
  ConditionResult c = gate("int.array", "integrality of the intersection array");
  IntersectionArray ia = intersection_array(pr);
  c.passed = ia.integral();
  c.witness = "array " + str(ia) +
              (c.passed ? ", integral" : ", has non-integer entries");
  return c;
}

ConditionResult cond_mult_global(const Params& pr) {
  ConditionResult c =
      gate("mult.global", "integrality of the five global multiplicities");
  IntersectionArray ia = intersection_array(pr);
  if (!ia.integral())
    return not_applicable(std::move(c), "array not integral; no multiplicities");
  QuotientSpectrum qs = global_multiplicities(ia, eigenvalues(pr));
  std::ostringstream w;
  bool ok = true;
  for (const auto& e : qs.entries) {
    if (!is_integer(e.second) || e.second <= 0) {
      ok = false;
      w.str("");
      w << "m(" << str(e.first) << ") = " << str(e.second)
        << " is not a positive integer";
      break;
    }
  }
  if (ok) {
    w << "multiplicities";
    for (const auto& e : qs.entries) w << ' ' << str(e.second);
    Rat total = qs.total();
    w << " sum to " << str(total);
  }
  c.passed = ok;
  c.witness = w.str();
  return c;
}

std::string case_witness(const Params& pr, CaseKind kind) {
  switch (kind) {
    case CaseKind::conway_smith:
      return "the sporadic (1,2,3) case";
    case CaseKind::q_minus_2_family:
      return "family (q-2, q, q-1)";
    case CaseKind::qs_family: {
      Int s = pr.p / pr.q;
      return "family (qs, q, q) with s = " + str(s);
    }
    case CaseKind::generic:
      return "generic case: (p+q)(2q+1) >= 3r(p+2), alpha >= 3, r <= q-1";
    case CaseKind::none:
      return "matches no admissible family";
  }
  return "";
}

ConditionResult cond_case(const Params& pr) {
  ConditionResult c = gate("L2.5.case", "four-way case split");
  CaseKind kind = classify_case(pr);
  c.passed = kind != CaseKind::none;
  c.witness = case_witness(pr, kind);
  return c;
}

ConditionResult cond_positivity(const Params& pr) {
  ConditionResult c =
      gate("T3.2.positivity", "positivity of pq + q^3 - r(p+q)");
  c.informational = true;
  Int v = pr.p * pr.q + pr.q * pr.q * pr.q - pr.r * (pr.p + pr.q);
  c.passed = v > 0;
  c.witness = "pq + q^3 - r(p+q) = " + str(v) + (c.passed ? " > 0" : " <= 0");
  return c;
}

ConditionResult cond_m_int(const Params& pr) {
  ConditionResult c =
      gate("L4.2.m.int", "integrality of second-subconstituent multiplicities");
  if (pr.r != 2) return not_applicable(std::move(c), "r != 2");
  Delta2Spectrum d = delta2_spectrum(pr);
  for (int i = 0; i < 6; ++i)
    if (!is_integer(d.mult[i])) {
      c.passed = false;
      c.witness = "multiplicity " + str(d.mult[i]) + " for eigenvalue " +
                  str(d.value[i]) + ", not an integer";
      return c;
    }
  std::ostringstream w;
  w << "multiplicities";
  for (int i = 0; i < 6; ++i) w << ' ' << str(d.mult[i]);
  Rat total = d.total();
  w << " sum to k2 = " << str(total);
  c.witness = w.str();
  return c;
}

ConditionResult cond_m_nonneg(const Params& pr) {
  ConditionResult c = gate("L4.2.m.nonneg",
                           "nonnegativity of second-subconstituent multiplicities");
  if (pr.r != 2) return not_applicable(std::move(c), "r != 2");
  Delta2Spectrum d = delta2_spectrum(pr);
  for (int i = 0; i < 6; ++i)
    if (d.mult[i] < 0) {
      c.passed = false;
      c.witness = "multiplicity " + str(d.mult[i]) + " for eigenvalue " +
                  str(d.value[i]) + " is negative";
      return c;
    }
  c.witness = "all six multiplicities nonnegative";
  return c;
}

ConditionResult cond_traces(const Params& pr) {
  ConditionResult c =
      gate("L4.1.traces", "power-sum consistency of the six-slot spectrum");
  if (pr.r != 2) return not_applicable(std::move(c), "r != 2");
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
  c.passed = (s0 == t.t0 && s1 == t.t1 && s2 == t.t2 && s3 == t.t3);
  c.witness = c.passed ? "power sums match: " + str(t.t0) + ", " + str(t.t1) +
                             ", " + str(t.t2) + ", " + str(t.t3)
                       : "power sums disagree with the closed forms";
  return c;
}

ConditionResult cond_descend(const Params& pr) {
  ConditionResult c =
      gate("T4.4.descend", "second-subconstituent descent at the p bound");
  if (pr.r != 2) return not_applicable(std::move(c), "r != 2");
  std::optional<Delta2Tightness> dt = delta2_tightness(pr);
  if (!dt) return not_applicable(std::move(c), "p != q^3-2q");
  const Params& ind = dt->induced;
  std::string ind_str =
      "(" + str(ind.p) + "," + str(ind.q) + "," + str(ind.r) + ")";
  if (computed_gates_pass(ind)) {
    c.witness = "induced second subconstituent " + ind_str +
                " passes all computed gates";
    return c;
  }
  FeasibilityReport sub = feasibility_report(ind, CheckOptions{});
  std::ostringstream w;
  w << "induced second subconstituent " << ind_str << " fails:";
  for (const std::string& id : sub.failing_ids()) w << ' ' << id;
  c.passed = false;
  c.witness = w.str();
  return c;
}

std::vector<ConditionResult> computed_conditions(const Params& pr) {
  std::vector<ConditionResult> out = check_basic(pr);
  out.push_back(check_parity(pr));
  out.push_back(check_tight_bound(pr));
  out.push_back(cond_positivity(pr));
  out.push_back(check_p_bound(pr));
  {
    ConditionResult c =
        gate("T3.2.mu.int", "srg constraints on mu-graphs at the bound");
    if (!at_equality(pr)) {
      out.push_back(not_applicable(std::move(c), "bound strict; no srg forced"));
    } else {
      std::optional<MuEqualityData> d = mu_srg_at_equality(pr);
      std::ostringstream w;
      bool ok = true;
      if (!is_integer(d->srg.n)) {
        ok = false;
        w << "mu-graph order " << str(d->srg.n) << " not an integer";
      } else if (!is_integer(d->srg.lambda)) {
        ok = false;
        w << "srg lambda = " << str(d->srg.lambda) << " not an integer";
      } else if (!is_integer(d->srg.mu)) {
        ok = false;
        w << "srg mu = " << str(d->srg.mu) << " not an integer";
      } else if (!is_integer(d->mult_mid) || d->mult_mid < 0) {
        ok = false;
        w << "multiplicity " << str(d->mult_mid) << " of eigenvalue "
          << str(d->eig_mid) << " is not a nonnegative integer";
      } else if (!is_integer(d->mult_least) || d->mult_least < 0) {
        ok = false;
        w << "multiplicity " << str(d->mult_least) << " of eigenvalue "
          << str(d->eig_least) << " is not a nonnegative integer";
      } else {
        w << "mu-graphs are srg(" << str(d->srg.n) << ", " << str(d->srg.k)
          << ", " << str(d->srg.lambda) << ", " << str(d->srg.mu)
          << "), multiplicities 1, " << str(d->mult_mid) << ", "
          << str(d->mult_least);
      }
      c.passed = ok;
      c.witness = w.str();
      out.push_back(std::move(c));
    }
  }
  out.push_back(check_equality_divisibility(pr));
  out.push_back(cond_case(pr));
  out.push_back(check_mu_complete_multipartite(pr));
  out.push_back(cond_m_int(pr));
  out.push_back(cond_m_nonneg(pr));
  out.push_back(cond_traces(pr));
  out.push_back(cond_descend(pr));
  return out;
}

}  // namespace

const std::vector<std::string>& condition_id_catalog() {
  static const std::vector<std::string> ids = {
      "E1.tight",      "L2.3.iv.1a",      "L2.3.iv.1b",
      "L2.3.iv.1c",    "L2.3.iv.2",       "L2.3.iv.2.krein0",
      "L2.3.iv.3a",    "L2.3.iv.3b",      "L2.3.ii.local",
      "int.c2",        "int.ell1",        "int.ell2",
      "int.alpha",     "int.array",       "mult.global",
      "L2.1.ii.parity", "T3.2.bound",     "T3.2.positivity",
      "C3.5.pbound",   "T3.2.mu.int",     "L5.1.eqdiv",
      "L2.5.case",     "L2.4.mu.cm",      "L4.2.m.int",
      "L4.2.m.nonneg", "L4.1.traces",     "T4.4.descend",
      "mu.candidate",  "Table1a.registry", "Table1b.registry",
      "g13.registry",  "C4.6.registry",   "jk2011.registry",
  };
  return ids;
}

std::string str(CaseKind c) {
  switch (c) {
    case CaseKind::conway_smith: return "conway-smith";
    case CaseKind::q_minus_2_family: return "q-2-family";
    case CaseKind::qs_family: return "qs-family";
    case CaseKind::generic: return "generic";
    case CaseKind::none: return "none";
  }
  return "none";
}

std::string str(Status s) {
  switch (s) {
    case Status::known_exists: return "known-exists";
    case Status::open: return "open";
    case Status::infeasible: return "infeasible";
    case Status::known_nonexistent: return "known-nonexistent";
  }
  return "open";
}

bool MuEqualityData::integral() const {
  return is_integer(srg.n) && is_integer(srg.lambda) && is_integer(srg.mu) &&
         is_integer(mult_mid) && is_integer(mult_least);
}

Spectrum MuEqualityData::to_spectrum() const {
  if (!integral()) throw DomainError("mu-graph srg data not integral");
  return make_spectrum_sorted({{Rat(srg.k), Int(1)},
                               {eig_mid, to_int(mult_mid)},
                               {Rat(eig_least), to_int(mult_least)}});
}

const ConditionResult* FeasibilityReport::find(const std::string& id) const {
  for (const ConditionResult& c : conditions)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> FeasibilityReport::failing_ids() const {
  std::vector<std::string> out;
  for (const ConditionResult& c : conditions)
    if (c.failed()) out.push_back(c.id);
  return out;
}

ConditionResult check_parity(const Params& pr) {
  ConditionResult c = gate("L2.1.ii.parity", "c2 * c' must be even");
  Rat c2 = rat(pr.q * (pr.p + pr.q), pr.r);
  if (!is_integer(c2))
    return not_applicable(std::move(c),
                          "c2 = " + str(c2) + " not an integer; parity void");
  Int prod = to_int(c2) * pr.p;
  c.passed = is_even(prod);
  c.witness = "c2 c' = " + str(to_int(c2)) + " * " + str(pr.p) + " = " +
              str(prod) + (c.passed ? ", even" : ", odd");
  return c;
}

ConditionResult check_tight_bound(const Params& pr) {
  ConditionResult c = gate("T3.2.bound", "class-size bound r(p+q) <= p+q^3");
  Int lhs = pr.r * (pr.p + pr.q);
  Int rhs = tight_bound_rhs(pr);
  c.passed = lhs <= rhs;
  if (lhs < rhs)
    c.witness = "r(p+q) = " + str(lhs) + " < p+q^3 = " + str(rhs);
  else if (lhs == rhs)
    c.witness = "r(p+q) = p+q^3 = " + str(rhs) + ", equality";
  else
    c.witness = "r(p+q) = " + str(lhs) + " > p+q^3 = " + str(rhs);
  return c;
}

ConditionResult check_p_bound(const Params& pr) {
  ConditionResult c = gate("C3.5.pbound", "p <= q^3-2q");
  Int rhs = pr.q * pr.q * pr.q - 2 * pr.q;
  c.passed = pr.p <= rhs;
  c.witness = "p = " + str(pr.p) + (c.passed ? " <= " : " > ") +
              "q^3-2q = " + str(rhs);
  return c;
}

ConditionResult check_equality_divisibility(const Params& pr) {
  ConditionResult c =
      gate("L5.1.eqdiv", "divisibility (q+r) | r(r-2)(r-1)^2(r^2-r-1)");
  if (!at_equality(pr))
    return not_applicable(std::move(c), "bound strict");
  if (pr.r == 2)
    return not_applicable(std::move(c), "r = 2");
  Int d = pr.q + pr.r;
  Int v = pr.r * (pr.r - 2) * (pr.r - 1) * (pr.r - 1) *
          (pr.r * pr.r - pr.r - 1);
  c.passed = divides(d, v);
  c.witness = "q+r = " + str(d) + (c.passed ? " divides " : " does not divide ") +
              "r(r-2)(r-1)^2(r^2-r-1) = " + str(v);
  return c;
}

CaseKind classify_case(const Params& pr) {
  const Int &p = pr.p, &q = pr.q, &r = pr.r;
  if (p == 1 && q == 2 && r == 3) return CaseKind::conway_smith;
  if (p == q - 2 && r == q - 1) return CaseKind::q_minus_2_family;
  if (r == q && divides(q, p)) return CaseKind::qs_family;
  Int lhs = (p + q) * (2 * q + 1);
  Int rhs = 3 * r * (p + 2);
  if (lhs >= rhs && alpha(pr) >= 3 && r <= q - 1) return CaseKind::generic;
  return CaseKind::none;
}

std::optional<MuEqualityData> mu_srg_at_equality(const Params& pr) {
  if (!at_equality(pr)) return std::nullopt;
  const Int &p = pr.p, &q = pr.q, &r = pr.r;
  MuEqualityData d;
  d.srg.n = rat(q * (p + q), r);
  d.srg.k = p;
  d.srg.lambda = Rat((q - 1) * (q - 2)) + rat(2 * (p - 1), q + 1);
  d.srg.mu = rat(p + q * q * q, q + 1);
  d.eig_mid = rat(p - q * q, 1 + q);
  d.eig_least = -q;
  d.mult_mid = rat(p * (q - 1) * (q + 1) * (q + 1), p + q * q * q);
  d.mult_least = rat(p * q * (1 + p + q - q * q), p + q * q * q);
  return d;
}

ConditionResult check_mu_complete_multipartite(const Params& pr) {
  ConditionResult c =
      gate("L2.4.mu.cm", "complete-multipartite mu-graph criterion");
  c.informational = true;
  if (pr.p == 1)
    return not_applicable(std::move(c), "p = 1, outside the criterion");
  if (classify_case(pr) == CaseKind::qs_family) {
    Int s = pr.p / pr.q;
    Int parts = s + 1;
    c.witness = "family (qs, q, q): every mu-graph is K_{" + str(parts) +
                " x " + str(pr.q) + "}";
  } else {
    c.witness = "mu-graphs are not complete multipartite";
  }
  return c;
}

ConditionResult check_mu_candidate(const Params& pr, const Spectrum& s) {
  ConditionResult c =
      gate("mu.candidate", "order, top and least eigenvalue of a mu-graph");
  if (s.entries.empty()) {
    c.passed = false;
    c.witness = "empty spectrum";
    return c;
  }
  Rat c2 = rat(pr.q * (pr.p + pr.q), pr.r);
  Int order = s.order();
  std::ostringstream w;
  bool ok = true;
  if (Rat(order) != c2) {
    ok = false;
    w << "order " << str(order) << " != c2 = " << str(c2);
  }
  Rat top = s.top();
  if (top != Rat(pr.p)) {
    if (!ok) w << "; ";
    ok = false;
    w << "top eigenvalue " << str(top) << " != p = " << str(pr.p);
  }
  Rat bottom = s.bottom();
  if (bottom < -Rat(pr.q)) {
    if (!ok) w << "; ";
    ok = false;
    w << "least eigenvalue " << str(bottom) << " < -q = " << str(Int(-pr.q));
  }
  if (ok)
    w << "order " << str(order) << ", top " << str(top) << ", least "
      << str(bottom) << " compatible with (p, q, r)";
  c.passed = ok;
  c.witness = w.str();
  return c;
}

std::vector<ConditionResult> check_basic(const Params& pr) {
  std::vector<ConditionResult> out;
  out.push_back(cond_tight_identity(pr));
  out.push_back(cond_1a(pr));
  out.push_back(cond_1b(pr));
  out.push_back(cond_1c(pr));
  out.push_back(cond_2(pr));
  out.push_back(cond_krein0(pr));
  out.push_back(cond_3a(pr));
  out.push_back(cond_3b(pr));
  out.push_back(cond_local(pr));
  out.push_back(cond_int_c2(pr));
  out.push_back(cond_int_ell1(pr));
  out.push_back(cond_int_ell2(pr));
  out.push_back(cond_int_alpha(pr));
  out.push_back(cond_int_array(pr));
  out.push_back(cond_mult_global(pr));
  return out;
}

bool computed_gates_pass(const Params& pr) {
  for (const ConditionResult& c : computed_conditions(pr))
    if (c.failed()) return false;
  return true;
}

FeasibilityReport feasibility_report(const Params& pr,
                                     const CheckOptions& opt) {
  FeasibilityReport rep;
  rep.params = pr;
  rep.case_kind = classify_case(pr);
  rep.krein_zero = (pr.p == pr.q - 2);
  rep.bound_equality = at_equality(pr);
  rep.mu_equality = mu_srg_at_equality(pr);
  IntersectionArray ia = intersection_array(pr);
  if (ia.integral())
    rep.global_spec = global_multiplicities(ia, eigenvalues(pr));
  if (pr.r == 2) rep.delta2 = delta2_spectrum(pr);

  std::vector<ConditionResult> conds = computed_conditions(pr);
  if (!opt.gate_prefixes.empty()) {
    for (ConditionResult& c : conds) {
      bool selected = false;
      for (const std::string& pre : opt.gate_prefixes)
        if (c.id.compare(0, pre.size(), pre) == 0) {
          selected = true;
          break;
        }
      if (!selected) c = not_applicable(std::move(c), "not selected");
    }
  }
  if (opt.mu_candidate != nullptr) {
    ConditionResult mc = check_mu_candidate(pr, *opt.mu_candidate);
    if (!opt.mu_candidate_label.empty())
      mc.witness = "[" + opt.mu_candidate_label + "] " + mc.witness;
    conds.push_back(std::move(mc));
  }

  std::optional<RegistryHit> nonex, ex;
  if (opt.registry != nullptr) {
    nonex = opt.registry->lookup_nonexistent(pr);
    ex = opt.registry->lookup_exists(pr);
    if (nonex) {
      ConditionResult c;
      c.id = nonex->id;
      c.anchor = "registry nonexistence knowledge";
      c.passed = false;
      c.witness = nonex->source;
      conds.push_back(std::move(c));
      rep.registry_source = nonex->source;
    }
    if (ex) {
      ConditionResult c;
      c.id = ex->id;
      c.anchor = "registry existence knowledge";
      c.passed = true;
      c.witness = ex->name + " (" + ex->source + ")";
      conds.push_back(std::move(c));
      rep.registry_name = ex->name;
    }
  }
  rep.conditions = std::move(conds);

  bool any_fail = false;
  for (const ConditionResult& c : rep.conditions)
    if (c.failed()) any_fail = true;

  if (nonex)
    rep.status = Status::known_nonexistent;
  else if (any_fail)
    rep.status = Status::infeasible;
  else if (ex)
    rep.status = Status::known_exists;
  else
    rep.status = Status::open;
  return rep;
}

}  // namespace at4
