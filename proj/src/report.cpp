#include "at4/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace at4 {

namespace {

using ojson = nlohmann::ordered_json;

std::string tuple_str(const Params& pr) {
  std::ostringstream os;
  os << "(" << str(pr.p) << ", " << str(pr.q) << ", " << str(pr.r) << ")";
  return os.str();
}

std::string header_line(const std::string& command) {
  std::ostringstream os;
  os << kToolName << " " << kVersion << " " << command;
  return os.str();
}

// Four-state table verdict; informational conditions never read as failures.
std::string verdict(const ConditionResult& c) {
  if (c.failed()) return "fail";
  if (!c.applicable) return "na";
  if (c.informational) return "info";
  return "pass";
}

// CSV cells are three-state by contract.
std::string csv_verdict(const ConditionResult& c) {
  if (c.failed()) return "fail";
  if (!c.applicable) return "na";
  return "pass";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

ojson condition_json(const ConditionResult& c) {
  ojson j;
  j["id"] = c.id;
  j["result"] = verdict(c);
  j["passed"] = c.passed;
  j["applicable"] = c.applicable;
  j["informational"] = c.informational;
  j["witness"] = c.witness;
  j["anchor"] = c.anchor;
  return j;
}

ojson report_json(const FeasibilityReport& rep) {
  ojson j;
  j["p"] = str(rep.params.p);
  j["q"] = str(rep.params.q);
  j["r"] = str(rep.params.r);
  j["status"] = str(rep.status);
  j["case"] = str(rep.case_kind);
  j["krein_zero"] = rep.krein_zero;
  j["bound_equality"] = rep.bound_equality;
  j["name"] = rep.registry_name;
  j["source"] = rep.registry_source;

  IntersectionArray ia = intersection_array(rep.params);
  j["valency"] = str(valency(rep.params));
  j["alpha"] = str(alpha(rep.params));
  j["c2"] = str(ia.c[1]);
  ojson ab = ojson::array(), ac = ojson::array();
  for (const Rat& x : ia.b) ab.push_back(str(x));
  for (const Rat& x : ia.c) ac.push_back(str(x));
  j["array"] = ojson{{"b", ab}, {"c", ac}};
  j["order"] = str(ia.order());

  ojson eigs = ojson::array();
  for (const Int& th : eigenvalues(rep.params)) eigs.push_back(str(th));
  j["eigenvalues"] = eigs;

  if (rep.global_spec) {
    ojson gm = ojson::array();
    for (const auto& e : rep.global_spec->entries) {
      ojson pair;
      pair["value"] = str(e.first);
      pair["multiplicity"] = str(e.second);
      gm.push_back(pair);
    }
    j["global_multiplicities"] = gm;
  } else {
    j["global_multiplicities"] = nullptr;
  }

  if (rep.delta2) {
    ojson vals = ojson::array(), mults = ojson::array();
    for (const Int& v : rep.delta2->value) vals.push_back(str(v));
    for (const Rat& m : rep.delta2->mult) mults.push_back(str(m));
    j["delta2"] = ojson{{"values", vals}, {"multiplicities", mults}};
  } else {
    j["delta2"] = nullptr;
  }

  if (rep.mu_equality) {
    const MuEqualityData& eq = *rep.mu_equality;
    ojson m;
    m["n"] = str(eq.srg.n);
    m["k"] = str(eq.srg.k);
    m["lambda"] = str(eq.srg.lambda);
    m["mu"] = str(eq.srg.mu);
    m["eig_mid"] = str(eq.eig_mid);
    m["eig_least"] = str(eq.eig_least);
    m["mult_mid"] = str(eq.mult_mid);
    m["mult_least"] = str(eq.mult_least);
    j["mu_equality"] = m;
  } else {
    j["mu_equality"] = nullptr;
  }

  ojson conds = ojson::array();
  for (const ConditionResult& c : rep.conditions) conds.push_back(condition_json(c));
  j["conditions"] = conds;
  return j;
}

void report_table(std::ostream& os, const FeasibilityReport& rep) {
  os << "parameters " << tuple_str(rep.params) << "\n";
  os << "status " << str(rep.status) << "\n";
  if (!rep.registry_name.empty()) os << "name " << rep.registry_name << "\n";
  if (!rep.registry_source.empty()) os << "source " << rep.registry_source << "\n";
  os << "case " << str(rep.case_kind) << "\n";
  os << "krein-zero " << (rep.krein_zero ? "yes" : "no") << "\n";
  os << "bound-equality " << (rep.bound_equality ? "yes" : "no") << "\n";

  IntersectionArray ia = intersection_array(rep.params);
  os << "valency " << str(valency(rep.params)) << "\n";
  os << "alpha " << str(alpha(rep.params)) << "\n";
  os << "c2 " << str(ia.c[1]) << "\n";
  os << "array " << str(ia) << "\n";
  os << "order " << str(ia.order()) << "\n";

  if (rep.global_spec) {
    if (rep.global_spec->integral() && rep.global_spec->positive()) {
      os << "global spectrum " << str(rep.global_spec->to_spectrum()) << "\n";
    } else {
      os << "global multiplicities";
      for (const auto& e : rep.global_spec->entries)
        os << " " << str(e.first) << ":" << str(e.second);
      os << "\n";
    }
  }

  LocalGraphData loc = local_graph_data(rep.params);
  os << "local srg(" << str(loc.order) << ", " << str(loc.valency) << ", "
     << str(loc.lambda) << ", " << str(loc.mu) << ") with l1 = "
     << str(loc.mult_p) << ", l2 = " << str(loc.mult_neg_q) << "\n";

  if (rep.delta2) {
    os << "delta2 values";
    for (const Int& v : rep.delta2->value) os << " " << str(v);
    os << "\n";
    os << "delta2 multiplicities";
    for (const Rat& m : rep.delta2->mult) os << " " << str(m);
    os << "\n";
  }

  if (rep.mu_equality) {
    const MuEqualityData& eq = *rep.mu_equality;
    os << "mu-graphs at equality srg(" << str(eq.srg.n) << ", " << str(eq.srg.k)
       << ", " << str(eq.srg.lambda) << ", " << str(eq.srg.mu) << ")";
    if (eq.integral()) {
      os << " with spectrum " << str(eq.to_spectrum());
    } else {
      os << " with multiplicities " << str(eq.mult_mid) << ", "
         << str(eq.mult_least);
    }
    os << "\n";
  }

  os << "conditions\n";
  for (const ConditionResult& c : rep.conditions) {
    os << "  " << std::left << std::setw(4) << verdict(c) << " "
       << std::setw(18) << c.id << " " << c.witness << "\n";
  }
}

std::string report_csv_header() {
  std::ostringstream os;
  os << "p,q,r,status,case,krein_zero,bound_equality,name,source";
  for (const std::string& id : condition_id_catalog()) os << "," << id;
  os << "\n";
  return os.str();
}

void report_csv_row(std::ostream& os, const FeasibilityReport& rep) {
  os << str(rep.params.p) << "," << str(rep.params.q) << ","
     << str(rep.params.r) << "," << str(rep.status) << ","
     << str(rep.case_kind) << "," << (rep.krein_zero ? "yes" : "no") << ","
     << (rep.bound_equality ? "yes" : "no") << ","
     << csv_field(rep.registry_name) << "," << csv_field(rep.registry_source);
  for (const std::string& id : condition_id_catalog()) {
    const ConditionResult* c = rep.find(id);
    os << "," << (c ? csv_verdict(*c) : "na");
  }
  os << "\n";
}

Int lem1_divisor_target(const Int& r) {
  Int rm1 = r - 1;
  Int target = r * (r - 2);
  target *= rm1 * rm1;
  target *= r * r - r - 1;
  return target;
}

std::string parse_error_message(const std::exception& e) {
  std::ostringstream os;
  os << "error: " << e.what() << "\n";
  return os.str();
}

Int parse_cli_int(const std::string& s, const std::string& what) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size())
    throw DomainError(what + ": '" + s + "' is not an integer");
  for (size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9')
      throw DomainError(what + ": '" + s + "' is not an integer");
  return Int(s.c_str() + (s[0] == '+' ? 1 : 0));
}

std::vector<std::string> split_gate_prefixes(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(csv);
  while (std::getline(is, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(cur.substr(a, b - a + 1));
  }
  return out;
}

Format require_format(const std::string& name) {
  std::optional<Format> f = parse_format(name);
  if (!f) throw DomainError("unknown format '" + name + "'");
  return *f;
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

EnumerationResult run_enumeration(const EnumerationRequest& req,
                                  const Registry* reg) {
  if (req.qmin < 2 || req.qmax < req.qmin)
    throw DomainError("enumeration needs 2 <= qmin <= qmax");
  if (req.pmax && *req.pmax < 1)
    throw DomainError("pmax must be at least 1");

  EnumerationResult res;
  res.request = req;
  CheckOptions opt;
  opt.registry = req.use_registry ? reg : nullptr;
  opt.gate_prefixes = req.gate_prefixes;

  for (Int q = req.qmin; q <= req.qmax; ++q) {
    Int pmax = req.pmax ? *req.pmax : Int(q * q * q - 2 * q);
    for (Int p = 1; p <= pmax; ++p) {
      Int s = p + q;
      for (Int r = 2; r <= s; ++r) {
        if (!divides(r, s)) continue;
        ++res.visited;
        FeasibilityReport rep = feasibility_report(make_params(p, q, r), opt);
        switch (rep.status) {
          case Status::known_exists: ++res.n_exists; break;
          case Status::open: ++res.n_open; break;
          case Status::infeasible: ++res.n_infeasible; break;
          case Status::known_nonexistent: ++res.n_nonexistent; break;
        }
        if (rep.surviving()) res.survivors.push_back(std::move(rep));
      }
    }
  }
  return res;
}

std::vector<Lem1Row> lem1_scan(const Int& r, const Registry* reg) {
  if (r <= 2) throw DomainError("the divisibility scan needs r > 2");
  Int target = lem1_divisor_target(r);

  std::vector<Int> divisors;
  for (Int d = 1; d * d <= target; ++d) {
    if (!divides(d, target)) continue;
    divisors.push_back(d);
    Int other = target / d;
    if (other != d) divisors.push_back(other);
  }
  std::sort(divisors.begin(), divisors.end());

  CheckOptions opt;
  opt.registry = reg;

  std::vector<Lem1Row> rows;
  for (const Int& d : divisors) {
    if (d <= r + 1) continue;
    Lem1Row row;
    row.q = d - r;
    row.p = rat(row.q * row.q * row.q - r * row.q, r - 1);
    row.p_integral = is_integer(row.p) && to_int(row.p) >= 1;
    if (row.p_integral)
      row.report = feasibility_report(make_params(to_int(row.p), row.q, r), opt);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Table1Row> table1_rows() {
  auto row = [](const char* id, int p, int q, int r, const char* name,
                const char* status, const char* mu) {
    Table1Row t;
    t.id = id;
    t.params = make_params(p, q, r);
    t.name = name;
    t.status = status;
    t.mu_annotation = mu;
    t.k = valency(t.params);
    t.alpha_value = alpha(t.params);
    t.c2 = intersection_array(t.params).c[1];
    return t;
  };
  return {
      row("A1", 1, 2, 3, "Conway-Smith group graph", "exists (unique)", "K2"),
      row("A2", 2, 2, 2, "Johnson graph J(8,4)", "exists (unique)", "K{2,2}"),
      row("A3", 4, 2, 2, "halved 8-cube", "exists (unique)", "K{3x2}"),
      row("A4", 3, 3, 3, "triple cover 3.O6-(3)", "exists (unique)", "K{3,3}"),
      row("A5", 2, 4, 3, "Soicher graph (first)", "exists (unique)",
          "2.K{2,2}"),
      row("A6", 9, 3, 3, "triple cover 3.O7(3)", "exists (unique)", "K{4x3}"),
      row("A7", 8, 4, 2, "Meixner graph (first)", "exists", "2.K{3x4}"),
      row("A8", 8, 4, 4, "Meixner graph (second)", "exists (unique)",
          "K{3x4}"),
      row("A9", 20, 4, 3, "Soicher graph (second)", "exists",
          "K2bar-ext. of 1/2Q5"),
      row("A10", 351, 9, 3, "triple cover 3.Fi24-", "exists",
          "SRG(1080,351,126,108)"),
      row("B1", 4, 4, 2, "", "open", "2.K{4,4}"),
      row("B2", 3, 5, 2, "", "does not exist", "2.Petersen"),
      row("B3", 3, 5, 4, "", "open", "Petersen"),
      row("B4", 9, 3, 2, "", "open", "unknown; not K{9,9}"),
      row("B5", 8, 4, 3, "", "open", "unknown; not 2.K{8,8}"),
      row("B6", 4, 6, 2, "", "does not exist", "5.K{3x2}"),
      row("B7", 4, 6, 5, "", "open", "2.K{3x2}"),
      row("B8", 21, 3, 2, "", "does not exist", "SRG(36,21,12,12)"),
      row("B9", 6, 6, 2, "", "open", "3.K{6,6}"),
      row("B10", 6, 6, 3, "", "open", "2.K{6,6}"),
      row("B11", 5, 7, 2, "", "does not exist", "7.K6"),
      row("B12", 16, 4, 2, "", "open", "2.K{5x4}"),
      row("B13", 20, 4, 2, "", "open", "2.K{6x4}"),
  };
}

std::string render_reports(const std::string& command,
                           const std::vector<FeasibilityReport>& reports,
                           bool used_registry, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::table: {
      os << header_line(command) << "\n";
      os << "registry " << (used_registry ? "on" : "off") << "\n";
      for (const FeasibilityReport& rep : reports) {
        os << "\n";
        report_table(os, rep);
      }
      break;
    }
    case Format::json: {
      ojson j;
      j["tool"] = kToolName;
      j["version"] = kVersion;
      j["command"] = command;
      j["registry_used"] = used_registry;
      ojson arr = ojson::array();
      for (const FeasibilityReport& rep : reports) arr.push_back(report_json(rep));
      j["reports"] = arr;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << report_csv_header();
      for (const FeasibilityReport& rep : reports) report_csv_row(os, rep);
      break;
    }
  }
  return os.str();
}

std::string render_enumeration(const EnumerationResult& res, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::table: {
      os << header_line("enumerate") << "\n";
      os << "q range [" << str(res.request.qmin) << ", "
         << str(res.request.qmax) << "]\n";
      if (res.request.pmax)
        os << "pmax " << str(*res.request.pmax) << "\n";
      else
        os << "pmax default q^3 - 2q\n";
      os << "registry " << (res.request.use_registry ? "on" : "off") << "\n";
      if (!res.request.gate_prefixes.empty()) {
        os << "gates";
        for (const std::string& g : res.request.gate_prefixes) os << " " << g;
        os << "\n";
      }
      os << "visited " << res.visited << "\n";
      os << "known-exists " << res.n_exists << "\n";
      os << "open " << res.n_open << "\n";
      os << "infeasible " << res.n_infeasible << "\n";
      os << "known-nonexistent " << res.n_nonexistent << "\n";
      os << "survivors " << res.survivors.size() << "\n";
      for (const FeasibilityReport& rep : res.survivors) {
        os << "  " << tuple_str(rep.params) << " " << str(rep.status);
        if (!rep.registry_name.empty()) os << " " << rep.registry_name;
        os << "\n";
      }
      break;
    }
    case Format::json: {
      ojson j;
      j["tool"] = kToolName;
      j["version"] = kVersion;
      j["command"] = "enumerate";
      j["qmin"] = str(res.request.qmin);
      j["qmax"] = str(res.request.qmax);
      j["pmax"] = res.request.pmax ? ojson(str(*res.request.pmax)) : ojson(nullptr);
      j["registry_used"] = res.request.use_registry;
      ojson gates = ojson::array();
      for (const std::string& g : res.request.gate_prefixes) gates.push_back(g);
      j["gates"] = gates;
      j["visited"] = res.visited;
      ojson counts;
      counts["known_exists"] = res.n_exists;
      counts["open"] = res.n_open;
      counts["infeasible"] = res.n_infeasible;
      counts["known_nonexistent"] = res.n_nonexistent;
      j["counts"] = counts;
      ojson arr = ojson::array();
      for (const FeasibilityReport& rep : res.survivors)
        arr.push_back(report_json(rep));
      j["survivors"] = arr;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << report_csv_header();
      for (const FeasibilityReport& rep : res.survivors) report_csv_row(os, rep);
      break;
    }
  }
  return os.str();
}

std::string render_table1(const std::vector<Table1Row>& rows, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::table: {
      os << header_line("table1") << "\n";
      os << std::left << std::setw(4) << "id" << std::setw(5) << "p"
         << std::setw(3) << "q" << std::setw(3) << "r" << std::setw(7) << "k"
         << std::setw(7) << "alpha" << std::setw(6) << "c2" << std::setw(17)
         << "status" << std::setw(25) << "name"
         << "mu-graphs\n";
      for (const Table1Row& t : rows) {
        os << std::left << std::setw(4) << t.id << std::setw(5)
           << str(t.params.p) << std::setw(3) << str(t.params.q)
           << std::setw(3) << str(t.params.r) << std::setw(7) << str(t.k)
           << std::setw(7) << str(t.alpha_value) << std::setw(6) << str(t.c2)
           << std::setw(17) << t.status << std::setw(25) << t.name
           << t.mu_annotation << "\n";
      }
      break;
    }
    case Format::json: {
      ojson j;
      j["tool"] = kToolName;
      j["version"] = kVersion;
      j["command"] = "table1";
      ojson arr = ojson::array();
      for (const Table1Row& t : rows) {
        ojson e;
        e["id"] = t.id;
        e["p"] = str(t.params.p);
        e["q"] = str(t.params.q);
        e["r"] = str(t.params.r);
        e["k"] = str(t.k);
        e["alpha"] = str(t.alpha_value);
        e["c2"] = str(t.c2);
        e["status"] = t.status;
        e["name"] = t.name;
        e["mu_graphs"] = t.mu_annotation;
        arr.push_back(e);
      }
      j["rows"] = arr;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << "id,p,q,r,k,alpha,c2,status,name,mu_graphs\n";
      for (const Table1Row& t : rows) {
        os << t.id << "," << str(t.params.p) << "," << str(t.params.q) << ","
           << str(t.params.r) << "," << str(t.k) << "," << str(t.alpha_value)
           << "," << str(t.c2) << "," << csv_field(t.status) << ","
           << csv_field(t.name) << "," << csv_field(t.mu_annotation) << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::string render_lem1(const Int& r, const std::vector<Lem1Row>& rows,
                        Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::table: {
      os << header_line("lem1-scan") << "\n";
      os << "r " << str(r) << "\n";
      os << "divisor target " << str(lem1_divisor_target(r)) << "\n";
      for (const Lem1Row& row : rows) {
        os << "  q=" << str(row.q) << " p=" << str(row.p);
        if (!row.p_integral) {
          os << " ineligible\n";
          continue;
        }
        os << " " << str(row.report->status);
        if (!row.report->registry_name.empty())
          os << " " << row.report->registry_name;
        os << "\n";
      }
      break;
    }
    case Format::json: {
      ojson j;
      j["tool"] = kToolName;
      j["version"] = kVersion;
      j["command"] = "lem1-scan";
      j["r"] = str(r);
      j["target"] = str(lem1_divisor_target(r));
      ojson arr = ojson::array();
      for (const Lem1Row& row : rows) {
        ojson e;
        e["q"] = str(row.q);
        e["p"] = str(row.p);
        e["p_integral"] = row.p_integral;
        e["report"] = row.report ? report_json(*row.report) : ojson(nullptr);
        arr.push_back(e);
      }
      j["rows"] = arr;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << "q,p,p_integral,status,name\n";
      for (const Lem1Row& row : rows) {
        os << str(row.q) << "," << str(row.p) << ","
           << (row.p_integral ? "yes" : "no") << ",";
        if (row.report) {
          os << str(row.report->status) << ","
             << csv_field(row.report->registry_name);
        } else {
          os << "na,";
        }
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::string render_oracle(const OracleRun& run, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::table: {
      os << header_line("oracle") << " " << run.oracle << "\n";
      os << "parameters " << tuple_str(run.params) << "\n";
      long passed = 0;
      for (const OracleCheck& c : run.checks) {
        if (c.passed) ++passed;
        os << "  " << std::left << std::setw(5) << (c.passed ? "pass" : "fail")
           << std::setw(22) << c.name << " " << c.detail << "\n";
      }
      os << "result " << (run.all_passed() ? "pass" : "fail") << " (" << passed
         << "/" << run.checks.size() << ")\n";
      break;
    }
    case Format::json: {
      ojson j;
      j["tool"] = kToolName;
      j["version"] = kVersion;
      j["command"] = "oracle";
      j["oracle"] = run.oracle;
      j["p"] = str(run.params.p);
      j["q"] = str(run.params.q);
      j["r"] = str(run.params.r);
      ojson arr = ojson::array();
      for (const OracleCheck& c : run.checks) {
        ojson e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        arr.push_back(e);
      }
      j["checks"] = arr;
      j["all_passed"] = run.all_passed();
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      os << "check,result,detail\n";
      for (const OracleCheck& c : run.checks) {
        os << csv_field(c.name) << "," << (c.passed ? "pass" : "fail") << ","
           << csv_field(c.detail) << "\n";
      }
      break;
    }
  }
  return os.str();
}

int cli_main(const std::vector<std::string>& args, std::string& out) {
  CLI::App app{"exact feasibility conditions for antipodal tight diameter-4 "
               "parameter triples",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kVersion);

  std::string p_str, q_str, r_str;
  std::string check_format = "table", mu_path, check_gates;
  bool check_no_registry = false;
  CLI::App* check = app.add_subcommand(
      "check", "run every feasibility condition on one parameter triple");
  check->add_option("p", p_str, "positive local eigenvalue")->required();
  check->add_option("q", q_str, "negated negative local eigenvalue")
      ->required();
  check->add_option("r", r_str, "antipodal class size")->required();
  check->add_option("--format", check_format, "table, json, or csv");
  check->add_option("--mu-candidate", mu_path,
                    "screen a candidate mu-graph given as an edge list file");
  check->add_option("--gates", check_gates,
                    "comma-separated condition id prefixes to run");
  check->add_flag("--no-registry", check_no_registry,
                  "computed conditions only, no existence knowledge");

  std::string qmin_str, qmax_str, pmax_str;
  std::string enum_format = "table", enum_gates;
  bool enum_no_registry = false;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "gate every triple over a parameter grid");
  enumerate->add_option("--qmin", qmin_str, "smallest q")->required();
  enumerate->add_option("--qmax", qmax_str, "largest q")->required();
  CLI::Option* pmax_opt =
      enumerate->add_option("--pmax", pmax_str, "largest p (default q^3 - 2q)");
  enumerate->add_option("--format", enum_format, "table, json, or csv");
  enumerate->add_option("--gates", enum_gates,
                        "comma-separated condition id prefixes to run");
  enumerate->add_flag("--no-registry", enum_no_registry,
                      "computed conditions only, no existence knowledge");

  std::string table1_format = "table";
  CLI::App* table1 = app.add_subcommand(
      "table1", "the summary table of parameter sets below 4096 vertices");
  table1->add_option("--format", table1_format, "table, json, or csv");

  std::string scan_r_str, scan_format = "table";
  bool scan_no_registry = false;
  CLI::App* scan = app.add_subcommand(
      "lem1-scan",
      "solve the class-bound equality divisibility for fixed r > 2");
  scan->add_option("r", scan_r_str, "antipodal class size")->required();
  scan->add_option("--format", scan_format, "table, json, or csv");
  scan->add_flag("--no-registry", scan_no_registry,
                 "computed conditions only, no existence knowledge");

  std::string oracle_name, oracle_format = "table";
  CLI::App* oracle = app.add_subcommand(
      "oracle", "verify a concrete witness graph against the formulas");
  oracle->add_option("name", oracle_name, "j84 or halved8cube")->required();
  oracle->add_option("--format", oracle_format, "table, json, or csv");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back(kToolName);
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o1, o2;
    int code = app.exit(e, o1, o2);
    out = o1.str() + o2.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) {
      Format f = require_format(check_format);
      Registry reg;
      CheckOptions opt;
      if (!check_no_registry) {
        reg = default_registry();
        opt.registry = &reg;
      }
      opt.gate_prefixes = split_gate_prefixes(check_gates);
      Spectrum mu_spec;
      if (!mu_path.empty()) {
        std::ifstream in(mu_path);
        if (!in) throw DomainError("cannot read '" + mu_path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        mu_spec = extract_spectrum(graph_from_text(text.str()));
        opt.mu_candidate = &mu_spec;
        opt.mu_candidate_label = mu_path;
      }
      Params pr = make_params(parse_cli_int(p_str, "p"),
                              parse_cli_int(q_str, "q"),
                              parse_cli_int(r_str, "r"));
      FeasibilityReport rep = feasibility_report(pr, opt);
      out = render_reports("check", {rep}, opt.registry != nullptr, f);
      return 0;
    }
    if (app.got_subcommand(enumerate)) {
      Format f = require_format(enum_format);
      EnumerationRequest req;
      req.qmin = parse_cli_int(qmin_str, "qmin");
      req.qmax = parse_cli_int(qmax_str, "qmax");
      if (pmax_opt->count() > 0) req.pmax = parse_cli_int(pmax_str, "pmax");
      req.use_registry = !enum_no_registry;
      req.gate_prefixes = split_gate_prefixes(enum_gates);
      Registry reg;
      if (req.use_registry) reg = default_registry();
      EnumerationResult res = run_enumeration(req, &reg);
      out = render_enumeration(res, f);
      return 0;
    }
    if (app.got_subcommand(table1)) {
      Format f = require_format(table1_format);
      out = render_table1(table1_rows(), f);
      return 0;
    }
    if (app.got_subcommand(scan)) {
      Format f = require_format(scan_format);
      Registry reg;
      const Registry* regp = nullptr;
      if (!scan_no_registry) {
        reg = default_registry();
        regp = &reg;
      }
      Int r = parse_cli_int(scan_r_str, "r");
      out = render_lem1(r, lem1_scan(r, regp), f);
      return 0;
    }
    if (app.got_subcommand(oracle)) {
      Format f = require_format(oracle_format);
      OracleRun run = run_oracle_suite(oracle_name);
      out = render_oracle(run, f);
      return run.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    out = parse_error_message(e);
    return 2;
  }
  out = "error: no subcommand\n";
  return 2;
}

}  // namespace at4
