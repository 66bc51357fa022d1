#include "at4/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "at4/errors.hpp"

namespace at4 {

namespace {

const char* kBuiltinText = R"(at4-registry 1
# status|p|q|r|name|source
exists|1|2|3|Conway-Smith group graph|known-table A1, unique
exists|2|2|2|Johnson graph J(8,4)|known-table A2, unique
exists|4|2|2|halved 8-cube|known-table A3, unique
exists|3|3|3|triple cover 3.O6-(3)|known-table A4, unique
exists|2|4|3|Soicher graph (first)|known-table A5, unique
exists|9|3|3|triple cover 3.O7(3)|known-table A6, unique
exists|8|4|2|Meixner graph (first)|known-table A7
exists|8|4|4|Meixner graph (second)|known-table A8, unique
exists|20|4|3|Soicher graph (second)|known-table A9
exists|351|9|3|triple cover 3.Fi24-|known-table A10
nonexistent|3|5|2||known-table B2
nonexistent|4|6|2||known-table B6
nonexistent|21|3|2||known-table B8
nonexistent|5|7|2||known-table B11
)";

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Int parse_int_field(const std::string& s, const std::string& what) {
  if (s.empty()) throw DomainError("registry: empty " + what + " field");
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw DomainError("registry: bad " + what + " '" + s + "'");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw DomainError("registry: bad " + what + " '" + s + "'");
  return Int(s);
}

}  // namespace

std::optional<RegistryHit> Registry::lookup_exists(const Params& pr) const {
  for (const RegistryRow& row : rows)
    if (row.status == RegStatus::exists && row.p == pr.p && row.q == pr.q &&
        row.r == pr.r)
      return RegistryHit{RegStatus::exists, "Table1a.registry", row.name,
                         row.source};
  return std::nullopt;
}

std::optional<RegistryHit> Registry::lookup_nonexistent(
    const Params& pr) const {
  for (const RegistryRow& row : rows)
    if (row.status == RegStatus::nonexistent && row.p == pr.p &&
        row.q == pr.q && row.r == pr.r)
      return RegistryHit{RegStatus::nonexistent, "Table1b.registry", row.name,
                         row.source};
  if (!rules_enabled) return std::nullopt;

  const Int &p = pr.p, &q = pr.q, &r = pr.r;
  if (r == 2 && p == q - 2)
    return RegistryHit{RegStatus::nonexistent, "g13.registry", "",
                       "one-point extension family (q-2, q, 2)"};
  if (r == 2 && q % 4 == 3 &&
      (p == q * q * q - 2 * q || p == q * q * q - q * q - q))
    return RegistryHit{RegStatus::nonexistent, "C4.6.registry", "",
                       "q = 3 (mod 4) descent pair"};
  if (r == q && divides(q, p)) {
    Int s = p / q;
    bool known = (q == 2 && (s == 1 || s == 2)) ||
                 (q == 3 && (s == 1 || s == 3)) || (q == 4 && s == 2);
    if (!known)
      return RegistryHit{RegStatus::nonexistent, "jk2011.registry", "",
                         "classified family (qs, q, q)"};
  }
  return std::nullopt;
}

std::string Registry::to_text() const {
  std::ostringstream os;
  os << "at4-registry 1\n";
  os << "# status|p|q|r|name|source\n";
  for (const RegistryRow& row : rows) {
    os << (row.status == RegStatus::exists ? "exists" : "nonexistent") << '|'
       << str(row.p) << '|' << str(row.q) << '|' << str(row.r) << '|'
       << row.name << '|' << row.source << '\n';
  }
  return os.str();
}

Registry parse_registry(const std::string& text) {
  Registry reg;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!have_header) {
      if (t != "at4-registry 1")
        throw DomainError("registry: missing 'at4-registry 1' header");
      have_header = true;
      continue;
    }
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t bar = t.find('|', start);
      if (bar == std::string::npos) {
        fields.push_back(t.substr(start));
        break;
      }
      fields.push_back(t.substr(start, bar - start));
      start = bar + 1;
    }
    if (fields.size() != 6)
      throw DomainError("registry line " + std::to_string(lineno) +
                        ": expected 6 '|' fields, got " +
                        std::to_string(fields.size()));
    RegistryRow row;
    std::string status = trim(fields[0]);
    if (status == "exists")
      row.status = RegStatus::exists;
    else if (status == "nonexistent")
      row.status = RegStatus::nonexistent;
    else
      throw DomainError("registry line " + std::to_string(lineno) +
                        ": unknown status '" + status + "'");
    row.p = parse_int_field(trim(fields[1]), "p");
    row.q = parse_int_field(trim(fields[2]), "q");
    row.r = parse_int_field(trim(fields[3]), "r");
    make_params(row.p, row.q, row.r);  // domain check
    row.name = trim(fields[4]);
    row.source = trim(fields[5]);
    reg.rows.push_back(std::move(row));
  }
  if (!have_header)
    throw DomainError("registry: missing 'at4-registry 1' header");
  return reg;
}

Registry builtin_registry() { return parse_registry(kBuiltinText); }

Registry default_registry() {
  const char* path = std::getenv("AT4_REGISTRY");
  if (path == nullptr || *path == '\0') return builtin_registry();
  std::ifstream in(path);
  if (!in) throw DomainError(std::string("cannot read registry file ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_registry(buf.str());
}

}  // namespace at4
