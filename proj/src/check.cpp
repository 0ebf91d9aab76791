#include "arithcurv/check.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace arithcurv {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void sort_checks(std::vector<Check>& checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& x, const Check& y) {
    return std::tie(x.suite, x.p, x.p2) < std::tie(y.suite, y.p, y.p2);
  });
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json to_json(const Check& c) {
  return {{"suite", c.suite}, {"name", c.name}, {"p", c.p},     {"p2", c.p2},
          {"status", c.pass ? "pass" : "fail"}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"note", c.note}};
}

std::string to_csv(const std::vector<Check>& checks) {
  std::ostringstream out;
  out << "suite,name,p,p2,status,lhs,rhs,note\n";
  for (const auto& c : checks)
    out << csv_field(c.suite) << ',' << csv_field(c.name) << ',' << c.p << ',' << c.p2 << ','
        << (c.pass ? "pass" : "fail") << ',' << csv_field(c.lhs) << ',' << csv_field(c.rhs) << ','
        << csv_field(c.note) << '\n';
  return out.str();
}

std::string to_text(const std::vector<Check>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.suite << ' ' << c.name;
    if (c.p) out << " p=" << c.p;
    if (c.p2) out << " p2=" << c.p2;
    out << '\n';
    if (!c.lhs.empty()) out << "    lhs: " << c.lhs << '\n';
    if (!c.rhs.empty()) out << "    rhs: " << c.rhs << '\n';
    if (!c.note.empty()) out << "    note: " << c.note << '\n';
  }
  return out.str();
}

}  // namespace arithcurv
