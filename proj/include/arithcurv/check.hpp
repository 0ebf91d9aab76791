#ifndef ARITHCURV_CHECK_HPP
#define ARITHCURV_CHECK_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace arithcurv {

/// One line of a verification report.
struct Check {
  std::string suite;
  std::string name;
  unsigned long p = 0;
  unsigned long p2 = 0;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

/// Stable sort on (suite, p, p2); checks of one suite keep their order.
void sort_checks(std::vector<Check>& checks);
bool all_pass(const std::vector<Check>& checks);

nlohmann::json to_json(const Check& c);
std::string to_csv(const std::vector<Check>& checks);
std::string to_text(const std::vector<Check>& checks);

}  // namespace arithcurv

#endif  // ARITHCURV_CHECK_HPP
