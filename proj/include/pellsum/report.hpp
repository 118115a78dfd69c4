#pragma once

#include <string>
#include <vector>

namespace pellsum {

// paper_discrepancy_confirmed: a printed formula differs from its derived
// form and the derived form passes the independent oracle. Not a failure.
enum class CheckStatus { pass, fail, paper_discrepancy_confirmed };

const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string params;
  CheckStatus status = CheckStatus::pass;
  std::string expected;
  std::string actual;
  std::string note;
};

}  // namespace pellsum
