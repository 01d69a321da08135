#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace gexp::report {

using json = nlohmann::ordered_json;

enum class Status { pass, fail, cited };

const char* status_name(Status s);

// One verified (or cited) statement.  claim states the mathematical fact,
// details says what was actually swept, data carries the numbers.
struct Check {
  std::string id;
  std::string claim;
  Status status = Status::fail;
  std::string details;
  json data;
};

class Report {
 public:
  std::string title;
  json meta;
  std::vector<Check> checks;
  json verdict;

  // True when no computed check failed; cited entries never count as pass.
  bool passed() const;
  std::string render_text() const;
  std::string render_json() const;
};

// Uniform command output: both renderings plus the bits the exit code needs.
struct Rendered {
  std::string text;
  std::string json_text;
  bool ok = true;
  std::vector<Check> checks;
};

Rendered render(const Report& r);

}  // namespace gexp::report
