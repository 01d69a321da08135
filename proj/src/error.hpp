#pragma once

#include <stdexcept>
#include <string>

namespace gexp {

// Error categories; numeric values line up with the CLI exit codes.
enum class errc {
  check_failed = 1,  // a verification step came out false
  invalid = 2,       // bad arguments, contract violations, parse failures
  cap_exceeded = 3,  // enumeration or size cap hit
  internal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace gexp
