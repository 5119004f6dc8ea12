#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mslat {

// Input or validation failure. `kind` is the stable machine-readable tag the
// CLI prints as `error:<kind>: message`.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

// A machine-checked structure theorem failed on concrete data, or an internal
// cross-check broke. The CLI maps this to exit code 2.
class TheoremFalsified : public std::logic_error {
public:
  explicit TheoremFalsified(const std::string& message)
      : std::logic_error(message) {}
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool ok, const std::string& kind, const std::string& message) {
  if (!ok) fail(kind, message);
}

inline void check_theorem(bool ok, const std::string& message) {
  if (!ok) throw TheoremFalsified(message);
}

}  // namespace mslat
