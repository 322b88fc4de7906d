#pragma once

#include <stdexcept>
#include <string>

namespace greenring {

enum class ErrorKind {
  index_out_of_range,
  context_mismatch,
  invalid_context,
  support,
  divisibility,
  domain,
  invalid_module,
  oracle_capacity,
  not_applicable,
  parse,
  overflow,
  internal,
};

/// Base exception for every failure raised by the library. The kind lets
/// callers (the CLI in particular) tell misuse apart from internal faults.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True when the failure is caused by invalid input rather than a bug.
  bool is_usage() const noexcept {
    return kind_ != ErrorKind::internal && kind_ != ErrorKind::overflow;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace greenring
