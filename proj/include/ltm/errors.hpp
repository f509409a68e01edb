#ifndef LTM_ERRORS_HPP_
#define LTM_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace ltm {

/// Error raised by library operations on invalid inputs or unrecoverable
/// numeric conditions. `code()` is a stable kebab-case identifier
/// (e.g. "invalid-params", "fit-failed", "empty-sample") suitable for
/// matching in tests and CLI diagnostics; `what()` adds detail.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw DomainError(std::move(code), message);
}

}  // namespace ltm

#endif  // LTM_ERRORS_HPP_
