#pragma once

#include <stdexcept>
#include <string>

namespace pforge {

/// Whether a failure comes from malformed input or from a mathematical
/// precondition (non-involutive bivector, degenerate matrix, ...).
enum class ErrorClass { input, precondition };

/// Exception carrying a machine-readable kind such as "dimension-mismatch".
/// The CLI maps ErrorClass onto its exit code.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what,
        ErrorClass cls = ErrorClass::input, std::string witness = {})
      : std::runtime_error(what),
        kind_(std::move(kind)),
        class_(cls),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  ErrorClass error_class() const noexcept { return class_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  ErrorClass class_;
  std::string witness_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what,
                              ErrorClass cls = ErrorClass::input,
                              std::string witness = {}) {
  throw Error(kind, what, cls, std::move(witness));
}

}  // namespace pforge
