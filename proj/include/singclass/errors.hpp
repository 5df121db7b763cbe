#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singclass {

enum class ErrorCode {
  SyntaxError,
  UnknownVariable,
  DivisionByZeroInCoefficient,
  NonPrimeCharacteristic,
  FieldMismatch,
  NonInvertibleLinearPart,
  IndexOutOfRange,
  ExponentOverflow,
  BoundTooSmall,
  NotInMaximalIdeal,
  OrderTooSmall,
  NotIsolated,
  NotUnivariate,
  QNotFound,
  ArityMismatch,
  TooLarge,
  InvalidArgument,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures are reported through this exception type; `code()`
/// identifies the failure class, `position()` is set for parser errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

// Internal consistency check; failures map to CLI exit code 3.
void check_internal(bool condition, const char* what);

}  // namespace singclass
