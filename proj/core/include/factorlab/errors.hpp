#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace factorlab {

/// Failure categories raised by the library. Operations document which
/// codes they can produce; everything else is a logic error in the caller.
enum class ErrorCode {
  EmptyInput,
  ZeroGenerator,
  NonCoprime,
  NotAMember,
  NegativeElement,
  ZeroElement,
  DimensionMismatch,
  ValueMismatch,
  Inconsistent,
  Underdetermined,
  PreconditionViolated,
  BoundTooSmall,
  CeilingExceeded,
  EmptyDelta,
  Overflow,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

/// 64-bit arithmetic that raises Overflow instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace factorlab
