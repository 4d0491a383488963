#pragma once

#include <stdexcept>
#include <string>

namespace nhlab {

/// Error categories shared by the C++ core and the C API.
enum class ErrorCode : int {
  kOk = 0,
  kParse = 1,
  kConfig = 2,
  kUnsupportedField = 3,
  kDivisionNotExact = 4,
  kDivisionByZero = 5,
  kRingMismatch = 6,
  kDimensionMismatch = 7,
  kSystemMismatch = 8,
  kInfiniteGroup = 9,
  kInvalidArgument = 10,
  kTakeuchiViolation = 11,
  kFieldMismatch = 12,
  kEnumerationLimit = 13,
  kInternal = 14,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParse,
              "parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nhlab
