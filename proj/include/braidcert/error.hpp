#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidcert {

enum class ErrorCode {
  kStrandMismatch,
  kBadStrands,
  kBadLetter,
  kWordTooLong,
  kReductionBudgetExceeded,
  kParseError,
  kNotThreeBraid,
  kBadParameters,
  kBadGenus,
  kSplitBinding,
};

std::string_view error_name(ErrorCode code);

// Every library failure is reported through this one exception type; the
// code names the failure and is what the CLI prints in error records.
class BraidError : public std::runtime_error {
 public:
  BraidError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace braidcert
