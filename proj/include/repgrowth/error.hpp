#pragma once

#include <stdexcept>
#include <string>

namespace repgrowth {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Domain,
  Schema,
  SizeMismatch,
  Orthogonality,
  Limit,
  Internal,
};

/// Every failure raised by the library. The code survives the C boundary as a
/// distinct status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace repgrowth
