#pragma once

#include <stdexcept>
#include <string>

namespace mw {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  Internal,
};

// The one exception type the core throws.  The C ABI layer maps code() onto
// its status enum; nothing else should leak across module boundaries.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace mw
