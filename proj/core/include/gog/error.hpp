#pragma once

#include <stdexcept>
#include <string>

namespace gog {

enum class ErrorCode {
  // document / graph construction
  SyntaxError,
  ZeroLabel,
  UnknownSymbol,
  BadInvolution,
  DuplicateId,
  RootViolation,
  NonRootAttachment,
  InvalidSpec,
  // words
  UnsoundWord,
  EndpointMismatch,
  // twists
  GraphMismatch,
  NotInCentralizer,
  RelationNotPreserved,
  // i/o
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gog
