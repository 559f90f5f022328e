#pragma once

#include <stdexcept>
#include <string>

namespace ke {

// Every failure the library can report. Callers that need to branch on the
// kind of failure (the CLI exit-code mapping, tests) read Error::code().
enum class ErrorCode {
  EmptyCollection,
  NotRelevant,
  TooLarge,
  NotAMember,
  CollectionTooSmall,
  HypothesisFails,
  PreconditionFails,
  NotDistinct,
  VertexOutOfRange,
  EmptySet,
  DuplicateMember,
  InvalidElement,
  ParseError,
  UnknownTheorem,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ke
