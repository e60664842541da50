#pragma once

#include <stdexcept>
#include <string>

namespace cominor {

enum class ErrorKind {
  kDomain,              // argument outside an operation's domain
  kNotButterfly,        // arc contraction violates the butterfly rule
  kHypothesis,          // degree or structural precondition of a finder fails
  kInvariantViolation,  // internal state contradicts a proven invariant
  kContractStep,        // scheme queried outside its contract
  kParse,               // malformed input text
};

const char* to_string(ErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GraphError(kind, what);
}

}  // namespace cominor
