#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chernloci {

enum class ErrorKind {
  Validation,  // bad input; CLI exit code 1
  Internal,    // broken invariant; CLI exit code 2
};

// `condition` names the violated rule, e.g. "condition (3)" or "q=0".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string condition, const std::string& message)
      : std::runtime_error(message), kind_(kind), condition_(std::move(condition)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  ErrorKind kind_;
  std::string condition_;
};

[[noreturn]] inline void validation_error(const std::string& condition,
                                          const std::string& detail = {}) {
  throw Error(ErrorKind::Validation, condition,
              detail.empty() ? condition : condition + ": " + detail);
}

[[noreturn]] inline void internal_error(const std::string& what) {
  throw Error(ErrorKind::Internal, "internal", what);
}

}  // namespace chernloci
