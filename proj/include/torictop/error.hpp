#pragma once

#include <stdexcept>
#include <string>

namespace torictop {

/// Failure classes map onto the CLI exit codes (2, 3, 4).
enum class ErrorKind { InvalidInput, Precondition, SizeGuard };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& detail)
      : std::runtime_error(detail), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Short machine-readable tag, e.g. "genericity_violation".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& detail, std::string code = "invalid_input")
      : Error(ErrorKind::InvalidInput, std::move(code), detail) {}
};

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& detail,
                                std::string code = "precondition_violated")
      : Error(ErrorKind::Precondition, std::move(code), detail) {}
};

class GenericityViolation : public PreconditionViolated {
 public:
  explicit GenericityViolation(const std::string& detail)
      : PreconditionViolated(detail, "genericity_violation") {}
};

class NotComplete : public PreconditionViolated {
 public:
  explicit NotComplete(const std::string& detail)
      : PreconditionViolated(detail, "not_complete") {}
};

class PointOnBoundary : public PreconditionViolated {
 public:
  explicit PointOnBoundary(const std::string& detail)
      : PreconditionViolated(detail, "point_on_boundary") {}
};

class SizeGuardExceeded : public Error {
 public:
  explicit SizeGuardExceeded(const std::string& detail)
      : Error(ErrorKind::SizeGuard, "size_guard", detail) {}
};

}  // namespace torictop
