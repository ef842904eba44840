#pragma once

#include <stdexcept>
#include <string>

namespace tricut {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller supplied input that violates an operation's precondition.
/// The CLI maps every subclass to exit code 2.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotSimple : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class MissingColor : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class VerticalLine : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class BoundaryPoint : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class OriginOnCurve : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class UnboundedFace : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class DegenerateApex : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class OnBoundary : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class EndpointOnLine : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class NotPseudomanifold : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};
class GenerationFailed : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// A solver broke its own invariant (a result that should be impossible). Never
/// a user error; `trace()` carries a JSON dump for post-mortem inspection.
/// The CLI maps it to exit code 3.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what, std::string trace = {})
      : Error(what), trace_(std::move(trace)) {}
  const std::string& trace() const noexcept { return trace_; }

 private:
  std::string trace_;
};

class MixedParity : public InternalError {
 public:
  using InternalError::InternalError;
};
class NoCutFound : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace tricut
