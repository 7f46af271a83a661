#ifndef CRITINF_ERRORS_HPP
#define CRITINF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace critinf {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct UnknownVariable : ParseError {
  UnknownVariable(const std::string& name, std::size_t pos)
      : ParseError("unknown identifier '" + name + "'", pos) {}
};

struct VariableOccurs : Error {
  explicit VariableOccurs(const std::string& v)
      : Error("variable '" + v + "' already occurs in the polynomial") {}
};

struct InfiniteDimensional : Error {
  InfiniteDimensional() : Error("quotient ring is not finite dimensional") {}
};

// Violations of the isolatedness hypotheses and their relatives.  The CLI
// maps these to exit code 2.
struct HypothesisViolation : Error {
  explicit HypothesisViolation(const std::string& msg) : Error(msg) {}
};

struct NonIsolatedAffineSingularities : HypothesisViolation {
  NonIsolatedAffineSingularities()
      : HypothesisViolation("affine singularities are not isolated "
                            "(Jacobian quotient is infinite dimensional)") {}
};

struct NonIsolatedInfinitySingularities : HypothesisViolation {
  NonIsolatedInfinitySingularities()
      : HypothesisViolation("singularities at infinity are not isolated") {}
};

struct ChartCoverageFailure : HypothesisViolation {
  explicit ChartCoverageFailure(const std::string& msg)
      : HypothesisViolation(msg) {}
};

struct NotStabilizing : HypothesisViolation {
  explicit NotStabilizing(const std::string& msg) : HypothesisViolation(msg) {}
};

struct GenericNonIsolated : HypothesisViolation {
  explicit GenericNonIsolated(const std::string& msg)
      : HypothesisViolation(msg) {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& msg) : Error(msg) {}
};

}  // namespace critinf

#endif
