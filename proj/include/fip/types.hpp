#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace fip {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Shape or size mismatch between operands.
class DimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold (e.g. non-PD input).
class PreconditionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Constraint matrix does not have the required rank.
class RankError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Objective decreases without bound along a feasible direction.
class UnboundedProblemError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A freedom direction has an infinite one-sided steplength, so no geometric
// center exists along it.
class UnboundedFreedomError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Centering was requested but the freedom basis is empty.
class NoFreedomError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A centering correction could not be made positive definite.
class CenteringError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs violate the feasibility conditions of a duality check.
class FeasibilityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed problem file; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, long line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fip
