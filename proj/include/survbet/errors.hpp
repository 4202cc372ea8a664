#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace survbet {

/// Argument outside an operation's domain (negative age, probability
/// outside (0,1), zero sample size, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Parameter set rejected at construction (eta <= 0, sigma <= 0, ...).
class InvalidParamsError : public std::invalid_argument {
public:
  explicit InvalidParamsError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// hazard(t) requested where the survival function is exactly zero.
class UndefinedHazardError : public std::domain_error {
public:
  explicit UndefinedHazardError(const std::string& what)
      : std::domain_error(what) {}
};

/// Conditional survival requested for an extinct cohort (Phi(t) = 0).
class ConditioningOnNullEventError : public std::domain_error {
public:
  explicit ConditioningOnNullEventError(const std::string& what)
      : std::domain_error(what) {}
};

/// epsilon_age target is below the floor of a constant or rising ratio.
class UnreachableEpsilonError : public std::runtime_error {
public:
  explicit UnreachableEpsilonError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Tail classifier could not match any of the four cases within the
/// horizon; carries the ratio sequence it examined.
class IndeterminateClassificationError : public std::runtime_error {
public:
  IndeterminateClassificationError(const std::string& what,
                                   std::vector<double> evidence)
      : std::runtime_error(what), evidence_(std::move(evidence)) {}

  const std::vector<double>& evidence() const { return evidence_; }

private:
  std::vector<double> evidence_;
};

/// Sample unusable for fitting (all observations identical).
class DegenerateSampleError : public std::invalid_argument {
public:
  explicit DegenerateSampleError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Life table has fewer usable rows than the fit requires.
class InsufficientDataError : public std::invalid_argument {
public:
  explicit InsufficientDataError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Malformed life-table text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace survbet
