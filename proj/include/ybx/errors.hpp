#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Zero denominator, division by zero, or otherwise ill-formed scalar data.
class MalformedScalar : public Error {
 public:
  using Error::Error;
};

class IncompleteAssignment : public Error {
 public:
  explicit IncompleteAssignment(std::string name)
      : Error("no value assigned to indeterminate '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Evaluation point lies on the zero set of a denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class FileError : public Error {
 public:
  using Error::Error;
};

enum class Axiom { associativity, unit, grading, antisymmetry, jacobi };

const char* to_string(Axiom axiom);

/// A structure table failed one of its axioms; `witness` holds the basis
/// indices of the first failing instance in lexicographic loop order.
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::vector<std::size_t> witness, const std::string& detail);
  Axiom axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Axiom axiom_;
  std::vector<std::size_t> witness_;
};

/// Scalar has free indeterminates where a constant is required.
class FreeIndeterminate : public Error {
 public:
  using Error::Error;
};

/// Operator parameters outside every Yang-Baxter case.
class NotYangBaxter : public Error {
 public:
  using Error::Error;
};

/// Requested inverse formula is invalid because `factor` vanishes.
class InvertibilityLocus : public Error {
 public:
  InvertibilityLocus(const std::string& what, std::string factor)
      : Error(what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// Map is nonzero on a basis tensor it is required to annihilate.
class SupportViolation : public Error {
 public:
  SupportViolation(const std::string& what, std::size_t left, std::size_t right)
      : Error(what), left_(left), right_(right) {}
  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }

 private:
  std::size_t left_;
  std::size_t right_;
};

class InvalidCenter : public Error {
 public:
  using Error::Error;
};

}  // namespace ybx
