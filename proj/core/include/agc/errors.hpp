#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agc {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different Boolean algebras.
class algebra_mismatch : public error {
public:
  algebra_mismatch() : error("mixed algebras") {}
};

/// An enumeration (elements, contracts, or a law sweep) would exceed the
/// configured cap.
class cap_exceeded : public error {
public:
  cap_exceeded() : error("enumeration cap exceeded") {}
  explicit cap_exceeded(const std::string& detail)
      : error("enumeration cap exceeded: " + detail) {}
};

/// Formula text was rejected. Positions are 1-based character offsets; the
/// end of input counts as one past the last character.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error("syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A formula references a variable that is not a generator of the target
/// algebra.
class unknown_variable : public error {
public:
  explicit unknown_variable(std::string name)
      : error("unknown variable: " + name), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

private:
  std::string name_;
};

/// The folded adjoint bound failed its own residuation property. The theory
/// guarantees this cannot happen, so seeing it means an implementation bug.
class adjoint_witness_error : public error {
public:
  adjoint_witness_error() : error("adjoint witness failed") {}
};

}  // namespace agc
