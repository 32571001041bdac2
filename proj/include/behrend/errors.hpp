#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace behrend {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation: unit ideal, infinite colength,
// non-normal input to a normal-only routine, malformed towers.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A combination no engine covers.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class TowerError : public DomainError {
 public:
  enum class Kind {
    EmptyExponents,
    NonPositiveExponent,
    NotIncreasing,
    ConstantTangent,
    TangentDegree,
  };
  TowerError(Kind kind, const std::string& message)
      : DomainError(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace behrend
