#pragma once

#include <stdexcept>
#include <string>

namespace echar {

// Every failure the library can signal, split into two families:
//  - input errors (bad data, violated preconditions) -> CLI exit code 2
//  - engine errors (the recursion itself cannot proceed) -> CLI exit code 3
enum class ErrorKind { Input, Engine };

class Error : public std::runtime_error {
public:
  Error(std::string name, ErrorKind kind, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)), kind_(kind) {}

  const std::string& name() const { return name_; }
  ErrorKind kind() const { return kind_; }

private:
  std::string name_;
  ErrorKind kind_;
};

#define ECHAR_DEFINE_ERROR(NAME, KIND)                           \
  class NAME : public Error {                                    \
  public:                                                        \
    explicit NAME(const std::string& msg = "")                   \
        : Error(#NAME, ErrorKind::KIND, msg) {}                  \
  };

ECHAR_DEFINE_ERROR(DivisionByZero, Input)
ECHAR_DEFINE_ERROR(FieldMismatch, Input)
ECHAR_DEFINE_ERROR(NotPrime, Input)
ECHAR_DEFINE_ERROR(NotADivisor, Input)
ECHAR_DEFINE_ERROR(AmbientMismatch, Input)
ECHAR_DEFINE_ERROR(UnknownVariable, Input)
ECHAR_DEFINE_ERROR(SingularMatrix, Input)
ECHAR_DEFINE_ERROR(VariableClash, Input)
ECHAR_DEFINE_ERROR(NotHomogeneous, Input)
ECHAR_DEFINE_ERROR(NotZeroDimensional, Input)
ECHAR_DEFINE_ERROR(ZeroPolynomial, Input)
ECHAR_DEFINE_ERROR(UnitIdeal, Input)
ECHAR_DEFINE_ERROR(SequenceTooShort, Input)
ECHAR_DEFINE_ERROR(BudgetExceeded, Input)
ECHAR_DEFINE_ERROR(ParseError, Input)
ECHAR_DEFINE_ERROR(UndeclaredVariable, Input)
ECHAR_DEFINE_ERROR(BadFieldSpec, Input)

ECHAR_DEFINE_ERROR(RetriesExhausted, Engine)
ECHAR_DEFINE_ERROR(DegenerateBranchLocus, Engine)
ECHAR_DEFINE_ERROR(InseparableEliminant, Engine)
ECHAR_DEFINE_ERROR(ConeIdentityViolation, Engine)

#undef ECHAR_DEFINE_ERROR

}  // namespace echar
