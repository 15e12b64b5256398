#pragma once

#include <stdexcept>
#include <string>

namespace hb {

enum class Errc {
  NonPrimeModulus,
  ParseError,
  DivisionByZero,
  FieldMismatch,
  ArityMismatch,
  InvalidPermutation,
  NotCocommutative,
  NotModuleBialgebra,
  HypothesisViolated,
  CocycleInvalid,
  MatchedInvalid,
  SkewBraceInvalid,
  NotAnAction,
  OrderTooLarge,
  ArityTooLarge,
  NotGroupAlgebraBrace,
  NotDerivation,
  CapExceeded,
  CharacteristicMismatch,
  SchemaError,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace hb
