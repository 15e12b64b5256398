#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "hb/error.hpp"

namespace hb {

struct FieldSpec {
  enum class Kind : std::uint8_t { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // modulus, set iff PrimeField

  bool is_q() const { return kind == Kind::Rationals; }
  std::string str() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_u64(std::uint64_t n);

// Rationals descriptor.
FieldSpec field_make();
// GF(p) descriptor; p must be prime and < 2^31.
FieldSpec field_make(std::uint64_t p);

// Exact field element: reduced big-integer fraction over Q, residue in [0,p) over GF(p).
class Scalar {
public:
  Scalar() = default;  // 0 in Q

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long long v);
  static Scalar of_mpz(const FieldSpec& f, const mpz_class& v);
  // Accepts -?digits(/digits)?; over GF(p), a/b parses as a*inv(b) mod p.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return fs_; }

  Scalar add(const Scalar& o) const;
  Scalar sub(const Scalar& o) const;
  Scalar neg() const;
  Scalar mul(const Scalar& o) const;
  Scalar inv() const;

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "num" or "num/den" (Q, lowest terms, positive denominator); decimal residue (GF).
  std::string str() const;

  const mpq_class& rational() const;  // Q only
  std::uint64_t residue() const;      // GF only

private:
  FieldSpec fs_{};
  mpq_class q_{0};
  std::uint64_t r_ = 0;

  void check_same_field(const Scalar& o) const;
};

// Residue helpers used by the GF(p) fast paths.
std::uint64_t gf_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t gf_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t gf_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t gf_inv(std::uint64_t a, std::uint64_t p);  // DivisionByZero on 0

}  // namespace hb
