#include "hb/scalar.hpp"

#include <cctype>

namespace hb {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::NonPrimeModulus: return "NonPrimeModulus";
    case Errc::ParseError: return "ParseError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::NotCocommutative: return "NotCocommutative";
    case Errc::NotModuleBialgebra: return "NotModuleBialgebra";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::CocycleInvalid: return "CocycleInvalid";
    case Errc::MatchedInvalid: return "MatchedInvalid";
    case Errc::SkewBraceInvalid: return "SkewBraceInvalid";
    case Errc::NotAnAction: return "NotAnAction";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::ArityTooLarge: return "ArityTooLarge";
    case Errc::NotGroupAlgebraBrace: return "NotGroupAlgebraBrace";
    case Errc::NotDerivation: return "NotDerivation";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::CharacteristicMismatch: return "CharacteristicMismatch";
    case Errc::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

std::string FieldSpec::str() const {
  if (is_q()) return "Q";
  return "GF(" + std::to_string(p) + ")";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec field_make() { return FieldSpec{FieldSpec::Kind::Rationals, 0}; }

FieldSpec field_make(std::uint64_t p) {
  if (p >= (1ull << 31))
    fail(Errc::NonPrimeModulus, "modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime_u64(p))
    fail(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
  return FieldSpec{FieldSpec::Kind::PrimeField, p};
}

std::uint64_t gf_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t gf_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t gf_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
}

std::uint64_t gf_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p) + ")");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t; new_t = tmp;
    tmp = r - q * new_r;
    r = new_r; new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.fs_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) {
  Scalar s;
  s.fs_ = f;
  if (f.is_q()) s.q_ = 1;
  else s.r_ = 1 % f.p;
  return s;
}

Scalar Scalar::of_int(const FieldSpec& f, long long v) {
  Scalar s;
  s.fs_ = f;
  if (f.is_q()) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    long long m = v % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::of_mpz(const FieldSpec& f, const mpz_class& v) {
  Scalar s;
  s.fs_ = f;
  if (f.is_q()) {
    s.q_ = mpq_class(v);
  } else {
    mpz_class m;
    mpz_class pz(static_cast<unsigned long>(f.p));
    mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
    s.r_ = m.get_ui();
  }
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  // strict grammar: -?digits(/digits)?
  auto bad = [&]() { fail(Errc::ParseError, "bad scalar literal '" + std::string(text) + "'"); };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) bad();
  std::size_t num_end = i;
  std::string_view den;
  if (i < text.size()) {
    if (text[i] != '/') bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) bad();
    den = text.substr(den_begin);
  }
  mpz_class num(std::string(text.substr(0, num_end)), 10);
  mpz_class dnm = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (dnm == 0) fail(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (f.is_q()) {
    Scalar s;
    s.fs_ = f;
    s.q_ = mpq_class(num, dnm);
    s.q_.canonicalize();
    return s;
  }
  Scalar n = of_mpz(f, num);
  Scalar d = of_mpz(f, dnm);
  if (d.is_zero())
    fail(Errc::DivisionByZero, "denominator of '" + std::string(text) + "' is 0 mod " +
                                   std::to_string(f.p));
  return n.mul(d.inv());
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(fs_ == o.fs_))
    fail(Errc::FieldMismatch, fs_.str() + " vs " + o.fs_.str());
}

Scalar Scalar::add(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.fs_ = fs_;
  if (fs_.is_q()) s.q_ = q_ + o.q_;
  else s.r_ = gf_add(r_, o.r_, fs_.p);
  return s;
}

Scalar Scalar::sub(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.fs_ = fs_;
  if (fs_.is_q()) s.q_ = q_ - o.q_;
  else s.r_ = gf_sub(r_, o.r_, fs_.p);
  return s;
}

Scalar Scalar::neg() const {
  Scalar s;
  s.fs_ = fs_;
  if (fs_.is_q()) s.q_ = -q_;
  else s.r_ = r_ == 0 ? 0 : fs_.p - r_;
  return s;
}

Scalar Scalar::mul(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.fs_ = fs_;
  if (fs_.is_q()) s.q_ = q_ * o.q_;
  else s.r_ = gf_mul(r_, o.r_, fs_.p);
  return s;
}

Scalar Scalar::inv() const {
  Scalar s;
  s.fs_ = fs_;
  if (fs_.is_q()) {
    if (q_ == 0) fail(Errc::DivisionByZero, "inverse of 0 in Q");
    s.q_ = 1 / q_;
  } else {
    s.r_ = gf_inv(r_, fs_.p);
  }
  return s;
}

bool Scalar::is_zero() const { return fs_.is_q() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return fs_.is_q() ? q_ == 1 : r_ == 1 % fs_.p; }

bool Scalar::operator==(const Scalar& o) const {
  if (!(fs_ == o.fs_)) return false;
  return fs_.is_q() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (fs_.is_q()) {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }
  return std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
  if (!fs_.is_q()) fail(Errc::FieldMismatch, "rational() on a GF(p) scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (fs_.is_q()) fail(Errc::FieldMismatch, "residue() on a rational scalar");
  return r_;
}

}  // namespace hb
