#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lietrip {

/// Base field of every computation: the rationals or a prime field F_p.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  /// Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view tag);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string tag() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit constexpr FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec f) { return Scalar(f, 0L); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }

  /// Parses "n", "-n" or "p/q". Over F_p the denominator must be invertible.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; over F_p the representative in [0, p).
  mpq_class to_rational() const;
  std::string to_string() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace lietrip
