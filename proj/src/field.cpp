#include "lietrip/field.hpp"

#include <charconv>
#include <stdexcept>

#include "lietrip/error.hpp"

namespace lietrip {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("not a supported prime: " + std::to_string(p));
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view tag) {
  if (tag == "Q") return rationals();
  if (tag.starts_with("Fp:")) {
    auto digits = tag.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
      throw std::invalid_argument("malformed field tag: " + std::string(tag));
    return prime(p);
  }
  throw std::invalid_argument("unknown field tag: " + std::string(tag));
}

std::string FieldSpec::tag() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
  } else {
    long p = static_cast<long>(field.characteristic());
    long r = value % p;
    r_ = static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const auto p = field.characteristic();
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0)
    throw std::domain_error("denominator not invertible mod " + std::to_string(p));
  r_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed scalar: \"" + s + "\"");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
  q.canonicalize();
  return Scalar(field, q);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return q_;
  return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else if (r_ != 0) {
    out.r_ = field_.characteristic() - r_;
  }
  return out;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw DimensionError("field mismatch: " + field_.tag() + " vs " + o.field_.tag());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = (r_ + o.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    const auto p = field_.characteristic();
    r_ = (r_ + p - o.r_) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace lietrip
