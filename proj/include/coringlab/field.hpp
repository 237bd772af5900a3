#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "coringlab/error.hpp"

namespace coringlab {

using Rational = mpq_class;

// Base field descriptor: F_p for a prime p < 2^31, or Q when p == 0.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  // Accepts "Q", "F_p" or "GF(p)".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

void require_same_field(const Field& a, const Field& b);

class Scalar {
 public:
  Scalar() = default;
  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_rational(const Field& f, const Rational& q);
  static Scalar from_residue(const Field& f, std::uint32_t r);
  // "3/7", "-4", "2 mod 5". A residue form must name the field's prime.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  std::uint32_t residue() const { return residue_; }
  const Rational& rational() const { return value_; }

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Field field_;
  std::uint32_t residue_ = 0;
  Rational value_;
};

}  // namespace coringlab
