#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <memory>
#include <string>

namespace homform {

using Rational = mpq_class;

/// The field Q[t]/(t^2 + c1 t + c0). The polynomial must be irreducible over Q.
class QuadraticField {
 public:
  QuadraticField(Rational c0, Rational c1);

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }

  bool operator==(const QuadraticField& other) const {
    return c0_ == other.c0_ && c1_ == other.c1_;
  }

 private:
  Rational c0_;
  Rational c1_;
};

using FieldPtr = std::shared_ptr<const QuadraticField>;

FieldPtr make_quadratic_field(const Rational& c0, const Rational& c1);

/// Gaussian rationals Q(i), i^2 + 1 = 0.
FieldPtr gaussian_field();

bool is_rational_square(const Rational& q);

/// Element a + b t of Q or of a quadratic extension of Q.
///
/// A null field means Q; then b is always zero. Arithmetic between a rational
/// scalar and an extension scalar promotes to the extension. Mixing two
/// different extensions throws PreconditionError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational v) : a_(std::move(v)) { a_.canonicalize(); }  // NOLINT
  Scalar(long num, long den);
  Scalar(Rational a, Rational b, FieldPtr field);

  /// The generator t of the given extension.
  static Scalar generator(FieldPtr field);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const FieldPtr& field() const { return field_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return sgn(b_) == 0 && a_ == 1; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  /// Throws PreconditionError on zero.
  Scalar inverse() const;
  /// Field norm a^2 - c1 a b + c0 b^2 (a^2 for rationals).
  Rational norm() const;

  bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical rendering: "n", "n/d", "b*t", "a+b*t", "a-b*t".
  std::string to_string() const;

 private:
  void adopt_field(const Scalar& o);

  Rational a_;
  Rational b_;
  FieldPtr field_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const Rational& q);

}  // namespace homform
