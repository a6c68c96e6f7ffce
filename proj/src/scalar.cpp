#include "homform/scalar.hpp"

#include <ostream>

#include "homform/errors.hpp"

namespace homform {

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

QuadraticField::QuadraticField(Rational c0, Rational c1)
    : c0_(std::move(c0)), c1_(std::move(c1)) {
  c0_.canonicalize();
  c1_.canonicalize();
  Rational disc = c1_ * c1_ - 4 * c0_;
  if (is_rational_square(disc)) {
    throw PreconditionError("t^2 + c1 t + c0 is reducible over Q: " +
                            rational_to_string(c1_) + ", " +
                            rational_to_string(c0_));
  }
}

FieldPtr make_quadratic_field(const Rational& c0, const Rational& c1) {
  return std::make_shared<const QuadraticField>(c0, c1);
}

FieldPtr gaussian_field() {
  static const FieldPtr field = make_quadratic_field(1, 0);
  return field;
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  a_ = Rational(num, den);
  a_.canonicalize();
}

Scalar::Scalar(Rational a, Rational b, FieldPtr field)
    : a_(std::move(a)), b_(std::move(b)), field_(std::move(field)) {
  a_.canonicalize();
  b_.canonicalize();
  if (!field_ && sgn(b_) != 0) {
    throw PreconditionError("nonzero t-coordinate without a quadratic field");
  }
}

Scalar Scalar::generator(FieldPtr field) {
  if (!field) throw PreconditionError("generator of Q requested");
  return Scalar(0, 1, std::move(field));
}

void Scalar::adopt_field(const Scalar& o) {
  if (!o.field_ || field_.get() == o.field_.get()) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (!(*field_ == *o.field_)) {
    throw PreconditionError("arithmetic between different quadratic fields");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt_field(o);
  a_ += o.a_;
  if (field_) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt_field(o);
  a_ -= o.a_;
  if (field_) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt_field(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b t)(c + d t) = ac + (ad + bc) t + bd t^2, t^2 = -c1 t - c0
  Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - field_->c0() * bd;
  Rational b = a_ * o.b_ + b_ * o.a_ - field_->c1() * bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.b_) == 0 && sgn(b_) == 0) {
    if (sgn(o.a_) == 0) throw PreconditionError("division by zero");
    adopt_field(o);
    a_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Rational Scalar::norm() const {
  if (sgn(b_) == 0) return a_ * a_;
  return a_ * a_ - field_->c1() * a_ * b_ + field_->c0() * b_ * b_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (sgn(b_) == 0) {
    Scalar r = *this;
    r.a_ = 1 / a_;
    return r;
  }
  // conjugate of t is -c1 - t
  Rational n = norm();
  Rational ca = a_ - field_->c1() * b_;
  Rational cb = -b_;
  return Scalar(ca / n, cb / n, field_);
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return rational_to_string(a_);
  std::string bt = rational_to_string(b_) + "*t";
  if (sgn(a_) == 0) return bt;
  if (sgn(b_) < 0) return rational_to_string(a_) + "-" + rational_to_string(-b_) + "*t";
  return rational_to_string(a_) + "+" + bt;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace homform
