#include "nhlab/scalar.hpp"

#include <functional>

#include "nhlab/error.hpp"

namespace nhlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kUnsupportedField: return "UnsupportedField";
    case ErrorCode::kDivisionNotExact: return "DivisionNotExact";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSystemMismatch: return "SystemMismatch";
    case ErrorCode::kInfiniteGroup: return "InfiniteGroup";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTakeuchiViolation: return "TakeuchiViolation";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kEnumerationLimit: return "EnumerationLimit";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "unknown";
}

std::string Field::name() const {
  return radicand == 0 ? "rational" : "quadratic:" + std::to_string(radicand);
}

Scalar::Scalar(mpq_class a, mpq_class b, int radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ < 0 || d_ == 1) throw Error(ErrorCode::kUnsupportedField, "invalid radicand");
  if (d_ == 0 && sgn(b_) != 0) throw Error(ErrorCode::kUnsupportedField, "radical part without radicand");
  normalize();
}

Scalar Scalar::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::sqrt(int d) { return Scalar(mpq_class(0), mpq_class(1), d); }

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

int Scalar::join_radicand(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error(ErrorCode::kFieldMismatch, "scalars from different quadratic fields");
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (d_ == 0) {
    Scalar r;
    r.a_ = 1 / a_;
    return r;
  }
  mpq_class norm = a_ * a_ - b_ * b_ * d_;
  Scalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = d_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  int d = join_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  int d = join_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  int d = join_radicand(o);
  mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.d_ == 0) {
    if (sgn(o.a_) == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero scalar");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool Scalar::structurally_less(const Scalar& o) const {
  if (d_ != o.d_) return d_ < o.d_;
  if (a_ != o.a_) return a_ < o.a_;
  return b_ < o.b_;
}

std::string Scalar::to_string() const {
  if (d_ == 0) return a_.get_str();
  std::string root = "sqrt" + std::to_string(d_);
  std::string radical;
  if (b_ == 1) {
    radical = root;
  } else if (b_ == -1) {
    radical = "-" + root;
  } else {
    radical = b_.get_str() + "*" + root;
  }
  if (sgn(a_) == 0) return radical;
  if (radical[0] == '-') return "(" + a_.get_str() + radical + ")";
  return "(" + a_.get_str() + "+" + radical + ")";
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<std::string>{}(a_.get_str());
  if (d_ != 0) h ^= std::hash<std::string>{}(b_.get_str()) * 31 + static_cast<std::size_t>(d_);
  return h;
}

bool field_contains(const Field& field, const Scalar& x) {
  return x.radicand() == 0 || x.radicand() == field.radicand;
}

}  // namespace nhlab
