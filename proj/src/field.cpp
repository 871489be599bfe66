#include "singkit/field.hpp"

#include <algorithm>

namespace singkit {

Field Field::extension(const UPoly& minpoly) {
  if (minpoly.degree() < 2) {
    throw Error(Errc::InvalidArgument, "defining polynomial must have degree >= 2");
  }
  if (minpoly.lead() != 1) throw Error(Errc::NotMonic, minpoly.to_string());
  if (UPoly::gcd(minpoly, minpoly.derivative()).degree() > 0) {
    throw Error(Errc::NotSquarefree, minpoly.to_string());
  }
  Field f;
  f.minpoly_ = std::make_shared<const UPoly>(minpoly);
  return f;
}

const UPoly& Field::minpoly() const {
  if (!minpoly_) throw Error(Errc::InvalidArgument, "the rationals have no defining polynomial");
  return *minpoly_;
}

bool operator==(const Field& a, const Field& b) {
  if (a.minpoly_ == b.minpoly_) return true;
  if (!a.minpoly_ || !b.minpoly_) return false;
  return *a.minpoly_ == *b.minpoly_;
}

std::string Field::to_string() const {
  if (!minpoly_) return "QQ";
  return "QQ[theta]/(" + minpoly_->to_string() + ")";
}

ZeroDivisorError::ZeroDivisorError(UPoly factor)
    : Error(Errc::ZeroDivisor, "defining polynomial has the factor " + factor.to_string()),
      factor_(std::move(factor)) {}

FieldElement::FieldElement(const Rational& q) {
  if (q != 0) {
    c_.push_back(q);
    c_.back().canonicalize();
  }
}

FieldElement::FieldElement(long v) {
  if (v != 0) c_.emplace_back(v);
}

FieldElement::FieldElement(const Field& field, std::vector<Rational> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  if (!field_.is_rational() && static_cast<int>(c_.size()) > field_.degree()) {
    UPoly r = UPoly::divmod(UPoly(c_), field_.minpoly()).second;
    c_ = r.coeffs();
  }
  if (field_.is_rational() && c_.size() > 1) {
    throw Error(Errc::InvalidArgument, "theta used without an extension field");
  }
  trim();
}

FieldElement FieldElement::theta(const Field& field) {
  if (field.is_rational()) throw Error(Errc::InvalidArgument, "theta requires an extension field");
  return FieldElement(field, {Rational(0), Rational(1)});
}

void FieldElement::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational FieldElement::rational_value() const {
  if (c_.size() > 1) throw Error(Errc::InvalidArgument, "element is not rational: " + to_string());
  return c_.empty() ? Rational(0) : c_[0];
}

const Field& FieldElement::merge(const Field& a, const Field& b) {
  if (a.is_rational()) return b;
  if (b.is_rational() || a == b) return a;
  throw Error(Errc::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

FieldElement FieldElement::in_field(const Field& field) const {
  FieldElement r = *this;
  r.field_ = merge(field, field_);
  if (field.is_rational() && c_.size() > 1) {
    throw Error(Errc::FieldMismatch, "cannot view " + to_string() + " over QQ");
  }
  if (!field.is_rational()) r.field_ = field;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.c_.empty()) return *this;
  if (!field_.is_rational() || !o.field_.is_rational()) field_ = merge(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (o.c_.empty()) return *this;
  if (!field_.is_rational() || !o.field_.is_rational()) field_ = merge(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (!field_.is_rational() || !o.field_.is_rational()) field_ = merge(field_, o.field_);
  if (c_.empty()) return *this;
  if (o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    Rational s = c_[0];
    c_ = o.c_;
    for (auto& c : c_) c *= s;
    return *this;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  const auto& m = field_.minpoly().coeffs();
  const std::size_t d = m.size() - 1;
  for (std::size_t i = prod.size(); i-- > d;) {
    if (prod[i] == 0) continue;
    Rational top = prod[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (m[j] == 0) continue;
      prod[i - d + j] -= top * m[j];
    }
    prod[i] = 0;
  }
  if (prod.size() > d) prod.resize(d);
  c_ = std::move(prod);
  trim();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (c_.empty()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (c_.size() == 1) {
    FieldElement r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  auto bz = UPoly::xgcd(UPoly(c_), field_.minpoly());
  if (bz.g.degree() > 0) throw ZeroDivisorError(bz.g);
  return FieldElement(field_, UPoly::divmod(bz.s, field_.minpoly()).second.coeffs());
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

std::size_t FieldElement::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return q != 0; }));
}

std::string FieldElement::to_string() const { return UPoly(c_).to_string("theta"); }

}  // namespace singkit
