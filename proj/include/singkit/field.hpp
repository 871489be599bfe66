#pragma once

#include <memory>
#include <string>
#include <vector>

#include "singkit/error.hpp"
#include "singkit/rational.hpp"
#include "singkit/upoly.hpp"

namespace singkit {

/// The rationals, or a simple extension Q[theta]/(m) for a monic squarefree m.
/// Irreducibility of m is not certified; a zero divisor met during inversion is
/// reported as ZeroDivisorError carrying the factor it exposed.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws NotMonic, NotSquarefree, or InvalidArgument (degree < 2).
  static Field extension(const UPoly& minpoly);

  bool is_rational() const { return !minpoly_; }
  int degree() const { return minpoly_ ? minpoly_->degree() : 1; }
  /// Defined only for extensions.
  const UPoly& minpoly() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::shared_ptr<const UPoly> minpoly_;
};

class ZeroDivisorError : public Error {
 public:
  explicit ZeroDivisorError(UPoly factor);
  const UPoly& factor() const noexcept { return factor_; }

 private:
  UPoly factor_;
};

/// Element of a Field, stored as its reduced representative (coefficients of
/// 1, theta, theta^2, ... trimmed of trailing zeros). Zero has no coefficients.
///
/// Rational-valued elements mix freely with elements of any extension; mixing
/// two different extensions throws FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Rational& q);  // NOLINT(google-explicit-constructor)
  FieldElement(long v);             // NOLINT(google-explicit-constructor)
  FieldElement(int v) : FieldElement(static_cast<long>(v)) {}  // NOLINT
  FieldElement(const Field& field, std::vector<Rational> coeffs);

  static FieldElement theta(const Field& field);

  const Field& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// Requires is_rational().
  Rational rational_value() const;

  /// Throws DivisionByZero or ZeroDivisorError.
  FieldElement inverse() const;
  /// Same value viewed in `field` (must be compatible).
  FieldElement in_field(const Field& field) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Number of nonzero coefficients in the theta-expansion.
  std::size_t term_count() const;
  /// "3/2", "theta", "2*theta^3 - 1/2".
  std::string to_string() const;

 private:
  void trim();
  static const Field& merge(const Field& a, const Field& b);

  Field field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const FieldElement& e) { return e.is_zero(); }

}  // namespace singkit
