#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singkit/rational.hpp"

namespace singkit {

/// Dense univariate polynomial over the rationals, coefficients stored low to high.
/// The zero polynomial has no coefficients; otherwise the top coefficient is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  Rational eval(const Rational& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero for b = 0.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd (zero when both are zero).
  static UPoly gcd(UPoly a, UPoly b);
  /// Returns (g, s, t) with s*a + t*b = g, g monic.
  struct Bezout;
  static Bezout xgcd(const UPoly& a, const UPoly& b);

  /// Squarefree part, monic.
  UPoly squarefree_part() const;

  std::string to_string(const std::string& var = "theta") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UPoly::Bezout {
  UPoly g, s, t;
};

/// All distinct rational roots, ascending. Exact and complete: roots are found
/// modulo a prime, Hensel-lifted, reconstructed and checked by evaluation.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace singkit
