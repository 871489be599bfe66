#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace singkit {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector over a fixed number of variables, with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exps);
  static Monomial from_span(std::span<const int> exps);
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const { return n_; }
  int degree() const { return static_cast<int>(deg_); }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace singkit
