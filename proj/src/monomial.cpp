#include "singkit/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "singkit/error.hpp"

namespace singkit {

namespace {

void check_nvars(std::size_t n) {
  if (n > kMaxVars) {
    throw Error(Errc::InvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported, got " + std::to_string(n));
  }
}

Monomial::Exponent checked_exponent(long v) {
  if (v < 0 || v > std::numeric_limits<Monomial::Exponent>::max()) {
    throw Error(Errc::InvalidArgument, "exponent out of range: " + std::to_string(v));
  }
  return static_cast<Monomial::Exponent>(v);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_nvars(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (int e : exps) set(i++, e);
}

Monomial Monomial::from_span(std::span<const int> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int value) {
  deg_ -= e_[i];
  e_[i] = checked_exponent(value);
  deg_ += e_[i];
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r = other;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<Exponent>(other.e_[i] - e_[i]);
  r.deg_ = other.deg_ - deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = std::max(e_[i], other.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.n_; ++i) {
    r.e_[i] = checked_exponent(static_cast<long>(a.e_[i]) + b.e_[i]);
  }
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

}  // namespace singkit
