#include "singkit/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "singkit/error.hpp"

namespace singkit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lead();
  return *this * inv;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const Rational& s) {
  if (s == 0) return {};
  UPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv = 1 / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational q = top * inv;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      const Rational& bj = b.c_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      rem[static_cast<std::size_t>(i - db + j)] -= q * bj;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly::Bezout UPoly::xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = constant(1), s1;
  UPoly t0, t1 = constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 0) return monic();
  UPoly g = gcd(*this, derivative());
  return divmod(*this, g).first.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

using Zp = std::int64_t;

Zp mod_pow(Zp b, Zp e, Zp p) {
  Zp r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = static_cast<Zp>((static_cast<__int128>(r) * b) % p);
    b = static_cast<Zp>((static_cast<__int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

Zp mod_inv(Zp a, Zp p) { return mod_pow(a, p - 2, p); }

std::vector<Zp> reduce_mod(const std::vector<Integer>& P, Zp p) {
  std::vector<Zp> r(P.size());
  Integer t;
  for (std::size_t i = 0; i < P.size(); ++i) {
    t = P[i] % p;
    if (t < 0) t += p;
    r[i] = t.get_si();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<Zp> zp_rem(std::vector<Zp> a, const std::vector<Zp>& b, Zp p) {
  const Zp inv = mod_inv(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    Zp q = static_cast<Zp>((static_cast<__int128>(a.back()) * inv) % p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = static_cast<Zp>(((a[shift + j] - static_cast<__int128>(q) * b[j]) % p + p) % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool zp_squarefree(const std::vector<Zp>& a, Zp p) {
  std::vector<Zp> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<Zp>((a[i] * static_cast<Zp>(i)) % p));
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) return false;
  std::vector<Zp> x = a, y = d;
  while (!y.empty()) {
    auto r = zp_rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return x.size() == 1;
}

bool is_prime(Zp n) {
  if (n < 2) return false;
  for (Zp d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer eval_mod(const std::vector<Integer>& P, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = P.rbegin(); it != P.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UPoly sq = p.squarefree_part();
  // Integer primitive polynomial.
  Integer den = 1;
  for (const auto& c : sq.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> P;
  P.reserve(sq.coeffs().size());
  for (const auto& c : sq.coeffs()) {
    Rational t = c * den;
    P.push_back(t.get_num());
  }
  Integer content = 0;
  for (const auto& c : P) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (auto& c : P) c /= content;
  if (P.front() == 0) {
    roots.push_back(0);
    P.erase(P.begin());
  }
  if (P.size() <= 1) return roots;
  if (P.size() == 2) {
    roots.push_back(Rational(-P[0], P[1]));
    roots.back().canonicalize();
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const Integer bound_num = abs(P.front());
  const Integer bound_den = abs(P.back());
  const Integer need = 2 * bound_num * bound_den + 1;

  Zp prime = 1009;
  for (;; ++prime) {
    if (!is_prime(prime)) continue;
    if (Integer(P.back() % prime) == 0) continue;
    auto Pp = reduce_mod(P, prime);
    if (!zp_squarefree(Pp, prime)) continue;
    break;
  }
  auto Pp = reduce_mod(P, prime);
  std::vector<Zp> small_roots;
  for (Zp r = 0; r < prime; ++r) {
    __int128 acc = 0;
    for (auto it = Pp.rbegin(); it != Pp.rend(); ++it) acc = (acc * r + *it) % prime;
    if (acc == 0) small_roots.push_back(r);
  }
  std::vector<Integer> dP;
  for (std::size_t i = 1; i < P.size(); ++i) dP.push_back(P[i] * static_cast<unsigned long>(i));

  for (Zp r0 : small_roots) {
    Integer modulus = prime;
    Integer r = r0;
    while (modulus < need) {
      Integer next = modulus * modulus;
      Integer fr = eval_mod(P, r, next);
      Integer dfr = eval_mod(dP, r, next);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), next.get_mpz_t()) == 0) break;
      r = (r - fr * inv) % next;
      if (r < 0) r += next;
      modulus = next;
    }
    // Rational reconstruction with |n| <= bound_num, 0 < d <= bound_den.
    Integer r_prev = modulus, r_cur = r, t_prev = 0, t_cur = 1;
    while (r_cur > bound_num) {
      Integer q = r_prev / r_cur;
      Integer tmp = r_prev - q * r_cur;
      r_prev = r_cur;
      r_cur = tmp;
      tmp = t_prev - q * t_cur;
      t_prev = t_cur;
      t_cur = tmp;
    }
    if (t_cur == 0 || abs(t_cur) > bound_den) continue;
    Rational cand(r_cur, t_cur);
    cand.canonicalize();
    if (sq.eval(cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace singkit
