#include "singkit/rational.hpp"

#include "singkit/error.hpp"

namespace singkit {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::InvalidArgument, "empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(Errc::InvalidArgument, "not a rational: " + s);
  if (q.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator in " + s);
  q.canonicalize();
  return q;
}

}  // namespace singkit
