#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace singkit {

/// Arbitrary-precision rational; gmpxx keeps every result canonical.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "a" or "a/b" with optional sign; throws Errc::InvalidArgument.
Rational parse_rational(std::string_view text);

}  // namespace singkit
