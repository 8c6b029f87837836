#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellop {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, so equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q" with optional sign; q > 0 after normalization.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const std::vector<Rational>& v);  // "(a, b, ...)"

int sign(const Rational& r);

// Exact k-th root if it exists in Q. k >= 1; for even k, r must be >= 0.
std::optional<Rational> rational_kth_root(const Rational& r, unsigned k);

// Floor of the integer k-th root of n >= 0.
Int integer_kth_root_floor(const Int& n, unsigned k);

Rational binomial(unsigned n, unsigned k);

}  // namespace ellop
