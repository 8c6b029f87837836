#pragma once

#include "ellop/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ellop {

// Univariate polynomial over Q, dense coefficients, c[i] the coefficient of
// t^i, leading coefficient nonzero (empty = zero polynomial).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(Rational c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& t) const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& other) const;
    UniPoly operator-(const UniPoly& other) const;
    UniPoly operator*(const UniPoly& other) const;
    UniPoly scale(const Rational& c) const;
    UniPoly monic() const;

    bool operator==(const UniPoly& other) const { return c_ == other.c_; }

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
};

// Euclidean division: a = q b + r with deg r < deg b. Pre: b != 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

UniPoly gcd(UniPoly a, UniPoly b);      // monic gcd
UniPoly squarefree_part(const UniPoly& p);

// Strictly larger than the absolute value of every real root.
Rational root_bound(const UniPoly& p);

// Number of distinct real roots in (a, b]; p(a), p(b) may be zero (standard
// Sturm chain handles multiplicities). Whole-line overload uses sign limits.
int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b);
int count_real_roots(const UniPoly& p);

// Some rational root, if one exists. Gives up (nullopt) when the divisor
// enumeration of the integral normalization exceeds `effort_bound`.
std::optional<Rational> find_rational_root(const UniPoly& p, const Int& effort_bound = Int(1000000));

// A certified real algebraic number: `poly` is square-free, has exactly one
// root in [lo, hi], and changes sign between the endpoints.
struct AlgebraicNumber {
    UniPoly poly;
    Rational lo;
    Rational hi;
};

// Isolates one real root of p. Pre: p has a real root.
AlgebraicNumber isolate_real_root(const UniPoly& p);

}  // namespace ellop
