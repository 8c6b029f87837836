#include "ellop/rational.hpp"

#include "ellop/errors.hpp"

#include <sstream>

namespace ellop {

Rational parse_rational(std::string_view text) {
    // Accepts [+-]digits[/digits]; keeps the diagnostics local instead of
    // relying on boost's parser so messages carry the offending text.
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](Int& out) {
        std::size_t start = i;
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
        return i > start;
    };
    Int num, den = 1;
    if (!read_digits(num)) throw InputError("invalid rational literal: '" + std::string(text) + "'");
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!read_digits(den) || den == 0)
            throw InputError("invalid rational literal: '" + std::string(text) + "'");
    }
    if (i != text.size()) throw InputError("invalid rational literal: '" + std::string(text) + "'");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const std::vector<Rational>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

int sign(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

Int integer_kth_root_floor(const Int& n, unsigned k) {
    if (n < 0) throw Error("integer_kth_root_floor: negative argument");
    if (n == 0 || n == 1 || k == 1) return n;
    Int lo = 0, hi = n;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<Rational> rational_kth_root(const Rational& r, unsigned k) {
    if (k == 0) throw Error("rational_kth_root: k must be positive");
    if (r == 0) return Rational(0);
    bool negative = r < 0;
    if (negative && k % 2 == 0) return std::nullopt;
    Rational a = negative ? Rational(-r) : r;
    Int n = numerator(a), d = denominator(a);
    Int rn = integer_kth_root_floor(n, k);
    Int rd = integer_kth_root_floor(d, k);
    if (boost::multiprecision::pow(rn, k) != n || boost::multiprecision::pow(rd, k) != d)
        return std::nullopt;
    Rational root(rn, rd);
    return negative ? Rational(-root) : root;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    if (k > n - k) k = n - k;
    Int num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return Rational(num, den);
}

}  // namespace ellop
