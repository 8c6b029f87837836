#include "ellop/monomial.hpp"

#include <algorithm>

namespace ellop {

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto e : e_) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && other.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::uint32_t> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<std::uint32_t> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.e_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(std::size_t var, std::uint32_t value) const {
    std::vector<std::uint32_t> e(e_);
    e[var] = value;
    return Monomial(std::move(e));
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exponents() <=> b.exponents();
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> current(n, 0);
    // Descending lex: put as much as possible into the earliest variables.
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var + 1 == n) {
            current[var] = remaining;
            out.emplace_back(current);
            current[var] = 0;
            return;
        }
        for (unsigned e = remaining + 1; e-- > 0;) {
            current[var] = e;
            self(self, var + 1, remaining - e);
        }
        current[var] = 0;
    };
    if (n == 0) {
        if (degree == 0) out.emplace_back(current);
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

}  // namespace ellop
