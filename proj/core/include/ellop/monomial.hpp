#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ellop {

// An exponent vector. Length equals the size of the enclosing context;
// the owners (Polynomial, DiffOperator) enforce that.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}
    static Monomial unit(std::size_t n) { return Monomial(std::vector<std::uint32_t>(n, 0)); }

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    unsigned degree() const;
    bool is_unit() const { return degree() == 0; }

    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Pre: other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    Monomial with_exponent(std::size_t var, std::uint32_t value) const;

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return e_ != other.e_; }

private:
    std::vector<std::uint32_t> e_;
};

// Structural order used for term storage and rendering: total degree first,
// then lex on exponents. Independent of the runtime-selected division order.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct TermOrderDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) == std::strong_ordering::greater;
    }
};

// All monomials of the given total degree in n variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree);

}  // namespace ellop
