#pragma once

#include "ellop/context.hpp"
#include "ellop/monomial.hpp"
#include "ellop/rational.hpp"

#include <map>
#include <span>
#include <string>

namespace ellop {

// Sparse multivariate polynomial over Q. Immutable after construction in
// spirit: all operations return new values. Invariant: no stored coefficient
// is zero, every monomial has length == context size, and equality is
// equality of term maps.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, TermOrderDesc>;

    static Polynomial zero(ContextPtr ctx);
    static Polynomial constant(ContextPtr ctx, Rational value);
    static Polynomial variable(ContextPtr ctx, std::size_t index);
    static Polynomial monomial_term(ContextPtr ctx, Monomial m, Rational coeff);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of the constant term (0 if absent).
    Rational constant_value() const;
    // Null if the monomial is absent.
    const Rational* coeff(const Monomial& m) const;

    // 0 for the zero polynomial.
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scale(const Rational& c) const;
    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Rational evaluate(std::span<const Rational> point) const;
    // Exact iterated formal partial derivative; `times` >= 1.
    Polynomial differentiate(std::size_t var, unsigned times = 1) const;
    // Derivative by a multi-index, one variable at a time.
    Polynomial differentiate_multi(const Monomial& alpha) const;

    // Substitute images[i] for variable i; images live in `target` context.
    Polynomial substitute(std::span<const Polynomial> images, ContextPtr target) const;
    // p(X1 + z1, ..., Xn + zn); used for first-order (Taylor) coefficient reads.
    Polynomial shift(std::span<const Rational> z) const;

    std::string to_string() const;

private:
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    void add_term(const Monomial& m, const Rational& c);

    ContextPtr ctx_;
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Convenience for ops named in the artifact's surface.
Polynomial differentiate(const Polynomial& p, std::size_t var, unsigned times = 1);
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

}  // namespace ellop
