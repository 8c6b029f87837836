#pragma once

#include "ellop/order.hpp"
#include "ellop/polynomial.hpp"

#include <utility>
#include <vector>

namespace ellop {

// Leading term of p under the given order. Pre: p != 0.
std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order);

// A reduced Groebner basis: every element monic, no term of any element
// divisible by another element's leading monomial, every S-polynomial
// reducing to zero. Unique for a fixed ideal and order; elements are kept
// sorted by leading monomial, descending, so construction is deterministic.
class GroebnerBasis {
public:
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    const std::vector<Polynomial>& source_generators() const { return source_; }
    const ContextPtr& context() const { return order_.context; }
    bool is_zero_ideal() const { return elements_.empty(); }
    // The ideal is (1) = the whole ring.
    bool is_unit_ideal() const;

    bool operator==(const GroebnerBasis& other) const;

    friend GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder order);

private:
    MonomialOrder order_{OrderKind::Grevlex, nullptr};
    std::vector<Polynomial> elements_;
    std::vector<Polynomial> source_;
};

// Buchberger's algorithm with the normal selection strategy and both
// classical pair-elimination criteria, followed by inter-reduction.
// All-zero (or empty) input yields the zero ideal's empty basis.
GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder order);

// Remainder of multivariate division by the basis: no term of the result is
// divisible by any basis leading monomial. Q-linear; NF(p) = 0 iff p lies in
// the ideal; idempotent.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_contains(const Polynomial& p, const GroebnerBasis& gb);

}  // namespace ellop
