#pragma once

#include "ellop/affine.hpp"
#include "ellop/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ellop {

// A differential operator in normal form: sum over multi-indices alpha of
// c_alpha(X) d^alpha, derivatives to the right of coefficients. Canonical,
// so equality of operators is decidable structurally. No zero coefficients
// are stored; the zero operator has an empty term map.
class DiffOperator {
public:
    using TermMap = std::map<Monomial, Polynomial, TermOrderDesc>;

    static DiffOperator zero(ContextPtr ctx);
    static DiffOperator identity(ContextPtr ctx);
    static DiffOperator multiplication(const Polynomial& f);
    static DiffOperator partial(ContextPtr ctx, std::size_t var, unsigned power = 1);
    static DiffOperator from_terms(ContextPtr ctx, std::map<Monomial, Polynomial, TermOrderDesc> terms);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // max |alpha| over stored terms. Pre: not the zero operator.
    unsigned structural_order() const;

    DiffOperator operator+(const DiffOperator& other) const;
    DiffOperator operator-(const DiffOperator& other) const;
    DiffOperator operator-() const;
    DiffOperator scale(const Rational& c) const;

    Polynomial apply(const Polynomial& p) const;

    bool operator==(const DiffOperator& other) const;
    bool operator!=(const DiffOperator& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    explicit DiffOperator(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    void add_term(const Monomial& alpha, const Polynomial& coeff);

    ContextPtr ctx_;
    TermMap terms_;
};

// Normal-form product: apply(compose(L1, L2), p) == apply(L1, apply(L2, p)).
// Uses d^alpha o c = sum_{beta <= alpha} binom(alpha, beta) (d^beta c) d^(alpha-beta).
DiffOperator compose(const DiffOperator& l1, const DiffOperator& l2);

// The commutator [L, m_f] = L o (mult by f) - (mult by f) o L. Strictly
// lowers the structural order of any operator of order >= 1; order-0
// operators commute with multiplications, giving zero.
DiffOperator delta(const Polynomial& f, const DiffOperator& l);

// delta(fs[0]) ... delta(fs[k-1]) L, outermost first (the deltas commute).
DiffOperator iterated_delta(std::span<const Polynomial> fs, const DiffOperator& l);

struct ZeroOperatorError : Error {
    using Error::Error;
};

// Structural order; throws ZeroOperatorError for the zero operator.
unsigned operator_order(const DiffOperator& l);

struct VerifyOrderOptions {
    unsigned random_tuples = 8;      // extra tuples of random polynomials
    unsigned max_variable_tuples = 1024;
    unsigned coeff_degree = 2;
    std::uint64_t seed = 0x5eed0001u;
};

// Decides whether every (k+1)-fold iterated delta annihilates L. Samples all
// variable tuples (capped) plus random polynomial tuples, then closes the
// argument structurally: each commutator strictly lowers the normal-form
// order, so no unsampled tuple can violate the test once k >= structural
// order; conversely a witness tuple drawn from a maximal multi-index proves
// violation when k < structural order.
bool verify_order(const DiffOperator& l, unsigned k, const VerifyOrderOptions& opts = {});

// Exact decision of L(I) c= I, with a witness when it fails.
struct InvarianceReport {
    bool holds = true;
    std::optional<Polynomial> witness;   // an ideal element p with NF(L(p)) != 0
    std::optional<Polynomial> residue;   // NF(L(witness))
    std::size_t checked = 0;             // number of (monomial, generator) probes
};

// Tests NF(L(X^beta g)) = 0 for every basis element g and every monomial of
// total degree <= order(L), descending degree then descending lex. This is
// complete: q -> L(q g) is itself an operator of order <= k, and a triangular
// induction over the probed monomials forces each of its normal-form
// coefficients into the ideal, hence L(q g) lies in I for every q; summing
// over basis elements covers all of I.
InvarianceReport check_ideal_invariance(const DiffOperator& l, const GroebnerBasis& gb);

struct InduceError : Error {
    InduceError(const std::string& what, InvarianceReport report)
        : Error(what), report(std::move(report)) {}
    InvarianceReport report;
};

// The operator induced on the quotient: application is apply-then-reduce,
// representative-independent thanks to the invariance certificate.
class InducedOperator {
public:
    const DiffOperator& upstairs() const { return upstairs_; }
    const QuotientAlgebra& algebra() const { return algebra_; }
    const InvarianceReport& certificate() const { return certificate_; }

    Polynomial apply(const Polynomial& p) const { return algebra_.reduce(upstairs_.apply(p)); }
    unsigned structural_order() const { return upstairs_.structural_order(); }

    friend InducedOperator induce(const DiffOperator& l, const QuotientAlgebra& algebra);

private:
    InducedOperator(DiffOperator upstairs, QuotientAlgebra algebra, InvarianceReport cert)
        : upstairs_(std::move(upstairs)), algebra_(std::move(algebra)),
          certificate_(std::move(cert)) {}
    DiffOperator upstairs_;
    QuotientAlgebra algebra_;
    InvarianceReport certificate_;
};

// Throws InduceError embedding the invariance witness when L(I) c= I fails.
InducedOperator induce(const DiffOperator& l, const QuotientAlgebra& algebra);

}  // namespace ellop
