#pragma once

#include "ellop/cotangent.hpp"
#include "ellop/weyl.hpp"

#include <span>
#include <vector>

namespace ellop {

// Dual context xi1..xin for the covector variables of symbol forms.
ContextPtr dual_context_for(const ContextPtr& ctx);

// The degree-k symbol form of an operator at a point. The stored form keeps
// the k! factor: form = k! * sum_{|alpha|=k} c_alpha(z) xi^alpha, so that
// form(grad f(z)) = ev_z(L(f^k)) for every f vanishing at z. The classical
// normalization is form / k!; the nonvanishing verdict is unaffected.
struct SymbolForm {
    KPoint point;       // where the coefficients were evaluated
    unsigned degree = 0;
    Polynomial form;    // over the dual context; zero iff the order drops at the point

    bool is_zero() const { return form.is_zero(); }
};

// Pre: L != 0 (ZeroOperatorError otherwise). h may be a point of any algebra
// in the same context; only its coordinates enter.
SymbolForm principal_symbol(const DiffOperator& l, const KPoint& h);

// Symbol of an induced operator at a point of the quotient: computed on the
// certified upstairs representative at the lifted point, which determines
// the downstairs symbol through the surjection's cotangent map.
SymbolForm principal_symbol(const InducedOperator& l, const KPoint& h);

// Lifts a quotient point to the ambient polynomial algebra (same coordinates).
KPoint lift_to_ambient(const KPoint& h);

// The defining scalar: (delta_h(f_1) ... delta_h(f_k) L_h)(1), computed by
// the recursion G -> (p -> G(f p) - h(f) G(p)) with base p -> ev_h(L(p)).
// This is the independent oracle for principal_symbol. |fs| must equal the
// operator's order.
Rational symbol_definitional(const DiffOperator& l, const KPoint& h,
                             std::span<const Polynomial> fs);

// Same recursion through the quotient: base applies the induced operator and
// evaluates downstairs.
Rational symbol_definitional(const InducedOperator& l, const KPoint& h,
                             std::span<const Polynomial> fs);

// Value of the form at a covector.
Rational symbol_at(const SymbolForm& s, std::span<const Rational> xi);

// The symmetric multilinear form whose diagonal is the symbol form,
// evaluated on k covectors (exact polarization).
Rational symbol_on_vectors(const SymbolForm& s, const std::vector<std::vector<Rational>>& vs);

struct PullbackCheck {
    bool ok = true;
    std::size_t multisets_checked = 0;
    bool omega_surjective = false;
};

// Verifies, on every multiset of coordinate differentials (a spanning set of
// the upstairs cotangent space), that the downstairs symbol composed with the
// cotangent map of the canonical projection equals the upstairs symbol at
// the lifted point. Downstairs values run through quotient arithmetic, so
// the two sides are computed along independent routes.
PullbackCheck symbol_pullback_check(const InducedOperator& l, const KPoint& h);

// Convenience: certifies invariance first (InduceError when it fails).
PullbackCheck symbol_pullback_check(const DiffOperator& upstairs, const QuotientAlgebra& algebra,
                                    const KPoint& h);

}  // namespace ellop
