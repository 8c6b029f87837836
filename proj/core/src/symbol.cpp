#include "ellop/symbol.hpp"

#include <functional>

namespace ellop {

ContextPtr dual_context_for(const ContextPtr& ctx) {
    std::vector<std::string> names;
    names.reserve(ctx->size());
    for (std::size_t i = 0; i < ctx->size(); ++i) names.push_back("xi" + std::to_string(i + 1));
    return make_context(std::move(names));
}

KPoint lift_to_ambient(const KPoint& h) {
    QuotientAlgebra ambient =
        QuotientAlgebra::ambient(h.algebra().context(), h.algebra().ideal().order().kind);
    return kpoint(ambient, h.coordinates());
}

SymbolForm principal_symbol(const DiffOperator& l, const KPoint& h) {
    require_same_context(l.context(), h.algebra().context(), "principal_symbol");
    unsigned k = operator_order(l);
    ContextPtr dual = dual_context_for(l.context());
    Rational factorial(1);
    for (unsigned i = 2; i <= k; ++i) factorial *= i;
    Polynomial form = Polynomial::zero(dual);
    for (const auto& [alpha, c] : l.terms()) {
        if (alpha.degree() != k) continue;
        Rational value = c.evaluate(h.coordinates());
        form = form + Polynomial::monomial_term(dual, alpha, value * factorial);
    }
    return SymbolForm{h, k, std::move(form)};
}

SymbolForm principal_symbol(const InducedOperator& l, const KPoint& h) {
    if (!(h.algebra() == l.algebra()))
        throw Error("principal_symbol: point does not live on the operator's algebra");
    return principal_symbol(l.upstairs(), lift_to_ambient(h));
}

namespace {

// (delta_h(fs[0]) ... delta_h(fs[end]) G)(p) for a scalar functional G.
Rational delta_recursion(const std::function<Rational(const Polynomial&)>& base,
                         const KPoint& h, std::span<const Polynomial> fs, const Polynomial& p) {
    if (fs.empty()) return base(p);
    const Polynomial& f = fs.front();
    auto rest = fs.subspan(1);
    return delta_recursion(base, h, rest, f * p) -
           ev(h, f) * delta_recursion(base, h, rest, p);
}

}  // namespace

Rational symbol_definitional(const DiffOperator& l, const KPoint& h,
                             std::span<const Polynomial> fs) {
    require_same_context(l.context(), h.algebra().context(), "symbol_definitional");
    unsigned k = operator_order(l);
    if (fs.size() != k)
        throw Error("symbol_definitional: expected " + std::to_string(k) + " arguments, got " +
                    std::to_string(fs.size()));
    auto base = [&](const Polynomial& p) { return ev(h, l.apply(p)); };
    Polynomial one = Polynomial::constant(l.context(), Rational(1));
    return delta_recursion(base, h, fs, one);
}

Rational symbol_definitional(const InducedOperator& l, const KPoint& h,
                             std::span<const Polynomial> fs) {
    if (!(h.algebra() == l.algebra()))
        throw Error("symbol_definitional: point does not live on the operator's algebra");
    unsigned k = l.structural_order();
    if (fs.size() != k)
        throw Error("symbol_definitional: expected " + std::to_string(k) + " arguments, got " +
                    std::to_string(fs.size()));
    // The base functional runs through the quotient: reduce, then evaluate.
    auto base = [&](const Polynomial& p) { return ev(h, l.apply(p)); };
    Polynomial one = Polynomial::constant(l.algebra().context(), Rational(1));
    return delta_recursion(base, h, fs, one);
}

Rational symbol_at(const SymbolForm& s, std::span<const Rational> xi) {
    return s.form.evaluate(xi);
}

Rational symbol_on_vectors(const SymbolForm& s, const std::vector<std::vector<Rational>>& vs) {
    unsigned k = s.degree;
    if (vs.size() != k) throw Error("symbol_on_vectors: expected one covector per degree");
    if (k == 0) return s.form.constant_value();
    // Polarize: the coefficient of t_1...t_k in form(sum t_i v_i), over k!.
    ContextPtr tctx;
    {
        std::vector<std::string> names;
        for (unsigned i = 0; i < k; ++i) names.push_back("t" + std::to_string(i + 1));
        tctx = make_context(std::move(names));
    }
    std::size_t n = s.form.context()->size();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial lin = Polynomial::zero(tctx);
        for (unsigned i = 0; i < k; ++i) {
            if (vs[i].size() != n) throw Error("symbol_on_vectors: covector length mismatch");
            lin = lin + Polynomial::variable(tctx, i).scale(vs[i][j]);
        }
        images.push_back(std::move(lin));
    }
    Polynomial expanded = s.form.substitute(images, tctx);
    Monomial all_ones(std::vector<std::uint32_t>(k, 1));
    Rational coeff(0);
    if (const Rational* c = expanded.coeff(all_ones)) coeff = *c;
    Rational factorial(1);
    for (unsigned i = 2; i <= k; ++i) factorial *= i;
    return coeff / factorial;
}

PullbackCheck symbol_pullback_check(const InducedOperator& l, const KPoint& h) {
    const auto& ctx = l.algebra().context();
    unsigned k = l.structural_order();
    KPoint lifted = lift_to_ambient(h);
    CotangentMap omega = cotangent_map(canonical_projection(l.algebra()), h);

    PullbackCheck out;
    out.omega_surjective = omega.surjective;

    // Multisets i_1 <= ... <= i_k of coordinate indices.
    std::vector<std::size_t> idx(k, 0);
    std::size_t n = ctx->size();
    auto advance = [&]() {
        std::size_t slot = k;
        while (slot-- > 0) {
            if (idx[slot] + 1 < n) {
                ++idx[slot];
                for (std::size_t t = slot + 1; t < k; ++t) idx[t] = idx[slot];
                return true;
            }
        }
        return false;
    };
    while (true) {
        std::vector<Polynomial> fs;
        fs.reserve(k);
        for (auto i : idx) fs.push_back(Polynomial::variable(ctx, i));
        // Downstairs symbol on the images of the coordinate differentials,
        // computed through quotient arithmetic; upstairs symbol on the
        // differentials themselves, computed in the polynomial algebra.
        Rational downstairs = symbol_definitional(l, h, fs);
        Rational upstairs = symbol_definitional(l.upstairs(), lifted, fs);
        ++out.multisets_checked;
        if (downstairs != upstairs) {
            out.ok = false;
            return out;
        }
        if (!advance()) break;
    }
    return out;
}

PullbackCheck symbol_pullback_check(const DiffOperator& upstairs, const QuotientAlgebra& algebra,
                                    const KPoint& h) {
    return symbol_pullback_check(induce(upstairs, algebra), h);
}

}  // namespace ellop
