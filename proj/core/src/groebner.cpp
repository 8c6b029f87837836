#include "ellop/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace ellop {

std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw Error("leading_term of the zero polynomial");
    const Monomial* best = nullptr;
    const Rational* coeff = nullptr;
    for (const auto& [m, c] : p.terms()) {
        if (!best || order.greater(m, *best)) {
            best = &m;
            coeff = &c;
        }
    }
    return {*best, *coeff};
}

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    auto [lm, lc] = leading_term(p, order);
    return p.scale(Rational(1) / lc);
}

// Full reduction: repeatedly rewrite the order-greatest reducible term.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    Polynomial r = p;
    while (!r.is_zero()) {
        const Monomial* best = nullptr;
        const Rational* coeff = nullptr;
        std::size_t reducer = 0;
        for (const auto& [m, c] : r.terms()) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (!leading_term(basis[b], order).first.divides(m)) continue;
                if (!best || order.greater(m, *best)) {
                    best = &m;
                    coeff = &c;
                    reducer = b;
                }
                break;
            }
        }
        if (!best) break;
        const Polynomial& g = basis[reducer];
        auto [glm, glc] = leading_term(g, order);
        Polynomial factor =
            Polynomial::monomial_term(r.context(), *best / glm, *coeff / glc);
        r = r - factor * g;
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [fm, fc] = leading_term(f, order);
    auto [gm, gc] = leading_term(g, order);
    Monomial l = Monomial::lcm(fm, gm);
    Polynomial uf = Polynomial::monomial_term(f.context(), l / fm, Rational(1) / fc);
    Polynomial ug = Polynomial::monomial_term(g.context(), l / gm, Rational(1) / gc);
    return uf * f - ug * g;
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
    return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
    return order_ == other.order_ && elements_ == other.elements_;
}

GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder order) {
    for (const auto& g : generators)
        require_same_context(g.context(), order.context, "buchberger");

    GroebnerBasis result;
    result.order_ = order;
    result.source_ = generators;

    std::vector<Polynomial> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    if (basis.empty()) return result;  // the zero ideal

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    auto lm = [&](std::size_t i) { return leading_term(basis[i], order).first; };

    while (!pending.empty()) {
        // Normal selection: smallest lcm of leading monomials, index tiebreak.
        auto chosen = pending.begin();
        Monomial best_lcm = Monomial::lcm(lm(chosen->first), lm(chosen->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(lm(it->first), lm(it->second));
            if (order.less(l, best_lcm)) {
                best_lcm = l;
                chosen = it;
            }
        }
        auto [i, j] = *chosen;
        pending.erase(chosen);

        if (lm(i).coprime(lm(j))) continue;  // product criterion

        // Chain criterion: skip when some k divides the lcm and both side
        // pairs were already considered.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!lm(k).divides(best_lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) skip = true;
        }
        if (skip) continue;

        Polynomial r = reduce_full(s_polynomial(basis[i], basis[j], order), basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        std::size_t n = basis.size() - 1;
        for (std::size_t t = 0; t < n; ++t) pending.insert({t, n});
    }

    // Minimalize: keep only elements whose leading monomial is not divisible
    // by another survivor's leading monomial.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lm(j).divides(lm(i)) && !(lm(i) == lm(j) && j > i)) keep[i] = false;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // Inter-reduce tails to a fixpoint; the reduced basis is unique.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = reduce_full(minimal[i], others, order);
            if (!(r == minimal[i])) {
                minimal[i] = make_monic(r, order);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(leading_term(a, order).first, leading_term(b, order).first);
    });
    result.elements_ = std::move(minimal);
    return result;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    require_same_context(p.context(), gb.context(), "normal_form");
    if (gb.is_zero_ideal()) return p;
    return reduce_full(p, gb.elements(), gb.order());
}

bool ideal_contains(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

}  // namespace ellop
