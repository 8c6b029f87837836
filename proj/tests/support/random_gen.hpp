#pragma once

#include "ellop/polynomial.hpp"
#include "ellop/weyl.hpp"

#include <random>

namespace ellop::testing {

// Deterministic value generators for property tests. Every suite seeds its
// own generator so runs are reproducible.
struct Gen {
    std::mt19937_64 rng;

    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int int_in(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng);
    }

    Rational rational(int max_abs_num = 6, int max_den = 4) {
        int num = int_in(-max_abs_num, max_abs_num);
        int den = int_in(1, max_den);
        return Rational(num, den);
    }

    Rational nonzero_rational(int max_abs_num = 6, int max_den = 4) {
        Rational r = rational(max_abs_num, max_den);
        while (r == 0) r = rational(max_abs_num, max_den);
        return r;
    }

    Monomial monomial(std::size_t n, unsigned max_degree) {
        std::vector<std::uint32_t> e(n, 0);
        unsigned budget = max_degree;
        for (std::size_t i = 0; i < n; ++i) {
            unsigned v = static_cast<unsigned>(int_in(0, static_cast<int>(budget)));
            e[i] = v;
            budget -= v;
        }
        return Monomial(std::move(e));
    }

    Polynomial poly(const ContextPtr& ctx, unsigned max_degree, unsigned max_terms = 4) {
        Polynomial p = Polynomial::zero(ctx);
        unsigned terms = static_cast<unsigned>(int_in(1, static_cast<int>(max_terms)));
        for (unsigned t = 0; t < terms; ++t)
            p = p + Polynomial::monomial_term(ctx, monomial(ctx->size(), max_degree), rational());
        return p;
    }

    Polynomial nonzero_poly(const ContextPtr& ctx, unsigned max_degree, unsigned max_terms = 4) {
        Polynomial p = poly(ctx, max_degree, max_terms);
        while (p.is_zero()) p = poly(ctx, max_degree, max_terms);
        return p;
    }

    std::vector<Rational> point(std::size_t n, int max_abs = 3, int max_den = 2) {
        std::vector<Rational> z(n);
        for (auto& c : z) c = Rational(int_in(-max_abs, max_abs), int_in(1, max_den));
        return z;
    }

    // An operator of structural order exactly k with polynomial coefficients.
    DiffOperator weyl_op(const ContextPtr& ctx, unsigned k, unsigned coeff_degree = 2,
                         unsigned extra_terms = 2) {
        DiffOperator::TermMap terms;
        Monomial top = monomial(ctx->size(), k);
        if (top.degree() < k) {
            // Pad the first variable so the top term has degree exactly k.
            top = top.with_exponent(0, top[0] + (k - top.degree()));
        }
        terms.emplace(top, nonzero_poly(ctx, coeff_degree, 2));
        for (unsigned t = 0; t < extra_terms; ++t) {
            Monomial alpha = monomial(ctx->size(), k);
            Polynomial c = poly(ctx, coeff_degree, 2);
            if (c.is_zero()) continue;
            auto [it, inserted] = terms.emplace(alpha, c);
            if (!inserted) it->second = it->second + c;
        }
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->second.is_zero())
                it = terms.erase(it);
            else
                ++it;
        }
        return DiffOperator::from_terms(ctx, std::move(terms));
    }
};

}  // namespace ellop::testing
