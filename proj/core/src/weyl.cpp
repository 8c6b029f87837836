#include "ellop/weyl.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace ellop {

DiffOperator DiffOperator::zero(ContextPtr ctx) { return DiffOperator(std::move(ctx)); }

DiffOperator DiffOperator::identity(ContextPtr ctx) {
    DiffOperator l(ctx);
    l.terms_.emplace(Monomial::unit(ctx->size()), Polynomial::constant(ctx, Rational(1)));
    return l;
}

DiffOperator DiffOperator::multiplication(const Polynomial& f) {
    DiffOperator l(f.context());
    if (!f.is_zero()) l.terms_.emplace(Monomial::unit(f.context()->size()), f);
    return l;
}

DiffOperator DiffOperator::partial(ContextPtr ctx, std::size_t var, unsigned power) {
    DiffOperator l(ctx);
    if (var >= ctx->size()) throw Error("partial: variable index out of range");
    l.terms_.emplace(Monomial::unit(l.ctx_->size()).with_exponent(var, power),
                     Polynomial::constant(l.ctx_, Rational(1)));
    return l;
}

DiffOperator DiffOperator::from_terms(ContextPtr ctx,
                                      std::map<Monomial, Polynomial, TermOrderDesc> terms) {
    DiffOperator l(std::move(ctx));
    for (auto& [alpha, c] : terms)
        if (!c.is_zero()) l.terms_.emplace(alpha, std::move(c));
    return l;
}

unsigned DiffOperator::structural_order() const {
    if (terms_.empty()) throw ZeroOperatorError("order of the zero operator is undefined");
    unsigned best = 0;
    for (const auto& [alpha, c] : terms_) best = std::max(best, alpha.degree());
    return best;
}

void DiffOperator::add_term(const Monomial& alpha, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, coeff);
    if (!inserted) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOperator DiffOperator::operator+(const DiffOperator& other) const {
    require_same_context(ctx_, other.ctx_, "operator addition");
    DiffOperator out(*this);
    for (const auto& [alpha, c] : other.terms_) out.add_term(alpha, c);
    return out;
}

DiffOperator DiffOperator::operator-(const DiffOperator& other) const {
    require_same_context(ctx_, other.ctx_, "operator subtraction");
    DiffOperator out(*this);
    for (const auto& [alpha, c] : other.terms_) out.add_term(alpha, -c);
    return out;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator out(ctx_);
    for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
    return out;
}

DiffOperator DiffOperator::scale(const Rational& c) const {
    DiffOperator out(ctx_);
    if (c == 0) return out;
    for (const auto& [alpha, p] : terms_) out.terms_.emplace(alpha, p.scale(c));
    return out;
}

Polynomial DiffOperator::apply(const Polynomial& p) const {
    require_same_context(ctx_, p.context(), "operator application");
    Polynomial out = Polynomial::zero(ctx_);
    for (const auto& [alpha, c] : terms_) out = out + c * p.differentiate_multi(alpha);
    return out;
}

bool DiffOperator::operator==(const DiffOperator& other) const {
    if (!(ctx_ == other.ctx_ || *ctx_ == *other.ctx_)) return false;
    return terms_ == other.terms_;
}

namespace {

// Componentwise binomial coefficient prod_i C(alpha_i, beta_i).
Rational multi_binomial(const Monomial& alpha, const Monomial& beta) {
    Rational out(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) out *= binomial(alpha[i], beta[i]);
    return out;
}

// All beta with 0 <= beta <= alpha componentwise.
void for_each_sub_index(const Monomial& alpha, const std::function<void(const Monomial&)>& fn) {
    std::vector<std::uint32_t> beta(alpha.size(), 0);
    while (true) {
        fn(Monomial(beta));
        std::size_t i = 0;
        while (i < beta.size()) {
            if (beta[i] < alpha[i]) {
                ++beta[i];
                break;
            }
            beta[i] = 0;
            ++i;
        }
        if (i == beta.size()) break;
    }
}

}  // namespace

DiffOperator compose(const DiffOperator& l1, const DiffOperator& l2) {
    require_same_context(l1.context(), l2.context(), "operator composition");
    DiffOperator::TermMap acc;
    auto add = [&](const Monomial& alpha, const Polynomial& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = acc.emplace(alpha, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) acc.erase(it);
        }
    };
    // c d^alpha o e d^gamma = c sum_{beta<=alpha} C(alpha,beta) (d^beta e) d^{alpha-beta+gamma}
    for (const auto& [alpha, c] : l1.terms()) {
        for (const auto& [gamma, e] : l2.terms()) {
            for_each_sub_index(alpha, [&](const Monomial& beta) {
                Polynomial de = e.differentiate_multi(beta);
                if (de.is_zero()) return;
                Polynomial coeff = (c * de).scale(multi_binomial(alpha, beta));
                add((alpha / beta) * gamma, coeff);
            });
        }
    }
    return DiffOperator::from_terms(l1.context(), std::move(acc));
}

DiffOperator delta(const Polynomial& f, const DiffOperator& l) {
    DiffOperator mf = DiffOperator::multiplication(f);
    return compose(l, mf) - compose(mf, l);
}

DiffOperator iterated_delta(std::span<const Polynomial> fs, const DiffOperator& l) {
    DiffOperator cur = l;
    for (std::size_t i = fs.size(); i-- > 0;) cur = delta(fs[i], cur);
    return cur;
}

unsigned operator_order(const DiffOperator& l) { return l.structural_order(); }

namespace {

Polynomial random_poly(const ContextPtr& ctx, unsigned max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> nterms(1, 4);
    Polynomial p = Polynomial::zero(ctx);
    unsigned n = nterms(rng);
    for (unsigned t = 0; t < n; ++t) {
        std::vector<std::uint32_t> e(ctx->size(), 0);
        unsigned budget = max_degree;
        for (auto& x : e) {
            std::uniform_int_distribution<unsigned> d(0, budget);
            x = d(rng);
            budget -= x;
        }
        p = p + Polynomial::monomial_term(ctx, Monomial(std::move(e)), Rational(coeff(rng)));
    }
    return p;
}

// A maximal multi-index of the top-order part, expanded to a variable list.
std::vector<Polynomial> top_index_variables(const DiffOperator& l) {
    unsigned k = l.structural_order();
    const Monomial* top = nullptr;
    for (const auto& [alpha, c] : l.terms())
        if (alpha.degree() == k && (!top || grlex_compare(alpha, *top) == std::strong_ordering::greater))
            top = &alpha;
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < top->size(); ++i)
        for (std::uint32_t e = 0; e < (*top)[i]; ++e)
            vars.push_back(Polynomial::variable(l.context(), i));
    return vars;
}

}  // namespace

bool verify_order(const DiffOperator& l, unsigned k, const VerifyOrderOptions& opts) {
    if (l.is_zero()) return true;  // every iterated commutator of 0 is 0
    const auto& ctx = l.context();
    unsigned m = l.structural_order();

    if (k < m) {
        // A (k+1)-subtuple of a maximal index is a concrete violation:
        // the commutators peel exactly those derivatives off the top term.
        auto vars = top_index_variables(l);
        std::vector<Polynomial> tuple(vars.begin(), vars.begin() + (k + 1));
        DiffOperator witness = iterated_delta(tuple, l);
        if (witness.is_zero())
            throw Error("verify_order: internal inconsistency, expected a nonzero commutator");
        return false;
    }

    // k >= m: each commutator strictly lowers the normal-form order, so
    // (k+1)-fold iterates vanish for every tuple; sampling corroborates.
    std::size_t n = ctx->size();
    std::size_t total = 1;
    for (unsigned i = 0; i <= k; ++i) {
        total *= n;
        if (total > opts.max_variable_tuples) {
            total = opts.max_variable_tuples;
            break;
        }
    }
    std::mt19937_64 rng(opts.seed);
    std::vector<Polynomial> tuple(k + 1, Polynomial::zero(ctx));
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (unsigned slot = 0; slot <= k; ++slot) {
            tuple[slot] = Polynomial::variable(ctx, c % n);
            c /= n;
        }
        if (!iterated_delta(tuple, l).is_zero())
            throw Error("verify_order: commutator order bound violated");
    }
    for (unsigned r = 0; r < opts.random_tuples; ++r) {
        for (unsigned slot = 0; slot <= k; ++slot)
            tuple[slot] = random_poly(ctx, opts.coeff_degree, rng);
        if (!iterated_delta(tuple, l).is_zero())
            throw Error("verify_order: commutator order bound violated");
    }
    return true;
}

InvarianceReport check_ideal_invariance(const DiffOperator& l, const GroebnerBasis& gb) {
    require_same_context(l.context(), gb.context(), "check_ideal_invariance");
    InvarianceReport report;
    if (l.is_zero() || gb.is_zero_ideal()) return report;  // vacuously holds

    unsigned k = l.structural_order();
    std::size_t n = l.context()->size();
    for (const auto& g : gb.elements()) {
        for (unsigned deg = k + 1; deg-- > 0;) {
            for (const Monomial& beta : monomials_of_degree(n, deg)) {
                Polynomial probe =
                    Polynomial::monomial_term(l.context(), beta, Rational(1)) * g;
                Polynomial residue = normal_form(l.apply(probe), gb);
                ++report.checked;
                if (!residue.is_zero()) {
                    report.holds = false;
                    report.witness = probe;
                    report.residue = residue;
                    return report;
                }
            }
        }
    }
    return report;
}

InducedOperator induce(const DiffOperator& l, const QuotientAlgebra& algebra) {
    InvarianceReport report = check_ideal_invariance(l, algebra.ideal());
    if (!report.holds) {
        std::ostringstream os;
        os << "operator does not preserve the ideal: witness " << report.witness->to_string()
           << " maps to residue " << report.residue->to_string();
        throw InduceError(os.str(), std::move(report));
    }
    return InducedOperator(l, algebra, std::move(report));
}

namespace {

void render_dtokens(std::ostringstream& os, const Context& ctx, const Monomial& alpha) {
    bool first = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "d" << ctx.name(i);
        if (alpha[i] > 1) os << "^" << alpha[i];
    }
}

}  // namespace

std::string DiffOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        bool single = c.terms().size() == 1;
        if (alpha.is_unit()) {
            // Pure multiplication part: render as a polynomial summand.
            std::string text = c.to_string();
            if (first) {
                os << text;
            } else if (!text.empty() && text[0] == '-') {
                os << " - " << text.substr(1);
            } else {
                os << " + " << text;
            }
            first = false;
            continue;
        }
        if (single) {
            auto [m, coeff] = *c.terms().begin();
            Rational a = coeff;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1) os << a.str() << "*";
            if (!m.is_unit())
                os << Polynomial::monomial_term(ctx_, m, Rational(1)).to_string() << "*";
            render_dtokens(os, *ctx_, alpha);
        } else {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")*";
            render_dtokens(os, *ctx_, alpha);
        }
    }
    return os.str();
}

}  // namespace ellop
