#include "ellop/polynomial.hpp"

#include <sstream>

namespace ellop {

Polynomial Polynomial::zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }

Polynomial Polynomial::constant(ContextPtr ctx, Rational value) {
    Polynomial p(std::move(ctx));
    if (value != 0) p.terms_.emplace(Monomial::unit(p.ctx_->size()), std::move(value));
    return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
    Polynomial p(std::move(ctx));
    p.terms_.emplace(Monomial::unit(p.ctx_->size()).with_exponent(index, 1), Rational(1));
    return p;
}

Polynomial Polynomial::monomial_term(ContextPtr ctx, Monomial m, Rational coeff) {
    Polynomial p(std::move(ctx));
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial::unit(ctx_->size()));
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational* Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_context(ctx_, other.ctx_, "polynomial addition");
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    require_same_context(ctx_, other.ctx_, "polynomial subtraction");
    Polynomial out(*this);
    for (const auto& [m, c] : other.terms_) out.add_term(m, Rational(-c));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_context(ctx_, other.ctx_, "polynomial multiplication");
    Polynomial out(ctx_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

Polynomial Polynomial::scale(const Rational& c) const {
    Polynomial out(ctx_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, Rational(v * c));
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(ctx_, Rational(1));
    Polynomial base(*this);
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!(ctx_ == other.ctx_ || *ctx_ == *other.ctx_)) return false;
    return terms_ == other.terms_;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != ctx_->size())
        throw Error("evaluate: point length " + std::to_string(point.size()) +
                    " does not match context " + ctx_->to_string());
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) v *= point[i];
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::differentiate(std::size_t var, unsigned times) const {
    if (var >= ctx_->size())
        throw Error("differentiate: variable index out of range for context " + ctx_->to_string());
    Polynomial cur(*this);
    for (unsigned t = 0; t < times; ++t) {
        Polynomial next(ctx_);
        for (const auto& [m, c] : cur.terms_) {
            std::uint32_t e = m[var];
            if (e == 0) continue;
            next.add_term(m.with_exponent(var, e - 1), c * e);
        }
        cur = std::move(next);
    }
    return cur;
}

Polynomial Polynomial::differentiate_multi(const Monomial& alpha) const {
    Polynomial cur(*this);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > 0) cur = cur.differentiate(i, alpha[i]);
    return cur;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, ContextPtr target) const {
    if (images.size() != ctx_->size())
        throw Error("substitute: expected " + std::to_string(ctx_->size()) + " images");
    for (const auto& im : images) require_same_context(im.context(), target, "substitute");
    Polynomial out = zero(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = constant(target, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (m[i] > 0) term = term * images[i].pow(m[i]);
        out = out + term;
    }
    return out;
}

Polynomial Polynomial::shift(std::span<const Rational> z) const {
    if (z.size() != ctx_->size()) throw Error("shift: offset length does not match context");
    std::vector<Polynomial> images;
    images.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        images.push_back(variable(ctx_, i) + constant(ctx_, z[i]));
    return substitute(images, ctx_);
}

namespace {

void render_monomial(std::ostringstream& os, const Context& ctx, const Monomial& m) {
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << ctx.name(i);
        if (m[i] > 1) os << "^" << m[i];
    }
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
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
        if (m.is_unit()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            render_monomial(os, *ctx_, m);
        }
    }
    return os.str();
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scale(c); }

Polynomial differentiate(const Polynomial& p, std::size_t var, unsigned times) {
    return p.differentiate(var, times);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    return p.evaluate(point);
}

}  // namespace ellop
