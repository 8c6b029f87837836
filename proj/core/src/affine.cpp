#include "ellop/affine.hpp"

#include <sstream>

namespace ellop {

QuotientAlgebra QuotientAlgebra::make(ContextPtr ctx, std::vector<Polynomial> generators,
                                      MonomialOrder order) {
    order.context = ctx;
    for (const auto& g : generators) require_same_context(g.context(), ctx, "make_quotient");
    return QuotientAlgebra(buchberger(std::move(generators), std::move(order)));
}

QuotientAlgebra QuotientAlgebra::ambient(ContextPtr ctx, OrderKind kind) {
    return make(std::move(ctx), {}, MonomialOrder{kind, nullptr});
}

bool QuotientAlgebra::same_class(const Polynomial& a, const Polynomial& b) const {
    return reduce(a) == reduce(b);
}

bool QuotientAlgebra::operator==(const QuotientAlgebra& other) const {
    return ideal_ == other.ideal_;
}

KPoint kpoint(const QuotientAlgebra& algebra, std::vector<Rational> coords) {
    const auto& ctx = algebra.context();
    if (coords.size() != ctx->size())
        throw InputError("kpoint: expected " + std::to_string(ctx->size()) +
                         " coordinates for context " + ctx->to_string() + ", got " +
                         std::to_string(coords.size()));
    for (const auto& g : algebra.generators()) {
        Rational value = g.evaluate(coords);
        if (value != 0) {
            throw PointValidationError("point " + to_string(coords) +
                                           " is not on the variety: generator " + g.to_string() +
                                           " evaluates to " + value.str(),
                                       g, value);
        }
    }
    return KPoint(algebra, std::move(coords));
}

KPoint homomorphism_from_images(const QuotientAlgebra& algebra, std::vector<Rational> images) {
    // A homomorphism out of the quotient is determined by its variable
    // images, and it is well-defined exactly when those images satisfy every
    // generator; that is the same validation kpoint performs.
    return kpoint(algebra, std::move(images));
}

bool KPoint::operator==(const KPoint& other) const {
    return algebra_ == other.algebra_ && coords_ == other.coords_;
}

std::string KPoint::to_string() const { return ellop::to_string(coords_); }

Rational ev(const KPoint& h, const Polynomial& f) {
    require_same_context(f.context(), h.algebra().context(), "ev");
    return f.evaluate(h.coordinates());
}

}  // namespace ellop
