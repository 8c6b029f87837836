#include "ellop/cotangent.hpp"

#include <deque>

namespace ellop {

namespace {

std::vector<Rational> gradient_at(const Polynomial& f, const std::vector<Rational>& z) {
    std::vector<Rational> grad(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) grad[i] = f.differentiate(i).evaluate(z);
    return grad;
}

CotangentSpace space_from_rows(const KPoint& h, QMatrix rows) {
    CotangentSpace s{h, std::move(rows), {}, 0};
    s.reduced = s.relation_rows.rref();
    s.dim = h.dimension() - s.reduced.rank;
    return s;
}

}  // namespace

bool CotangentSpace::operator==(const CotangentSpace& other) const {
    return point == other.point && relation_rows == other.relation_rows;
}

CotangentSpace cotangent_space(const KPoint& h) {
    const auto& gens = h.algebra().generators();
    QMatrix rows(gens.size(), h.dimension());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        auto grad = gradient_at(gens[j], h.coordinates());
        for (std::size_t i = 0; i < grad.size(); ++i) rows.at(j, i) = std::move(grad[i]);
    }
    return space_from_rows(h, std::move(rows));
}

bool CotangentVector::operator==(const CotangentVector& other) const {
    return space == other.space && coords == other.coords;
}

CotangentVector CotangentVector::operator+(const CotangentVector& other) const {
    if (!(space == other.space)) throw Error("cotangent addition: different spaces");
    std::vector<Rational> sum(coords);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.coords[i];
    return {space, std::move(sum)};  // canonical coordinates form a subspace
}

CotangentVector CotangentVector::scale(const Rational& c) const {
    std::vector<Rational> out(coords);
    for (auto& x : out) x *= c;
    return {space, std::move(out)};
}

CotangentVector differential(const KPoint& h, const Polynomial& f) {
    require_same_context(f.context(), h.algebra().context(), "differential");
    CotangentSpace s = cotangent_space(h);
    auto coords = s.canonicalize(gradient_at(f, h.coordinates()));
    return {std::move(s), std::move(coords)};
}

FormalDerivationSum& FormalDerivationSum::add(Rational b, Polynomial f) {
    terms.emplace_back(std::move(b), std::move(f));
    return *this;
}

CotangentVector classical_normalize(const KPoint& h, const FormalDerivationSum& s) {
    const auto& ctx = h.algebra().context();
    Polynomial u = Polynomial::zero(ctx);
    for (const auto& [b, f] : s.terms) {
        require_same_context(f.context(), ctx, "classical_normalize");
        u = u + f.scale(b);
    }
    Rational value = u.evaluate(h.coordinates());
    if (value != 0)
        throw AugmentationError(
            "classical_normalize: element lies outside the augmentation kernel, value " +
                value.str(),
            value);
    // First-order coefficients of u(X + z): an independent route to the
    // class of u in I_h / I_h^2.
    Polynomial shifted = u.shift(h.coordinates());
    std::vector<Rational> grad(ctx->size(), Rational(0));
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        Monomial m = Monomial::unit(ctx->size()).with_exponent(i, 1);
        if (const Rational* c = shifted.coeff(m)) grad[i] = *c;
    }
    CotangentSpace space = cotangent_space(h);
    auto coords = space.canonicalize(std::move(grad));
    return {std::move(space), std::move(coords)};
}

namespace {

// Class of the free-module generator <X^beta>: Leibniz rewriting
// <fg> -> h(f)<g> + h(g)<f> peels one variable per step and terminates
// because the monomial degree strictly drops.
std::vector<Rational> bracket_class(const Monomial& beta, const std::vector<Rational>& z) {
    std::vector<Rational> out(z.size(), Rational(0));
    if (beta.degree() == 0) return out;  // <constant> = 0
    std::size_t i = 0;
    while (beta[i] == 0) ++i;
    Monomial rest = beta.with_exponent(i, beta[i] - 1);
    Rational rest_value(1);
    for (std::size_t v = 0; v < z.size(); ++v)
        for (std::uint32_t e = 0; e < rest[v]; ++e) rest_value *= z[v];
    out = bracket_class(rest, z);
    for (auto& x : out) x *= z[i];
    out[i] += rest_value;
    return out;
}

}  // namespace

CotangentVector rough_normalize(const KPoint& h, const FormalDerivationSum& s) {
    const auto& ctx = h.algebra().context();
    const auto& z = h.coordinates();
    std::vector<Rational> acc(ctx->size(), Rational(0));
    for (const auto& [b, f] : s.terms) {
        require_same_context(f.context(), ctx, "rough_normalize");
        for (const auto& [m, c] : f.terms()) {
            auto part = bracket_class(m, z);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += b * c * part[i];
        }
    }
    CotangentSpace space = cotangent_space(h);
    auto coords = space.canonicalize(std::move(acc));
    return {std::move(space), std::move(coords)};
}

CotangentVector algebraic_normalize(const KPoint& h, const FormalDerivationSum& s) {
    const auto& ctx = h.algebra().context();
    const auto& z = h.coordinates();
    std::vector<Rational> acc(ctx->size(), Rational(0));
    // Worklist of tensors a (x) X^beta, reduced against
    // a (x) fg = a h(f) (x) g + a h(g) (x) f  and  a (x) 1 = 0,
    // peeling the last variable of each monomial.
    std::deque<std::pair<Rational, Monomial>> work;
    for (const auto& [b, f] : s.terms) {
        require_same_context(f.context(), ctx, "algebraic_normalize");
        for (const auto& [m, c] : f.terms()) work.emplace_back(b * c, m);
    }
    while (!work.empty()) {
        auto [a, m] = work.front();
        work.pop_front();
        if (a == 0) continue;
        unsigned deg = m.degree();
        if (deg == 0) continue;  // 1 (x) 1 is a relation image
        if (deg == 1) {
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] == 1) acc[i] += a;
            continue;
        }
        std::size_t last = m.size();
        while (m[--last] == 0) {}
        Monomial rest = m.with_exponent(last, m[last] - 1);
        Rational rest_value(1);
        for (std::size_t v = 0; v < z.size(); ++v)
            for (std::uint32_t e = 0; e < rest[v]; ++e) rest_value *= z[v];
        work.emplace_back(a * rest_value, Monomial::unit(m.size()).with_exponent(last, 1));
        work.emplace_back(a * z[last], rest);
    }
    CotangentSpace space = cotangent_space(h);
    auto coords = space.canonicalize(std::move(acc));
    return {std::move(space), std::move(coords)};
}

KaehlerModel kaehler_specialize(const KPoint& h) {
    const auto& algebra = h.algebra();
    const auto& ctx = algebra.context();
    const auto& gens = algebra.generators();
    std::vector<std::vector<Polynomial>> symbolic;
    symbolic.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<Polynomial> row;
        row.reserve(ctx->size());
        for (std::size_t i = 0; i < ctx->size(); ++i)
            row.push_back(algebra.reduce(g.differentiate(i)));
        symbolic.push_back(std::move(row));
    }
    QMatrix rows(gens.size(), ctx->size());
    for (std::size_t j = 0; j < symbolic.size(); ++j)
        for (std::size_t i = 0; i < ctx->size(); ++i)
            rows.at(j, i) = symbolic[j][i].evaluate(h.coordinates());
    return KaehlerModel{std::move(symbolic), space_from_rows(h, std::move(rows))};
}

CotangentVector KaehlerModel::model_differential(const Polynomial& f) const {
    const auto& h = space.point;
    auto coords = space.canonicalize(gradient_at(f, h.coordinates()));
    return {space, std::move(coords)};
}

Polynomial AlgebraSurjection::apply(const Polynomial& f) const {
    return target.reduce(f.substitute(images, target.context()));
}

AlgebraSurjection make_surjection(QuotientAlgebra source, QuotientAlgebra target,
                                  std::vector<Polynomial> images) {
    if (images.size() != source.context()->size())
        throw InputError("make_surjection: one image per source variable required");
    for (const auto& im : images)
        require_same_context(im.context(), target.context(), "make_surjection");
    AlgebraSurjection pi{std::move(source), std::move(target), std::move(images)};
    for (const auto& g : pi.source.generators()) {
        Polynomial image = pi.apply(g);
        if (!image.is_zero())
            throw InputError("make_surjection: not well defined, generator " + g.to_string() +
                             " maps to " + image.to_string());
    }
    return pi;
}

AlgebraSurjection canonical_projection(const QuotientAlgebra& target) {
    QuotientAlgebra source =
        QuotientAlgebra::ambient(target.context(), target.ideal().order().kind);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < target.context()->size(); ++i)
        images.push_back(Polynomial::variable(target.context(), i));
    return AlgebraSurjection{std::move(source), target, std::move(images)};
}

CotangentVector CotangentMap::apply(const CotangentVector& v) const {
    if (!(v.space == source_space)) throw Error("cotangent map: vector not in the source space");
    return {target_space, matrix.apply(v.coords)};
}

CotangentMap cotangent_map(const AlgebraSurjection& pi, const KPoint& h) {
    if (!(h.algebra() == pi.target))
        throw InputError("cotangent_map: point does not live on the surjection's target");
    // Lift the point through the surjection; validation rejects
    // incompatible coordinates.
    std::vector<Rational> lifted;
    lifted.reserve(pi.images.size());
    for (const auto& im : pi.images) lifted.push_back(ev(h, im));
    KPoint up = kpoint(pi.source, std::move(lifted));

    CotangentMap map{pi, cotangent_space(up), cotangent_space(h),
                     QMatrix(h.dimension(), up.dimension()), false};
    for (std::size_t i = 0; i < up.dimension(); ++i) {
        auto col = map.target_space.canonicalize(
            gradient_at(pi.images[i], h.coordinates()));
        for (std::size_t r = 0; r < col.size(); ++r) map.matrix.at(r, i) = std::move(col[r]);
    }
    map.surjective = map.matrix.rank() == map.target_space.dim;
    return map;
}

std::vector<TangentVector> tangent_space(const KPoint& h) {
    CotangentSpace s = cotangent_space(h);
    std::vector<TangentVector> out;
    for (auto& v : s.reduced.mat.kernel_basis()) out.push_back({s, std::move(v)});
    return out;
}

Rational pairing(const CotangentVector& omega, const TangentVector& v) {
    if (!(omega.space == v.space)) throw Error("pairing: different spaces");
    return dot(omega.coords, v.coords);
}

}  // namespace ellop
