#pragma once

#include "ellop/groebner.hpp"
#include "ellop/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace ellop {

// A point failed the variety membership test; carries the violating
// generator and its nonzero value.
struct PointValidationError : Error {
    PointValidationError(const std::string& what, Polynomial generator, Rational value)
        : Error(what), generator(std::move(generator)), value(std::move(value)) {}
    Polynomial generator;
    Rational value;
};

// Q[X1..Xn]/I with a cached reduced Groebner basis. Elements are represented
// by their normal forms; the ambient polynomial algebra is the zero ideal.
class QuotientAlgebra {
public:
    static QuotientAlgebra make(ContextPtr ctx, std::vector<Polynomial> generators,
                                MonomialOrder order);
    static QuotientAlgebra ambient(ContextPtr ctx, OrderKind kind = OrderKind::Grevlex);

    const ContextPtr& context() const { return ideal_.context(); }
    const GroebnerBasis& ideal() const { return ideal_; }
    const std::vector<Polynomial>& generators() const { return ideal_.source_generators(); }
    bool is_ambient() const { return ideal_.is_zero_ideal(); }

    Polynomial reduce(const Polynomial& p) const { return normal_form(p, ideal_); }
    bool same_class(const Polynomial& a, const Polynomial& b) const;

    bool operator==(const QuotientAlgebra& other) const;

private:
    explicit QuotientAlgebra(GroebnerBasis gb) : ideal_(std::move(gb)) {}
    GroebnerBasis ideal_;
};

// A K-point: rational coordinates validated against the ideal. Stands for
// the evaluation homomorphism at those coordinates.
class KPoint {
public:
    const QuotientAlgebra& algebra() const { return algebra_; }
    const std::vector<Rational>& coordinates() const { return coords_; }
    std::size_t dimension() const { return coords_.size(); }

    bool operator==(const KPoint& other) const;
    std::string to_string() const;  // "(1, 1)"

    friend KPoint kpoint(const QuotientAlgebra& algebra, std::vector<Rational> coords);

private:
    KPoint(QuotientAlgebra algebra, std::vector<Rational> coords)
        : algebra_(std::move(algebra)), coords_(std::move(coords)) {}
    QuotientAlgebra algebra_;
    std::vector<Rational> coords_;
};

// Validated construction; throws PointValidationError when some generator
// does not vanish at the coordinates.
KPoint kpoint(const QuotientAlgebra& algebra, std::vector<Rational> coords);

// A putative homomorphism given by its variable images is legal exactly when
// those images satisfy the ideal; this builds the point they determine.
KPoint homomorphism_from_images(const QuotientAlgebra& algebra, std::vector<Rational> images);

// Evaluation at the point. Representative-independent on quotient classes
// because the generators vanish at the coordinates.
Rational ev(const KPoint& h, const Polynomial& f);

}  // namespace ellop
