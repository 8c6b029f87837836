#pragma once

#include "ellop/affine.hpp"
#include "ellop/qlinalg.hpp"

#include <utility>
#include <vector>

namespace ellop {

// The cotangent space at a K-point, presented by relations: one row per
// supplied ideal generator, the row being that generator's gradient at the
// point. Classes of coordinate vectors in Q^n modulo the row space; the
// canonical representative of a class has zeros in all pivot columns.
//
// The dimension depends on the generating set only through the ideal:
// the gradient at a point of the variety of any ideal element q = sum u_j g_j
// is sum u_j(z) grad g_j(z), which lies in the span of the generator rows.
struct CotangentSpace {
    KPoint point;
    QMatrix relation_rows;   // |generators| x n, including zero rows
    Rref reduced;   // row-reduced relations, full row rank
    std::size_t dim = 0;     // n - rank

    std::vector<Rational> canonicalize(std::vector<Rational> v) const {
        return reduce_against_rref(reduced, std::move(v));
    }
    bool operator==(const CotangentSpace& other) const;
};

CotangentSpace cotangent_space(const KPoint& h);

struct CotangentVector {
    CotangentSpace space;
    std::vector<Rational> coords;  // canonical: zero at every pivot column

    bool is_zero() const { return is_zero_vector(coords); }
    bool operator==(const CotangentVector& other) const;
    CotangentVector operator+(const CotangentVector& other) const;
    CotangentVector scale(const Rational& c) const;
};

// d_h(f): the class of f - f(z), computed as the canonical form of the
// gradient of f at the point (first-order Taylor identity).
CotangentVector differential(const KPoint& h, const Polynomial& f);

// A finite formal sum  sum_i b_i . f_i  feeding the model constructions:
// read as sum b_i <f_i> for the free-module model and sum b_i (x) f_i for
// the tensor models.
struct FormalDerivationSum {
    std::vector<std::pair<Rational, Polynomial>> terms;

    static FormalDerivationSum single(const Polynomial& f) { return {{{Rational(1), f}}}; }
    FormalDerivationSum& add(Rational b, Polynomial f);
};

// The formal sum lies outside the augmentation kernel: sum b_i f_i(z) != 0.
struct AugmentationError : Error {
    AugmentationError(const std::string& what, Rational value)
        : Error(what), value(std::move(value)) {}
    Rational value;  // the offending nonzero sum
};

// Tensor-quotient model: the class in I_h / I_h^2 of an element
// sum b_i (x) f_i of the augmentation kernel. Computed by summing into one
// polynomial, checking the kernel condition, and reading the first-order
// coefficients of the shifted polynomial. Throws AugmentationError otherwise.
CotangentVector classical_normalize(const KPoint& h, const FormalDerivationSum& s);

// Free-module model: rewrites <fg> -> h(f)<g> + h(g)<f> and <const> -> 0
// recursively down to the coordinate generators <X_i>, then canonicalizes.
// Total on all formal sums.
CotangentVector rough_normalize(const KPoint& h, const FormalDerivationSum& s);

// Cokernel model: reduces b (x) f against the relations
// a (x) fg - a h(f) (x) g - a h(g) (x) f and a (x) 1 = 0 by peeling one
// variable at a time, then canonicalizes. Total on all formal sums.
CotangentVector algebraic_normalize(const KPoint& h, const FormalDerivationSum& s);

// Module-of-differentials route: present the free module on dX_1..dX_n
// modulo the rows sum_i (dg_j/dX_i) dX_i with polynomial coefficients, then
// specialize the coefficients at the point. Reproduces the cotangent
// relations and dimension; differential(f) agrees with d_h.
struct KaehlerModel {
    std::vector<std::vector<Polynomial>> symbolic_rows;  // entries reduced in the quotient
    CotangentSpace space;

    CotangentVector model_differential(const Polynomial& f) const;
};

KaehlerModel kaehler_specialize(const KPoint& h);

// An algebra homomorphism source -> target given by variable images,
// validated to kill the source ideal. Used for the canonical projection
// from the ambient polynomial algebra onto a quotient.
struct AlgebraSurjection {
    QuotientAlgebra source;
    QuotientAlgebra target;
    std::vector<Polynomial> images;  // in the target context, one per source variable

    Polynomial apply(const Polynomial& f) const;  // substitute + reduce
};

AlgebraSurjection make_surjection(QuotientAlgebra source, QuotientAlgebra target,
                                  std::vector<Polynomial> images);
AlgebraSurjection canonical_projection(const QuotientAlgebra& target);

// The induced linear map between cotangent spaces taking the class of
// d(f) upstairs to the class of d(pi(f)) downstairs. For the canonical
// projection this is exactly the canonicalization map Q^n -> Q^n/rowspan.
struct CotangentMap {
    AlgebraSurjection surjection;
    CotangentSpace source_space;  // at the lifted point
    CotangentSpace target_space;  // at the given point
    QMatrix matrix;               // column i = image of the i-th coordinate class
    bool surjective = false;      // rank(matrix) == target dim

    CotangentVector apply(const CotangentVector& v) const;
};

// h must be a point of pi.target; the lifted point ev_h o pi must satisfy
// the source ideal (PointValidationError otherwise).
CotangentMap cotangent_map(const AlgebraSurjection& pi, const KPoint& h);

// Tangent vectors: kernel of the relation rows, paired with cotangent
// classes by the dot product (well-defined because relation rows annihilate
// the kernel, so canonical and raw representatives pair equally).
struct TangentVector {
    CotangentSpace space;
    std::vector<Rational> coords;
};

std::vector<TangentVector> tangent_space(const KPoint& h);

Rational pairing(const CotangentVector& omega, const TangentVector& v);

}  // namespace ellop
