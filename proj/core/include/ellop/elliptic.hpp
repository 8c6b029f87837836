#pragma once

#include "ellop/symbol.hpp"
#include "ellop/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ellop {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class Ellipticity { Elliptic, NotElliptic, Unknown };

std::string ellipticity_name(Ellipticity e);

// A nonzero real covector written base + t * dir with t the certified root.
// Substituting the parametrization into the form gives a univariate multiple
// of t's polynomial, so the zero re-verifies exactly.
struct ParametrizedWitness {
    std::vector<Rational> base;
    std::vector<Rational> dir;
    AlgebraicNumber root;
};

struct EllipticityVerdict {
    Ellipticity status = Ellipticity::Unknown;
    // Exactly one witness kind is set when status == NotElliptic.
    std::optional<std::vector<Rational>> rational_witness;
    std::optional<ParametrizedWitness> algebraic_witness;
    // The exact method that produced an Elliptic/NotElliptic verdict, or the
    // reason a verdict could not be reached.
    std::string method;
};

struct ZeroSymbolError : Error {
    using Error::Error;
};

// Exact decision of "form(xi) != 0 for every nonzero real xi", by the first
// applicable method:
//   (a) degree 2: eigenvalue sign counts of the symmetric matrix (Descartes
//       on the characteristic polynomial, exact since the spectrum is real);
//       singular forms get a kernel witness, indefinite forms a witness from
//       exact congruence diagonalization;
//   (b) diagonal forms sum a_i xi_i^k: strict common sign for even k; odd k
//       in >= 2 variables always yields a zero (witness constructed from a
//       coefficient pair); a single dual variable is always elliptic;
//   (c) two variables: dehomogenize on each axis chart and count real roots
//       with Sturm sequences; roots give rational or certified witnesses;
//   (d) otherwise: seeded rational search (refutation only), else Unknown.
// Elliptic is never produced by sampling. Pre: form != 0 (ZeroSymbolError).
EllipticityVerdict decide_nonvanishing(const SymbolForm& s, std::uint64_t seed = kDefaultSeed);

struct PointEllipticity {
    bool order_holds_at_point = false;  // symbol form nonzero at the point
    SymbolForm symbol;
    EllipticityVerdict verdict;
};

// Computes the symbol at the point; a vanishing form means the operator's
// order drops there, which already refutes ellipticity at that point.
PointEllipticity is_elliptic_at(const DiffOperator& l, const KPoint& h,
                                std::uint64_t seed = kDefaultSeed);

enum class DeltaMode { AsWritten, Balanced };

std::optional<DeltaMode> parse_delta_mode(std::string_view name);
std::string delta_mode_name(DeltaMode mode);

// Builds sum_i d^{e_i}/dX_i^{e_i} where e_i is the minimal even integer
// strictly greater than the largest degree of X_i across the generators
// (as-written mode), so every generator is annihilated term by term.
// Balanced mode raises all exponents to the maximum e_i, making the form
// a same-sign diagonal of a single even degree (an extension; as-written
// exponents can differ per variable and then the top symbol may vanish on
// an axis).
DiffOperator construct_delta_operator(std::span<const Polynomial> generators, DeltaMode mode);

}  // namespace ellop
