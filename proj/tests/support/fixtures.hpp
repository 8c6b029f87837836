#pragma once

#include "ellop/affine.hpp"
#include "ellop/parse.hpp"

#include <string>
#include <vector>

namespace ellop::testing {

// A curated corpus of (ideal, rational point) pairs covering smooth points,
// singular points, zero ideals, zero-dimensional cotangent spaces and three
// variables. Every point lies on its variety.
struct Fixture {
    std::string name;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    std::vector<std::vector<std::string>> points;
};

inline const std::vector<Fixture>& fixture_corpus() {
    static const std::vector<Fixture> corpus = {
        {"cusp", {"X", "Y"}, {"Y^3 - X^2"}, {{"0", "0"}, {"1", "1"}, {"8", "4"}}},
        {"plane2", {"X", "Y"}, {}, {{"1", "2"}}},
        {"line1", {"X"}, {}, {{"3"}}},
        {"circle", {"X", "Y"}, {"X^2 + Y^2 - 1"}, {{"0", "1"}, {"3/5", "4/5"}}},
        {"two_points", {"X"}, {"X^2 - 1"}, {{"1"}, {"-1"}}},
        {"node_axes", {"X", "Y"}, {"X*Y"}, {{"0", "0"}, {"1", "0"}}},
        {"twisted", {"X", "Y"}, {"X^2 - Y", "Y^2 - X"}, {{"1", "1"}, {"0", "0"}}},
        {"plane3", {"X", "Y", "Z"}, {"X + Y + Z"}, {{"1", "-1", "0"}}},
        {"sphere_slice", {"X", "Y", "Z"}, {"X^2 + Y^2 + Z^2 - 1", "Z"}, {{"1", "0", "0"}}},
    };
    return corpus;
}

inline QuotientAlgebra fixture_algebra(const Fixture& f,
                                       OrderKind kind = OrderKind::Grevlex) {
    ContextPtr ctx = make_context(f.vars);
    std::vector<Polynomial> gens;
    for (const auto& g : f.gens) gens.push_back(parse_polynomial(g, ctx));
    return QuotientAlgebra::make(ctx, std::move(gens), order_of_kind(kind, ctx));
}

inline KPoint fixture_point(const QuotientAlgebra& algebra,
                            const std::vector<std::string>& coords) {
    std::vector<Rational> z;
    for (const auto& c : coords) z.push_back(parse_rational(c));
    return kpoint(algebra, std::move(z));
}

}  // namespace ellop::testing
