#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellop/elliptic.hpp"
#include "ellop/parse.hpp"
#include "support/fixtures.hpp"
#include "support/golden_forms.hpp"
#include "support/random_gen.hpp"
#include "support/verdict_check.hpp"

using namespace ellop;
using ellop::testing::Gen;
using ellop::testing::golden_corpus;
using ellop::testing::make_form;

namespace {
ContextPtr xy() { return make_context({"X", "Y"}); }
Polynomial P(const char* text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); }
DiffOperator Op(const char* text, const ContextPtr& ctx) { return parse_operator(text, ctx); }
}  // namespace

TEST_CASE("delta construction: documented exponent choices") {
    auto ctx = xy();
    std::vector<Polynomial> cusp_gens = {P("Y^3 - X^2", ctx)};
    CHECK(construct_delta_operator(cusp_gens, DeltaMode::AsWritten) == Op("dX^4 + dY^4", ctx));

    std::vector<Polynomial> parabola = {P("X^2 - Y", ctx)};
    CHECK(construct_delta_operator(parabola, DeltaMode::AsWritten) == Op("dX^4 + dY^2", ctx));
    CHECK(construct_delta_operator(parabola, DeltaMode::Balanced) == Op("dX^4 + dY^4", ctx));

    CHECK_THROWS_AS(construct_delta_operator({}, DeltaMode::AsWritten), InputError);
}

TEST_CASE("the constructed operator annihilates every fixture generator") {
    for (const auto& f : ellop::testing::fixture_corpus()) {
        if (f.gens.empty()) continue;
        auto algebra = ellop::testing::fixture_algebra(f);
        for (DeltaMode mode : {DeltaMode::AsWritten, DeltaMode::Balanced}) {
            DiffOperator d = construct_delta_operator(algebra.generators(), mode);
            for (const auto& g : algebra.generators()) CHECK(d.apply(g).is_zero());
        }
    }
}

TEST_CASE("as-written exponents can break ellipticity; balanced mode repairs it") {
    auto ctx = xy();
    std::vector<Polynomial> parabola = {P("X^2 - Y", ctx)};
    KPoint origin = kpoint(QuotientAlgebra::ambient(ctx), {Rational(0), Rational(0)});

    DiffOperator uneven = construct_delta_operator(parabola, DeltaMode::AsWritten);
    PointEllipticity pe = is_elliptic_at(uneven, origin);
    CHECK(pe.verdict.status == Ellipticity::NotElliptic);
    // The top symbol 24 xi1^4 vanishes on the second axis.
    CHECK_NOTHROW(ellop::testing::recheck_witness(pe.symbol, pe.verdict));

    DiffOperator even = construct_delta_operator(parabola, DeltaMode::Balanced);
    CHECK(is_elliptic_at(even, origin).verdict.status == Ellipticity::Elliptic);
}

TEST_CASE("golden corpus: exact verdicts with re-verified witnesses") {
    int count = 0;
    for (const auto& c : golden_corpus()) {
        INFO("form: " << c.form);
        SymbolForm s = make_form(c.form, c.n, c.degree);
        EllipticityVerdict v = decide_nonvanishing(s);
        CHECK(v.status == c.expected);
        ellop::testing::check_verdict_integrity(v);
        if (v.status == Ellipticity::NotElliptic)
            CHECK_NOTHROW(ellop::testing::recheck_witness(s, v));
        if (v.status == Ellipticity::Unknown) CHECK(!v.method.empty());
        ++count;
    }
    CHECK(count >= 20);
}

TEST_CASE("documented witnesses for specific corpus members") {
    // (xi1 - 2 xi2)(xi1 + xi2): the diagonalization finds (2, 1).
    SymbolForm fact = make_form("xi1^2 - xi1*xi2 - 2*xi2^2", 2, 2);
    EllipticityVerdict v = decide_nonvanishing(fact);
    REQUIRE(v.rational_witness.has_value());
    CHECK(*v.rational_witness == std::vector<Rational>{Rational(2), Rational(1)});

    // Singular (xi1 + xi2)^2: kernel direction.
    SymbolForm sq = make_form("xi1^2 + 2*xi1*xi2 + xi2^2", 2, 2);
    EllipticityVerdict kv = decide_nonvanishing(sq);
    REQUIRE(kv.rational_witness.has_value());
    CHECK(sq.form.evaluate(*kv.rational_witness) == 0);

    // Discriminant 5: algebraic certificate, not a rational witness.
    SymbolForm disc5 = make_form("xi1^2 - 3*xi1*xi2 + xi2^2", 2, 2);
    EllipticityVerdict av = decide_nonvanishing(disc5);
    CHECK(av.status == Ellipticity::NotElliptic);
    CHECK(av.algebraic_witness.has_value());
    CHECK(!av.rational_witness.has_value());

    // 24 xi1^4 - 24 xi2^4 admits the rational zero (1, 1).
    SymbolForm quartic = make_form("24*xi1^4 - 24*xi2^4", 2, 4);
    EllipticityVerdict qv = decide_nonvanishing(quartic);
    REQUIRE(qv.rational_witness.has_value());
    CHECK(quartic.form.evaluate(*qv.rational_witness) == 0);
}

TEST_CASE("zero forms are rejected with a pointer to the order check") {
    SymbolForm zero = make_form("0", 2, 2);
    CHECK_THROWS_AS(decide_nonvanishing(zero), ZeroSymbolError);
}

TEST_CASE("verdicts on factored binary forms match the factorization ground truth") {
    Gen gen(2025);
    auto dual = make_context({"xi1", "xi2"});
    int trials = 0;
    while (trials < 60) {
        // Product of random linear forms and definite quadratic forms; the
        // form has a nonzero real zero exactly when a linear factor occurs.
        int linear = gen.int_in(0, 2), definite = gen.int_in(0, 2);
        if (linear + definite == 0) continue;
        Polynomial form = Polynomial::constant(dual, Rational(1));
        for (int i = 0; i < linear; ++i) {
            Rational a = gen.rational(4, 2), b = gen.rational(4, 2);
            while (a == 0 && b == 0) a = gen.nonzero_rational(4, 2);
            form = form * (Polynomial::variable(dual, 0).scale(a) +
                           Polynomial::variable(dual, 1).scale(b));
        }
        for (int i = 0; i < definite; ++i) {
            // xi1^2 + c xi1 xi2 + d xi2^2 with c^2 < 4d.
            Rational c = gen.rational(2, 2);
            Rational d = c * c / 4 + gen.nonzero_rational(3, 2) * gen.nonzero_rational(3, 2);
            form = form * (Polynomial::variable(dual, 0).pow(2) +
                           (Polynomial::variable(dual, 0) * Polynomial::variable(dual, 1))
                               .scale(c) +
                           Polynomial::variable(dual, 1).pow(2).scale(d));
        }
        unsigned degree = form.total_degree();
        SymbolForm s = make_form(form.to_string(), 2, degree);
        EllipticityVerdict v = decide_nonvanishing(s);
        bool has_real_zero = linear > 0;
        CHECK(v.status ==
              (has_real_zero ? Ellipticity::NotElliptic : Ellipticity::Elliptic));
        if (v.status == Ellipticity::NotElliptic)
            CHECK_NOTHROW(ellop::testing::recheck_witness(s, v));
        ++trials;
    }
}

TEST_CASE("random definite quadratics are certified elliptic") {
    Gen gen(4096);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = static_cast<std::size_t>(gen.int_in(1, 4));
        // A^T A + I is positive definite.
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (auto& row : a)
            for (auto& x : row) x = gen.rational(2, 2);
        std::vector<std::string> names;
        for (std::size_t v = 0; v < n; ++v) names.push_back("xi" + std::to_string(v + 1));
        auto dual = make_context(names);
        Polynomial form = Polynomial::zero(dual);
        for (std::size_t r = 0; r < n; ++r) {
            Polynomial row = Polynomial::zero(dual);
            for (std::size_t c = 0; c < n; ++c)
                row = row + Polynomial::variable(dual, c).scale(a[r][c]);
            form = form + row * row;
        }
        for (std::size_t v = 0; v < n; ++v)
            form = form + Polynomial::variable(dual, v).pow(2);
        SymbolForm s = make_form(form.to_string(), n, 2);
        EllipticityVerdict verdict = decide_nonvanishing(s);
        CHECK(verdict.status == Ellipticity::Elliptic);
        CHECK(verdict.method == "definite quadratic form");
    }
}

TEST_CASE("is_elliptic_at: documented operator fixtures") {
    auto ctx = xy();
    auto ambient = QuotientAlgebra::ambient(ctx);
    DiffOperator delta4 = Op("dX^4 + dY^4", ctx);
    for (auto& coords : std::vector<std::vector<Rational>>{
             {Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(8), Rational(4)}}) {
        PointEllipticity pe = is_elliptic_at(delta4, kpoint(ambient, coords));
        CHECK(pe.order_holds_at_point);
        CHECK(pe.verdict.status == Ellipticity::Elliptic);
    }

    DiffOperator d = Op("3*Y^2*dX + 2*X*dY", ctx);
    PointEllipticity at_origin = is_elliptic_at(d, kpoint(ambient, {Rational(0), Rational(0)}));
    CHECK(!at_origin.order_holds_at_point);
    CHECK(at_origin.verdict.status == Ellipticity::NotElliptic);

    PointEllipticity smooth = is_elliptic_at(d, kpoint(ambient, {Rational(1), Rational(1)}));
    CHECK(smooth.verdict.status == Ellipticity::NotElliptic);
    REQUIRE(smooth.verdict.rational_witness.has_value());
    // Any nonzero real root of 3 xi1 + 2 xi2 qualifies; re-check exactly.
    CHECK(smooth.symbol.form.evaluate(*smooth.verdict.rational_witness) == 0);
    CHECK(!is_zero_vector(*smooth.verdict.rational_witness));
}

TEST_CASE("unknown verdicts explain themselves and never flip to elliptic") {
    SymbolForm s = make_form("xi1^4 + xi2^4 + xi3^4 + xi1^2*xi2^2", 3, 4);
    EllipticityVerdict v = decide_nonvanishing(s, 7);
    CHECK(v.status == Ellipticity::Unknown);
    CHECK(v.method.find("search") != std::string::npos);
    EllipticityVerdict v2 = decide_nonvanishing(s, 99991);
    CHECK(v2.status == Ellipticity::Unknown);
}

TEST_CASE("seeded search refutes dense forms with hidden rational zeros") {
    // (xi1 + xi2 + xi3)(xi1^2 + xi2^2 + xi3^2) expanded: cubic, not diagonal.
    SymbolForm s = make_form(
        "xi1^3 + xi1^2*xi2 + xi1^2*xi3 + xi1*xi2^2 + xi1*xi3^2 + xi2^3 + xi2^2*xi3 + "
        "xi2*xi3^2 + xi3^3",
        3, 3);
    EllipticityVerdict v = decide_nonvanishing(s);
    CHECK(v.status == Ellipticity::NotElliptic);
    CHECK_NOTHROW(ellop::testing::recheck_witness(s, v));
}
