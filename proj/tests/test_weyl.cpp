#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ellop/parse.hpp"
#include "ellop/weyl.hpp"
#include "support/random_gen.hpp"

#include <functional>
#include <span>

using namespace ellop;
using ellop::testing::Gen;

namespace {
ContextPtr xy() { return make_context({"X", "Y"}); }
Polynomial P(const char* text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); }
DiffOperator Op(const char* text, const ContextPtr& ctx) { return parse_operator(text, ctx); }

QuotientAlgebra cusp() {
    auto ctx = xy();
    return QuotientAlgebra::make(ctx, {P("Y^3 - X^2", ctx)}, grevlex_order(ctx));
}

// Independent scalar route: G -> (p -> G(f p) - f(z) G(p)) starting from
// p -> ev_z(L(p)). Used as the oracle for the operator-level commutators.
Rational scalar_delta(const KPoint& h, const DiffOperator& l, std::span<const Polynomial> fs,
                      const Polynomial& p) {
    if (fs.empty()) return ev(h, l.apply(p));
    const Polynomial& f = fs.front();
    auto rest = fs.subspan(1);
    return scalar_delta(h, l, rest, f * p) - ev(h, f) * scalar_delta(h, l, rest, p);
}
}  // namespace

TEST_CASE("application of operators: frozen values") {
    auto ctx = xy();
    DiffOperator d4 = Op("dX^4 + dY^4", ctx);
    CHECK(d4.apply(P("X^4", ctx)) == P("24", ctx));
    CHECK(d4.apply(Polynomial::zero(ctx)).is_zero());
    CHECK(d4.apply(P("X^4*Y^3 - X^6", ctx)) == P("24*Y^3 - 360*X^2", ctx));
}

TEST_CASE("composition: commutation rule and identities") {
    auto ctx = xy();
    DiffOperator dx = DiffOperator::partial(ctx, 0);
    DiffOperator mx = DiffOperator::multiplication(P("X", ctx));
    CHECK(compose(dx, mx) == Op("X*dX + 1", ctx));
    DiffOperator l = Op("3*Y^2*dX + 2*X*dY", ctx);
    CHECK(compose(l, DiffOperator::identity(ctx)) == l);
    CHECK(compose(DiffOperator::identity(ctx), l) == l);
    CHECK(compose(dx, DiffOperator::partial(ctx, 1)) == Op("dX*dY", ctx));
}

TEST_CASE("composition agrees with sequential application on random data") {
    Gen gen(71);
    auto ctx = xy();
    for (int i = 0; i < 100; ++i) {
        DiffOperator l1 = gen.weyl_op(ctx, static_cast<unsigned>(gen.int_in(0, 2)));
        DiffOperator l2 = gen.weyl_op(ctx, static_cast<unsigned>(gen.int_in(0, 2)));
        Polynomial p = gen.poly(ctx, 3);
        CHECK(compose(l1, l2).apply(p) == l1.apply(l2.apply(p)));
    }
}

TEST_CASE("delta: frozen commutators") {
    auto ctx = xy();
    Polynomial x = P("X", ctx);
    DiffOperator dxx = Op("dX^2", ctx);
    CHECK(delta(x, dxx) == Op("2*dX", ctx));
    CHECK(delta(x, delta(x, dxx)) == Op("2", ctx));
    DiffOperator mult = DiffOperator::multiplication(P("X*Y - 3", ctx));
    CHECK(delta(P("X^2*Y", ctx), mult).is_zero());
}

TEST_CASE("delta matches its defining action and lowers order") {
    Gen gen(73);
    auto ctx = xy();
    for (int i = 0; i < 200; ++i) {
        DiffOperator l = gen.weyl_op(ctx, static_cast<unsigned>(gen.int_in(1, 3)));
        Polynomial f = gen.poly(ctx, 2), p = gen.poly(ctx, 3);
        DiffOperator d = delta(f, l);
        CHECK(d.apply(p) == l.apply(f * p) - f * l.apply(p));
        if (!d.is_zero()) CHECK(d.structural_order() < l.structural_order());
    }
}

TEST_CASE("order and verify_order") {
    auto ctx = xy();
    CHECK(operator_order(Op("dX^2 + X*dY", ctx)) == 2);
    CHECK_THROWS_AS(operator_order(DiffOperator::zero(ctx)), ZeroOperatorError);
    CHECK(verify_order(Op("dX^4 + dY^4", ctx), 4));
    CHECK(!verify_order(Op("dX^4 + dY^4", ctx), 3));
    CHECK(!verify_order(Op("dX^2", ctx), 1));  // delta(X) delta(X) dX^2 = 2
    CHECK(verify_order(Op("X*Y - 3", ctx), 0));
}

TEST_CASE("iterated deltas annihilate above the structural order and not below") {
    Gen gen(79);
    auto ctx = make_context({"X", "Y"});
    for (int i = 0; i < 100; ++i) {
        unsigned k = static_cast<unsigned>(gen.int_in(0, 3));
        DiffOperator l = gen.weyl_op(ctx, k, 2, 2);
        REQUIRE(l.structural_order() == k);
        // Sampled (k+1)-tuples: variables and random polynomials.
        for (int t = 0; t < 3; ++t) {
            std::vector<Polynomial> fs;
            for (unsigned s = 0; s <= k; ++s)
                fs.push_back(t == 0 ? Polynomial::variable(ctx, gen.int_in(0, 1) ? 1 : 0)
                                    : gen.poly(ctx, 2));
            CHECK(iterated_delta(fs, l).is_zero());
        }
        CHECK(verify_order(l, k));
        if (k > 0) CHECK(!verify_order(l, k - 1));
    }
}

TEST_CASE("evaluation commutes with iterated deltas (scalar recursion oracle)") {
    Gen gen(83);
    auto ctx = xy();
    auto ambient = QuotientAlgebra::ambient(ctx);
    for (int i = 0; i < 60; ++i) {
        KPoint h = kpoint(ambient, gen.point(2));
        DiffOperator l = gen.weyl_op(ctx, static_cast<unsigned>(gen.int_in(1, 3)));
        unsigned j = static_cast<unsigned>(gen.int_in(1, 3));
        std::vector<Polynomial> fs;
        for (unsigned s = 0; s < j; ++s) fs.push_back(gen.poly(ctx, 2));
        Polynomial p = gen.poly(ctx, 3);
        Rational weyl_route = ev(h, iterated_delta(fs, l).apply(p));
        Rational scalar_route = scalar_delta(h, l, fs, p);
        CHECK(weyl_route == scalar_route);
    }
}

TEST_CASE("the k-fold scalar functional kills the kernel of the point") {
    Gen gen(89);
    auto ctx = xy();
    auto ambient = QuotientAlgebra::ambient(ctx);
    for (int i = 0; i < 40; ++i) {
        KPoint h = kpoint(ambient, gen.point(2));
        unsigned k = static_cast<unsigned>(gen.int_in(1, 3));
        DiffOperator l = gen.weyl_op(ctx, k);
        std::vector<Polynomial> fs;
        for (unsigned s = 0; s < k; ++s) fs.push_back(gen.poly(ctx, 2));
        // Generators of ker(ev_z) are X_i - z_i; products with anything stay inside.
        std::size_t var = static_cast<std::size_t>(gen.int_in(0, 1));
        Polynomial vanishing =
            (Polynomial::variable(ctx, var) -
             Polynomial::constant(ctx, h.coordinates()[var])) *
            gen.poly(ctx, 2);
        CHECK(scalar_delta(h, l, fs, vanishing) == 0);
    }
}

TEST_CASE("ideal invariance: documented fixtures") {
    auto ctx = xy();
    auto a = cusp();

    auto tangential = check_ideal_invariance(Op("3*Y^2*dX + 2*X*dY", ctx), a.ideal());
    CHECK(tangential.holds);
    CHECK(tangential.checked == 3);  // one basis element, monomials 1, X, Y

    auto broken = check_ideal_invariance(Op("dX^4 + dY^4", ctx), a.ideal());
    CHECK(!broken.holds);
    CHECK(broken.witness->to_string() == "X^4*Y^3 - X^6");
    CHECK(broken.residue->to_string() == "-336*X^2");

    auto vacuous = check_ideal_invariance(Op("dX^4 + dY^4", ctx),
                                          QuotientAlgebra::ambient(ctx).ideal());
    CHECK(vacuous.holds);
}

TEST_CASE("invariance checker agrees with a brute-force oracle") {
    Gen gen(97);
    auto ctx = xy();
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Polynomial> gens = {gen.nonzero_poly(ctx, 3, 2)};
        if (gen.int_in(0, 1)) gens.push_back(gen.nonzero_poly(ctx, 2, 2));
        auto gb = buchberger(gens, grevlex_order(ctx));
        if (gb.is_unit_ideal()) continue;
        DiffOperator l = gen.weyl_op(ctx, static_cast<unsigned>(gen.int_in(1, 2)), 2, 1);
        auto report = check_ideal_invariance(l, gb);
        if (report.holds) {
            // Random combinations sum q_j g_j must map back into the ideal.
            for (int i = 0; i < 10; ++i) {
                Polynomial member = Polynomial::zero(ctx);
                for (const auto& g : gens) member = member + gen.poly(ctx, 4) * g;
                CHECK(normal_form(l.apply(member), gb).is_zero());
            }
        } else {
            CHECK(ideal_contains(*report.witness, gb));
            CHECK(normal_form(l.apply(*report.witness), gb) == *report.residue);
            CHECK(!report.residue->is_zero());
        }
    }
}

TEST_CASE("induce: success, failure witness, ambient identity") {
    auto ctx = xy();
    auto a = cusp();
    InducedOperator d = induce(Op("3*Y^2*dX + 2*X*dY", ctx), a);
    CHECK(d.structural_order() == 1);

    try {
        induce(Op("dX^4 + dY^4", ctx), a);
        CHECK(false);
    } catch (const InduceError& e) {
        CHECK(e.report.witness->to_string() == "X^4*Y^3 - X^6");
        CHECK(e.report.residue->to_string() == "-336*X^2");
    }

    auto ambient = QuotientAlgebra::ambient(ctx);
    InducedOperator same = induce(Op("dX^4 + dY^4", ctx), ambient);
    Polynomial p = P("X^4*Y^3", ctx);
    CHECK(same.apply(p) == Op("dX^4 + dY^4", ctx).apply(p));
}

TEST_CASE("induced application is representative independent") {
    Gen gen(101);
    auto ctx = xy();
    auto a = cusp();
    const Polynomial g = P("Y^3 - X^2", ctx);
    InducedOperator d2 =
        induce(compose(Op("3*Y^2*dX + 2*X*dY", ctx), Op("3*Y^2*dX + 2*X*dY", ctx)), a);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = gen.poly(ctx, 3), q = gen.poly(ctx, 3);
        CHECK(d2.apply(p) == d2.apply(p + q * g));
    }
}

TEST_CASE("quotient commutation of iterated deltas for induced operators") {
    Gen gen(103);
    auto ctx = xy();
    auto a = cusp();
    DiffOperator l = Op("3*Y^2*dX + 2*X*dY", ctx);
    InducedOperator induced = induce(l, a);
    auto ambient = QuotientAlgebra::ambient(ctx);
    for (const auto& coords : std::vector<std::vector<Rational>>{
             {Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(8), Rational(4)}}) {
        KPoint down = kpoint(a, coords);
        KPoint up = kpoint(ambient, coords);
        for (int i = 0; i < 15; ++i) {
            unsigned j = static_cast<unsigned>(gen.int_in(1, 3));
            std::vector<Polynomial> fs;
            for (unsigned s = 0; s < j; ++s) fs.push_back(gen.poly(ctx, 2));
            Polynomial p = gen.poly(ctx, 3);
            // Upstairs recursion vs the recursion run through the quotient:
            // reduce products and the base application to normal forms.
            std::function<Rational(std::span<const Polynomial>, const Polynomial&)> rec_down =
                [&](std::span<const Polynomial> rest, const Polynomial& arg) -> Rational {
                if (rest.empty()) return ev(down, induced.apply(arg));
                Polynomial reduced_product = a.reduce(rest.front() * arg);
                return rec_down(rest.subspan(1), reduced_product) -
                       ev(down, rest.front()) * rec_down(rest.subspan(1), arg);
            };
            CHECK(scalar_delta(up, l, fs, p) == rec_down(fs, a.reduce(p)));
        }
    }
}

TEST_CASE("zero operator and zero ideal edge cases") {
    auto ctx = xy();
    auto a = cusp();
    CHECK(check_ideal_invariance(DiffOperator::zero(ctx), a.ideal()).holds);
    CHECK(verify_order(DiffOperator::zero(ctx), 0));
    DiffOperator sum = Op("dX", ctx) - Op("dX", ctx);
    CHECK(sum.is_zero());
}
