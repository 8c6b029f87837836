// Acceptance suite: one pass/fail line per criterion, wall-clock budgets
// included. Exits nonzero if any criterion fails. Exact arithmetic
// throughout; every tolerance is zero.

#include "ellop/audit.hpp"
#include "ellop/cli.hpp"
#include "ellop/parse.hpp"
#include "support/fixtures.hpp"
#include "support/golden_forms.hpp"
#include "support/oracles.hpp"
#include "support/random_gen.hpp"
#include "support/verdict_check.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace ellop;
using ellop::testing::Gen;
using ellop::testing::fixture_algebra;
using ellop::testing::fixture_corpus;
using ellop::testing::fixture_point;
using ellop::testing::golden_corpus;
using ellop::testing::make_form;
using ellop::testing::require;

namespace {

ContextPtr xy() { return make_context({"X", "Y"}); }
Polynomial P(const char* text, const ContextPtr& ctx) { return parse_polynomial(text, ctx); }
DiffOperator Op(const char* text, const ContextPtr& ctx) { return parse_operator(text, ctx); }

QuotientAlgebra cusp_algebra() {
    auto ctx = xy();
    return QuotientAlgebra::make(ctx, {P("Y^3 - X^2", ctx)}, grevlex_order(ctx));
}

const std::vector<std::vector<Rational>>& cusp_points() {
    static const std::vector<std::vector<Rational>> pts = {
        {Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(8), Rational(4)}};
    return pts;
}

// 1. Worked example: construction, order, symbol and ellipticity at three points.
void criterion1() {
    auto ctx = xy();
    std::vector<Polynomial> gens = {P("Y^3 - X^2", ctx)};
    DiffOperator delta4 = construct_delta_operator(gens, DeltaMode::AsWritten);
    require(delta4 == Op("dX^4 + dY^4", ctx), "constructed operator is dX^4 + dY^4");
    require(operator_order(delta4) == 4, "order 4");
    require(verify_order(delta4, 4), "order <= 4 verified");
    require(!verify_order(delta4, 3), "order <= 3 refuted");
    auto ambient = QuotientAlgebra::ambient(ctx);
    Polynomial expected = parse_polynomial("24*xi1^4 + 24*xi2^4", dual_context_for(ctx));
    for (const auto& z : cusp_points()) {
        KPoint h = kpoint(ambient, z);
        SymbolForm s = principal_symbol(delta4, h);
        require(s.form == expected, "symbol 24*xi1^4 + 24*xi2^4 at " + to_string(z));
        PointEllipticity pe = is_elliptic_at(delta4, h);
        require(pe.order_holds_at_point, "order holds at " + to_string(z));
        require(pe.verdict.status == Ellipticity::Elliptic, "elliptic at " + to_string(z));
    }
}

// 2. The induction claim audited: checker vs the oracle element, and the
//    flagged discrepancy in the report.
void criterion2() {
    auto ctx = xy();
    auto algebra = cusp_algebra();
    DiffOperator delta4 = Op("dX^4 + dY^4", ctx);
    // Independent oracle on the specific element X^4 (Y^3 - X^2).
    Polynomial element = P("X^4*Y^3 - X^6", ctx);
    Polynomial residue = algebra.reduce(delta4.apply(element));
    require(residue == P("-336*X^2", ctx), "oracle residue -336*X^2");
    require(ideal_contains(element, algebra.ideal()), "oracle element lies in the ideal");
    InvarianceReport report = check_ideal_invariance(delta4, algebra.ideal());
    require(!report.holds, "checker verdict agrees with the oracle (invariance fails)");
    require(ideal_contains(*report.witness, algebra.ideal()), "checker witness is in the ideal");
    require(!algebra.reduce(delta4.apply(*report.witness)).is_zero(),
            "checker witness re-verifies");

    Problem problem = problem_from_json_text(R"({
      "schema": 1, "variables": ["X", "Y"], "ideal": ["Y^3 - X^2"],
      "points": [[0, 0], [1, 1], [8, 4]]
    })");
    AuditReport audit = audit_variety(problem);
    bool flagged = false;
    for (const auto& d : audit.discrepancies) flagged |= d == "construction_full_ideal_claim";
    require(flagged, "audit flags the construction-claim discrepancy");
    bool invariance_fail_entry = false;
    for (const auto& c : audit.checks)
        invariance_fail_entry |= c.check == "ideal_invariance" && c.status == "fail";
    require(invariance_fail_entry, "audit carries the invariance fail entry");
    require(audit.exit_code() == 3, "audit exit code 3");
}

// 3. Symbol closed form vs the definitional oracle on random instances.
void criterion3() {
    Gen gen(30303);
    int instances = 0;
    while (instances < 110) {
        std::size_t n = static_cast<std::size_t>(gen.int_in(1, 3));
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        auto ctx = make_context(names);
        unsigned k = static_cast<unsigned>(gen.int_in(1, 4));
        DiffOperator l = gen.weyl_op(ctx, k, 2, 2);
        KPoint h = kpoint(QuotientAlgebra::ambient(ctx), gen.point(n));
        Polynomial f = gen.poly(ctx, 2);
        f = f - Polynomial::constant(ctx, ev(h, f));
        std::vector<Rational> grad(n);
        for (std::size_t i = 0; i < n; ++i)
            grad[i] = f.differentiate(i).evaluate(h.coordinates());
        SymbolForm s = principal_symbol(l, h);
        require(s.form.evaluate(grad) == ev(h, l.apply(f.pow(k))),
                "closed form == ev(L(f^k)), instance " + std::to_string(instances));
        ++instances;
    }
}

// 4. Commutator calculus: annihilation above the order, a nonzero iterate at
//    the order, and the evaluation/commutator exchange identity.
void criterion4() {
    Gen gen(40404);
    auto ctx = xy();
    int ops = 0;
    while (ops < 110) {
        unsigned k = static_cast<unsigned>(gen.int_in(0, 4));
        DiffOperator l = gen.weyl_op(ctx, k, 2, 2);
        for (int t = 0; t < 2; ++t) {
            std::vector<Polynomial> fs;
            for (unsigned s = 0; s <= k; ++s)
                fs.push_back(t == 0 ? Polynomial::variable(ctx, gen.int_in(0, 1))
                                    : gen.poly(ctx, 2));
            require(iterated_delta(fs, l).is_zero(),
                    "(k+1)-fold commutator vanishes, op " + std::to_string(ops));
        }
        require(verify_order(l, k), "order <= k verified");
        if (k > 0)
            require(!verify_order(l, k - 1), "some k-fold commutator is nonzero");
        ++ops;
    }
    // Evaluation exchanges with iterated commutators (j <= 3).
    auto ambient = QuotientAlgebra::ambient(ctx);
    std::function<Rational(const KPoint&, const DiffOperator&, std::span<const Polynomial>,
                           const Polynomial&)>
        scalar = [&](const KPoint& h, const DiffOperator& l, std::span<const Polynomial> fs,
                     const Polynomial& p) -> Rational {
        if (fs.empty()) return ev(h, l.apply(p));
        return scalar(h, l, fs.subspan(1), fs.front() * p) -
               ev(h, fs.front()) * scalar(h, l, fs.subspan(1), p);
    };
    for (int i = 0; i < 30; ++i) {
        KPoint h = kpoint(ambient, gen.point(2));
        DiffOperator l = gen.weyl_op(ctx, static_cast<unsigned>(gen.int_in(1, 3)));
        unsigned j = static_cast<unsigned>(gen.int_in(1, 3));
        std::vector<Polynomial> fs;
        for (unsigned s = 0; s < j; ++s) fs.push_back(gen.poly(ctx, 2));
        Polynomial p = gen.poly(ctx, 3);
        require(ev(h, iterated_delta(fs, l).apply(p)) == scalar(h, l, fs, p),
                "evaluation commutes with iterated commutators");
    }
}

// 5. The four construction models agree with the differential, and the
//    module-of-differentials specialization reproduces the relations.
void criterion5() {
    Gen gen(50505);
    int pairs = 0;
    for (const auto& f : fixture_corpus()) {
        auto algebra = fixture_algebra(f);
        auto ctx = algebra.context();
        for (const auto& coords : f.points) {
            KPoint h = fixture_point(algebra, coords);
            ++pairs;
            for (int i = 0; i < 50; ++i) {
                Polynomial p = gen.poly(ctx, 3);
                CotangentVector direct = differential(h, p);
                require(rough_normalize(h, FormalDerivationSum::single(p)) == direct,
                        "free-module model agrees");
                require(algebraic_normalize(h, FormalDerivationSum::single(p)) == direct,
                        "cokernel model agrees");
                FormalDerivationSum ds;
                ds.add(Rational(1), p);
                ds.add(-ev(h, p), Polynomial::constant(ctx, Rational(1)));
                require(classical_normalize(h, ds) == direct, "tensor-quotient model agrees");
            }
            KaehlerModel km = kaehler_specialize(h);
            CotangentSpace direct_space = cotangent_space(h);
            require(km.space.dim == direct_space.dim, "specialized dimension matches");
            require(km.space.reduced.mat == direct_space.reduced.mat,
                    "specialized relations match");
        }
    }
    require(pairs >= 10, "fixture corpus has >= 10 (ideal, point) pairs");
}

// 6. Quotient transfer for the tangential derivation and its square.
void criterion6() {
    auto ctx = xy();
    auto algebra = cusp_algebra();
    DiffOperator d = Op("3*Y^2*dX + 2*X*dY", ctx);
    DiffOperator d2 = compose(d, d);
    for (const DiffOperator& op : {d, d2}) {
        InvarianceReport rep = check_ideal_invariance(op, algebra.ideal());
        require(rep.holds, "invariance holds");
        InducedOperator induced = induce(op, algebra);
        for (const auto& z : cusp_points()) {
            KPoint h = kpoint(algebra, z);
            PullbackCheck pc = symbol_pullback_check(induced, h);
            require(pc.ok, "pullback identity at " + to_string(z));
            require(pc.omega_surjective, "cotangent map surjective at " + to_string(z));
        }
    }
}

// 7. Ellipticity decider on the golden corpus with re-verified witnesses.
void criterion7() {
    int cases = 0;
    bool saw_algebraic = false;
    for (const auto& c : golden_corpus()) {
        SymbolForm s = make_form(c.form, c.n, c.degree);
        EllipticityVerdict v = decide_nonvanishing(s);
        require(v.status == c.expected, "verdict for " + c.form);
        ellop::testing::check_verdict_integrity(v);
        if (v.status == Ellipticity::NotElliptic) {
            ellop::testing::recheck_witness(s, v);
            saw_algebraic |= v.algebraic_witness.has_value();
        }
        ++cases;
    }
    require(cases >= 20, "golden corpus has >= 20 cases");
    require(saw_algebraic, "corpus exercises algebraic-number certificates");
    // The discriminant-5 binary quadratic must yield an algebraic witness.
    SymbolForm disc5 = make_form("xi1^2 - 3*xi1*xi2 + xi2^2", 2, 2);
    EllipticityVerdict v = decide_nonvanishing(disc5);
    require(v.status == Ellipticity::NotElliptic && v.algebraic_witness.has_value(),
            "xi^2 - 3 xi eta + eta^2 certified via an isolated real root");
}

// 8. Groebner engine: determinism, linearity, membership.
void criterion8() {
    Gen gen(80808);
    auto ctx3 = make_context({"X", "Y", "Z"});
    int ideals = 0;
    while (ideals < 22) {
        std::vector<Polynomial> gens;
        int ngens = gen.int_in(2, 3);
        for (int i = 0; i < ngens; ++i) gens.push_back(gen.nonzero_poly(ctx3, 3, 3));
        auto gb1 = buchberger(gens, grevlex_order(ctx3));
        std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
        auto gb2 = buchberger(reversed, grevlex_order(ctx3));
        require(gb1.elements() == gb2.elements(), "reduced basis independent of generator order");
        if (!gb1.is_unit_ideal()) {
            Polynomial p = gen.poly(ctx3, 3), q = gen.poly(ctx3, 3);
            Rational a = gen.rational(), b = gen.rational();
            require(normal_form(p.scale(a) + q.scale(b), gb1) ==
                        normal_form(p, gb1).scale(a) + normal_form(q, gb1).scale(b),
                    "normal form is linear");
        }
        ++ideals;
    }
    auto ctx = xy();
    auto order = grevlex_order(ctx);
    for (int i = 0; i < 40; ++i) {
        Polynomial f = gen.nonzero_poly(ctx, 3, 3);
        auto gb = buchberger({f}, order);
        Polynomial p = gen.poly(ctx, 4, 4);
        require(ideal_contains(p, gb) ==
                    ellop::testing::principal_ideal_contains(p, f, order),
                "membership matches the division oracle");
    }
}

// 9. Finite-dimensional duality: equal dimensions, nondegenerate pairing.
void criterion9() {
    for (const auto& f : fixture_corpus()) {
        auto algebra = fixture_algebra(f);
        auto ctx = algebra.context();
        for (const auto& coords : f.points) {
            KPoint h = fixture_point(algebra, coords);
            CotangentSpace space = cotangent_space(h);
            auto tangents = tangent_space(h);
            require(tangents.size() == space.dim, "dim tangent == dim cotangent");
            // Pair a canonical cotangent basis (non-pivot unit classes)
            // against the kernel basis; the matrix must be invertible.
            std::vector<std::size_t> free_cols;
            std::vector<bool> is_pivot(ctx->size(), false);
            for (auto c : space.reduced.pivots) is_pivot[c] = true;
            for (std::size_t c = 0; c < ctx->size(); ++c)
                if (!is_pivot[c]) free_cols.push_back(c);
            QMatrix gram(space.dim, space.dim);
            for (std::size_t i = 0; i < free_cols.size(); ++i) {
                std::vector<Rational> unit(ctx->size(), Rational(0));
                unit[free_cols[i]] = 1;
                CotangentVector omega{space, space.canonicalize(unit)};
                for (std::size_t j = 0; j < tangents.size(); ++j)
                    gram.at(i, j) = pairing(omega, tangents[j]);
            }
            require(gram.rank() == space.dim, "pairing is nondegenerate at " + f.name);
        }
    }
}

struct Criterion {
    int number;
    const char* label;
    double budget_seconds;
    std::function<void()> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "worked example: construction, order, symbol, ellipticity", 1.0, criterion1},
        {2, "induction claim audited against the oracle element", 1.0, criterion2},
        {3, "symbol closed form vs definitional oracle (110 instances)", 30.0, criterion3},
        {4, "commutator order calculus (110 operators, exchange identity)", 30.0, criterion4},
        {5, "model agreement across the fixture corpus", 30.0, criterion5},
        {6, "quotient transfer: invariance, induction, pullback, surjectivity", 5.0, criterion6},
        {7, "ellipticity decider golden corpus with certified witnesses", 5.0, criterion7},
        {8, "groebner determinism, linearity, membership oracle", 30.0, criterion8},
        {9, "finite-dimensional duality and nondegenerate pairing", 5.0, criterion9},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < c.budget_seconds;
        bool pass = error.empty() && in_budget;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.label
             << "  [" << elapsed << "s / " << c.budget_seconds << "s]";
        if (!error.empty()) line << "  error: " << error;
        if (error.empty() && !in_budget) line << "  error: time budget exceeded";
        std::cout << line.str() << "\n";
        if (!pass) ++failures;
    }
    if (failures == 0)
        std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
