#include "ellop/elliptic.hpp"

#include <algorithm>
#include <random>

namespace ellop {

std::string ellipticity_name(Ellipticity e) {
    switch (e) {
        case Ellipticity::Elliptic: return "Elliptic";
        case Ellipticity::NotElliptic: return "NotElliptic";
        case Ellipticity::Unknown: return "Unknown";
    }
    return "?";
}

std::optional<DeltaMode> parse_delta_mode(std::string_view name) {
    if (name == "as-written") return DeltaMode::AsWritten;
    if (name == "balanced") return DeltaMode::Balanced;
    return std::nullopt;
}

std::string delta_mode_name(DeltaMode mode) {
    return mode == DeltaMode::AsWritten ? "as-written" : "balanced";
}

DiffOperator construct_delta_operator(std::span<const Polynomial> generators, DeltaMode mode) {
    if (generators.empty())
        throw InputError("delta construction requires a non-empty generator list");
    ContextPtr ctx = generators.front().context();
    for (const auto& g : generators) require_same_context(g.context(), ctx, "construct_delta");
    std::size_t n = ctx->size();
    std::vector<unsigned> exponents(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned d = 0;
        for (const auto& g : generators) d = std::max(d, g.degree_in(i));
        unsigned e = d + 1;       // minimal even integer strictly above d
        if (e % 2 == 1) ++e;
        exponents[i] = e;
    }
    if (mode == DeltaMode::Balanced) {
        unsigned m = *std::max_element(exponents.begin(), exponents.end());
        std::fill(exponents.begin(), exponents.end(), m);
    }
    DiffOperator l = DiffOperator::zero(ctx);
    for (std::size_t i = 0; i < n; ++i)
        l = l + DiffOperator::partial(ctx, i, exponents[i]);
    return l;
}

namespace {

// ---- witness plumbing ----

std::vector<Rational> unit_vector(std::size_t n, std::size_t i, const Rational& value = Rational(1)) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = value;
    return v;
}

// form restricted to the line base + t * dir, as a univariate polynomial.
UniPoly form_on_line(const Polynomial& form, const std::vector<Rational>& base,
                     const std::vector<Rational>& dir) {
    ContextPtr tctx = make_context({"t"});
    std::vector<Polynomial> images;
    images.reserve(base.size());
    for (std::size_t j = 0; j < base.size(); ++j)
        images.push_back(Polynomial::constant(tctx, base[j]) +
                         Polynomial::variable(tctx, 0).scale(dir[j]));
    Polynomial restricted = form.substitute(images, tctx);
    std::vector<Rational> coeffs(restricted.total_degree() + 1, Rational(0));
    for (const auto& [m, c] : restricted.terms()) coeffs[m[0]] = c;
    return UniPoly(std::move(coeffs));
}

EllipticityVerdict rational_zero(const Polynomial& form, std::vector<Rational> w,
                                 std::string method) {
    if (is_zero_vector(w) || form.evaluate(w) != 0)
        throw Error("internal: invalid rational witness");
    EllipticityVerdict v;
    v.status = Ellipticity::NotElliptic;
    v.rational_witness = std::move(w);
    v.method = std::move(method);
    return v;
}

EllipticityVerdict algebraic_zero(const Polynomial& form, std::vector<Rational> base,
                                  std::vector<Rational> dir, const AlgebraicNumber& root,
                                  std::string method) {
    // Self-check the certificate: the restriction must be annihilated by the
    // isolating polynomial, which must change sign across the interval.
    UniPoly restricted = form_on_line(form, base, dir);
    if (!divmod(restricted, root.poly).second.is_zero())
        throw Error("internal: certificate polynomial does not divide the restriction");
    if (sign(root.poly.eval(root.lo)) * sign(root.poly.eval(root.hi)) >= 0)
        throw Error("internal: certificate interval has no sign change");
    EllipticityVerdict v;
    v.status = Ellipticity::NotElliptic;
    v.algebraic_witness = ParametrizedWitness{std::move(base), std::move(dir), root};
    v.method = std::move(method);
    return v;
}

EllipticityVerdict elliptic_by(std::string method) {
    EllipticityVerdict v;
    v.status = Ellipticity::Elliptic;
    v.method = std::move(method);
    return v;
}

// A NotElliptic verdict for a pair a_i xi_i^k + a_j xi_j^k with opposite
// signs (or odd k): zero at xi_i = t, xi_j = 1 with a_i t^k = -a_j.
EllipticityVerdict diagonal_pair_zero(const Polynomial& form, std::size_t n, std::size_t i,
                                      std::size_t j, const Rational& ai, const Rational& aj,
                                      unsigned k, std::string method) {
    Rational ratio = -aj / ai;
    if (auto s = rational_kth_root(ratio, k)) {
        std::vector<Rational> w(n, Rational(0));
        w[i] = *s;
        w[j] = 1;
        return rational_zero(form, std::move(w), std::move(method));
    }
    std::vector<Rational> base = unit_vector(n, j);
    std::vector<Rational> dir = unit_vector(n, i);
    std::vector<Rational> coeffs(k + 1, Rational(0));
    coeffs[0] = aj;
    coeffs[k] = ai;
    AlgebraicNumber root = isolate_real_root(UniPoly(std::move(coeffs)));
    return algebraic_zero(form, std::move(base), std::move(dir), root, std::move(method));
}

// ---- quadratic path ----

UniPoly characteristic_polynomial(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    // det(lambda I - M) by cofactor expansion with univariate entries.
    std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> c{-m[i][j]};
            if (i == j) c.push_back(Rational(1));
            a[i][j] = UniPoly(std::move(c));
        }
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    auto det = [&](auto&& self, std::vector<std::size_t> rows,
                   std::vector<std::size_t> cs) -> UniPoly {
        if (rows.size() == 1) return a[rows[0]][cs[0]];
        UniPoly total;
        for (std::size_t t = 0; t < cs.size(); ++t) {
            if (a[rows[0]][cs[t]].is_zero()) continue;
            std::vector<std::size_t> subRows(rows.begin() + 1, rows.end());
            std::vector<std::size_t> subCols;
            for (std::size_t u = 0; u < cs.size(); ++u)
                if (u != t) subCols.push_back(cs[u]);
            UniPoly minor = self(self, subRows, subCols);
            UniPoly contrib = a[rows[0]][cs[t]] * minor;
            total = (t % 2 == 0) ? total + contrib : total - contrib;
        }
        return total;
    };
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    return det(det, rows, cols);
}

int descartes_positive_roots(const UniPoly& p) {
    int variations = 0, prev = 0;
    for (const auto& c : p.coeffs()) {
        int s = sign(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

UniPoly negate_argument(const UniPoly& p) {
    std::vector<Rational> c(p.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return UniPoly(std::move(c));
}

// Exact congruence diagonalization q = sum d_i (L_i xi)^2 over Q.
struct Diagonalization {
    std::vector<Rational> d;
    QMatrix forms;  // row i = L_i
};

Diagonalization lagrange_diagonalize(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    // y = B xi tracks the running change of coordinates.
    QMatrix b = QMatrix::identity(n);
    Diagonalization out;
    out.forms = QMatrix(0, 0);
    std::vector<std::vector<Rational>> rows;
    bool progress = true;
    while (progress) {
        progress = false;
        // Rank-one elimination on the first nonzero diagonal entry.
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (a[i][i] != 0) p = i;
        if (p < n) {
            Rational d = a[p][p];
            std::vector<Rational> l(n);
            for (std::size_t j = 0; j < n; ++j) l[j] = a[p][j] / d;
            // Store L in the original coordinates: L . y = (L B) . xi.
            std::vector<Rational> row(n, Rational(0));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < n; ++t) row[t] += l[j] * b.at(j, t);
            out.d.push_back(d);
            rows.push_back(std::move(row));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a[i][j] -= d * l[i] * l[j];
            progress = true;
            continue;
        }
        // All diagonal entries vanish; split the first off-diagonal pair.
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n && pi == n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                }
        if (pi == n) break;  // zero matrix
        // Substitute y_pi = u + v, y_pj = u - v (congruence by C, with
        // C^{-1} = C/2 on the 2x2 block), updating A <- C^T A C and B <- C^{-1} B.
        QMatrix c = QMatrix::identity(n);
        c.at(pi, pi) = 1;
        c.at(pi, pj) = 1;
        c.at(pj, pi) = 1;
        c.at(pj, pj) = -1;
        std::vector<std::vector<Rational>> na(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s(0);
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) s += c.at(u, i) * a[u][v] * c.at(v, j);
                na[i][j] = s;
            }
        a = std::move(na);
        QMatrix cinv = QMatrix::identity(n);
        cinv.at(pi, pi) = Rational(1, 2);
        cinv.at(pi, pj) = Rational(1, 2);
        cinv.at(pj, pi) = Rational(1, 2);
        cinv.at(pj, pj) = Rational(-1, 2);
        b = cinv.multiply(b);
        progress = true;
    }
    out.forms = QMatrix::from_rows(std::move(rows), n);
    return out;
}

// Solve forms * xi = eta exactly; pre: forms square and invertible.
std::vector<Rational> solve_square(const QMatrix& forms, const std::vector<Rational>& eta) {
    std::size_t n = forms.rows();
    QMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = forms.at(i, j);
        aug.at(i, n) = eta[i];
    }
    auto r = aug.rref();
    if (r.rank != n) throw Error("internal: singular diagonalization system");
    std::vector<Rational> xi(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) xi[r.pivots[i]] = r.mat.at(i, n);
    return xi;
}

EllipticityVerdict decide_quadratic(const SymbolForm& s) {
    const Polynomial& form = s.form;
    std::size_t n = form.context()->size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [mono, c] : form.terms()) {
        std::size_t vars[2];
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t e = 0; e < mono[i]; ++e) vars[count++] = i;
        if (vars[0] == vars[1]) {
            m[vars[0]][vars[0]] = c;
        } else {
            m[vars[0]][vars[1]] = c / 2;
            m[vars[1]][vars[0]] = c / 2;
        }
    }
    UniPoly chi = characteristic_polynomial(m);
    // The spectrum is real, so Descartes' rule is exact on both half-lines.
    int positives = descartes_positive_roots(chi);
    int negatives = descartes_positive_roots(negate_argument(chi));
    bool singular = chi.coeffs().front() == 0;
    if (!singular && (positives == static_cast<int>(n) || negatives == static_cast<int>(n)))
        return elliptic_by("definite quadratic form");
    if (singular) {
        auto kernel = QMatrix::from_rows(m, n).kernel_basis();
        return rational_zero(form, kernel.front(), "singular quadratic form (kernel direction)");
    }
    // Indefinite: build an exact zero from a congruence diagonalization.
    Diagonalization diag = lagrange_diagonalize(m);
    std::size_t pos = diag.d.size(), neg = diag.d.size();
    for (std::size_t i = 0; i < diag.d.size(); ++i) {
        if (diag.d[i] > 0 && pos == diag.d.size()) pos = i;
        if (diag.d[i] < 0 && neg == diag.d.size()) neg = i;
    }
    Rational ratio = -diag.d[neg] / diag.d[pos];
    if (auto root = rational_kth_root(ratio, 2)) {
        std::vector<Rational> eta(n, Rational(0));
        eta[pos] = *root;
        eta[neg] = 1;
        return rational_zero(form, solve_square(diag.forms, eta),
                             "indefinite quadratic form (diagonalization)");
    }
    std::vector<Rational> eta_base(n, Rational(0)), eta_dir(n, Rational(0));
    eta_base[neg] = 1;
    eta_dir[pos] = 1;
    std::vector<Rational> base = solve_square(diag.forms, eta_base);
    std::vector<Rational> dir = solve_square(diag.forms, eta_dir);
    UniPoly restriction({diag.d[neg], Rational(0), diag.d[pos]});
    AlgebraicNumber root = isolate_real_root(restriction);
    return algebraic_zero(form, std::move(base), std::move(dir), root,
                          "indefinite quadratic form (diagonalization)");
}

// ---- diagonal path ----

bool is_diagonal_form(const SymbolForm& s, std::vector<Rational>& coeffs) {
    std::size_t n = s.form.context()->size();
    coeffs.assign(n, Rational(0));
    for (const auto& [mono, c] : s.form.terms()) {
        std::size_t hit = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (mono[i] == 0) continue;
            if (hit != n || mono[i] != s.degree) return false;
            hit = i;
        }
        coeffs[hit] = c;
    }
    return true;
}

EllipticityVerdict decide_diagonal(const SymbolForm& s, const std::vector<Rational>& a) {
    const Polynomial& form = s.form;
    std::size_t n = a.size();
    unsigned k = s.degree;
    if (n == 1) return elliptic_by("univariate form");
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] == 0)
            return rational_zero(form, unit_vector(n, i), "diagonal form (missing variable)");
    if (k % 2 == 0) {
        bool all_pos = true, all_neg = true;
        for (const auto& c : a) {
            all_pos = all_pos && c > 0;
            all_neg = all_neg && c < 0;
        }
        if (all_pos || all_neg) return elliptic_by("diagonal form (uniform signs)");
        std::size_t pos = n, neg = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] > 0 && pos == n) pos = i;
            if (a[i] < 0 && neg == n) neg = i;
        }
        return diagonal_pair_zero(form, n, pos, neg, a[pos], a[neg], k,
                                  "diagonal form (mixed signs)");
    }
    // Odd degree with >= 2 variables always has a nonzero real zero.
    return diagonal_pair_zero(form, n, 0, 1, a[0], a[1], k, "diagonal form (odd degree)");
}

// ---- binary path ----

EllipticityVerdict decide_binary(const SymbolForm& s) {
    const Polynomial& form = s.form;
    unsigned k = s.degree;
    Monomial axis = Monomial({k, 0});
    const Rational* lead = form.coeff(axis);
    if (!lead)
        return rational_zero(form, {Rational(1), Rational(0)}, "binary form (axis zero)");
    UniPoly g = form_on_line(form, {Rational(0), Rational(1)}, {Rational(1), Rational(0)});
    if (count_real_roots(g) == 0)
        return elliptic_by("binary form (Sturm: no real characteristic roots)");
    if (auto r = find_rational_root(g))
        return rational_zero(form, {*r, Rational(1)}, "binary form (rational root)");
    AlgebraicNumber root = isolate_real_root(g);
    return algebraic_zero(form, {Rational(0), Rational(1)}, {Rational(1), Rational(0)}, root,
                          "binary form (Sturm isolation)");
}

// ---- refutation-only search ----

EllipticityVerdict decide_by_search(const SymbolForm& s, std::uint64_t seed) {
    const Polynomial& form = s.form;
    std::size_t n = form.context()->size();
    for (std::size_t i = 0; i < n; ++i) {
        auto v = unit_vector(n, i);
        if (form.evaluate(v) == 0) return rational_zero(form, std::move(v), "rational search");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (int sgn : {1, -1}) {
                auto v = unit_vector(n, i);
                v[j] = sgn;
                if (form.evaluate(v) == 0)
                    return rational_zero(form, std::move(v), "rational search");
            }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    for (unsigned trial = 0; trial < 4000; ++trial) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = Rational(num(rng), den(rng));
        if (is_zero_vector(v)) continue;
        if (form.evaluate(v) == 0) return rational_zero(form, std::move(v), "rational search");
    }
    EllipticityVerdict out;
    out.status = Ellipticity::Unknown;
    out.method =
        "no exact decision method applies (non-diagonal form of degree >= 3 in >= 3 variables); "
        "a real-root certification method such as cylindrical decomposition would be needed; "
        "seeded rational search found no zero";
    return out;
}

}  // namespace

EllipticityVerdict decide_nonvanishing(const SymbolForm& s, std::uint64_t seed) {
    if (s.is_zero())
        throw ZeroSymbolError(
            "decide_nonvanishing: zero symbol form (the order already drops at this point)");
    std::size_t n = s.form.context()->size();
    if (s.degree == 0) return elliptic_by("order-zero operator (nonzero scalar)");
    if (s.degree == 2) return decide_quadratic(s);
    std::vector<Rational> diag_coeffs;
    if (is_diagonal_form(s, diag_coeffs)) return decide_diagonal(s, diag_coeffs);
    if (n == 2) return decide_binary(s);
    return decide_by_search(s, seed);
}

PointEllipticity is_elliptic_at(const DiffOperator& l, const KPoint& h, std::uint64_t seed) {
    SymbolForm s = principal_symbol(l, h);
    PointEllipticity out{!s.is_zero(), s, {}};
    if (s.is_zero()) {
        out.verdict.status = Ellipticity::NotElliptic;
        out.verdict.method = "order drops at the point (zero symbol form)";
        return out;
    }
    out.verdict = decide_nonvanishing(s, seed);
    return out;
}

}  // namespace ellop
