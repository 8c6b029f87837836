#include "ellop/unipoly.hpp"

#include "ellop/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ellop {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Rational c) { return UniPoly(std::vector<Rational>{std::move(c)}); }

Rational UniPoly::eval(const Rational& t) const {
    Rational v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<int>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
    std::vector<Rational> out(std::max(c_.size(), other.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] += other.c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
    std::vector<Rational> out(std::max(c_.size(), other.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] -= other.c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
    if (is_zero() || other.is_zero()) return UniPoly();
    std::vector<Rational> out(c_.size() + other.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scale(const Rational& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rational> out(c_);
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scale(Rational(1) / leading());
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("univariate division by zero");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quo;
    int db = b.degree();
    if (static_cast<int>(rem.size()) - 1 >= db)
        quo.assign(rem.size() - db, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (static_cast<int>(rem.size()) - 1 < db) break;
        std::size_t shift = rem.size() - 1 - db;
        Rational q = rem.back() / b.leading();
        quo[shift] = q;
        for (int i = 0; i <= db; ++i) rem[shift + i] -= q * b.coeffs()[i];
        rem.pop_back();
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 1) return p.monic();
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return divmod(p, g).first.monic();
}

Rational root_bound(const UniPoly& p) {
    if (p.is_zero()) throw Error("root_bound of the zero polynomial");
    Rational max(0);
    Rational lead = abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeffs()[i]) / lead;
        if (a > max) max = a;
    }
    return max + 2;  // strictly beyond the Cauchy bound
}

namespace {

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    UniPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(r.scale(Rational(-1)));
    }
    return chain;
}

int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
    int variations = 0, prev = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sign(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

int count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw Error("root counting on the zero polynomial");
    if (!(a < b)) throw Error("root counting on an empty interval");
    auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error("root counting on the zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

namespace {

// Divisors of |n| up to the effort bound; empty optional when too costly.
std::optional<std::vector<Int>> divisors(const Int& n, const Int& effort_bound) {
    Int a = abs(n);
    if (a == 0) return std::vector<Int>{};
    if (a > effort_bound * effort_bound) return std::nullopt;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
        if (d > effort_bound) return std::nullopt;
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::optional<Rational> find_rational_root(const UniPoly& p, const Int& effort_bound) {
    if (p.is_zero() || p.degree() <= 0) return std::nullopt;
    // Integralize: candidates are (divisor of constant)/(divisor of lead).
    Int denominator_lcm = 1;
    for (const auto& c : p.coeffs())
        denominator_lcm = boost::multiprecision::lcm(denominator_lcm, denominator(c));
    std::vector<Int> ic(p.coeffs().size());
    for (std::size_t i = 0; i < ic.size(); ++i)
        ic[i] = numerator(Rational(p.coeffs()[i] * denominator_lcm));
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0 && low >= ic.size()) return std::nullopt;
    if (low > 0) return Rational(0);  // t = 0 is a root
    auto num_divs = divisors(ic.front(), effort_bound);
    auto den_divs = divisors(ic.back(), effort_bound);
    if (!num_divs || !den_divs) return std::nullopt;
    for (const Int& q : *den_divs) {
        for (const Int& r : *num_divs) {
            Rational cand(r, q);
            if (p.eval(cand) == 0) return cand;
            cand = -cand;
            if (p.eval(cand) == 0) return cand;
        }
    }
    return std::nullopt;
}

AlgebraicNumber isolate_real_root(const UniPoly& p) {
    UniPoly sf = squarefree_part(p);
    Rational bound = root_bound(sf);
    Rational lo = -bound, hi = bound;
    int total = count_real_roots(sf, lo, hi);
    if (total <= 0) throw Error("isolate_real_root: no real root");
    // Bisect until a single root remains with a strict sign change. A zero
    // midpoint value means a rational root; shrink around it.
    while (true) {
        int roots = count_real_roots(sf, lo, hi);
        if (roots == 1 && sign(sf.eval(lo)) * sign(sf.eval(hi)) < 0) break;
        Rational mid = (lo + hi) / 2;
        if (sf.eval(mid) == 0) {
            // Exact root at mid; isolate it in a shrinking window.
            Rational eps(1, 2);
            while (true) {
                Rational a = mid - eps, b = mid + eps;
                if (sign(sf.eval(a)) * sign(sf.eval(b)) < 0 &&
                    count_real_roots(sf, a, b) == 1) {
                    lo = a;
                    hi = b;
                    break;
                }
                eps /= 2;
            }
            break;
        }
        if (count_real_roots(sf, lo, mid) > 0)
            hi = mid;
        else
            lo = mid;
    }
    return AlgebraicNumber{sf, lo, hi};
}

}  // namespace ellop
