#include "gammasum/const_expr.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace gammasum {

namespace {

long long normalize_mod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

} // namespace

std::string ConstAtom::render() const {
    switch (kind) {
        case Kind::Pi: return "pi";
        case Kind::Ln2: return "ln2";
        case Kind::LnInt: return "ln" + std::to_string(a);
        case Kind::EulerGamma: return "gamma";
        case Kind::Catalan: return "G";
        case Kind::Zeta: return "zeta(" + std::to_string(a) + ")";
        case Kind::Cl2Rat:
            if (a == 1) return "Cl2(pi/" + std::to_string(b) + ")";
            return "Cl2(" + std::to_string(a) + "pi/" + std::to_string(b) + ")";
        case Kind::PolylogHalf: return "Li" + std::to_string(a) + "(1/2)";
        case Kind::TrigammaRat:
            return "psi1(" + std::to_string(a) + "/" + std::to_string(b) + ")";
        case Kind::One: return "1";
    }
    return "?";
}

EvalResult ConstAtom::eval() const {
    switch (kind) {
        case Kind::Pi: return {std::numbers::pi, 3e-16};
        case Kind::Ln2: return {std::numbers::ln2, 2e-16};
        case Kind::LnInt: {
            const double v = std::log(static_cast<double>(a));
            return {v, 3e-16 * (std::fabs(v) + 1.0)};
        }
        case Kind::EulerGamma: return {std::numbers::egamma, 2e-16};
        case Kind::Catalan: return {catalan(), 5e-16};
        case Kind::Zeta: {
            const double v = riemann_zeta(static_cast<double>(a));
            return {v, 5e-16 * v};
        }
        case Kind::Cl2Rat: {
            const double v =
                clausen_cl2(static_cast<double>(a) * std::numbers::pi / static_cast<double>(b));
            return {v, 1e-14 + 3e-16 * std::fabs(v)};
        }
        case Kind::PolylogHalf: return {polylog(static_cast<int>(a), 0.5), 1e-15};
        case Kind::TrigammaRat: {
            const double v = polygamma(1, static_cast<double>(a) / static_cast<double>(b));
            return {v, 3e-14 * std::fabs(v)};
        }
        case Kind::One: return {1.0, 0.0};
    }
    return {0.0, 0.0};
}

std::string Monomial::render() const {
    std::string s;
    for (const auto& [atom, exp] : factors) {
        if (!s.empty()) s += "*";
        s += atom.render();
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s;
}

EvalResult Monomial::eval() const {
    double value = 1.0;
    double rel = 0.0;
    for (const auto& [atom, exp] : factors) {
        const EvalResult r = atom.eval();
        for (int i = 0; i < exp; ++i) value *= r.value;
        if (r.value != 0.0)
            rel += exp * (r.abs_err / std::fabs(r.value)) + 2.3e-16 * exp;
        else
            return {0.0, r.abs_err};
    }
    return {value, std::fabs(value) * rel};
}

ConstExpr ConstExpr::constant(const Rational& c) {
    ConstExpr e;
    if (c != 0) e.terms_.emplace(Monomial{}, c);
    return e;
}

ConstExpr ConstExpr::atom(ConstAtom at) {
    switch (at.kind) {
        case ConstAtom::Kind::One:
            return constant(1);
        case ConstAtom::Kind::LnInt: {
            if (at.a < 1) throw std::domain_error("ConstExpr: ln of non-positive integer");
            if (at.a == 1) return {};
            // split on the prime factorization: ln q = sum e_p ln p
            ConstExpr e;
            long long q = at.a;
            for (long long p = 2; p * p <= q; ++p) {
                int ep = 0;
                while (q % p == 0) { q /= p; ++ep; }
                if (ep == 0) continue;
                ConstAtom pa = (p == 2) ? ConstAtom{ConstAtom::Kind::Ln2, 0, 0}
                                        : ConstAtom{ConstAtom::Kind::LnInt, p, 0};
                Monomial m;
                m.factors.emplace_back(pa, 1);
                e.add_term(m, ep);
            }
            if (q > 1) {
                ConstAtom pa = (q == 2) ? ConstAtom{ConstAtom::Kind::Ln2, 0, 0}
                                        : ConstAtom{ConstAtom::Kind::LnInt, q, 0};
                Monomial m;
                m.factors.emplace_back(pa, 1);
                e.add_term(m, 1);
            }
            return e;
        }
        case ConstAtom::Kind::Zeta:
            if (at.a < 2) throw std::domain_error("ConstExpr: zeta index must be >= 2");
            break;
        case ConstAtom::Kind::PolylogHalf:
            if (at.a < 1) throw std::domain_error("ConstExpr: polylog order must be >= 1");
            if (at.a == 1) return atom({ConstAtom::Kind::Ln2, 0, 0}); // Li_1(1/2) = ln 2
            break;
        case ConstAtom::Kind::Cl2Rat: {
            if (at.b < 1) throw std::domain_error("ConstExpr: Cl2 with non-positive denominator");
            long long p = normalize_mod(at.a, 2 * at.b), q = at.b;
            if (p == 0) return {};
            const long long g = std::gcd(p, q);
            p /= g; q /= g;
            if (q == 1) return {}; // integer multiple of pi
            if (q == 2) {
                // Cl2(pi/2) = G, Cl2(3pi/2) = -G
                ConstExpr e = atom({ConstAtom::Kind::Catalan, 0, 0});
                return (p == 1) ? e : e.scaled(-1);
            }
            at.a = p;
            at.b = q;
            break;
        }
        case ConstAtom::Kind::TrigammaRat: {
            if (at.a <= 0 || at.b <= 0)
                throw std::domain_error("ConstExpr: trigamma argument must be positive");
            const long long g = std::gcd(at.a, at.b);
            at.a /= g;
            at.b /= g;
            if (at.b == 1 && at.a == 1) return atom({ConstAtom::Kind::Zeta, 2, 0});
            if (at.a == 1 && at.b == 2) {
                // psi'(1/2) = pi^2/2
                ConstExpr e;
                Monomial m;
                m.factors.emplace_back(ConstAtom{ConstAtom::Kind::Pi, 0, 0}, 2);
                e.add_term(m, Rational(1, 2));
                return e;
            }
            break;
        }
        default:
            break;
    }
    ConstExpr e;
    Monomial m;
    m.factors.emplace_back(at, 1);
    e.add_term(m, 1);
    return e;
}

ConstExpr ConstExpr::pi() { return atom({ConstAtom::Kind::Pi, 0, 0}); }
ConstExpr ConstExpr::ln2() { return atom({ConstAtom::Kind::Ln2, 0, 0}); }
ConstExpr ConstExpr::ln_int(long long q) { return atom({ConstAtom::Kind::LnInt, q, 0}); }
ConstExpr ConstExpr::euler_gamma() { return atom({ConstAtom::Kind::EulerGamma, 0, 0}); }
ConstExpr ConstExpr::catalan() { return atom({ConstAtom::Kind::Catalan, 0, 0}); }
ConstExpr ConstExpr::zeta(long long n) { return atom({ConstAtom::Kind::Zeta, n, 0}); }
ConstExpr ConstExpr::cl2(long long p, long long q) { return atom({ConstAtom::Kind::Cl2Rat, p, q}); }
ConstExpr ConstExpr::li_half(long long s) { return atom({ConstAtom::Kind::PolylogHalf, s, 0}); }
ConstExpr ConstExpr::trigamma(long long p, long long q) {
    return atom({ConstAtom::Kind::TrigammaRat, p, q});
}

void ConstExpr::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ConstExpr ConstExpr::operator+(const ConstExpr& other) const {
    ConstExpr r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, c);
    return r;
}

ConstExpr ConstExpr::operator-(const ConstExpr& other) const {
    ConstExpr r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
    return r;
}

ConstExpr ConstExpr::scaled(const Rational& c) const {
    ConstExpr r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

ConstExpr ConstExpr::operator*(const ConstExpr& other) const {
    ConstExpr r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            // merge factor lists, adding exponents
            Monomial m;
            auto ia = ma.factors.begin();
            auto ib = mb.factors.begin();
            while (ia != ma.factors.end() || ib != mb.factors.end()) {
                if (ib == mb.factors.end() || (ia != ma.factors.end() && ia->first < ib->first))
                    m.factors.push_back(*ia++);
                else if (ia == ma.factors.end() || ib->first < ia->first)
                    m.factors.push_back(*ib++);
                else {
                    m.factors.emplace_back(ia->first, ia->second + ib->second);
                    ++ia;
                    ++ib;
                }
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

EvalResult ConstExpr::eval() const {
    double value = 0.0;
    double carry = 0.0;
    double err = 0.0;
    double magnitude = 0.0;
    for (const auto& [m, c] : terms_) {
        const EvalResult mv = m.eval();
        const double coef = c.convert_to<double>();
        const double term = coef * mv.value;
        const double y = term - carry;
        const double t = value + y;
        carry = (t - value) - y;
        value = t;
        err += std::fabs(coef) * mv.abs_err;
        magnitude += std::fabs(term);
    }
    err += 2.3e-16 * magnitude;
    return {value, err};
}

std::string ConstExpr::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::ostringstream oss;
        oss << mag;
        const std::string coef = oss.str();
        const std::string mono = m.render();
        if (mono.empty())
            out += coef;
        else if (coef == "1")
            out += mono;
        else
            out += coef + "*" + mono;
    }
    return out;
}

ConstExpr expr_add(const ConstExpr& a, const ConstExpr& b) { return a + b; }
ConstExpr expr_scale(const Rational& c, const ConstExpr& a) { return a.scaled(c); }
ConstExpr expr_mul(const ConstExpr& a, const ConstExpr& b) { return a * b; }
EvalResult expr_eval(const ConstExpr& e) { return e.eval(); }
std::string expr_render(const ConstExpr& e) { return e.render(); }

} // namespace gammasum
