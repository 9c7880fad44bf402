#ifndef GAMMASUM_CONST_EXPR_HPP
#define GAMMASUM_CONST_EXPR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gammasum/specfun.hpp"

namespace gammasum {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// One named mathematical constant.  Atoms are normalized on construction:
/// Cl2 arguments are reduced mod 2 into (0, 2) in lowest terms, ln of a
/// perfect power of two collapses onto Ln2, psi'(1) onto zeta(2), and so on.
struct ConstAtom {
    enum class Kind : int {
        Pi = 0,
        Ln2,
        LnInt,       // ln q for integer q >= 3
        EulerGamma,
        Catalan,
        Zeta,        // zeta(n), n >= 2
        Cl2Rat,      // Cl2(p*pi/q), 0 < p/q < 2 in lowest terms
        PolylogHalf, // Li_s(1/2), s >= 2
        TrigammaRat, // psi'(p/q), 0 < p/q, not 1
        One,
    };

    Kind kind = Kind::One;
    long long a = 0; // first parameter (q, n, p, s)
    long long b = 0; // second parameter (q for rationals)

    auto operator<=>(const ConstAtom&) const = default;

    std::string render() const;
    EvalResult eval() const;
};

/// Product of atoms with positive integer exponents, canonically sorted.
struct Monomial {
    std::vector<std::pair<ConstAtom, int>> factors; // sorted by atom

    auto operator<=>(const Monomial&) const = default;
    std::string render() const;
    EvalResult eval() const;
};

/// Exact rational linear combination of constant monomials.
class ConstExpr {
public:
    ConstExpr() = default;

    /// the expression `c`
    static ConstExpr constant(const Rational& c);
    /// the expression `1 * atom` (after atom-level normalization, which may
    /// split or annihilate the term: ln4 -> 2 ln2, Cl2(pi) -> 0)
    static ConstExpr atom(ConstAtom a);

    static ConstExpr pi();
    static ConstExpr ln2();
    static ConstExpr ln_int(long long q);
    static ConstExpr euler_gamma();
    static ConstExpr catalan();
    static ConstExpr zeta(long long n);
    static ConstExpr cl2(long long p, long long q);
    static ConstExpr li_half(long long s);
    static ConstExpr trigamma(long long p, long long q);

    ConstExpr operator+(const ConstExpr& other) const;
    ConstExpr operator-(const ConstExpr& other) const;
    ConstExpr operator*(const ConstExpr& other) const;
    ConstExpr scaled(const Rational& c) const;

    bool operator==(const ConstExpr& other) const { return terms_ == other.terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// numeric value with a propagated absolute error bound
    EvalResult eval() const;

    /// deterministic rendering, e.g. "7/2*zeta(3) - 2*ln2*zeta(2)"
    std::string render() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);
    // monomials in descending canonical order for rendering
    std::map<Monomial, Rational> terms_;
};

ConstExpr expr_add(const ConstExpr& a, const ConstExpr& b);
ConstExpr expr_scale(const Rational& c, const ConstExpr& a);
ConstExpr expr_mul(const ConstExpr& a, const ConstExpr& b);
EvalResult expr_eval(const ConstExpr& e);
std::string expr_render(const ConstExpr& e);

} // namespace gammasum

#endif
