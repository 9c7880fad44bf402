#ifndef GAMMASUM_SPECFUN_HPP
#define GAMMASUM_SPECFUN_HPP

#include <cstdint>
#include <stdexcept>

namespace gammasum {

/// A numeric value together with a validated absolute-error bound.
struct EvalResult {
    double value = 0.0;
    double abs_err = 0.0;
};

/// Exact rational p/q, normalized to lowest terms with q >= 1.
struct RationalArg {
    long long num = 0;
    long long den = 1;

    RationalArg() = default;
    RationalArg(long long n, long long d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const RationalArg&) const = default;
};

// Scalar special-function kernel.  All functions are pure and safe for
// concurrent use; cached constants are initialized thread-safely on first use.

/// psi(x) for x > 0.  Absolute error <= 1e-14 on (0, 1e6].
double digamma(double x);

/// psi^(m)(x) = (-1)^(m+1) m! zeta(m+1, x), m >= 1, x > 0.
double polygamma(int m, double x);

/// Riemann zeta, s > 1.  Integer arguments 2..13 are cached.
double riemann_zeta(double s);

/// Hurwitz zeta(s, a) for s > 1, a > 0, by head summation plus an
/// Euler-Maclaurin tail.
double hurwitz_zeta(double s, double a);

/// Li_s(z) for integer s >= 1 and |z| <= 1, excluding the s=1, z=1 pole.
double polylog(int s, double z);

/// Cl_1(theta) = -ln|2 sin(theta/2)|.  Throws at theta = 0 mod 2*pi.
double clausen_cl1(double theta);

/// Cl_2(theta) = sum_k sin(k*theta)/k^2, reduced into [0, pi] first.
double clausen_cl2(double theta);

/// Cl_2(p*pi/q) through the trigamma representation at rational argument.
double clausen_cl2_rational(long long p, long long q);

/// Catalan's constant G = (1/16)[psi'(1/4) - psi'(3/4)].
double catalan();

/// 2F1(1, 1; j+2; t) for j >= 1, 0 <= t <= 1.
double gauss_2f1_11(int j, double t);

/// [1 + 1/j - t*2F1(1,1;j+2;t)] / (1-t), stable as t -> 1.
/// `one_minus_t` must equal 1-t; it is the quantity trusted near t = 1.
double gauss_2f1_11_bracket(int j, double one_minus_t);

/// 2F1(1, (1+j)/k; (1+j+k)/k; x) = sum_{n>=0} b/(b+n) x^n with b=(1+j)/k,
/// for |x| < 1 and 0 <= j <= k-1.
double gauss_2f1_kernel(int j, int k, double x);

/// Same function evaluated at x = 1 - w for small positive w; stable where
/// the direct series loses all accuracy.
double gauss_2f1_kernel_near_one(int j, int k, double w);

/// Generalized harmonic numbers H_n^{(r)} and their alternating companions.
double harmonic(long long n, int r);
double alt_harmonic(long long n, int r);

} // namespace gammasum

#endif
