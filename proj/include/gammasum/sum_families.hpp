#ifndef GAMMASUM_SUM_FAMILIES_HPP
#define GAMMASUM_SUM_FAMILIES_HPP

#include "gammasum/const_expr.hpp"
#include "gammasum/series.hpp"
#include "gammasum/sum_spec.hpp"

namespace gammasum {

/// Series-route evaluation of any SumSpec family: direct summation with an
/// Euler-Maclaurin tail for absolutely convergent cases, accelerated
/// summation for alternating ones, geometric truncation for |z| < 1.
SeriesResult eval_sum(const SumSpec& spec, double tol);

/// Exact summand at index n for a spec (used by oracles and the engine).
double sum_term(const SumSpec& spec, long long n);

// Closed-form builders, one per proposition.  Parameters follow the
// equation the builder realizes.

/// block sums over r = 0..q-1 of [gamma+psi(n + r/q)]/n^2, both signs
ConstExpr closed_form_3a(int q);
ConstExpr closed_form_3b(int q);

/// sums over [gamma+psi(kn+1/2)]/n^2, both signs
ConstExpr closed_form_16a(int k);
ConstExpr closed_form_16b(int k);

/// alternating block sums over [gamma+psi(n + r/q)]/n; the squared-Cl1
/// values are not rational-monomial constants, so this one is numeric
EvalResult closed_form_20(int q);

/// auxiliary alternating sums
ConstExpr closed_form_55(int j);
ConstExpr closed_form_59(int j);
ConstExpr closed_form_63a(int N);
ConstExpr closed_form_63b(int N);
ConstExpr closed_form_66a(int j);
ConstExpr closed_form_66b(int j);

/// shift-relation right sides
ConstExpr closed_form_25_rhs(int sign, int p, int k);
ConstExpr closed_form_36_rhs(int sign, int p, int j, int k);

/// T_j = sum (-1)^n / (n(n+1)^{j+1}) by its recursion; exact in the zeta
/// cache up to rounding
double eval_recursion_T(int j);
/// S_j = sum (-1)^n / (n^{j+1}(n+1)) by its recursion
double eval_recursion_S(int j);

enum class ZSumKind { E56, E57, E62 };

struct ZSumResult {
    SeriesResult series;
    EvalResult closed;
};

/// sum (-1)^n / (n (n+z)^{j+1}) with the matching closed form through
/// digamma/polygamma values (E56: j = 0; E57/E62: two algebraic routes)
ZSumResult eval_z_sum(ZSumKind kind, double z, int j, double tol);

/// both sides of the partial-fraction identity
/// sum_k C(N,k)(-1)^k/(x+k) = N!/prod_{i=0..N}(x+i); returns the common
/// value after checking the two routes agree to 1e-12 relative
double partial_fraction_chain(int N, double x);
double partial_fraction_chain_binom_route(int N, double x);
double partial_fraction_chain_product_route(int N, double x);

} // namespace gammasum

#endif
