#ifndef GAMMASUM_SERIES_HPP
#define GAMMASUM_SERIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gammasum/sum_spec.hpp"

namespace gammasum {

enum class SumMethod { direct_tail, alternating_accel, recursion, closed_form };

struct SeriesResult {
    double value = 0.0;
    double abs_err = 0.0;
    long long n_terms = 0;
    SumMethod method = SumMethod::direct_tail;
};

enum class Convergence { absolute, conditional, divergent };

struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SignPatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivergentSeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One atom of an asymptotic tail model: coef * x^{-pow} * ln(x)^logn.
struct PowLogTerm {
    double coef = 0.0;
    int pow = 0;
    int logn = 0;
};

/// Asymptotic expansion of a summand for n -> infinity, as a polynomial in
/// 1/x with logarithmic weights.  Closed under products and differentiation,
/// which is all the Euler-Maclaurin tail correction needs.
struct TailModel {
    std::vector<PowLogTerm> terms;

    bool empty() const { return terms.empty(); }
    double eval(double x) const;
    TailModel derivative() const;
    TailModel multiply(const TailModel& other, int max_pow) const;
    TailModel scaled(double c) const;

    /// integral over [A, inf); requires every term to have pow >= 2.
    double integral_from(double A) const;

    /// Euler-Maclaurin tail sum_{n >= A} model(n) with boundary corrections.
    double em_tail_from(double A) const;
};

/// Exact summand oracle plus (optionally) its asymptotic magnitude model.
struct TermOracle {
    std::function<double(long long)> term;
    std::optional<TailModel> magnitude_model;
};

struct SumOptions {
    double tol = 1e-12;
    long long max_terms = 2'000'000;
};

/// Direct summation of an absolutely convergent series with an
/// Euler-Maclaurin tail correction built from the oracle's magnitude model.
/// The error bound is validated by comparing the N and 2N truncations.
SeriesResult sum_direct_with_tail(const TermOracle& o, const SumOptions& opt);

/// Accelerated estimate of a strictly alternating series (leading zero terms
/// are folded into an exact head).  Uses the Cohen-Rodriguez Villegas-Zagier
/// scheme with a doubled-order validation of the error bound.
SeriesResult sum_alternating_accel(const TermOracle& o, const SumOptions& opt);

/// Direct summation of a series whose terms eventually decay at least
/// geometrically with ratio <= `ratio`; tail bounded by the last term.
SeriesResult sum_direct_geometric(const TermOracle& o, double ratio, const SumOptions& opt);

/// Convergence classification per the digamma/polygamma sum families:
/// digamma weight needs p > 1 absolutely, alternating p > 0; polygamma
/// weight needs p + j > 1 absolutely, alternating p + j > 0; |z| < 1 is
/// always absolute.
Convergence classify_convergence(const SumSpec& spec);

/// Estimate of sum_{k>=0} (-1)^k a_k from the first n terms (CVZ scheme).
double cvz_alternating_sum(const std::function<double(int)>& a, int n);

} // namespace gammasum

#endif
