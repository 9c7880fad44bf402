#ifndef GAMMASUM_QUADRATURE_HPP
#define GAMMASUM_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

#include "gammasum/specfun.hpp"

namespace gammasum {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
    long long n_evals = 0;
};

struct NonFiniteSampleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuadToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadOptions {
    double tol = 1e-10;
    long long max_evals = 1'000'000;
};

/// Integrand sampled as f(x, dl, dr) where dl = x - a and dr = b - x are
/// computed without cancellation; singular factors must be built from the
/// distances, never from x itself.
using EndpointAwareFn = std::function<double(double x, double dl, double dr)>;

enum class EndpointHint { none, log_power };

struct Integrand1D {
    EndpointAwareFn f;
    EndpointHint left = EndpointHint::none;
    EndpointHint right = EndpointHint::none;

    Integrand1D() = default;
    Integrand1D(EndpointAwareFn fn, EndpointHint l = EndpointHint::none,
                EndpointHint r = EndpointHint::none)
        : f(std::move(fn)), left(l), right(r) {}
    /// plain integrand with no endpoint sensitivity
    static Integrand1D plain(std::function<double(double)> fn);
};

/// Tanh-sinh quadrature over [a, b]; endpoint singularities up to
/// logarithmic-power strength are damped by the transformation.
QuadResult integrate(const Integrand1D& g, double a, double b, const QuadOptions& opt = {});

/// sum_n (sign)^n [gamma+psi(kn+1)]/n^p through the hypergeometric-kernel
/// integral (single integral per j = 0..k-1).
QuadResult digamma_sum_rep(int sign, int p, int k, const QuadOptions& opt = {});

/// The k = 1 elementary forms of the same sums.
QuadResult digamma_sum_rep_k1(int sign, int p, const QuadOptions& opt = {});

/// sum_n (sign)^n psi^{(j)}(kn+1)/n^p as an iterated double integral.
QuadResult polygamma_sum_rep(int sign, int p, int j, int k, const QuadOptions& opt = {});

/// Five-parameter generalization: sum_n (sign)^n psi^{(j)}(kn+a) z^n / n^p.
QuadResult general_polygamma_sum_rep(int sign, int p, int j, int k, RationalArg a, double z,
                                     const QuadOptions& opt = {});

/// sum_n [gamma+psi(kn+1)] / (n(n+1)...(n+j)) via the chain-denominator
/// hypergeometric bracket.
QuadResult binom_chain_digamma_rep(int j, int k, const QuadOptions& opt = {});

/// sum_n psi^{(m)}(kn+1) / (n(n+1)...(n+j)).
QuadResult binom_chain_polygamma_rep(int m, int k, int j, const QuadOptions& opt = {});

enum class NamedIntegral { E32, E39, E41, E44a, E44b, E44c };

/// Definite integrals printed in the text, evaluated exactly as written.
QuadResult named_integral(NamedIntegral id, const QuadOptions& opt = {});

/// int_0^1 ln^j(1 -(sign) w) ln w / w dw, the substituted form used for the
/// sums over (sign)^n psi^{(j)}(n+1)/n.
QuadResult log_power_integral_e43(int j, int sign, const QuadOptions& opt = {});

} // namespace gammasum

#endif
