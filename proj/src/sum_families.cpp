#include "gammasum/sum_families.hpp"

#include <cmath>
#include <numbers>

namespace gammasum {

namespace {

constexpr double kGamma = std::numbers::egamma;

double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// coef * (k x + a)^{-r} expanded in descending powers of x
TailModel inv_power_model(double coef, int r, double k, double a, int extra = 8) {
    TailModel m;
    const double base = coef / ipow(k, r);
    double binom = 1.0; // C(r+i-1, i)
    double ak = 1.0;    // (a/k)^i
    for (int i = 0; i <= extra; ++i) {
        m.terms.push_back({base * (i % 2 ? -1.0 : 1.0) * binom * ak, r + i, 0});
        binom *= static_cast<double>(r + i) / (i + 1.0);
        ak *= a / k;
        if (a == 0.0 && i == 0) break;
    }
    return m;
}

// gamma + psi(k x + a) ~ [gamma + ln k] + ln x + ln(1 + a/kx)
//                        - 1/(2(kx+a)) - 1/(12(kx+a)^2)
TailModel digamma_weight_model(int k, double a) {
    TailModel m;
    m.terms.push_back({kGamma + std::log(static_cast<double>(k)), 0, 0});
    m.terms.push_back({1.0, 0, 1});
    double ak = 1.0;
    for (int i = 1; i <= 8 && a != 0.0; ++i) {
        ak *= a / k;
        m.terms.push_back({(i % 2 ? 1.0 : -1.0) * ak / i, i, 0});
    }
    for (const auto& t : inv_power_model(-0.5, 1, k, a).terms) m.terms.push_back(t);
    for (const auto& t : inv_power_model(-1.0 / 12.0, 2, k, a).terms) m.terms.push_back(t);
    return m;
}

// psi^{(j)}(k x + a) ~ (-1)^{j-1}[(j-1)!/y^j + j!/(2 y^{j+1})
//                                 + (j+1)!/(12 y^{j+2}) - (j+3)!/(720 y^{j+4})]
TailModel polygamma_weight_model(int j, int k, double a) {
    const double sgn = (j % 2 == 1) ? 1.0 : -1.0;
    TailModel m;
    auto append = [&](const TailModel& part) {
        for (const auto& t : part.terms) m.terms.push_back(t);
    };
    append(inv_power_model(sgn * factorial(j - 1), j, k, a));
    append(inv_power_model(sgn * factorial(j) / 2.0, j + 1, k, a));
    append(inv_power_model(sgn * factorial(j + 1) / 12.0, j + 2, k, a));
    append(inv_power_model(-sgn * factorial(j + 3) / 720.0, j + 4, k, a));
    return m;
}

TailModel pure_power(int p) {
    TailModel m;
    m.terms.push_back({1.0, p, 0});
    return m;
}

// prod_{i=0}^{j} (x+i)^{-1}
TailModel chain_model(int j, int max_pow) {
    TailModel m = pure_power(1);
    for (int i = 1; i <= j; ++i) m = m.multiply(inv_power_model(1.0, 1, 1.0, i), max_pow);
    return m;
}

double aux_term(const Auxiliary& aux, long long n) {
    const double x = static_cast<double>(n);
    const double alt = (n % 2 ? -1.0 : 1.0);
    if (const auto* a = std::get_if<AuxE55>(&aux))
        return alt / (x * ipow(x + 1.0, a->j + 1));
    if (const auto* a = std::get_if<AuxE56>(&aux)) return alt / (x * (x + a->z));
    if (const auto* a = std::get_if<AuxE57>(&aux))
        return alt / (x * ipow(x + a->z, a->j + 1));
    if (const auto* a = std::get_if<AuxE59>(&aux))
        return alt / (ipow(x, a->j + 1) * (x + 1.0));
    if (const auto* a = std::get_if<AuxE62>(&aux))
        return alt / (x * ipow(x + a->z, a->j + 1));
    if (const auto* a = std::get_if<AuxE63a>(&aux)) {
        double denom = x;
        for (int i = 0; i <= a->N; ++i) denom *= (x + i);
        return 1.0 / denom;
    }
    if (const auto* a = std::get_if<AuxE63b>(&aux)) {
        double denom = x;
        for (int i = 0; i <= a->N; ++i) denom *= (x + i);
        return alt / denom;
    }
    if (const auto* a = std::get_if<AuxE66a>(&aux))
        return 1.0 / (ipow(x, a->j + 1) * (x + 1.0));
    if (const auto* a = std::get_if<AuxE66b>(&aux))
        return 1.0 / (x * ipow(x + 1.0, a->j + 1));
    throw std::invalid_argument("aux_term: unknown auxiliary family");
}

} // namespace

double sum_term(const SumSpec& spec, long long n) {
    const double x = static_cast<double>(n);
    if (const auto* d = std::get_if<DigammaPower>(&spec)) {
        const double v =
            (kGamma + digamma(d->k * x + d->a.value())) / ipow(x, d->p);
        return (d->sign < 0 && n % 2) ? -v : v;
    }
    if (const auto* b = std::get_if<DigammaRationalBlock>(&spec)) {
        double block = 0.0;
        for (int r = 0; r < b->q; ++r)
            block += kGamma + digamma(x + static_cast<double>(r) / b->q);
        const double v = block / ipow(x, b->p);
        return (b->sign < 0 && n % 2) ? -v : v;
    }
    if (const auto* g = std::get_if<PolygammaPower>(&spec)) {
        double v = polygamma(g->j, g->k * x + g->a.value()) / ipow(x, g->p);
        if (g->z != 1.0) v *= std::pow(g->z, static_cast<double>(n));
        return (g->sign < 0 && n % 2) ? -v : v;
    }
    if (const auto* r = std::get_if<ProductDenomDigamma>(&spec))
        return (kGamma + digamma(x + r->a.value())) /
               (ipow(x, r->alpha) * ipow(x + 1.0, r->beta));
    if (const auto* ch = std::get_if<BinomChain>(&spec)) {
        double denom = 1.0;
        for (int i = 0; i <= ch->j; ++i) denom *= (x + i);
        const double w = ch->m == 0 ? kGamma + digamma(ch->k * x + 1.0)
                                    : polygamma(ch->m, ch->k * x + 1.0);
        return w / denom;
    }
    if (const auto* aux = std::get_if<Auxiliary>(&spec)) return aux_term(*aux, n);
    throw std::invalid_argument("sum_term: unknown family");
}

SeriesResult eval_sum(const SumSpec& spec, double tol) {
    const Convergence cls = classify_convergence(spec);
    if (cls == Convergence::divergent)
        throw DivergentSeriesError("eval_sum: spec is outside the convergence region");

    TermOracle o;
    o.term = [spec](long long n) { return sum_term(spec, n); };
    const SumOptions opt{tol, 2'000'000};

    if (const auto* g = std::get_if<PolygammaPower>(&spec)) {
        if (g->z == 0.0) return {0.0, 0.0, 1, SumMethod::direct_tail};
        if (std::fabs(g->z) < 1.0) return sum_direct_geometric(o, std::fabs(g->z), opt);
        const bool alternating = (g->sign < 0) != (g->z < 0.0);
        if (alternating) return sum_alternating_accel(o, opt);
        TailModel m = polygamma_weight_model(g->j, g->k, g->a.value())
                          .multiply(pure_power(g->p), g->p + g->j + 9);
        o.magnitude_model = m;
        return sum_direct_with_tail(o, opt);
    }
    if (cls == Convergence::conditional) return sum_alternating_accel(o, opt);

    if (const auto* d = std::get_if<DigammaPower>(&spec)) {
        if (d->sign < 0) return sum_alternating_accel(o, opt);
        o.magnitude_model = digamma_weight_model(d->k, d->a.value())
                                .multiply(pure_power(d->p), d->p + 9);
        return sum_direct_with_tail(o, opt);
    }
    if (const auto* b = std::get_if<DigammaRationalBlock>(&spec)) {
        if (b->sign < 0) return sum_alternating_accel(o, opt);
        TailModel m;
        for (int r = 0; r < b->q; ++r) {
            const TailModel part = digamma_weight_model(1, static_cast<double>(r) / b->q);
            for (const auto& t : part.terms) m.terms.push_back(t);
        }
        o.magnitude_model = m.multiply(pure_power(b->p), b->p + 9);
        return sum_direct_with_tail(o, opt);
    }
    if (const auto* r = std::get_if<ProductDenomDigamma>(&spec)) {
        TailModel denom = pure_power(r->alpha).multiply(
            inv_power_model(1.0, r->beta, 1.0, 1.0), r->alpha + r->beta + 9);
        o.magnitude_model =
            digamma_weight_model(1, r->a.value()).multiply(denom, r->alpha + r->beta + 9);
        return sum_direct_with_tail(o, opt);
    }
    if (const auto* ch = std::get_if<BinomChain>(&spec)) {
        const TailModel weight = ch->m == 0 ? digamma_weight_model(ch->k, 1.0)
                                            : polygamma_weight_model(ch->m, ch->k, 1.0);
        o.magnitude_model = weight.multiply(chain_model(ch->j, ch->j + 10), ch->j + 10);
        return sum_direct_with_tail(o, opt);
    }
    if (const auto* auxp = std::get_if<Auxiliary>(&spec)) {
        const Auxiliary& aux = *auxp;
        if (std::holds_alternative<AuxE55>(aux) || std::holds_alternative<AuxE56>(aux) ||
            std::holds_alternative<AuxE57>(aux) || std::holds_alternative<AuxE59>(aux) ||
            std::holds_alternative<AuxE62>(aux) || std::holds_alternative<AuxE63b>(aux))
            return sum_alternating_accel(o, opt);
        if (const auto* a = std::get_if<AuxE63a>(&aux)) {
            o.magnitude_model = chain_model(a->N, a->N + 10).multiply(pure_power(1), a->N + 10);
            return sum_direct_with_tail(o, opt);
        }
        if (const auto* a = std::get_if<AuxE66a>(&aux)) {
            o.magnitude_model =
                inv_power_model(1.0, 1, 1.0, 1.0).multiply(pure_power(a->j + 1), a->j + 10);
            return sum_direct_with_tail(o, opt);
        }
        if (const auto* a = std::get_if<AuxE66b>(&aux)) {
            o.magnitude_model =
                inv_power_model(1.0, a->j + 1, 1.0, 1.0).multiply(pure_power(1), a->j + 10);
            return sum_direct_with_tail(o, opt);
        }
    }
    throw std::invalid_argument("eval_sum: unknown family");
}

// The Clausen sums carry the weight j, as in the k-parameterized family:
// without it the sum in the non-alternating case cancels identically by
// antisymmetry and the q >= 3 values are wrong.
ConstExpr closed_form_3a(int q) {
    if (q < 1) throw std::domain_error("closed_form_3a: requires q >= 1");
    const long long Q = q;
    ConstExpr e = expr_scale(Rational(Q * Q * Q + 1, 2), ConstExpr::zeta(3));
    for (long long j = 1; j < Q; ++j)
        e = e + expr_scale(Q * j, ConstExpr::pi() * ConstExpr::cl2(2 * j, Q));
    e = e - expr_scale(Q, ConstExpr::ln_int(Q) * ConstExpr::zeta(2));
    return e;
}

ConstExpr closed_form_3b(int q) {
    if (q < 1) throw std::domain_error("closed_form_3b: requires q >= 1");
    const long long Q = q;
    ConstExpr e = expr_scale(Rational(4 * Q * Q * Q - 3, 8), ConstExpr::zeta(3));
    for (long long j = 1; j < Q; ++j)
        e = e + expr_scale(Q * j, ConstExpr::pi() * ConstExpr::cl2(2 * j + 1, Q));
    e = e + expr_scale(Rational(Q, 2), ConstExpr::ln_int(Q) * ConstExpr::zeta(2));
    return e;
}

ConstExpr closed_form_16a(int k) {
    if (k < 1) throw std::domain_error("closed_form_16a: requires k >= 1");
    const long long K = k;
    ConstExpr e = expr_scale(Rational(7 * K * K, 2), ConstExpr::zeta(3));
    for (long long j = 1; j < 2 * K; ++j)
        e = e + expr_scale(2 * j, ConstExpr::pi() * ConstExpr::cl2(j, K));
    for (long long j = 1; j < K; ++j)
        e = e - expr_scale(j, ConstExpr::pi() * ConstExpr::cl2(2 * j, K));
    e = e - expr_scale(2, ConstExpr::ln2() * ConstExpr::zeta(2));
    return e;
}

ConstExpr closed_form_16b(int k) {
    if (k < 1) throw std::domain_error("closed_form_16b: requires k >= 1");
    const long long K = k;
    ConstExpr e = expr_scale(Rational(7 * K * K, 2), ConstExpr::zeta(3));
    for (long long j = 1; j < 2 * K; ++j)
        e = e + expr_scale(2 * j, ConstExpr::pi() * ConstExpr::cl2(2 * j + 1, 2 * K));
    for (long long j = 1; j < K; ++j)
        e = e - expr_scale(j, ConstExpr::pi() * ConstExpr::cl2(2 * j + 1, K));
    e = e + ConstExpr::ln2() * ConstExpr::zeta(2);
    return e;
}

EvalResult closed_form_20(int q) {
    if (q < 1) throw std::domain_error("closed_form_20: requires q >= 1");
    const double Q = q;
    double cl1sq = 0.0;
    for (int j = 1; j <= q; ++j) {
        const double c = clausen_cl1((2.0 * j + 1.0) * std::numbers::pi / Q);
        cl1sq += c * c;
    }
    const double value = Q * (0.25 * (1.0 / Q - Q) * riemann_zeta(2.0) + 0.5 * cl1sq) +
                         Q * std::log(Q) * std::numbers::ln2;
    return {value, 1e-13 * (std::fabs(value) + Q)};
}

ConstExpr closed_form_55(int j) {
    if (j < 1) throw std::domain_error("closed_form_55: requires j >= 1");
    ConstExpr e = ConstExpr::constant(j + 1) - expr_scale(2, ConstExpr::ln2());
    BigInt p2 = 1;
    for (int m = 1; m <= j; ++m) {
        p2 *= 2;
        e = e + expr_scale(Rational(1 - p2, p2), ConstExpr::zeta(m + 1));
    }
    return e;
}

ConstExpr closed_form_59(int j) {
    if (j < 1) throw std::domain_error("closed_form_59: requires j >= 1");
    ConstExpr e = ConstExpr::constant(1) - expr_scale(2, ConstExpr::ln2());
    BigInt p2 = 1;
    for (int m = 1; m <= j; ++m) {
        p2 *= 2;
        const Rational c = Rational(1 - p2, p2) * ((m % 2) ? -1 : 1);
        e = e + expr_scale(c, ConstExpr::zeta(m + 1));
    }
    return (j % 2) ? e.scaled(-1) : e;
}

namespace {

Rational rational_harmonic(int n) {
    Rational h = 0;
    for (int i = 1; i <= n; ++i) h += Rational(1, i);
    return h;
}

Rational rational_binom(int n, int k) {
    Rational b = 1;
    for (int i = 1; i <= k; ++i) b *= Rational(n - i + 1, i);
    return b;
}

Rational rational_factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

ConstExpr closed_form_63a(int N) {
    if (N < 1) throw std::domain_error("closed_form_63a: requires N >= 1");
    ConstExpr e = ConstExpr::zeta(2);
    for (int k = 1; k <= N; ++k) {
        const Rational c = rational_binom(N, k) * rational_harmonic(k) / k * ((k % 2) ? -1 : 1);
        e = e + ConstExpr::constant(c);
    }
    // the partial-fraction identity carries N!, so the block sum does too
    return e.scaled(1 / rational_factorial(N));
}

ConstExpr closed_form_63b(int N) {
    if (N < 1) throw std::domain_error("closed_form_63b: requires N >= 1");
    ConstExpr e = expr_scale(Rational(-1, 2), ConstExpr::zeta(2));
    for (int k = 1; k <= N; ++k) {
        // psi(1 + k/2) - psi(1 + k): rational for even k, rational - 2 ln 2
        // for odd k (through psi at half-integer argument)
        ConstExpr diff;
        if (k % 2 == 0) {
            diff = ConstExpr::constant(rational_harmonic(k / 2) - rational_harmonic(k));
        } else {
            const int m = (k + 1) / 2;
            Rational odd = 0;
            for (int i = 1; i <= m; ++i) odd += Rational(1, 2 * i - 1);
            diff = ConstExpr::constant(2 * odd - rational_harmonic(k)) -
                   expr_scale(2, ConstExpr::ln2());
        }
        const Rational c = rational_binom(N, k) / k * ((k % 2) ? -1 : 1);
        e = e + diff.scaled(c);
    }
    return e.scaled(1 / rational_factorial(N));
}

ConstExpr closed_form_66a(int j) {
    if (j < 1) throw std::domain_error("closed_form_66a: requires j >= 1");
    ConstExpr e = ConstExpr::constant(1);
    for (int m = 1; m <= j; ++m)
        e = e + expr_scale((m % 2) ? -1 : 1, ConstExpr::zeta(m + 1));
    return (j % 2) ? e.scaled(-1) : e;
}

ConstExpr closed_form_66b(int j) {
    if (j < 1) throw std::domain_error("closed_form_66b: requires j >= 1");
    ConstExpr e = ConstExpr::constant(j + 1);
    for (int m = 1; m <= j; ++m) e = e - ConstExpr::zeta(m + 1);
    return e;
}

ConstExpr closed_form_25_rhs(int sign, int p, int k) {
    if (k < 1 || p < 1) throw std::domain_error("closed_form_25_rhs: requires p, k >= 1");
    if (sign > 0) return expr_scale(Rational(1, k), ConstExpr::zeta(p + 1));
    BigInt p2 = 1;
    for (int i = 0; i < p; ++i) p2 *= 2;
    return expr_scale(Rational(1 - p2, p2 * k), ConstExpr::zeta(p + 1));
}

ConstExpr closed_form_36_rhs(int sign, int p, int j, int k) {
    if (k < 1 || p < 1 || j < 1)
        throw std::domain_error("closed_form_36_rhs: requires p, j, k >= 1");
    BigInt kpow = 1;
    for (int i = 0; i <= j; ++i) kpow *= k; // k^{j+1} from the functional equation
    Rational c = rational_factorial(j) / Rational(kpow) * ((j % 2) ? -1 : 1);
    if (sign < 0) {
        BigInt p2 = 1;
        for (int i = 0; i < p + j; ++i) p2 *= 2;
        c *= Rational(1 - p2, p2);
    }
    return expr_scale(c, ConstExpr::zeta(p + j + 1));
}

double eval_recursion_T(int j) {
    if (j < 0) throw std::domain_error("eval_recursion_T: requires j >= 0");
    double t = 1.0 - 2.0 * std::numbers::ln2;
    for (int m = 1; m <= j; ++m)
        t += (std::pow(2.0, -m) - 1.0) * riemann_zeta(m + 1.0) + 1.0;
    return t;
}

double eval_recursion_S(int j) {
    if (j < 0) throw std::domain_error("eval_recursion_S: requires j >= 0");
    double s = 1.0 - 2.0 * std::numbers::ln2;
    for (int m = 1; m <= j; ++m)
        s = -s + (std::pow(2.0, -m) - 1.0) * riemann_zeta(m + 1.0);
    return s;
}

ZSumResult eval_z_sum(ZSumKind kind, double z, int j, double tol) {
    if (!(z > 0.0)) throw std::domain_error("eval_z_sum: requires z > 0");
    if (kind != ZSumKind::E56 && j < 1) throw std::domain_error("eval_z_sum: requires j >= 1");

    const int jj = kind == ZSumKind::E56 ? 0 : j;
    SumSpec spec = Auxiliary{AuxE57{z, jj}};
    if (kind == ZSumKind::E56) spec = Auxiliary{AuxE56{z}};
    const SeriesResult series = eval_sum(spec, tol);

    double closed = 0.0;
    if (kind == ZSumKind::E56) {
        closed = (digamma(1.0 + 0.5 * z) - digamma(1.0 + z)) / z;
    } else if (kind == ZSumKind::E57) {
        for (int m = 0; m <= jj; ++m) {
            const double diff =
                m == 0 ? digamma(1.0 + 0.5 * z) - digamma(1.0 + z)
                       : std::pow(2.0, -m) * polygamma(m, 1.0 + 0.5 * z) -
                             polygamma(m, 1.0 + z);
            closed += ((m % 2) ? -1.0 : 1.0) / factorial(m) *
                      std::pow(z, -(jj - m + 1.0)) * diff;
        }
    } else {
        for (int m = 1; m <= jj; ++m) {
            const double sgn = (m % 2) ? -1.0 : 1.0;
            const double inner = std::pow(2.0, -m) * polygamma(m, 0.5 * z) -
                                 sgn * std::pow(2.0, -m) * factorial(m) *
                                     std::pow(0.5 * z, -m - 1.0) * (-1.0) -
                                 polygamma(m, z) + sgn * factorial(m) * std::pow(z, -m - 1.0) * (-1.0);
            closed += sgn / factorial(m) * std::pow(z, -(jj - m + 1.0)) * inner;
        }
        closed += std::pow(z, -(jj + 1.0)) * (digamma(0.5 * z) - digamma(z) + 1.0 / z);
    }
    return {series, {closed, 1e-13 * (std::fabs(closed) + 1.0)}};
}

double partial_fraction_chain_binom_route(int N, double x) {
    if (N < 1 || !(x > 0.0))
        throw std::domain_error("partial_fraction_chain: requires N >= 1, x > 0");
    double s = 0.0, binom = 1.0;
    for (int k = 0; k <= N; ++k) {
        s += (k % 2 ? -binom : binom) / (x + k);
        binom *= static_cast<double>(N - k) / (k + 1.0);
    }
    return s;
}

double partial_fraction_chain_product_route(int N, double x) {
    if (N < 1 || !(x > 0.0))
        throw std::domain_error("partial_fraction_chain: requires N >= 1, x > 0");
    double denom = 1.0;
    for (int i = 0; i <= N; ++i) denom *= (x + i);
    return factorial(N) / denom;
}

double partial_fraction_chain(int N, double x) {
    const double a = partial_fraction_chain_binom_route(N, x);
    const double b = partial_fraction_chain_product_route(N, x);
    if (std::fabs(a - b) > 1e-12 * std::fabs(b))
        throw std::runtime_error("partial_fraction_chain: route disagreement");
    return b;
}

} // namespace gammasum
