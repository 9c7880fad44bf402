#include "gammasum/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gammasum {

namespace {

struct KahanAcc {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double safe_pow_int(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

} // namespace

double TailModel::eval(double x) const {
    const double lx = std::log(x);
    double s = 0.0;
    for (const auto& t : terms)
        s += t.coef * std::pow(x, -t.pow) * safe_pow_int(lx, t.logn);
    return s;
}

TailModel TailModel::derivative() const {
    TailModel d;
    d.terms.reserve(2 * terms.size());
    for (const auto& t : terms) {
        d.terms.push_back({-t.coef * t.pow, t.pow + 1, t.logn});
        if (t.logn > 0) d.terms.push_back({t.coef * t.logn, t.pow + 1, t.logn - 1});
    }
    return d;
}

TailModel TailModel::multiply(const TailModel& other, int max_pow) const {
    TailModel r;
    for (const auto& u : terms)
        for (const auto& v : other.terms) {
            const int p = u.pow + v.pow;
            if (p > max_pow) continue;
            r.terms.push_back({u.coef * v.coef, p, u.logn + v.logn});
        }
    // merge duplicates to keep the model small
    std::sort(r.terms.begin(), r.terms.end(), [](const PowLogTerm& a, const PowLogTerm& b) {
        return a.pow != b.pow ? a.pow < b.pow : a.logn < b.logn;
    });
    TailModel m;
    for (const auto& t : r.terms) {
        if (!m.terms.empty() && m.terms.back().pow == t.pow && m.terms.back().logn == t.logn)
            m.terms.back().coef += t.coef;
        else
            m.terms.push_back(t);
    }
    return m;
}

TailModel TailModel::scaled(double c) const {
    TailModel r = *this;
    for (auto& t : r.terms) t.coef *= c;
    return r;
}

double TailModel::integral_from(double A) const {
    // int_A^inf x^{-p} ln^m x dx
    //   = A^{1-p} sum_{i=0}^m C(m,i) ln^{m-i} A * i! / (p-1)^{i+1}
    const double lA = std::log(A);
    double s = 0.0;
    for (const auto& t : terms) {
        if (t.coef == 0.0) continue;
        if (t.pow < 2)
            throw std::invalid_argument("TailModel: non-integrable tail term (pow < 2)");
        const double pm1 = t.pow - 1.0;
        double binom = 1.0, fact = 1.0, inner = 0.0;
        for (int i = 0; i <= t.logn; ++i) {
            inner += binom * fact * safe_pow_int(lA, t.logn - i) / safe_pow_int(pm1, i + 1);
            binom *= static_cast<double>(t.logn - i) / (i + 1.0);
            fact *= (i + 1.0);
        }
        s += t.coef * std::pow(A, 1.0 - t.pow) * inner;
    }
    return s;
}

double TailModel::em_tail_from(double A) const {
    // sum_{n>=A} f(n) ~= int_A^inf f + f(A)/2 - f'(A)/12 + f'''(A)/720
    const TailModel d1 = derivative();
    const TailModel d3 = d1.derivative().derivative();
    return integral_from(A) + 0.5 * eval(A) - d1.eval(A) / 12.0 + d3.eval(A) / 720.0;
}

SeriesResult sum_direct_with_tail(const TermOracle& o, const SumOptions& opt) {
    if (!o.magnitude_model || o.magnitude_model->empty())
        throw std::invalid_argument("sum_direct_with_tail: magnitude model required");
    const TailModel& model = *o.magnitude_model;

    long long N = 1024;
    KahanAcc head;
    for (long long n = 1; n <= N; ++n) head.add(o.term(n));
    double prev = head.sum + model.em_tail_from(static_cast<double>(N + 1));

    while (true) {
        const long long N2 = 2 * N;
        for (long long n = N + 1; n <= N2; ++n) head.add(o.term(n));
        const double cur = head.sum + model.em_tail_from(static_cast<double>(N2 + 1));
        const double floor_err =
            std::numeric_limits<double>::epsilon() * (std::fabs(cur) + 1.0) * 4.0;
        const double err = std::fabs(cur - prev) + floor_err;
        if (err <= opt.tol) return {cur, err, N2, SumMethod::direct_tail};
        if (N2 >= opt.max_terms)
            throw ToleranceError("sum_direct_with_tail: tolerance unreachable within term budget");
        prev = cur;
        N = N2;
    }
}

double cvz_alternating_sum(const std::function<double(int)>& a, int n) {
    double d = std::pow(3.0 + 2.0 * std::sqrt(2.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

SeriesResult sum_alternating_accel(const TermOracle& o, const SumOptions& opt) {
    // head is summed exactly; negligible terms are legal only before the
    // first significant one (e.g. a leading gamma+psi(1) = 0 term)
    const int head_len = 12;
    std::vector<double> window(48);
    double scale = 0.0;
    for (long long n = 1; n <= 48; ++n) {
        window[n - 1] = o.term(n);
        scale = std::max(scale, std::fabs(window[n - 1]));
    }
    const double zero_tol = scale * 1e-12;
    {
        // negligible terms are fine while leading or once the series has
        // decayed for good; one surrounded by significant terms is not
        int last_sig = -1;
        for (int i = 0; i < 48; ++i)
            if (std::fabs(window[i]) > zero_tol) last_sig = i;
        double prev_sign = 0.0;
        for (int i = 0; i <= last_sig; ++i) {
            const double t = window[i];
            if (std::fabs(t) <= zero_tol) {
                if (prev_sign != 0.0)
                    throw SignPatternError("sum_alternating_accel: zero term inside the tail");
                continue;
            }
            const double s = t > 0.0 ? 1.0 : -1.0;
            if (prev_sign != 0.0 && s == prev_sign)
                throw SignPatternError("sum_alternating_accel: terms do not alternate");
            prev_sign = s;
        }
    }
    KahanAcc head;
    for (int n = 1; n <= head_len; ++n) head.add(window[n - 1]);

    const double sigma = window[head_len] >= 0.0 ? 1.0 : -1.0;

    std::vector<double> mags;
    mags.reserve(200);
    auto mag = [&](int k) {
        while (static_cast<int>(mags.size()) <= k) {
            const long long n = head_len + 1 + static_cast<long long>(mags.size());
            mags.push_back(std::fabs(n <= 48 ? window[n - 1] : o.term(n)));
        }
        return mags[k];
    };

    int m = 48;
    double est = head.sum + sigma * cvz_alternating_sum(mag, m);
    while (true) {
        const int m2 = m + 16;
        const double est2 = head.sum + sigma * cvz_alternating_sum(mag, m2);
        const double floor_err =
            std::numeric_limits<double>::epsilon() * (std::fabs(est2) + mag(0)) * 2.0;
        const double err = std::fabs(est2 - est) + floor_err;
        if (err <= opt.tol)
            return {est2, err, head_len + m2, SumMethod::alternating_accel};
        if (m2 + 16 > 188 - head_len)
            throw ToleranceError("sum_alternating_accel: tolerance unreachable in 200 terms");
        est = est2;
        m = m2;
    }
}

SeriesResult sum_direct_geometric(const TermOracle& o, double ratio, const SumOptions& opt) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw std::invalid_argument("sum_direct_geometric: ratio must lie in (0,1)");
    KahanAcc acc;
    const double gain = ratio / (1.0 - ratio);
    for (long long n = 1; n <= opt.max_terms; ++n) {
        const double t = o.term(n);
        acc.add(t);
        const double bound = std::fabs(t) * gain;
        if (n > 4 && bound <= opt.tol * 0.25)
            return {acc.sum, bound + std::numeric_limits<double>::epsilon() * std::fabs(acc.sum),
                    n, SumMethod::direct_tail};
    }
    throw ToleranceError("sum_direct_geometric: tolerance unreachable within term budget");
}

namespace {

Convergence classify_sign_power(int sign, double effective_p) {
    // digamma-type weight [gamma + psi(...)]: ln n numerator
    if (effective_p > 1.0) return Convergence::absolute;
    if (sign < 0 && effective_p > 0.0) return Convergence::conditional;
    return Convergence::divergent;
}

} // namespace

Convergence classify_convergence(const SumSpec& spec) {
    if (const auto* d = std::get_if<DigammaPower>(&spec))
        return classify_sign_power(d->sign, static_cast<double>(d->p));
    if (const auto* b = std::get_if<DigammaRationalBlock>(&spec))
        return classify_sign_power(b->sign, static_cast<double>(b->p));
    if (const auto* g = std::get_if<PolygammaPower>(&spec)) {
        if (std::fabs(g->z) < 1.0) return Convergence::absolute;
        const double pj = static_cast<double>(g->p) + static_cast<double>(g->j);
        const bool alternating = (g->sign < 0) != (g->z < 0.0);
        if (pj > 1.0) return Convergence::absolute;
        if (alternating && pj > 0.0) return Convergence::conditional;
        return Convergence::divergent;
    }
    if (const auto* r = std::get_if<ProductDenomDigamma>(&spec)) {
        const int p = r->alpha + r->beta;
        return p > 1 ? Convergence::absolute : Convergence::divergent;
    }
    if (const auto* c = std::get_if<BinomChain>(&spec))
        return c->j + 1 > 1 ? Convergence::absolute : Convergence::divergent;
    if (std::get_if<Auxiliary>(&spec)) return Convergence::absolute;
    throw std::invalid_argument("classify_convergence: unknown family");
}

} // namespace gammasum
