#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "gammasum/const_expr.hpp"
#include "reference_values.hpp"

using namespace gammasum;
namespace rv = refval;

namespace {

ConstExpr eq7a_rhs() {
    return expr_scale(Rational(7, 2), ConstExpr::zeta(3)) +
           expr_scale(-2, ConstExpr::ln2() * ConstExpr::zeta(2));
}

std::vector<ConstExpr> sample_pool(std::mt19937& rng) {
    std::vector<ConstExpr> pool = {
        ConstExpr::constant(Rational(3, 4)), ConstExpr::pi(),         ConstExpr::ln2(),
        ConstExpr::zeta(2),                  ConstExpr::zeta(3),      ConstExpr::catalan(),
        ConstExpr::cl2(1, 4),                ConstExpr::li_half(4),   ConstExpr::trigamma(1, 3),
        ConstExpr::euler_gamma(),            ConstExpr::ln_int(3),
    };
    std::shuffle(pool.begin(), pool.end(), rng);
    return pool;
}

} // namespace

TEST_CASE("basic arithmetic and exact coefficients") {
    const ConstExpr two_z3 = expr_add(ConstExpr::zeta(3), ConstExpr::zeta(3));
    CHECK(two_z3 == expr_scale(2, ConstExpr::zeta(3)));
    CHECK(expr_render(two_z3) == "2*zeta(3)");
    const ConstExpr ln2sq = expr_mul(ConstExpr::ln2(), ConstExpr::ln2());
    CHECK(expr_render(ln2sq) == "ln2^2");
    CHECK(std::fabs(ln2sq.eval().value - rv::ln2 * rv::ln2) < 1e-15);
    // coefficient arithmetic is exact: (1/3 + 1/6) * 2 == 1
    ConstExpr e = expr_scale(Rational(1, 3), ConstExpr::pi()) +
                  expr_scale(Rational(1, 6), ConstExpr::pi());
    CHECK(expr_scale(2, e) == ConstExpr::pi());
}

TEST_CASE("rendering") {
    CHECK(expr_render(eq7a_rhs()) == "7/2*zeta(3) - 2*ln2*zeta(2)");
    CHECK(expr_render(ConstExpr{}) == "0");
    CHECK(expr_render(ConstExpr::constant(1)) == "1");
    CHECK(expr_render(ConstExpr::constant(Rational(-5, 3))) == "-5/3");
    CHECK(expr_render(expr_scale(-1, ConstExpr::catalan())) == "-G");
    // canonical form is construction-order independent, so rendering is stable
    const ConstExpr a = eq7a_rhs();
    const ConstExpr b = expr_scale(-2, ConstExpr::zeta(2) * ConstExpr::ln2()) +
                        expr_scale(Rational(7, 2), ConstExpr::zeta(3));
    CHECK(a == b);
    CHECK(expr_render(a) == expr_render(b));
}

TEST_CASE("atom normalization") {
    CHECK(ConstExpr::ln_int(2) == ConstExpr::ln2());
    CHECK(ConstExpr::ln_int(4) == expr_scale(2, ConstExpr::ln2()));
    CHECK(ConstExpr::ln_int(6) == ConstExpr::ln2() + ConstExpr::ln_int(3));
    CHECK(ConstExpr::ln_int(1).empty());
    CHECK(ConstExpr::cl2(1, 1).empty());          // Cl2(pi) = 0
    CHECK(ConstExpr::cl2(4, 2).empty());          // Cl2(2pi) = 0
    CHECK(ConstExpr::cl2(1, 2) == ConstExpr::catalan());
    CHECK(ConstExpr::cl2(3, 2) == expr_scale(-1, ConstExpr::catalan()));
    CHECK(ConstExpr::cl2(9, 4) == ConstExpr::cl2(1, 4)); // периодicity: 9/4 == 1/4 mod 2
    CHECK(ConstExpr::cl2(2, 8) == ConstExpr::cl2(1, 4)); // lowest terms
    CHECK(ConstExpr::trigamma(1, 1) == ConstExpr::zeta(2));
    CHECK(ConstExpr::trigamma(2, 4) == expr_scale(Rational(1, 2),
                                                  ConstExpr::pi() * ConstExpr::pi()));
    CHECK(ConstExpr::li_half(1) == ConstExpr::ln2());
    CHECK_THROWS_AS(ConstExpr::zeta(1), std::domain_error);
}

TEST_CASE("ring laws on sampled expressions") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 24; ++trial) {
        auto pool = sample_pool(rng);
        const ConstExpr &a = pool[0], &b = pool[1], &c = pool[2];
        CHECK(expr_add(a, b) == expr_add(b, a));
        CHECK(expr_mul(a, b) == expr_mul(b, a));
        CHECK(expr_add(expr_add(a, b), c) == expr_add(a, expr_add(b, c)));
        CHECK(expr_mul(expr_mul(a, b), c) == expr_mul(a, expr_mul(b, c)));
        CHECK(expr_mul(a, expr_add(b, c)) == expr_add(expr_mul(a, b), expr_mul(a, c)));
        CHECK((a - a).empty());
    }
}

TEST_CASE("evaluation with propagated bounds") {
    const EvalResult one = expr_eval(ConstExpr::constant(1));
    CHECK(one.value == 1.0);
    CHECK(one.abs_err < 1e-15);

    const EvalResult r = expr_eval(eq7a_rhs());
    const double expect = 3.5 * rv::zeta3 - 2.0 * rv::ln2 * rv::zeta2;
    CHECK(std::fabs(r.value - expect) < 1e-14);
    CHECK(r.abs_err < 1e-13);
    CHECK(std::fabs(r.value - expect) < r.abs_err + 1e-15);

    // additivity of eval within the propagated bounds
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        auto pool = sample_pool(rng);
        const ConstExpr &a = pool[0], &b = pool[1];
        const EvalResult ra = expr_eval(a), rb = expr_eval(b), rab = expr_eval(expr_add(a, b));
        CHECK(std::fabs(rab.value - (ra.value + rb.value)) <=
              ra.abs_err + rb.abs_err + rab.abs_err + 1e-15);
    }

    // G = (1/16)[psi'(1/4) - psi'(3/4)] as an expression
    const ConstExpr g8 = expr_scale(Rational(1, 16),
                                    ConstExpr::trigamma(1, 4) - ConstExpr::trigamma(3, 4));
    CHECK(std::fabs(expr_eval(g8).value - 0.915965594177219015) < 1e-13);
}

TEST_CASE("pi powers and mixed monomials") {
    // -(pi^2/12) ln^2 2 + (1/12) ln^4 2 style mixed monomials
    ConstExpr e = expr_scale(Rational(-1, 12),
                             ConstExpr::pi() * ConstExpr::pi() * ConstExpr::ln2() * ConstExpr::ln2()) +
                  expr_scale(Rational(1, 12),
                             ConstExpr::ln2() * ConstExpr::ln2() * ConstExpr::ln2() * ConstExpr::ln2());
    const double expect = -rv::pi * rv::pi / 12.0 * rv::ln2 * rv::ln2 +
                          std::pow(rv::ln2, 4) / 12.0;
    CHECK(std::fabs(expr_eval(e).value - expect) < 1e-15);
    CHECK(expr_render(e) == "1/12*ln2^4 - 1/12*pi^2*ln2^2");
}
