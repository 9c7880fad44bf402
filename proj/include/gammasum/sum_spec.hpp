#ifndef GAMMASUM_SUM_SPEC_HPP
#define GAMMASUM_SUM_SPEC_HPP

#include <variant>

#include "gammasum/specfun.hpp"

namespace gammasum {

// Tagged parameterization of every summation family handled by the artifact.
// sign is +1 or -1 and multiplies as sign^n.

/// sum_n sign^n [gamma + psi(k*n + a)] / n^p
struct DigammaPower {
    int sign = 1;
    int p = 2;
    int k = 1;
    RationalArg a{1, 2};
};

/// sum_n sign^n n^{-p} sum_{r=0}^{q-1} [gamma + psi(n + r/q)]
struct DigammaRationalBlock {
    int sign = 1;
    int p = 2;
    int q = 1;
};

/// sum_n sign^n psi^{(j)}(k*n + a) z^n / n^p
struct PolygammaPower {
    int sign = 1;
    int p = 1;
    int j = 1;
    int k = 1;
    RationalArg a{1, 1};
    double z = 1.0;
};

/// sum_n [gamma + psi(n + a)] / (n^alpha (n+1)^beta)
struct ProductDenomDigamma {
    RationalArg a{1, 2};
    int alpha = 1;
    int beta = 1;
};

/// sum_n w(n) / (n (n+1) ... (n+j)) with w = gamma+psi(kn+1) or psi^{(m)}(kn+1)
struct BinomChain {
    int j = 1;
    int k = 1;
    int m = 0; // 0: digamma kind; m >= 1: polygamma kind
};

struct AuxE55 { int j = 1; };                 // sum (-1)^n / (n (n+1)^{j+1})
struct AuxE56 { double z = 1.0; };            // sum (-1)^n / (n (n+z))
struct AuxE57 { double z = 1.0; int j = 1; }; // sum (-1)^n / (n (n+z)^{j+1})
struct AuxE59 { int j = 1; };                 // sum (-1)^n / (n^{j+1} (n+1))
struct AuxE62 { double z = 1.0; int j = 1; }; // E57 series, shifted-argument route
struct AuxE63a { int N = 1; };                // sum 1/(l prod_{i=0}^{N}(l+i))
struct AuxE63b { int N = 1; };                // alternating companion of E63a
struct AuxE66a { int j = 1; };                // sum 1/(n^{j+1}(n+1))
struct AuxE66b { int j = 1; };                // sum 1/(n(n+1)^{j+1})

using Auxiliary = std::variant<AuxE55, AuxE56, AuxE57, AuxE59, AuxE62,
                               AuxE63a, AuxE63b, AuxE66a, AuxE66b>;

using SumSpec = std::variant<DigammaPower, DigammaRationalBlock, PolygammaPower,
                             ProductDenomDigamma, BinomChain, Auxiliary>;

} // namespace gammasum

#endif
