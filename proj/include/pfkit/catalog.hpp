#pragma once

#include <utility>
#include <vector>

#include "pfkit/fuchsian.hpp"

namespace pfkit {

struct HypergeometricParams {
    Rational a, b, c;
};

// sum (a)_n (b)_n / ((c)_n n!) t^n modulo t^N.
SeriesQ gauss_2f1(const HypergeometricParams& h, size_t N);
// Same series computed natively modulo p^m; throws DenominatorNotInvertible.
SeriesZ gauss_2f1_mod(const HypergeometricParams& h, size_t N, u64 p, unsigned m = 1);

// t(1-t) D^2 + (c - (a+b+1) t) D - ab
FuchsianOperator hypergeometric_operator(const HypergeometricParams& h);
FuchsianOperator legendre_operator();
std::pair<FuchsianOperator, FuchsianOperator> triangle_operators_2_5();
HypergeometricParams triangle_params_2_5(int j);

FuchsianOperator apery_operator();
std::vector<BigInt> apery_numbers(size_t N);

}  // namespace pfkit
