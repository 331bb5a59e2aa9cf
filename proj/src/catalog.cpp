#include "pfkit/catalog.hpp"

namespace pfkit {

namespace {

void check_c(const Rational& c) {
    if (c.is_integer() && c.sign() <= 0) throw UnsupportedOperator("c must not be a non-positive integer");
}

}  // namespace

SeriesQ gauss_2f1(const HypergeometricParams& h, size_t N) {
    check_c(h.c);
    std::vector<Rational> v(N, Rational(0));
    if (N) v[0] = 1;
    for (size_t n = 0; n + 1 < N; ++n) {
        Rational k(static_cast<long>(n));
        v[n + 1] = v[n] * (h.a + k) * (h.b + k) / ((h.c + k) * (k + Rational(1)));
    }
    return SeriesQ(std::move(v), Rational(0));
}

SeriesZ gauss_2f1_mod(const HypergeometricParams& h, size_t N, u64 p, unsigned m) {
    check_c(h.c);
    Zmod zero(p, m, 0);
    std::vector<Zmod> v(N, zero);
    if (N) v[0] = Zmod(p, m, 1);
    for (size_t n = 0; n + 1 < N; ++n) {
        Rational k(static_cast<long>(n));
        Rational den = (h.c + k) * (k + Rational(1));
        Zmod d = reduce_rational(den, p, m);
        if (!d.is_unit())
            throw DenominatorNotInvertible(p, "Pochhammer denominator at n=" + std::to_string(n + 1) +
                                                  " is divisible by " + std::to_string(p));
        v[n + 1] = v[n] * reduce_rational((h.a + k) * (h.b + k), p, m) * d.inv();
    }
    return SeriesZ(std::move(v), zero);
}

FuchsianOperator hypergeometric_operator(const HypergeometricParams& h) {
    check_c(h.c);
    return {polyq({0, 1, -1}), polyq({h.c, -(h.a + h.b + Rational(1))}), polyq({-(h.a * h.b)})};
}

FuchsianOperator legendre_operator() { return hypergeometric_operator({Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(2)), 1}); }

HypergeometricParams triangle_params_2_5(int j) {
    if (j != 1 && j != 2) throw Error("triangle index must be 1 or 2");
    return {Rational(BigInt(5 - 2 * j), BigInt(20)), Rational(BigInt(5 + 2 * j), BigInt(20)), 1};
}

std::pair<FuchsianOperator, FuchsianOperator> triangle_operators_2_5() {
    return {hypergeometric_operator(triangle_params_2_5(1)), hypergeometric_operator(triangle_params_2_5(2))};
}

FuchsianOperator apery_operator() { return {polyq({0, -1, 11, 1}), polyq({-1, 22, 3}), polyq({3, 1})}; }

std::vector<BigInt> apery_numbers(size_t N) {
    std::vector<BigInt> out;
    for (size_t n = 0; n < N; ++n) {
        BigInt s = 0, a, b;
        for (size_t k = 0; k <= n; ++k) {
            mpz_bin_uiui(a.get_mpz_t(), n, k);
            mpz_bin_uiui(b.get_mpz_t(), n + k, k);
            s += a * a * b;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace pfkit
