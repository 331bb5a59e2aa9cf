#include <doctest.h>

#include "pfkit/catalog.hpp"
#include "pfkit/descriptor.hpp"

using namespace pfkit;

namespace {
Rational R(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

// Independent oracle: binomial sums with plain integer Pascal rows.
std::vector<BigInt> apery_pascal(size_t N) {
    std::vector<std::vector<BigInt>> C(2 * N + 1);
    for (size_t n = 0; n < C.size(); ++n) {
        C[n].assign(n + 1, 1);
        for (size_t k = 1; k < n; ++k) C[n][k] = C[n - 1][k - 1] + C[n - 1][k];
    }
    std::vector<BigInt> a;
    for (size_t n = 0; n < N; ++n) {
        BigInt s = 0;
        for (size_t k = 0; k <= n; ++k) s += C[n][k] * C[n][k] * C[n + k][k];
        a.push_back(s);
    }
    return a;
}
}  // namespace

TEST_CASE("gauss_2f1 coefficients") {
    auto y = gauss_2f1({R(1, 2), R(1, 2), 1}, 3);
    CHECK(y[1] == R(1, 4));
    CHECK(y[2] == R(9, 64));
    CHECK(gauss_2f1(triangle_params_2_5(1), 2)[1] == R(21, 400));
    auto c = gauss_2f1({0, R(3, 7), R(2)}, 10);
    for (size_t i = 1; i < 10; ++i) CHECK(c[i].is_zero());
    HypergeometricParams h{R(3, 20), R(7, 20), 1};
    auto s = gauss_2f1(h, 60);
    for (size_t n = 0; n + 1 < 60; ++n) {
        Rational k(static_cast<long>(n));
        CHECK(s[n + 1] / s[n] == (h.a + k) * (h.b + k) / ((h.c + k) * (k + 1)));
    }
    CHECK_THROWS_AS(gauss_2f1({1, 1, R(-2)}, 4), UnsupportedOperator);
}

TEST_CASE("gauss_2f1 modulo p agrees with reduction and reports the prime") {
    HypergeometricParams h{R(1, 2), R(1, 2), 1};
    CHECK(gauss_2f1_mod(h, 7, 7) == reduce_series(gauss_2f1(h, 7), 7));
    CHECK(gauss_2f1_mod(h, 7, 7).truncate(7) == reduce_series(gauss_2f1(h, 7), 7).truncate(7));
    try {
        gauss_2f1_mod(h, 9, 7);
        FAIL("expected DenominatorNotInvertible");
    } catch (const DenominatorNotInvertible& e) {
        CHECK(e.prime == 7u);
    }
}

TEST_CASE("triangle operators and their solutions") {
    auto [L1, L2] = triangle_operators_2_5();
    CHECK(L1.r().coeff(0) == R(-21, 400));
    CHECK(L2.r().coeff(0) == R(-9, 400));
    CHECK(frobenius_solution(L1, 500) == gauss_2f1(triangle_params_2_5(1), 500));
    CHECK(frobenius_solution(L2, 500) == gauss_2f1(triangle_params_2_5(2), 500));
}

TEST_CASE("hypergeometric exponents at infinity are a and b") {
    const long nums[][3] = {{1, 3, 5}, {2, 7, 3}, {-5, 11, 4}, {7, 13, 9}, {3, 4, 2}};
    for (const auto& n : nums) {
        HypergeometricParams h{R(n[0], n[1]), R(n[1], n[2]), R(n[2], n[0] > 0 ? n[0] : 1)};
        if (h.c.is_integer() && h.c.sign() <= 0) continue;
        auto e = indicial_at_infinity(hypergeometric_operator(h));
        REQUIRE(e.rational);
        Rational lo = h.a < h.b ? h.a : h.b, hi = h.a < h.b ? h.b : h.a;
        CHECK(e.s1 == lo);
        CHECK(e.s2 == hi);
    }
}

TEST_CASE("Apery numbers") {
    auto a = apery_numbers(501);
    CHECK(a[0] == 1);
    CHECK(a[3] == 147);
    CHECK(a == apery_pascal(501));
    auto y = frobenius_solution(apery_operator(), 501);
    for (size_t n = 0; n <= 500; ++n) CHECK(y[n] == Rational(a[n]));
}

TEST_CASE("builtin descriptors load and validate") {
    auto ds = builtin_descriptors();
    REQUIRE(ds.size() == 4);
    const auto& w5 = ds[0];
    CHECK(w5.name == "W5");
    CHECK(w5.euler_char == R(-3, 10));
    CHECK(w5.lyapunov[1] == R(1, 3));
    CHECK(w5.bad_primes == std::set<u64>{2, 5});
    CHECK(w5.fiber->square_symmetry);
    CHECK(w5.lcm_elliptic() == 10u);
    CHECK(w5.hash.size() == 16);
    auto [L1, L2] = triangle_operators_2_5();
    CHECK(w5.operators[0] == L1);
    CHECK(w5.operators[1] == L2);
    const auto& leg = ds[2];
    CHECK(leg.elliptic_orders.empty());
    CHECK(leg.cusp_count == 3u);
    CHECK(projectively_equal(leg.operators[0], legendre_operator()));
    CHECK(ds[1].fiber->alternates.size() == 1);
    CHECK(projectively_equal(ds[1].operators[0], apery_operator()));
    for (const auto& d : ds)
        for (const auto& L : d.operators) CHECK(fuchs_relation_check(riemann_scheme(L)).ok);
}

TEST_CASE("descriptor validation errors") {
    CHECK_THROWS_AS(load_family("NoSuchFamily"), DescriptorError);
    CHECK_THROWS_AS(load_family("../etc"), DescriptorError);
    CHECK_THROWS_AS(parse_descriptor("{"), DescriptorError);
    const char* bad = R"({"name":"x","g":1,"euler_char":"1/2","lyapunov":["1"],"cusp_count":1,"bad_primes":[],
        "operators":[{"p":["0","1","-1"],"q":["1","-2"],"r":["-1/4"]}],
        "hauptmodul":{"zero_at":"cusp","pole_at":"cusp"}})";
    CHECK_THROWS_AS(parse_descriptor(bad), DescriptorError);
    const char* wide = R"({"name":"x","g":1,"rm_disc":13,"euler_char":"-1","lyapunov":["1"],"cusp_count":3,"bad_primes":[],
        "operators":[{"p":["0","1","-1"],"q":["1","-2"],"r":["-1/4"]}],
        "hauptmodul":{"zero_at":"cusp","pole_at":"cusp"}})";
    CHECK_THROWS_AS(parse_descriptor(wide), DescriptorError);
    auto w5 = load_family("W5");
    CHECK_THROWS_AS(require_good_prime(w5, 5), RamifiedPrime);
    CHECK_THROWS_AS(require_good_prime(w5, 2), RamifiedPrime);
    CHECK_NOTHROW(require_good_prime(w5, 13));
}

TEST_CASE("descriptor hash is stable and content sensitive") {
    const char* a = R"({"name":"x","g":1,"euler_char":"-1","lyapunov":["1"],"cusp_count":3,"bad_primes":[2],
        "operators":[{"p":["0","1","-1"],"q":["1","-2"],"r":["-1/4"]}],
        "hauptmodul":{"zero_at":"cusp","pole_at":"cusp"}})";
    std::string b = a;
    b.replace(b.find("\"bad_primes\":[2]"), 16, "\"bad_primes\":[3]");
    CHECK(parse_descriptor(a).hash == parse_descriptor(a).hash);
    CHECK(parse_descriptor(a).hash != parse_descriptor(b).hash);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
