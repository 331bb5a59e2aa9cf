#include <doctest.h>

#include <random>

#include "pfkit/series.hpp"

using namespace pfkit;

namespace {
SeriesQ S(std::vector<Rational> c) { return SeriesQ(std::move(c), Rational(0)); }
}

TEST_CASE("truncation") {
    SeriesQ geo(std::vector<Rational>(10, Rational(1)), Rational(0));
    CHECK(geo.truncate(2) == PolyQ(std::vector<Rational>{1, 1}, Rational(0)));
    CHECK_THROWS(geo.truncate(11));
}

TEST_CASE("pow_rational") {
    SeriesQ s = S({1, 1, 0, 0, 0, 0});
    SeriesQ h = s.pow_rational(Rational(1, 2));
    CHECK(h[1] == Rational(1, 2));
    CHECK(h[2] == Rational(-1, 8));
    CHECK(h[3] == Rational(1, 16));
    CHECK((s * s).pow_rational(Rational(1, 2)) == s);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int it = 0; it < 20; ++it) {
        std::vector<Rational> v{1};
        for (int i = 0; i < 12; ++i) v.push_back(Rational(c(rng), 1 + (c(rng) + 9) % 4));
        SeriesQ u = S(v);
        Rational a(c(rng), 3), b(c(rng), 5);
        CHECK(u.pow_rational(a) * u.pow_rational(b) == u.pow_rational(a + b));
    }
    SeriesZ z = reduce_series(S({1, 1, 0, 0, 0, 0, 0, 0}), 5);
    try {
        z.pow_rational(Rational(1, 3));
        FAIL("expected throw");
    } catch (const DenominatorNotInvertible& e) {
        CHECK(e.prime == 5);
    }
}

TEST_CASE("substitute_power") {
    SeriesQ s = S({1, 1, 0});
    SeriesQ t = s.substitute_power(3);
    CHECK(t.order() == 9);
    CHECK(t[3] == Rational(1));
    CHECK(t[1] == Rational(0));
    CHECK(s.substitute_power(1) == s);
    SeriesQ u = S({2, -1, 5});
    CHECK((s * u).substitute_power(4) == s.substitute_power(4) * u.substitute_power(4));
}

TEST_CASE("ring laws and reciprocal") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> a, b, d;
        for (int i = 0; i < 15; ++i) {
            a.push_back(Rational(c(rng), 7));
            b.push_back(Rational(c(rng)));
            d.push_back(Rational(c(rng), 3));
        }
        a[0] = 1;
        SeriesQ A = S(a), B = S(b), D = S(d);
        CHECK((A * B) * D == A * (B * D));
        CHECK(A * (B + D) == A * B + A * D);
        CHECK((A * A.reciprocal()) == SeriesQ::one(Rational(0), 15));
    }
    SeriesQ one_minus_t = S({1, -1, 0, 0, 0});
    SeriesQ geo = S({1, 1, 1, 1, 1});
    CHECK(one_minus_t * geo == SeriesQ::one(Rational(0), 5));
    CHECK_THROWS(S({0, 1}).reciprocal());
}

TEST_CASE("order bookkeeping with valuations") {
    SeriesQ a = S({0, 0, 1, 2});  // t^2 + 2t^3, known mod t^4
    SeriesQ b = S({1, 1});        // known mod t^2
    CHECK((a * b).order() == 4);
    CHECK((b * b).order() == 2);
    auto q = div_laurent(S({0, 3, 6, 9}), S({0, 0, 1, 2}));
    CHECK(q.shift == -1);
    CHECK(q.value.order() == 2);
    CHECK(q.value[0] == Rational(3));
    CHECK_THROWS(S({1, 2}).div_t_power(1));
}

TEST_CASE("truncation commutes with reduction") {
    std::vector<Rational> v;
    for (long n = 0; n < 30; ++n) v.push_back(Rational(n * n + 1, 1 + (n % 4)));
    SeriesQ s = S(v);
    CHECK(reduce_series(s, 7).truncate(20) == s.truncate(20).map([](const Rational& q) { return reduce_rational(q, 7); }, Zmod(7, 1, 0)));
}
