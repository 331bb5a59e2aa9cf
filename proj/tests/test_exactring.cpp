#include <doctest.h>

#include <random>

#include "pfkit/exactring.hpp"

using namespace pfkit;

TEST_CASE("splitting type of quadratic fields") {
    CHECK(splitting_type(11, 5) == SplittingType::split);
    CHECK(splitting_type(13, 5) == SplittingType::inert);
    CHECK(splitting_type(5, 5) == SplittingType::ramified);
    CHECK(splitting_type(2, 17) == SplittingType::split);
    CHECK(splitting_type(2, 5) == SplittingType::inert);
    CHECK(splitting_type(2, 6) == SplittingType::ramified);
    CHECK_THROWS_AS(splitting_type(15, 5), NotPrime);
}

TEST_CASE("split iff x^2 - d has two roots, brute force") {
    for (u64 p : primes_in_range(3, 200)) {
        for (long d : {2L, 3L, 5L, 6L, 7L, 13L}) {
            int roots = 0;
            for (u64 x = 0; x < p; ++x) roots += (x * x) % p == static_cast<u64>(d) % p;
            auto s = splitting_type(p, d);
            if (static_cast<u64>(d) % p == 0) CHECK(s == SplittingType::ramified);
            else CHECK((s == SplittingType::split) == (roots == 2));
        }
    }
}

TEST_CASE("reduce_rational") {
    CHECK(reduce_rational(Rational(21, 400), 13).value() == 6);
    CHECK_THROWS_AS(reduce_rational(Rational(1, 2), 2), DenominatorNotInvertible);
    CHECK(reduce_rational(Rational(3), 5, 2).value() == 3);
    CHECK(reduce_rational(Rational(-1, 3), 7).value() == 2);
    try {
        reduce_rational(Rational(1, 10), 5);
        FAIL("expected throw");
    } catch (const DenominatorNotInvertible& e) {
        CHECK(e.prime == 5);
    }
}

TEST_CASE("reduce_rational is a ring homomorphism") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 300);
    for (int it = 0; it < 300; ++it) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        for (u64 p : {7ULL, 11ULL, 13ULL}) {
            try {
                auto ra = reduce_rational(a, p, 2), rb = reduce_rational(b, p, 2);
                CHECK(reduce_rational(a + b, p, 2) == ra + rb);
                CHECK(reduce_rational(a * b, p, 2) == ra * rb);
            } catch (const DenominatorNotInvertible&) {
            }
        }
    }
}

TEST_CASE("extension field defining polynomials") {
    CHECK(build_extension_field(13, 2) == std::vector<u64>{2, 0, 1});
    CHECK(build_extension_field(7, 1) == std::vector<u64>{0, 1});
    // independent check for (37, 3): the returned cubic has no root in F_37
    // and every lexicographically smaller monic cubic does.
    auto f = build_extension_field(37, 3);
    auto has_root = [](u64 c0, u64 c1, u64 c2) {
        for (u64 x = 0; x < 37; ++x)
            if ((x * x % 37 * x + c2 * x % 37 * x + c1 * x + c0) % 37 == 0) return true;
        return false;
    };
    CHECK_FALSE(has_root(f[0], f[1], f[2]));
    u64 rank = f[2] * 37 * 37 + f[1] * 37 + f[0];
    for (u64 n = 0; n < rank; ++n) CHECK(has_root(n % 37, (n / 37) % 37, n / (37 * 37)));
}

TEST_CASE("field axioms on samples") {
    std::mt19937_64 rng(11);
    for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{13, 1}, {13, 2}, {37, 3}, {5, 4}, {3, 17}}) {
        const FieldContext* k = field(p, e);
        std::uniform_int_distribution<u64> pick(0, k->size() - 1);
        for (int it = 0; it < 200; ++it) {
            GF a(k, pick(rng)), b(k, pick(rng)), c(k, pick(rng));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == GF(k, 0));
            if (!a.is_zero()) CHECK(a * a.inv() == GF(k, 1));
        }
    }
    std::mt19937_64 r2(3);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    for (int it = 0; it < 100; ++it) {
        QuadraticElement x(5, Rational(num(r2), den(r2)), Rational(num(r2), den(r2)));
        QuadraticElement y(5, Rational(num(r2), den(r2)), Rational(num(r2), den(r2)));
        QuadraticElement z(5, Rational(num(r2), den(r2)), Rational(num(r2), den(r2)));
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) CHECK(x * x.inv() == QuadraticElement(5, 1, 0));
        Zmod u(13, 3, num(r2)), v(13, 3, num(r2)), w(13, 3, num(r2));
        CHECK((u * v) * w == u * (v * w));
        if (u.is_unit()) CHECK(u * u.inv() == Zmod(13, 3, 1));
        Rational a(num(r2), den(r2));
        if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
    }
}

TEST_CASE("quadratic elements with different d do not mix") {
    QuadraticElement a(5, 1, 1), b(2, 1, 1);
    CHECK_THROWS_AS(a + b, MixedRings);
    CHECK((a * a.conj()).b().is_zero());
}

TEST_CASE("Frobenius fixes exactly the prime field") {
    for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{13, 2}, {7, 3}, {37, 2}}) {
        const FieldContext* k = field(p, e);
        u64 fixed = 0;
        for (u64 v = 0; v < k->size(); ++v) {
            GF a(k, v);
            if (a.frobenius() == a) ++fixed;
            GF b(k, (v * 7919) % k->size());
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        }
        CHECK(fixed == p);
    }
}

TEST_CASE("square roots") {
    for (auto [p, e] : std::vector<std::pair<u64, unsigned>>{{11, 1}, {13, 2}, {37, 3}}) {
        const FieldContext* k = field(p, e);
        u64 squares = 0;
        for (u64 v = 0; v < k->size(); ++v) {
            u64 r;
            if (k->sqrt(v, r)) {
                ++squares;
                CHECK(k->mul(r, r) == v);
            }
        }
        CHECK(squares == (k->size() + 1) / 2);
    }
    u64 r;
    CHECK(field(11, 1)->sqrt(5, r));
    CHECK(r == 4);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("-21/400").str() == "-21/400");
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("x/2"), ParseError);
    CHECK(Rational(-7, 2).floor() == -4);
}
