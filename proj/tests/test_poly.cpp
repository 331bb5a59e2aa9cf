#include <doctest.h>

#include <random>

#include "pfkit/poly.hpp"

using namespace pfkit;

namespace {
PolyF P(u64 p, std::vector<long long> c) { return poly_over(field(p, 1), c); }
}

TEST_CASE("gcd and lcm over F_p") {
    // J(J-1)(J-9)^2 and J(J-9) over F_13
    PolyF J = P(13, {0, 1}), a = J * P(13, {-1, 1}) * P(13, {-9, 1}).pow(2), b = J * P(13, {-9, 1});
    CHECK(gcd(a, b) == J * P(13, {-9, 1}));
    CHECK(gcd(a, PolyF(GF(field(13, 1), 0))) == a.monic());
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> c(0, 12);
    for (int it = 0; it < 100; ++it) {
        PolyF x = P(13, {c(rng), c(rng), c(rng), 1}), y = P(13, {c(rng), c(rng), 1});
        PolyF g = gcd(x, y);
        CHECK(divides(g, x));
        CHECK(divides(g, y));
        CHECK(lcm(x, y) * g == (x * y).monic());
    }
    CHECK_THROWS_AS(gcd(Poly<Zmod>(std::vector<Zmod>{Zmod(5, 2, 1)}, Zmod(5, 2, 0)),
                        Poly<Zmod>(std::vector<Zmod>{Zmod(5, 2, 1)}, Zmod(5, 2, 0))),
                    NonFieldRing);
}

TEST_CASE("squarefree part") {
    PolyF J = P(13, {0, 1});
    CHECK(squarefree_part(P(13, {-1, 1}).pow(2) * J) == J * P(13, {-1, 1}));
    CHECK(squarefree_part(PolyF::monomial(GF(field(7, 1), 1), 7)) == P(7, {0, 1}));
    // (x^2+1)^5 * x^3 over F_5: mixes the p-th power branch and ordinary multiplicity
    PolyF f = P(5, {1, 0, 1}).pow(5) * P(5, {0, 1}).pow(3);
    CHECK(squarefree_part(f) == (P(5, {1, 0, 1}) * P(5, {0, 1})).monic());
    CHECK_THROWS(squarefree_part(PolyF(GF(field(5, 1), 0))));
}

TEST_CASE("distinct-degree factorization") {
    // ss_37 display
    PolyF ss = P(37, {0, 1}) * P(37, {-1, 1}) * P(37, {16, 1}) * P(37, {8, 1, 1}) * P(37, {25, 1, 22, 1});
    auto dd = distinct_degree_factorization(ss);
    REQUIRE(dd.size() == 3);
    CHECK(dd[0].first == 1);
    CHECK(dd[0].second.degree() == 3);
    CHECK(dd[1].first == 2);
    CHECK(dd[1].second.degree() == 2);
    CHECK(dd[2].first == 3);
    CHECK(dd[2].second.degree() == 3);
    PolyF prod = dd[0].second * dd[1].second * dd[2].second;
    CHECK(prod == ss.monic());
    auto q = distinct_degree_factorization(P(5, {2, 0, 1}));
    REQUIRE(q.size() == 1);
    CHECK(q[0].first == 2);
    auto lin = distinct_degree_factorization(P(5, {0, -1, 0, 1}));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].first == 1);
    CHECK_THROWS(distinct_degree_factorization(P(5, {0, 0, 1})));
}

TEST_CASE("distinct-degree parts against brute-force irreducibility") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long long> c(0, 6);
    for (int it = 0; it < 40; ++it) {
        PolyF f = P(7, {c(rng), c(rng), c(rng), c(rng), c(rng), 1});
        f = squarefree_part(f);
        PolyF prod = P(7, {1});
        for (auto& [k, part] : distinct_degree_factorization(f)) {
            CHECK(part.degree() % static_cast<int>(k) == 0);
            // every root of a degree-k part lies in F_{7^k} and no smaller field
            auto roots_k = roots_in_field(part, field(7, k));
            CHECK(static_cast<int>(roots_k.size()) == part.degree());
            for (unsigned d = 1; d < k; ++d)
                if (k % d == 0) CHECK(roots_in_field(part, field(7, d)).empty());
            prod = prod * part;
        }
        CHECK(prod == f.monic());
    }
}

TEST_CASE("factorization") {
    PolyF f = P(37, {-1, 1}).pow(3) * P(37, {8, 1, 1}) * P(37, {25, 1, 22, 1}).pow(2);
    auto fac = factor(f);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0].first == P(37, {-1, 1}));
    CHECK(fac[0].second == 3);
    CHECK(fac[1].first == P(37, {8, 1, 1}));
    CHECK(fac[2].second == 2);
}

TEST_CASE("roots in extension fields") {
    auto r13 = roots_in_field(P(13, {0, 1}) * P(13, {-1, 1}) * P(13, {-9, 1}), field(13, 1));
    REQUIRE(r13.size() == 3);
    CHECK(r13[0].value.index() == 0);
    CHECK(r13[1].value.index() == 1);
    CHECK(r13[2].value.index() == 9);
    PolyF cubic = P(37, {25, 1, 22, 1});
    CHECK(roots_in_field(cubic, field(37, 1)).empty());
    auto r3 = roots_in_field(cubic, field(37, 3));
    CHECK(r3.size() == 3);
    for (auto& r : r3) CHECK(r.value.frobenius() != r.value);
    auto r11 = roots_in_field(P(11, {-5, 0, 1}), field(11, 1));
    REQUIRE(r11.size() == 2);
    CHECK(r11[0].value.index() == 4);
    CHECK(r11[1].value.index() == 7);
    auto mult = roots_in_field(P(13, {-1, 1}).pow(2) * P(13, {0, 1}), field(13, 1));
    CHECK(mult[1].multiplicity == 2);
}

TEST_CASE("roots are stable under field extension") {
    PolyF f = P(5, {1, 4, 1}) * P(5, {-2, 1});
    const FieldContext* k2 = field(5, 2);
    const FieldContext* k4 = field(5, 4);
    auto r2 = roots_in_field(f, k2);
    auto r4 = roots_in_field(f, k4);
    CHECK(r2.size() == 3);
    CHECK(r4.size() == 3);
    for (auto& r : r2) {
        GF e = embed(r.value, k4);
        bool found = false;
        for (auto& s : r4) found = found || s.value == e;
        CHECK(found);
    }
}

TEST_CASE("large-field root finding by gcd and splitting") {
    // F_{13^7} exceeds the exhaustive envelope
    const FieldContext* big = field(13, 7);
    CHECK_FALSE(big->has_tables());
    auto r = roots_in_field(P(13, {-1, 1}) * P(13, {-9, 1}) * P(13, {2, 0, 1}), big);
    CHECK(r.size() == 2);  // x^2+2 is irreducible over F_13 and 2 does not divide 7
    auto r2 = roots_in_field(P(13, {2, 0, 1}), field(13, 2));
    CHECK(r2.size() == 2);
}

TEST_CASE("reverse") {
    PolyQ a(std::vector<Rational>{1, 2}, Rational(0));
    CHECK(a.reverse(1) == PolyQ(std::vector<Rational>{2, 1}, Rational(0)));
    CHECK(a.reverse(3) == PolyQ(std::vector<Rational>{0, 0, 2, 1}, Rational(0)));
    CHECK(a.reverse(1).reverse(1) == a);
    CHECK_THROWS(a.reverse(0));
}

TEST_CASE("rational roots") {
    PolyQ f(std::vector<Rational>{Rational(-1, 2), Rational(1, 2), 1}, Rational(0));  // (x+1)(x-1/2)
    auto r = rational_roots(f);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Rational(-1));
    CHECK(r[1] == Rational(1, 2));
}
