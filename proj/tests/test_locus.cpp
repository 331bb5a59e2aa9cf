#include <doctest.h>

#include <algorithm>
#include <map>

#include "pfkit/locus.hpp"

using namespace pfkit;

namespace {
const CurveFamilyDescriptor& fam(const char* name) {
    static std::map<std::string, CurveFamilyDescriptor> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, load_family(name)).first;
    return it->second;
}

PolyF P(u64 p, std::vector<long long> c) { return poly_over(field(p, 1), c); }
PolyF J(u64 p) { return P(p, {0, 1}); }
}  // namespace

TEST_CASE("supersingular locus of the triangle family at inert primes") {
    auto r13 = locus_report(fam("W5"), 13);
    CHECK(r13.splitting == "inert");
    CHECK(r13.ss_source == "nonordinary");
    CHECK(r13.ss == J(13) * P(13, {-1, 1}) * P(13, {-9, 1}));
    CHECK(r13.count_ss == 3);
    CHECK(r13.bounds.lower == 1);
    CHECK(r13.bounds.upper == 4);
    CHECK(r13.bounds_ok);

    auto r37 = locus_report(fam("W5"), 37);
    PolyF want = J(37) * P(37, {-1, 1}) * P(37, {16, 1}) * P(37, {8, 1, 1}) * P(37, {25, 1, 22, 1});
    CHECK(r37.ss == want);
    CHECK(r37.count_ss == 8);
    CHECK(r37.bounds.lower == 5);
    CHECK(r37.bounds.upper == 9);
    CHECK(r37.bounds_ok);
    std::vector<unsigned> degs;
    for (const auto& f : r37.ss_factors) degs.push_back(f.degree);
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<unsigned>{1, 1, 1, 2, 3});
    CHECK(r37.roots_prime_field.size() == 3);
}

TEST_CASE("split prime reads the supersingular locus from the superspecial part") {
    auto r = locus_report(fam("W5"), 11);
    CHECK(r.splitting == "split");
    CHECK(r.ss_source == "superspecial");
    CHECK(r.ss == P(11, {-1, 1}));
    CHECK(divides(r.sp, r.no));
    CHECK(r.bounds_ok);
}

TEST_CASE("triangle components carry the corrected degrees") {
    for (u64 p : {11, 13, 17, 19, 29, 31, 37}) {
        auto tl = triangle_locus_poly(fam("W5"), p);
        for (const auto& c : tl.components) {
            CHECK(Rational(c.truncation.degree()) == c.predicted.t_corrected);
            CHECK(Rational(c.alpha_J.degree()) == c.predicted.j_degree);
            CHECK(c.j_power == 2 * c.predicted.epsilon);
        }
    }
}

TEST_CASE("Legendre family recovers the Hasse invariant") {
    auto r = locus_report(fam("Legendre"), 7);
    CHECK(r.ss == P(7, {1, 2, 2, 1}));
    CHECK(r.variable == "lambda");
    CHECK(r.count_ss == 3);
    for (u64 p : {3, 5, 11, 13, 17}) CHECK(locus_report(fam("Legendre"), p).ss.degree() == static_cast<int>((p - 1) / 2));
}

TEST_CASE("full modular group") {
    auto r = locus_report(fam("SL2Z"), 11);
    CHECK(r.variable == "J");
    std::vector<GF> roots = r.roots_prime_field;
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<GF>{GF(field(11, 1), 0), GF(field(11, 1), 1)});
    CHECK(r.bounds.upper == 2);
    CHECK(r.bounds_ok);
}

TEST_CASE("bounds hold across primes") {
    for (u64 p : primes_in_range(7, 60)) {
        if (p == 5) continue;
        auto r = locus_report(fam("W5"), p);
        CHECK_MESSAGE(r.bounds_ok, "p = " << p);
    }
}

TEST_CASE("locus errors") {
    CHECK_THROWS_AS(locus_report(fam("W5"), 5), RamifiedPrime);
    CHECK_THROWS_AS(locus_report(fam("W5"), 2), RamifiedPrime);
    CHECK_THROWS_AS(nonordinary_poly_cusp_pole(fam("W5"), 13), UnsupportedOperator);
    CHECK_THROWS_AS(triangle_locus_poly(fam("Legendre"), 7), UnsupportedOperator);
}
