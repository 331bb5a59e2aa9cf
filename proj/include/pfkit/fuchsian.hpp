#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfkit/series.hpp"

namespace pfkit {

// Roots of x^2 + b x + c with rational b, c. Either both rational (s1 <= s2)
// or u +- v*sqrt(d) with d squarefree.
struct ExponentPair {
    Rational sum, product;
    bool rational = true;
    Rational s1, s2;
    Rational u, v;
    long d = 0;

    static ExponentPair from_quadratic(const Rational& b, const Rational& c);
    static ExponentPair of(const Rational& a, const Rational& b);
    bool contains(const Rational& x) const { return rational && (s1 == x || s2 == x); }
    std::string str() const;
};

struct SingularPoint {
    bool at_infinity = false;
    PolyQ factor;             // monic irreducible over Q; unused at infinity
    unsigned multiplicity = 0;  // multiplicity of the factor in the leading coefficient
    ExponentPair exponents;
    std::string label() const;
};

struct RiemannScheme {
    std::vector<SingularPoint> rows;  // finite points first, infinity last
    unsigned finite_points() const;
};

struct FuchsCheck {
    bool ok;
    Rational discrepancy;  // sum of exponents minus (m - 1)
};

// p(t) y'' + q(t) y' + r(t) y over Q. Construction validates that every
// finite singular point and infinity are regular singular.
class FuchsianOperator {
public:
    FuchsianOperator() = default;
    FuchsianOperator(PolyQ p, PolyQ q, PolyQ r);

    const PolyQ& p() const { return p_; }
    const PolyQ& q() const { return q_; }
    const PolyQ& r() const { return r_; }

    friend bool operator==(const FuchsianOperator& a, const FuchsianOperator& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_;
    }

private:
    PolyQ p_, q_, r_;
};

PolyQ polyq(const std::vector<Rational>& c);

// Same operator up to a nonzero rational polynomial factor.
bool projectively_equal(const FuchsianOperator& a, const FuchsianOperator& b);

ExponentPair indicial_at_infinity(const FuchsianOperator& L);
RiemannScheme riemann_scheme(const FuchsianOperator& L);
FuchsCheck fuchs_relation_check(const RiemannScheme& s);

// Operator satisfied by v~ where v = prod f^{s_f} * v~ and v solves L.
FuchsianOperator conjugate_by(const FuchsianOperator& L, const std::vector<std::pair<PolyQ, Rational>>& shifts);

// Shifts every finite singular point so that 0 is its first exponent.
FuchsianOperator normalize(const FuchsianOperator& L);

// Coefficients of the recursion sum_k d_k(n) y_{n+1-k} = 0, as polynomials in n.
struct RecursionCoefficients {
    std::vector<PolyQ> d;
};
RecursionCoefficients recursion_coefficients(const FuchsianOperator& L);
// Closed forms for the first and last coefficient (normalized operators).
PolyQ recursion_d0_closed_form(const FuchsianOperator& L);
PolyQ recursion_dlast_closed_form(const FuchsianOperator& L);

// Holomorphic solution 1 + sum y_n t^n known modulo t^N.
SeriesQ frobenius_solution(const FuchsianOperator& L, size_t N);

enum class ModSolve { direct, auto_fallback };
SeriesZ frobenius_solution_mod(const FuchsianOperator& L, size_t N, u64 p, unsigned m,
                               ModSolve mode = ModSolve::auto_fallback);

template <class R>
Series<R> residual(const FuchsianOperator& L, const Series<R>& y) {
    auto conv = [&](const PolyQ& a) {
        Poly<R> pa = a.map([&](const Rational& c) { return RingTraits<R>::from_rational(y.zero(), c); }, y.zero());
        return Series<R>::from_poly(pa, y.order() + static_cast<size_t>(std::max(a.degree(), 0)) + 2);
    };
    Series<R> d1 = y.derivative();
    Series<R> d2 = d1.derivative();
    return conv(L.p()) * d2 + conv(L.q()) * d1 + conv(L.r()) * y;
}

}  // namespace pfkit
