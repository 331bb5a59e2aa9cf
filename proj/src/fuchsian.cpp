#include "pfkit/fuchsian.hpp"

#include <algorithm>

namespace pfkit {

namespace {

const Rational kZero(0);

bool is_square_bigint(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// n = k^2 * s with s squarefree (trial division; exponent data is small).
void split_square(BigInt n, BigInt& k, BigInt& s) {
    int sign = n < 0 ? -1 : 1;
    if (n < 0) n = -n;
    k = 1;
    s = 1;
    for (unsigned long f = 2; BigInt(f) * f <= n; ++f) {
        if (f > 1000000) throw UnsupportedOperator("exponent discriminant too large to factor");
        while (n % (f * f) == 0) {
            n /= f * f;
            k *= f;
        }
        if (n % f == 0) {
            n /= f;
            s *= f;
        }
    }
    s *= n * sign;
}

PolyQ shift_poly(const PolyQ& a, const Rational& t0) {  // a(u + t0)
    return a.compose(PolyQ(std::vector<Rational>{t0, 1}, kZero));
}

// Inverse of a modulo an irreducible f over Q.
PolyQ inverse_mod(const PolyQ& a, const PolyQ& f) {
    PolyQ r0 = f, r1 = a % f, s0(kZero), s1 = PolyQ::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        PolyQ s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error("polynomial not invertible modulo the factor");
    return (r0.coeff(0).inv() * s0) % f;
}

struct Factor {
    PolyQ f;
    unsigned mult;
};

std::vector<Factor> factor_leading(const PolyQ& p) {
    std::vector<Factor> out;
    PolyQ rest = p.monic();
    for (const Rational& root : rational_roots(p)) {
        PolyQ lin(std::vector<Rational>{-root, 1}, kZero);
        unsigned m = 0;
        while (true) {
            auto [q, r] = divmod(rest, lin);
            if (!r.is_zero()) break;
            rest = q;
            ++m;
        }
        out.push_back({lin, m});
    }
    if (rest.degree() == 2) out.push_back({rest.monic(), 1});
    else if (rest.degree() > 2) throw UnsupportedOperator("leading coefficient has an irrational factor of degree > 2");
    return out;
}

}  // namespace

PolyQ polyq(const std::vector<Rational>& c) { return PolyQ(c, kZero); }

// ------------------------------------------------------------- exponents

ExponentPair ExponentPair::from_quadratic(const Rational& b, const Rational& c) {
    ExponentPair e;
    e.sum = -b;
    e.product = c;
    Rational disc = b * b - Rational(4) * c;
    if (is_square_bigint(disc.num()) && is_square_bigint(disc.den())) {
        Rational root(isqrt(disc.num()), isqrt(disc.den()));
        e.rational = true;
        e.s1 = (-b - root) / Rational(2);
        e.s2 = (-b + root) / Rational(2);
        return e;
    }
    BigInt k, s;
    split_square(disc.num() * disc.den(), k, s);
    e.rational = false;
    e.u = -b / Rational(2);
    e.v = Rational(k, 2 * disc.den());
    e.d = s.get_si();
    return e;
}

ExponentPair ExponentPair::of(const Rational& a, const Rational& b) {
    return from_quadratic(-(a + b), a * b);
}

std::string ExponentPair::str() const {
    if (rational) return "(" + s1.str() + ", " + s2.str() + ")";
    std::string r = "sqrt(" + std::to_string(d) + ")";
    std::string vv = v == Rational(1) ? r : v.str() + "*" + r;
    return "(" + u.str() + " - " + vv + ", " + u.str() + " + " + vv + ")";
}

std::string SingularPoint::label() const {
    if (at_infinity) return "inf";
    if (factor.degree() == 1) return "t=" + (-factor.coeff(0)).str();
    return factor.str("t") + "=0";
}

unsigned RiemannScheme::finite_points() const {
    unsigned m = 0;
    for (const auto& r : rows)
        if (!r.at_infinity) m += static_cast<unsigned>(r.factor.degree());
    return m;
}

// -------------------------------------------------------------- operator

FuchsianOperator::FuchsianOperator(PolyQ p, PolyQ q, PolyQ r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
    if (p_.is_zero()) throw UnsupportedOperator("leading coefficient must be nonzero");
    riemann_scheme(*this);  // validates regularity everywhere
}

bool projectively_equal(const FuchsianOperator& a, const FuchsianOperator& b) {
    // a ~ b iff b.p * a.x == a.p * b.x for x in {q, r}
    return b.p() * a.q() == a.p() * b.q() && b.p() * a.r() == a.p() * b.r();
}

ExponentPair indicial_at_infinity(const FuchsianOperator& L) {
    int D = L.p().degree();
    if (L.q().degree() > D - 1 || L.r().degree() > D - 2)
        throw UnsupportedOperator("infinity is not a regular singular point");
    Rational pd = L.p().coeff(static_cast<size_t>(D));
    Rational qd = D >= 1 ? L.q().coeff(static_cast<size_t>(D - 1)) : kZero;
    Rational rd = D >= 2 ? L.r().coeff(static_cast<size_t>(D - 2)) : kZero;
    // y = t^{-s}: pd s(s+1) - qd s + rd = 0
    return ExponentPair::from_quadratic(Rational(1) - qd / pd, rd / pd);
}

RiemannScheme riemann_scheme(const FuchsianOperator& L) {
    RiemannScheme s;
    for (const auto& [f, k] : factor_leading(L.p())) {
        SingularPoint pt;
        pt.factor = f;
        pt.multiplicity = k;
        Rational a, b;
        if (f.degree() == 1) {
            Rational t0 = -f.coeff(0);
            PolyQ P = shift_poly(L.p(), t0), Q = shift_poly(L.q(), t0), R = shift_poly(L.r(), t0);
            Rational lead = P.coeff(k);
            if (!Q.is_zero() && Q.valuation() + 1 < k) throw UnsupportedOperator("irregular singular point at t=" + t0.str());
            if (!R.is_zero() && R.valuation() + 2 < k) throw UnsupportedOperator("irregular singular point at t=" + t0.str());
            a = Q.coeff(k - 1) / lead;
            b = k >= 2 ? R.coeff(k - 2) / lead : kZero;
        } else {
            if (k != 1) throw UnsupportedOperator("repeated irrational singular points are not supported");
            PolyQ av = (L.q() * inverse_mod(L.p().derivative(), f)) % f;
            if (av.degree() > 0) throw UnsupportedOperator("exponents at " + f.str() + "=0 are not rational");
            a = av.coeff(0);
            b = kZero;
        }
        pt.exponents = ExponentPair::from_quadratic(a - Rational(1), b);
        s.rows.push_back(pt);
    }
    SingularPoint inf;
    inf.at_infinity = true;
    inf.exponents = indicial_at_infinity(L);
    s.rows.push_back(inf);
    return s;
}

FuchsCheck fuchs_relation_check(const RiemannScheme& s) {
    Rational total(0);
    for (const auto& r : s.rows) {
        Rational w = r.at_infinity ? Rational(1) : Rational(r.factor.degree());
        total += w * r.exponents.sum;
    }
    Rational expected(static_cast<long>(s.finite_points()) - 1);
    return {total == expected, total - expected};
}

FuchsianOperator conjugate_by(const FuchsianOperator& L, const std::vector<std::pair<PolyQ, Rational>>& shifts) {
    PolyQ Pi = PolyQ::constant(Rational(1));
    for (const auto& [f, s] : shifts) Pi = Pi * f;
    PolyQ Sp(kZero);
    for (const auto& [f, s] : shifts) Sp += s * (f.derivative() * exact_div(Pi, f));
    const PolyQ& P = L.p();
    const PolyQ& Q = L.q();
    const PolyQ& R = L.r();
    PolyQ Pi2 = Pi * Pi;
    PolyQ Pn = P * Pi2;
    PolyQ Qn = Rational(2) * (P * Sp * Pi) + Q * Pi2;
    PolyQ Rn = P * (Sp.derivative() * Pi - Sp * Pi.derivative() + Sp * Sp) + Q * Sp * Pi + R * Pi2;
    PolyQ g = gcd(gcd(Pn, Qn), Rn);
    if (g.is_zero()) g = PolyQ::constant(Rational(1));
    Pn = exact_div(Pn, g);
    Qn = exact_div(Qn, g);
    Rn = exact_div(Rn, g);
    Rational scale = P.lead() / Pn.lead();
    return FuchsianOperator(scale * Pn, scale * Qn, scale * Rn);
}

FuchsianOperator normalize(const FuchsianOperator& L) {
    std::vector<std::pair<PolyQ, Rational>> shifts;
    for (const auto& row : riemann_scheme(L).rows) {
        if (row.at_infinity) continue;
        if (!row.exponents.rational) throw UnsupportedOperator("non-rational exponents at " + row.label());
        if (row.exponents.contains(kZero)) continue;
        shifts.emplace_back(row.factor, row.exponents.s1);
    }
    if (shifts.empty()) return L;
    return conjugate_by(L, shifts);
}

// ------------------------------------------------------------- recursion

RecursionCoefficients recursion_coefficients(const FuchsianOperator& L) {
    const PolyQ &P = L.p(), &Q = L.q(), &R = L.r();
    int K = std::max({P.degree() - 1, Q.degree(), R.degree() + 1});
    RecursionCoefficients rc;
    PolyQ n = polyq({0, 1});
    PolyQ one = polyq({1});
    for (int k = 0; k <= K; ++k) {
        size_t uk = static_cast<size_t>(k);
        // coefficient of y_{n+1-k} in [t^n] L(y)
        PolyQ m1 = n + polyq({Rational(1 - k)});  // n + 1 - k
        PolyQ m0 = n + polyq({Rational(-k)});     // n - k
        PolyQ d = P.coeff(uk + 1) * (m1 * m0) + Q.coeff(uk) * m1;
        if (k >= 1) d += R.coeff(uk - 1) * one;
        rc.d.push_back(d);
    }
    return rc;
}

PolyQ recursion_d0_closed_form(const FuchsianOperator& L) {
    // (n+1)^2 times p(t)/t at t = 0
    PolyQ pr = exact_div(L.p(), polyq({0, 1}));
    PolyQ n1 = polyq({1, 1});
    return pr.coeff(0) * (n1 * n1);
}

PolyQ recursion_dlast_closed_form(const FuchsianOperator& L) {
    int m = L.p().degree();
    ExponentPair e = indicial_at_infinity(L);
    PolyQ x = polyq({Rational(2 - m), 1});  // n - m + 2
    // (x + s1)(x + s2) = x^2 + (s1+s2) x + s1 s2
    return L.p().lead() * (x * x + e.sum * x + polyq({e.product}));
}

namespace {

void check_origin(const FuchsianOperator& L) {
    if (!L.p().coeff(0).is_zero() || L.p().coeff(1).is_zero())
        throw WrongExponents("t=0 must be a simple zero of the leading coefficient");
    if (L.q().coeff(0) != L.p().coeff(1))
        throw WrongExponents("indicial roots at t=0 are (0, " + (Rational(1) - L.q().coeff(0) / L.p().coeff(1)).str() +
                             "), expected (0, 0)");
}

}  // namespace

SeriesQ frobenius_solution(const FuchsianOperator& L, size_t N) {
    check_origin(L);
    auto rc = recursion_coefficients(L);
    std::vector<Rational> y(N, kZero);
    if (N == 0) return SeriesQ(y, kZero);
    y[0] = 1;
    for (size_t n = 0; n + 1 < N; ++n) {
        Rational nn(static_cast<long>(n));
        Rational acc(0);
        for (size_t k = 1; k < rc.d.size() && k <= n + 1; ++k) {
            const Rational& yk = y[n + 1 - k];
            if (yk.is_zero()) continue;
            acc += rc.d[k].eval(nn) * yk;
        }
        y[n + 1] = -acc / rc.d[0].eval(nn);
    }
    return SeriesQ(std::move(y), kZero);
}

SeriesZ frobenius_solution_mod(const FuchsianOperator& L, size_t N, u64 p, unsigned m, ModSolve mode) {
    check_origin(L);
    auto rc = recursion_coefficients(L);
    Zmod zero(p, m, 0);
    for (size_t n = 0; n + 1 < N; ++n) {
        bool unit = true;
        try {
            unit = reduce_rational(rc.d[0].eval(Rational(static_cast<long>(n))), p, m).is_unit();
        } catch (const DenominatorNotInvertible&) {
            unit = false;
        }
        if (!unit) {
            if (mode == ModSolve::direct)
                throw NonUnitLeadingRecursionCoefficient(static_cast<long>(n), p,
                                                         "d_0(" + std::to_string(n) + ") is not a unit modulo " +
                                                             std::to_string(p));
            return reduce_series(frobenius_solution(L, N), p, m);
        }
    }
    std::vector<std::vector<Zmod>> dk(rc.d.size());
    std::vector<Zmod> y(N, zero);
    if (N == 0) return SeriesZ(y, zero);
    y[0] = Zmod(p, m, 1);
    for (size_t n = 0; n + 1 < N; ++n) {
        Rational nn(static_cast<long>(n));
        Zmod acc = zero;
        for (size_t k = 1; k < rc.d.size() && k <= n + 1; ++k)
            acc += reduce_rational(rc.d[k].eval(nn), p, m) * y[n + 1 - k];
        y[n + 1] = -(acc * reduce_rational(rc.d[0].eval(nn), p, m).inv());
    }
    return SeriesZ(std::move(y), zero);
}

}  // namespace pfkit
