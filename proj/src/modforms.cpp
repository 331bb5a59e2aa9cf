#include "pfkit/modforms.hpp"

#include <numeric>

namespace pfkit {

namespace {

SeriesQ series_of(const PolyQ& a, size_t order) { return SeriesQ::from_poly(a, order); }

SeriesQ one_series(size_t order) { return SeriesQ::one(Rational(0), order); }

PolyQ drop_t(const PolyQ& a) {
    if (!a.coeff(0).is_zero()) throw WrongExponents("polynomial does not vanish at t = 0");
    if (a.degree() < 1) return PolyQ(Rational(0));
    return PolyQ(std::vector<Rational>(a.coeffs().begin() + 1, a.coeffs().end()), Rational(0));
}

void require_cusp_origin(const FuchsianOperator& L) {
    if (!L.p().coeff(0).is_zero() || L.p().coeff(1).is_zero() || L.q().coeff(0) != L.p().coeff(1))
        throw WrongExponents("local exponents at t = 0 are not (0, 0)");
}

Rational rat(long a, long b = 1) { return Rational(BigInt(a), BigInt(b)); }

std::vector<Rational> unit_weight(unsigned g, unsigned j, const Rational& w) {
    std::vector<Rational> v(g, Rational(0));
    v[j] = w;
    return v;
}

}  // namespace

SeriesQ wronskian_series(const FuchsianOperator& L, size_t order) {
    require_cusp_origin(L);
    PolyQ pt = drop_t(L.p());
    PolyQ num = drop_t(L.q() - pt);
    SeriesQ rho = series_of(num, order) / series_of(pt, order);
    std::vector<Rational> u(order, Rational(0));
    if (order) u[0] = Rational(1);
    for (size_t n = 0; n + 1 < order; ++n) {
        Rational acc(0);
        for (size_t k = 0; k <= n; ++k) acc += rho[k] * u[n - k];
        u[n + 1] = -acc / Rational(static_cast<long>(n + 1));
    }
    return SeriesQ(std::move(u), Rational(0));
}

TExpansion hauptmodul_derivative(const FuchsianOperator& L1, const SeriesQ& y1, size_t order, unsigned g) {
    SeriesQ U = wronskian_series(L1, order);
    SeriesQ unit = y1.truncated(order) * y1.truncated(order) / U;
    return {"t'", unit.mul_t_power(1), unit_weight(g, 0, Rational(2))};
}

TExpansion modular_embedding_derivative(const FuchsianOperator& Lj, const SeriesQ& yj, const TExpansion& t_prime,
                                        unsigned j, size_t order) {
    unsigned g = static_cast<unsigned>(t_prime.weight.size());
    std::string label = "phi" + std::to_string(j + 1) + "'";
    if (j == 0) return {label, one_series(order), std::vector<Rational>(g, Rational(0))};
    SeriesQ U = wronskian_series(Lj, order);
    SeriesQ y = yj.truncated(order);
    SeriesQ phi = t_prime.series.div_t_power(1).truncated(order) * U / (y * y);
    std::vector<Rational> w(g, Rational(0));
    w[0] = Rational(2);
    w[j] = Rational(-2);
    return {label, phi, w};
}

SeriesQ tau_derivative(const SeriesQ& h, const TExpansion& t_prime) { return t_prime.series * h.derivative(); }

TExpansion rankin_cohen(const TExpansion& f, const TExpansion& g, int bracket, const TExpansion& t_prime) {
    if (bracket != 1 && bracket != 2) throw Error("Rankin-Cohen bracket order must be 1 or 2");
    const Rational& k = f.weight.at(0);
    const Rational& l = g.weight.at(0);
    SeriesQ f1 = tau_derivative(f.series, t_prime), g1 = tau_derivative(g.series, t_prime);
    TExpansion out;
    out.label = "[" + f.label + "," + g.label + "]_" + std::to_string(bracket);
    out.weight = f.weight;
    for (size_t i = 0; i < out.weight.size() && i < g.weight.size(); ++i) out.weight[i] += g.weight[i];
    out.weight[0] += Rational(2 * bracket);
    if (bracket == 1) {
        out.series = k * (f.series * g1) - l * (f1 * g.series);
    } else {
        SeriesQ f2 = tau_derivative(f1, t_prime), g2 = tau_derivative(g1, t_prime);
        Rational one(1);
        out.series = (k * (k + one) / Rational(2)) * (f.series * g2) - ((k + one) * (l + one)) * (f1 * g1) +
                     (l * (l + one) / Rational(2)) * (f2 * g.series);
    }
    return out;
}

RoundTrip demo_round_trip(const CurveFamilyDescriptor& d, unsigned j, size_t order) {
    if (j >= d.g) throw Error("operator index out of range");
    size_t n = order + 8;
    auto sols = family_solutions(d, n);
    const FuchsianOperator& L = d.operators[j];
    TExpansion tp = hauptmodul_derivative(d.operators[0], sols[0], n, d.g);
    TExpansion G = modular_embedding_derivative(L, sols[j], tp, j, n);
    TExpansion F{"F", G.series.pow_rational(rat(1, 2)) * sols[j].truncated(n), unit_weight(d.g, 0, Rational(1))};

    SeriesQ T = tp.series.div_t_power(1);
    RoundTrip rt;
    rt.j = j;
    rt.order = order;
    rt.tA = rankin_cohen(F, tp, 1, tp).series.div_t_power(1) / (T * T * F.series);
    rt.t2B = rankin_cohen(F, F, 2, tp).series / (T * T * F.series * F.series);

    SeriesQ ta = one_series(n) + (T.derivative() / T).mul_t_power(1);
    SeriesQ gl = G.series.derivative() / G.series;
    SeriesQ gll = G.series.derivative().derivative() / G.series;
    rt.t2X = rat(1, 2) * (ta * gl.mul_t_power(1)) + rat(1, 2) * gll.mul_t_power(2) - rat(3, 4) * (gl * gl).mul_t_power(2);
    rt.t2r_recovered = rat(-1, 2) * rt.t2B + rt.t2X;

    PolyQ pt = drop_t(L.p());
    rt.tq = series_of(L.q(), n) / series_of(pt, n);
    rt.t2r = series_of(L.r(), n).mul_t_power(1) / series_of(pt, n);
    rt.q_ok = rt.tA.agrees(rt.tq, order);
    rt.r_ok = rt.t2r_recovered.agrees(rt.t2r, order);
    rt.b_equals_r = rt.t2B.agrees(rt.t2r, order);
    return rt;
}

std::vector<TExpansion> radical_generators(const CurveFamilyDescriptor& d, size_t order) {
    const auto& h = d.hauptmodul;
    if (h.zero_at != "cusp" || h.pole_at.rfind("elliptic:", 0) != 0)
        throw UnsupportedOperator("radical generators need t = 0 at a cusp and the pole at an elliptic point");
    const EllipticPoint* pole = nullptr;
    std::vector<const EllipticPoint*> rest;
    for (const auto& e : h.elliptic) {
        if (!e.value) pole = &e;
        else rest.push_back(&e);
    }
    if (!pole) throw DescriptorError("no elliptic point at the pole of t");
    long e = 1;
    for (const auto& pt : h.elliptic) e *= pt.order;
    Rational chi = -d.euler_char;
    Rational E(e);

    auto sols = family_solutions(d, order + 2);
    TExpansion tp = hauptmodul_derivative(d.operators[0], sols[0], order + 2, d.g);
    SeriesQ tt = tp.series.div_t_power(1).truncated(order);
    auto linear = [&](const Rational& v) {  // 1 - t / v
        return series_of(polyq({Rational(1), -v.inv()}), order);
    };

    std::vector<std::pair<const EllipticPoint*, Rational>> pts;
    pts.push_back({pole, Rational(0)});
    for (auto* r : rest) pts.push_back({r, Rational(0)});

    std::vector<TExpansion> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        const EllipticPoint* ei = pts[i].first;
        Rational root = (E * Rational(static_cast<long>(ei->order)) * chi).inv();
        SeriesQ q = tt.pow_rational(E * root);
        for (auto* l : rest) {
            Rational ex = -E * (Rational(1) - Rational(1, static_cast<long>(l->order)));
            if (l == ei) ex += E * chi;
            q = q * linear(*l->value).pow_rational(ex * root);
        }
        for (const auto& c : h.other_cusps) q = q * linear(c).pow_rational(-E * root);
        Rational weight = Rational(2) / (Rational(static_cast<long>(ei->order)) * chi);
        out.push_back({"Q" + std::to_string(i + 1) + "_radical", q, unit_weight(d.g, 0, weight)});
    }
    return out;
}

std::vector<TExpansion> q_generators(const CurveFamilyDescriptor& d, size_t order) {
    if (!d.modular || d.modular->q_exponents.size() != d.g) return radical_generators(d, order);
    auto sols = family_solutions(d, order);
    std::vector<TExpansion> out;
    for (unsigned l = 0; l < d.g; ++l) {
        const Rational& q = d.modular->q_exponents[l];
        out.push_back({"Q" + std::to_string(l + 1), sols[l].truncated(order).pow_rational(q), unit_weight(d.g, l, q)});
    }
    return out;
}

TwistedCongruence twisted_congruence(const CurveFamilyDescriptor& d, u64 p, unsigned j, size_t order) {
    if (!d.modular || d.modular->weights.size() != d.g) throw DescriptorError(d.name + " has no lift weights");
    const auto& k = d.modular->weights;
    CongruenceCertificate c = certify(d, p, j);
    if (!c.stabilized) throw NonStabilizing("alpha for j = " + std::to_string(j + 1) + " did not stabilize");
    TwistedCongruence out;
    out.j = j;
    out.j_prime = c.j_prime;
    out.N = c.N;
    long M = 1;
    for (long w : k) M = std::lcm(M, w);
    out.M = static_cast<unsigned>(M);
    out.alpha = c.alpha;
    long nm = static_cast<long>(c.N) * M;
    if (nm % k[j] || nm % k[c.j_prime]) throw Error("N*M is not divisible by the lift weights");
    if (order == 0) order = std::max<size_t>(4 * p, 120);
    out.order = order;
    auto sols = family_solutions(d, order);
    size_t inner = (order + p - 1) / p;
    SeriesZ fj = reduce_series(sols[j], p).pow(static_cast<unsigned>(k[j]));
    SeriesZ fjp = reduce_series(sols[c.j_prime].truncated(inner), p).pow(static_cast<unsigned>(k[c.j_prime]));
    SeriesZ lhs = fj.pow(static_cast<unsigned>(nm / k[j]));
    SeriesZ rhs = SeriesZ::from_poly(as_zmod_poly(c.alpha), order).pow(out.M) *
                  fjp.pow(static_cast<unsigned>(nm / k[c.j_prime])).substitute_power(p).truncated(order);
    out.ok = lhs.agrees(rhs, order);
    return out;
}

std::set<u64> denominator_support(const SeriesQ& s, size_t order) {
    return verify_integrality(s, {}, std::min(order, s.order())).primes;
}

}  // namespace pfkit
