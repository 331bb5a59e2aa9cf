#include "pfkit/congruence.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace pfkit {

SplittingData splitting_data(const CurveFamilyDescriptor& d, u64 p) {
    require_good_prime(d, p);
    if (d.g == 1 || d.rm_disc == 1) return {std::vector<unsigned>(d.g, 1)};
    if (d.g != 2) throw DescriptorError("splitting data implemented for real quadratic fields only");
    switch (splitting_type(p, d.rm_disc)) {
        case SplittingType::split: return {{1, 1}};
        case SplittingType::inert: return {{2}};
        default: throw RamifiedPrime("p ramifies in the real multiplication field");
    }
}

std::vector<unsigned> index_permutation(const SplittingData& s, unsigned m) {
    std::vector<unsigned> perm;
    unsigned offset = 0;
    for (unsigned f : s.f) {
        if (f == 0) throw Error("residue degree must be positive");
        for (unsigned i = 0; i < f; ++i) perm.push_back(offset + (i + m) % f);
        offset += f;
    }
    return perm;
}

unsigned congruence_exponent(const CurveFamilyDescriptor& d) {
    if (d.hauptmodul.pole_at.rfind("elliptic:", 0) == 0) {
        unsigned l = 1;
        for (const auto& e : d.hauptmodul.elliptic)
            if (e.value) l = std::lcm(l, e.order);
        return l;
    }
    return d.lcm_elliptic();
}

DegreePrediction predicted_degree(const CurveFamilyDescriptor& d, u64 p, unsigned j) {
    if (j >= d.g) throw Error("operator index out of range");
    auto perm = index_permutation(splitting_data(d, p), 1);
    const Rational& lj = d.lyapunov[j];
    const Rational& ljp = d.lyapunov[perm[j]];
    Rational P(static_cast<long>(p));
    Rational span = P * ljp - lj;
    DegreePrediction out;
    out.j_degree = -d.euler_char / Rational(2) * Rational(static_cast<long>(d.lcm_elliptic())) * span;
    out.integral = out.j_degree.is_integer();
    if (d.triangle && d.hauptmodul.pole_at == "elliptic:" + std::to_string(d.triangle->m)) {
        long n = d.triangle->n, m = d.triangle->m;
        out.triangle = true;
        out.t_raw = Rational(BigInt(m * n - m - n), BigInt(2 * m)) * span;
        ExponentPair inf = indicial_at_infinity(d.operators[j]);
        if (!inf.rational) throw UnsupportedOperator("irrational exponents at infinity");
        Rational cand = Rational(m) * (inf.s2 - inf.s1);
        out.epsilon = 0;
        out.t_corrected = out.t_raw;
        if (!out.t_raw.is_integer() && cand.is_integer()) {
            Rational alt = out.t_raw - Rational(n) * cand / Rational(m);
            if (alt.is_integer()) {
                out.epsilon = cand.num().get_si();
                out.t_corrected = alt;
            }
        }
        out.integral = out.t_corrected.is_integer();
    }
    return out;
}

std::vector<SeriesQ> family_solutions(const CurveFamilyDescriptor& d, size_t order) {
    static std::mutex mu;
    static std::map<std::string, std::vector<SeriesQ>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d.hash);
        if (it != cache.end() && it->second.front().order() >= order) {
            std::vector<SeriesQ> out;
            for (const auto& s : it->second) out.push_back(s.truncated(order));
            return out;
        }
    }
    std::vector<SeriesQ> sols;
    for (const auto& L : d.operators) sols.push_back(frobenius_solution(L, order));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d.hash];
    if (slot.empty() || slot.front().order() < order) slot = sols;
    return sols;
}

AlphaComputation compute_alpha(const SeriesQ& yj, const SeriesQ& yjp, u64 p, unsigned N, size_t order) {
    if (yj.order() < order) throw Error("solution known to insufficient order");
    size_t inner = (order + p - 1) / p;
    if (yjp.order() < inner) throw Error("partner solution known to insufficient order");
    SeriesZ a = reduce_series(yj.truncated(order), p).pow(N);
    SeriesZ b = reduce_series(yjp.truncated(inner), p).substitute_power(p).truncated(order).pow(N);
    SeriesZ q = a / b;
    AlphaComputation out;
    for (size_t i = q.order(); i-- > 0;)
        if (!q[i].is_zero()) {
            out.last_nonzero = static_cast<long>(i);
            break;
        }
    out.alpha = as_field_poly(q.truncate(static_cast<size_t>(out.last_nonzero + 1)));
    out.stabilized = out.last_nonzero + static_cast<long>(p) < static_cast<long>(order);
    return out;
}

size_t default_congruence_order(const CurveFamilyDescriptor& d, u64 p) {
    size_t best = 4 * p;
    for (unsigned j = 0; j < d.g; ++j) {
        Rational deg = predicted_degree(d, p, j).applicable();
        long c = deg.floor().get_si() + 1;
        best = std::max(best, static_cast<size_t>(std::max(c, 0L)) + 2 * p);
    }
    return best;
}

CongruenceCertificate certify(const CurveFamilyDescriptor& d, u64 p, unsigned j, size_t order) {
    if (order == 0) order = default_congruence_order(d, p);
    auto perm = index_permutation(splitting_data(d, p), 1);
    CongruenceCertificate c;
    c.family = d.name;
    c.p = p;
    c.j = j;
    c.N = congruence_exponent(d);
    c.predicted = predicted_degree(d, p, j);
    c.verified_order = order;
    auto sols = family_solutions(d, order);
    auto attempt = [&](unsigned jp) {
        AlphaComputation a = compute_alpha(sols[j], sols[jp], p, c.N, order);
        c.j_prime = jp;
        c.alpha = a.alpha;
        c.stabilized = a.stabilized;
        c.observed_degree = a.alpha.degree();
    };
    attempt(perm[j]);
    if (!c.stabilized) {
        for (unsigned jp = 0; jp < d.g && !c.stabilized; ++jp) {
            if (jp == perm[j]) continue;
            attempt(jp);
            c.permutation_fallback = c.stabilized;
        }
        if (!c.stabilized) attempt(perm[j]);
    }
    Rational want = c.predicted.applicable();
    c.degree_match = c.stabilized && c.predicted.integral && want == Rational(c.observed_degree);
    return c;
}

CompositionCheck verify_composition(const CurveFamilyDescriptor& d, u64 p, unsigned j, size_t order) {
    if (order == 0) order = p * p + 4 * p;
    auto perm = index_permutation(splitting_data(d, p), 1);
    auto perm2 = index_permutation(splitting_data(d, p), 2);
    CompositionCheck out;
    out.j = j;
    out.j_prime = perm[j];
    out.j_second = perm2[j];
    out.order = order;
    if (perm[perm[j]] != perm2[j]) return out;
    CongruenceCertificate c1 = certify(d, p, j);
    CongruenceCertificate c2 = certify(d, p, out.j_prime);
    if (!c1.stabilized || !c2.stabilized) return out;
    auto sols = family_solutions(d, order);
    unsigned N = c1.N;
    SeriesZ lhs = reduce_series(sols[j], p).pow(N);
    SeriesZ a1 = SeriesZ::from_poly(as_zmod_poly(c1.alpha), order);
    SeriesZ a2 = SeriesZ::from_poly(as_zmod_poly(c2.alpha), (order + p - 1) / p).substitute_power(p).truncated(order);
    size_t inner = (order + p * p - 1) / (p * p);
    SeriesZ y2 = reduce_series(sols[out.j_second].truncated(inner), p).substitute_power(p * p).truncated(order).pow(N);
    SeriesZ rhs = a1 * a2 * y2;
    out.ok = lhs.agrees(rhs, order);
    return out;
}

IntegralityReport verify_integrality(const SeriesQ& y, const std::set<u64>& S, size_t order) {
    if (order > y.order()) throw Error("integrality scan beyond the known order");
    BigInt l = 1;
    for (size_t i = 0; i < order; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), y[i].den().get_mpz_t());
    IntegralityReport r;
    for (u64 q : primes_in_range(2, 1u << 16)) {
        if (l == 1) break;
        if (mpz_divisible_ui_p(l.get_mpz_t(), q)) {
            r.primes.insert(q);
            while (mpz_divisible_ui_p(l.get_mpz_t(), q)) mpz_divexact_ui(l.get_mpz_t(), l.get_mpz_t(), q);
        }
    }
    r.unfactored = l;
    r.pass = l == 1;
    for (u64 q : r.primes)
        if (!S.count(q)) r.pass = false;
    return r;
}

bool truncation_solves_mod_p(const FuchsianOperator& L, const SeriesQ& y, u64 p) {
    SeriesZ yp = reduce_series(y.truncated(p), p);
    SeriesZ res = residual(L, yp);
    for (size_t i = 0; i + 2 < p && i < res.order(); ++i)
        if (!res[i].is_zero()) return false;
    return true;
}

}  // namespace pfkit
