#include "pfkit/locus.hpp"

#include <algorithm>

namespace pfkit {

namespace {

std::vector<PolyF> truncations(const CurveFamilyDescriptor& d, u64 p, unsigned N) {
    auto sols = family_solutions(d, p);
    std::vector<PolyF> out;
    for (const auto& y : sols) out.push_back(as_field_poly(reduce_series(y, p).pow(N).truncate(p)));
    return out;
}

void require_cusp_pole(const CurveFamilyDescriptor& d, u64 p) {
    if (!d.cusp_pole()) throw UnsupportedOperator(d.name + ": Hauptmodul pole is not at a cusp");
    for (unsigned j = 0; j < d.g; ++j) {
        Rational deg = predicted_degree(d, p, j).j_degree;
        if (!(deg < Rational(static_cast<long>(p))))
            throw DegreesTooLarge("predicted degree " + deg.str() + " of alpha_" + std::to_string(j + 1) +
                                  " is not below p = " + std::to_string(p));
    }
}

PolyF fold(const std::vector<PolyF>& ps, bool use_lcm) {
    PolyF acc = ps.front().monic();
    for (size_t i = 1; i < ps.size(); ++i) acc = use_lcm ? lcm(acc, ps[i]) : gcd(acc, ps[i]);
    return acc.monic();
}

long floor_of(const Rational& x) { return x.floor().get_si(); }

}  // namespace

PolyF nonordinary_poly_cusp_pole(const CurveFamilyDescriptor& d, u64 p) {
    require_good_prime(d, p);
    require_cusp_pole(d, p);
    return fold(truncations(d, p, d.lcm_elliptic()), true);
}

PolyF superspecial_poly(const CurveFamilyDescriptor& d, u64 p) {
    require_good_prime(d, p);
    require_cusp_pole(d, p);
    return fold(truncations(d, p, d.lcm_elliptic()), false);
}

TriangleLocus triangle_locus_poly(const CurveFamilyDescriptor& d, u64 p) {
    require_good_prime(d, p);
    if (!d.triangle) throw UnsupportedOperator(d.name + " has no triangle data");
    unsigned n = d.triangle->n, m = d.triangle->m;
    auto tr = truncations(d, p, n);
    TriangleLocus out;
    std::vector<PolyF> alphas;
    for (unsigned j = 0; j < d.g; ++j) {
        TriangleComponent c;
        c.truncation = tr[j];
        c.predicted = predicted_degree(d, p, j);
        if (!c.predicted.triangle || !c.predicted.integral)
            throw DegreesTooLarge("no integral elliptic-pole degree for j = " + std::to_string(j + 1));
        long want = c.predicted.t_corrected.num().get_si();
        long got = c.truncation.degree();
        if (got > want)
            throw DanglingCoefficients("[y_" + std::to_string(j + 1) + "^" + std::to_string(n) + "]_" + std::to_string(p) +
                                       " has degree " + std::to_string(got) + " above the predicted " + std::to_string(want));
        c.j_power = c.predicted.j_degree.num().get_si() - static_cast<long>(m) * got;
        if (c.j_power < 0) throw DanglingCoefficients("negative power of J for j = " + std::to_string(j + 1));
        PolyF rev = c.truncation.reverse(got).pow(m);
        c.alpha_J = rev.shift(static_cast<size_t>(c.j_power)).monic();
        alphas.push_back(c.alpha_J);
        out.components.push_back(std::move(c));
    }
    out.no = fold(alphas, true);
    out.sp = fold(alphas, false);
    return out;
}

Bounds cardinality_bounds(const CurveFamilyDescriptor& d, u64 p, unsigned n_p) {
    auto perm = index_permutation(splitting_data(d, p), 1);
    Rational half = -d.euler_char / Rational(2);
    Rational P(static_cast<long>(p));
    long r = static_cast<long>(d.elliptic_orders.size());
    Rational mx(0), total(0);
    long floors = 0;
    for (unsigned j = 0; j < d.g; ++j) {
        Rational s = P * d.lyapunov[perm[j]] - d.lyapunov[j];
        if (j == 0 || s > mx) mx = s;
        total += s;
        floors += floor_of(half * s);
    }
    Bounds b;
    b.kind = "nonordinary";
    b.lower = floor_of(half * mx);
    b.upper = static_cast<long>(n_p) * floors + r;
    b.upper_sum_inside_floor = static_cast<long>(n_p) * floor_of(half * total) + r;
    if (d.g == 2) {
        const Rational& l2 = d.lyapunov[1];
        long up = static_cast<long>(n_p) * floor_of((P - Rational(1)) * (Rational(1) + l2) * half) + r;
        if (splitting_type(p, d.rm_disc) == SplittingType::inert) {
            b.kind = "supersingular";
            b.lower = floor_of((P - l2) * half);
            b.upper = up;
            b.secondary_kind = "superspecial";
            b.secondary_upper = floor_of((P - l2) * half) + r;
        } else {
            b.kind = "nonordinary";
            b.lower = floor_of((P - Rational(1)) * half);
            b.upper = up;
            b.secondary_kind = "supersingular";
            b.secondary_upper = floor_of(l2 * (P - Rational(1)) * half) + r;
        }
    }
    return b;
}

PolyF classify_locus(const CurveFamilyDescriptor& d, u64 p, const PolyF& no, const PolyF& sp, std::string* source) {
    require_good_prime(d, p);
    bool from_no = true;
    if (d.g == 2) from_no = splitting_type(p, d.rm_disc) == SplittingType::inert;
    else if (d.g > 2) throw UnsupportedOperator("supersingular labels need g <= 2");
    if (source) *source = from_no ? "nonordinary" : "superspecial";
    return squarefree_part(from_no ? no : sp);
}

LocusReport locus_report(const CurveFamilyDescriptor& d, u64 p) {
    require_good_prime(d, p);
    LocusReport rep;
    rep.family = d.name;
    rep.hash = d.hash;
    rep.p = p;
    rep.splitting = d.rm_disc == 1 ? "rational" : to_string(splitting_type(p, d.rm_disc));
    auto perm = index_permutation(splitting_data(d, p), 1);
    if (d.triangle && !d.cusp_pole()) {
        TriangleLocus tl = triangle_locus_poly(d, p);
        rep.variable = "J";
        rep.no = tl.no;
        rep.sp = tl.sp;
        for (unsigned j = 0; j < d.g; ++j) {
            const auto& c = tl.components[j];
            DegreeRow row{j, perm[j], c.predicted, c.truncation.degree(), c.alpha_J.degree(), false};
            row.match = Rational(row.observed_t_degree) == c.predicted.t_corrected &&
                        Rational(row.observed_j_degree) == c.predicted.j_degree;
            rep.degrees.push_back(row);
        }
    } else {
        rep.variable = d.fiber ? d.fiber->parameter : "t";
        require_cusp_pole(d, p);
        auto tr = truncations(d, p, d.lcm_elliptic());
        rep.no = fold(tr, true);
        rep.sp = fold(tr, false);
        for (unsigned j = 0; j < d.g; ++j) {
            DegreeRow row{j, perm[j], predicted_degree(d, p, j), tr[j].degree(), -1, false};
            row.match = Rational(row.observed_t_degree) == row.predicted.j_degree;
            rep.degrees.push_back(row);
        }
    }
    rep.ss = classify_locus(d, p, rep.no, rep.sp, &rep.ss_source);
    if (rep.ss.degree() > 0) {
        for (auto& [f, mult] : factor(rep.ss)) rep.ss_factors.push_back({static_cast<unsigned>(f.degree()), f});
        rep.ss_ddf = distinct_degree_factorization(rep.ss);
        for (const auto& r : roots_in_field(rep.ss, field(p, 1))) rep.roots_prime_field.push_back(r.value);
    }
    auto count = [](const PolyF& f) { return f.degree() > 0 ? static_cast<long>(squarefree_part(f).degree()) : 0L; };
    rep.count_no = count(rep.no);
    rep.count_sp = count(rep.sp);
    rep.count_ss = count(rep.ss);
    rep.bounds = cardinality_bounds(d, p);
    long main_count = rep.bounds.kind == "supersingular" ? rep.count_ss : rep.count_no;
    rep.bounds_ok = rep.bounds.lower <= main_count && main_count <= rep.bounds.upper;
    if (rep.bounds.secondary_upper) {
        long sec = rep.bounds.secondary_kind == "superspecial" ? rep.count_sp : rep.count_ss;
        rep.bounds_ok = rep.bounds_ok && sec <= *rep.bounds.secondary_upper;
    }
    return rep;
}

}  // namespace pfkit
