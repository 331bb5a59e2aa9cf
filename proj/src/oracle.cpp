#include "pfkit/oracle.hpp"

#include <algorithm>
#include <set>

namespace pfkit {

namespace {

GF lift(const GF& c, const FieldContext* k) { return c.ctx() == k ? c : embed(c, k); }

GF eval_in(const PolyF& a, const GF& x) {
    GF acc(x.ctx(), 0);
    for (size_t i = a.coeffs().size(); i-- > 0;) acc = acc * x + lift(a.coeffs()[i], x.ctx());
    return acc;
}

int valuation_at(const BigInt& n, u64 p) {
    if (n == 0) return 1 << 20;
    BigInt m = abs(n);
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++v;
    }
    return v;
}

FMatrix frobenius_power(const FMatrix& m, unsigned k) {
    FMatrix r = m;
    for (auto& row : r)
        for (auto& x : row)
            for (unsigned i = 0; i < k; ++i) x = x.frobenius();
    return r;
}

FMatrix multiply(const FMatrix& a, const FMatrix& b) {
    size_t n = a.size();
    FMatrix r(n, std::vector<GF>(n, GF(a[0][0].ctx(), 0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

using BiPoly = std::vector<PolyF>;  // index: power of x; entries: polynomials in the parameter

BiPoly bi_mul(const BiPoly& a, const BiPoly& b, size_t cap) {
    size_t n = std::min(cap, a.size() + b.size() - 1);
    BiPoly r(n, PolyF(a[0].zero()));
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

FiberClassification classify_with(const HyperellipticCurve& c, const FMatrix& m, u64 count_limit) {
    FiberClassification out;
    const FieldContext* k = c.base();
    out.p_rank = p_rank(m);
    out.superspecial = is_zero_matrix(m);
    out.route = "p-rank";
    if (out.p_rank == c.genus) out.cls = FiberClass::ordinary;
    else if (out.p_rank > 0) out.cls = FiberClass::nonordinary_not_ss;
    else out.cls = (c.genus == 2 && out.superspecial) ? FiberClass::superspecial : FiberClass::supersingular;
    bool countable = c.genus == 1 ? k->size() <= count_limit : k->size() * k->size() <= count_limit;
    if (countable) {
        out.L = l_polynomial(c);
        out.route = "p-rank+L-polynomial";
        bool ss = l_supersingular(*out.L, k->p(), k->e());
        out.consistent = l_p_rank(*out.L, k->p(), k->e()) == out.p_rank && ss == (out.p_rank == 0);
    }
    return out;
}

std::string fmt_field(u64 p, unsigned e) { return e == 1 ? "F_" + std::to_string(p) : "F_" + std::to_string(p) + "^" + std::to_string(e); }

}  // namespace

HyperellipticCurve hyperelliptic(const PolyF& f) {
    const FieldContext* k = f.zero().ctx();
    if (!k) throw BadFiber("curve without a base field");
    if (k->p() == 2) throw BadFiber("characteristic 2 is not supported");
    int d = f.degree();
    if (d < 3 || d > 6) throw BadFiber("model degree " + std::to_string(d) + " is outside 3..6");
    if (gcd(f, f.derivative()).degree() > 0) throw BadFiber("f has a repeated root");
    return {f, static_cast<unsigned>((d - 1) / 2)};
}

HyperellipticCurve base_change(const HyperellipticCurve& c, const FieldContext* target) {
    return {c.f.map([&](const GF& x) { return embed(x, target); }, GF(target, 0)), c.genus};
}

u64 count_points(const HyperellipticCurve& c) {
    const FieldContext* k = c.base();
    u64 q = k->size();
    if (q > kCountEnvelope) throw FieldTooLarge("point counting over " + fmt_field(k->p(), k->e()) + " exceeds the envelope");
    std::vector<u64> co;
    for (const auto& x : c.f.coeffs()) co.push_back(x.index());
    u64 n = 0;
    for (u64 x = 0; x < q; ++x) {
        u64 v = 0;
        for (size_t i = co.size(); i-- > 0;) v = k->add(k->mul(v, x), co[i]);
        n += v == 0 ? 1 : (k->is_square(v) ? 2 : 0);
    }
    if (c.f.degree() % 2) n += 1;
    else n += k->is_square(c.f.lead().index()) ? 2 : 0;
    return n;
}

FMatrix cartier_manin(const HyperellipticCurve& c) {
    const FieldContext* k = c.base();
    u64 p = k->p();
    PolyF h = c.f.pow(static_cast<unsigned>((p - 1) / 2));
    FMatrix m(c.genus, std::vector<GF>(c.genus, GF(k, 0)));
    for (unsigned i = 0; i < c.genus; ++i)
        for (unsigned j = 0; j < c.genus; ++j) m[i][j] = h.coeff((i + 1) * p - (j + 1));
    return m;
}

unsigned matrix_rank(FMatrix m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    unsigned rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        GF inv = m[rank][col].inv();
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            GF f = m[r][col] * inv;
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

unsigned p_rank(const FMatrix& m) {
    if (m.empty()) return 0;
    FMatrix acc = m;
    for (unsigned k = 1; k < m.size(); ++k) acc = multiply(frobenius_power(m, k), acc);
    return matrix_rank(acc);
}

bool is_zero_matrix(const FMatrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

LPolynomial l_polynomial(const HyperellipticCurve& c) {
    const FieldContext* k = c.base();
    LPolynomial L;
    L.q = k->size();
    BigInt q(std::to_string(L.q));
    BigInt n1(std::to_string(count_points(c)));
    BigInt c1 = n1 - q - 1;
    L.c.push_back(c1);
    if (c.genus == 1) {
        L.jacobian_order = 1 + c1 + q;
        L.weil_ok = c1 * c1 <= 4 * q;
        return L;
    }
    BigInt n2(std::to_string(count_points(base_change(c, field(k->p(), 2 * k->e())))));
    BigInt twice = n2 - q * q - 1 + c1 * c1;
    if (mpz_odd_p(twice.get_mpz_t())) throw Error("point counts give a non-integral second L-coefficient");
    BigInt c2 = twice / 2;
    L.c.push_back(c2);
    L.jacobian_order = 1 + c1 + c2 + q * c1 + q * q;
    BigInt lo = c2 + 2 * q;
    L.weil_ok = c1 * c1 <= 16 * q && 4 * c2 <= c1 * c1 + 8 * q && lo >= 0 && lo * lo >= 4 * q * c1 * c1 && L.jacobian_order > 0;
    return L;
}

bool l_supersingular(const LPolynomial& L, u64 p, unsigned e) {
    for (size_t i = 0; i < L.c.size(); ++i)
        if (2 * valuation_at(L.c[i], p) < static_cast<int>((i + 1) * e)) return false;
    return true;
}

unsigned l_p_rank(const LPolynomial& L, u64 p, unsigned) {
    unsigned r = 0;
    for (size_t i = 0; i < L.c.size(); ++i)
        if (valuation_at(L.c[i], p) == 0) r = static_cast<unsigned>(i + 1);
    return r;
}

std::string to_string(FiberClass c) {
    switch (c) {
        case FiberClass::ordinary: return "ordinary";
        case FiberClass::nonordinary_not_ss: return "nonordinary";
        case FiberClass::supersingular: return "supersingular";
        case FiberClass::superspecial: return "superspecial";
        case FiberClass::bad: return "bad";
    }
    return "?";
}

FiberClassification classify_fiber(const HyperellipticCurve& c, u64 count_limit) {
    return classify_with(c, cartier_manin(c), count_limit);
}

std::vector<std::vector<PolyF>> cartier_manin_family(const FiberModel& m, unsigned genus, u64 p) {
    const FieldContext* k = field(p, 1);
    BiPoly f;
    for (const auto& c : m.coefficients) f.push_back(reduce_poly(c, k));
    size_t cap = genus * p;
    BiPoly acc{PolyF::constant(GF(k, 1))}, base = f;
    for (u64 e = (p - 1) / 2; e; e >>= 1) {
        if (e & 1) acc = bi_mul(acc, base, cap);
        if (e > 1) base = bi_mul(base, base, cap);
    }
    std::vector<std::vector<PolyF>> out(genus, std::vector<PolyF>(genus, PolyF(GF(k, 0))));
    for (unsigned i = 0; i < genus; ++i)
        for (unsigned j = 0; j < genus; ++j) {
            size_t idx = (i + 1) * p - (j + 1);
            if (idx < acc.size()) out[i][j] = acc[idx];
        }
    return out;
}

ScanResult scan_family(const CurveFamilyDescriptor& d, u64 p, const std::vector<unsigned>& exts, const std::string& model) {
    require_good_prime(d, p);
    if (!d.fiber) throw UnsupportedOperator(d.name + " has no fiber equation");
    const FiberData& fd = *d.fiber;
    const FiberModel* fm = &fd.model;
    if (!model.empty() && model != fd.model.label) {
        fm = nullptr;
        for (const auto& a : fd.alternates)
            if (a.label == model) fm = &a;
        if (!fm) throw DescriptorError("no fiber model labelled '" + model + "'");
    }
    ScanResult out;
    out.family = d.name;
    out.hash = d.hash;
    out.model = fm->label;
    out.p = p;
    out.exts = exts;
    out.key = d.param_to_J ? "J" : fd.parameter;

    const FieldContext* fp = field(p, 1);
    std::vector<PolyF> coef;
    for (const auto& c : fm->coefficients) coef.push_back(reduce_poly(c, fp));
    auto cm = cartier_manin_family(*fm, fd.genus, p);
    std::optional<PolyF> jn, jd;
    if (d.param_to_J) {
        jn = reduce_poly(d.param_to_J->num, fp);
        jd = reduce_poly(d.param_to_J->den, fp);
    }

    auto classify_at = [&](const GF& x, ScanRow& row) {
        const FieldContext* k = x.ctx();
        std::vector<GF> c;
        for (const auto& a : coef) c.push_back(eval_in(a, x));
        PolyF f(c, GF(k, 0));
        try {
            HyperellipticCurve C = hyperelliptic(f);
            FMatrix m(fd.genus, std::vector<GF>(fd.genus, GF(k, 0)));
            for (unsigned i = 0; i < fd.genus; ++i)
                for (unsigned j = 0; j < fd.genus; ++j) m[i][j] = eval_in(cm[i][j], x);
            row.cls = classify_with(C, m, u64(1) << 16);
        } catch (const BadFiber&) {
            row.cls.cls = FiberClass::bad;
            row.cls.route = "degenerate";
        }
        row.curve_degree = k->e();
    };

    std::optional<GF> j_inf_value;
    bool j_inf_pole = false;
    if (jn && jd) {
        int dn = jn->degree(), dd = jd->degree();
        if (dn < dd) j_inf_value = GF(fp, 0);
        else if (dn == dd) j_inf_value = jn->lead() / jd->lead();
        else j_inf_pole = true;
    }

    for (unsigned e : exts) {
        if (e == 0) throw Error("extension degree must be positive");
        const FieldContext* k = field(p, e);
        std::set<GF> ss;
        for (u64 a = 0; a < k->size(); ++a) {
            ScanRow row;
            row.ext = e;
            row.param = GF(k, a);
            GF x = row.param;
            if (fd.square_symmetry) {
                u64 r;
                if (k->sqrt(a, r)) {
                    x = GF(k, r);
                } else {
                    const FieldContext* k2 = field(p, 2 * e);
                    GF s2 = embed(row.param, k2);
                    if (!k2->sqrt(s2.index(), r)) throw Error("square root missing in the quadratic extension");
                    x = GF(k2, r);
                }
                row.root = x;
            }
            classify_at(x, row);
            if (jn && jd) {
                GF den = eval_in(*jd, row.param);
                if (!den.is_zero()) row.J = eval_in(*jn, row.param) / den;
            } else {
                row.J = row.param;
            }
            bool is_ss = row.cls.cls == FiberClass::supersingular || row.cls.cls == FiberClass::superspecial;
            std::string where = (fd.square_symmetry ? fd.parameter + "^2 = " : fd.parameter + " = ") + row.param.str();
            if (row.cls.cls == FiberClass::bad)
                out.notes.push_back(fmt_field(p, e) + ": degenerate fiber at " + where);
            if (!row.J && row.cls.cls != FiberClass::bad)
                out.notes.push_back(fmt_field(p, e) + ": fiber at the pole of J (" + where + ") is " + to_string(row.cls.cls));
            if (is_ss && row.J) {
                ss.insert(*row.J);
                if (row.root)
                    out.notes.push_back(fmt_field(p, e) + ": supersingular J = " + row.J->str() + " at " + where + "; " +
                                        fd.parameter + " lies in " + fmt_field(p, row.root->ctx()->e()));
            }
            out.rows.push_back(std::move(row));
        }
        if (fd.at_infinity) {
            ScanRow row;
            row.ext = e;
            row.at_infinity = true;
            row.param = GF(k, 0);
            std::vector<GF> c;
            for (const auto& r : *fd.at_infinity) c.push_back(reduce_to_field(r, k));
            try {
                HyperellipticCurve C = hyperelliptic(PolyF(c, GF(k, 0)));
                row.cls = classify_fiber(C, u64(1) << 16);
            } catch (const BadFiber&) {
                row.cls.cls = FiberClass::bad;
                row.cls.route = "degenerate";
            }
            row.curve_degree = e;
            if (j_inf_value && !j_inf_pole) row.J = embed(*j_inf_value, k);
            if ((row.cls.cls == FiberClass::supersingular || row.cls.cls == FiberClass::superspecial) && row.J) {
                ss.insert(*row.J);
                out.notes.push_back(fmt_field(p, e) + ": supersingular J = " + row.J->str() + " at " + fd.parameter + " = infinity");
            }
            out.rows.push_back(std::move(row));
        }
        out.supersingular[e] = std::vector<GF>(ss.begin(), ss.end());
    }
    return out;
}

std::vector<Agreement> compare_with_polynomial(const ScanResult& s, const PolyF& ss) {
    std::vector<Agreement> out;
    for (unsigned e : s.exts) {
        Agreement a;
        a.ext = e;
        if (ss.degree() > 0)
            for (const auto& r : roots_in_field(ss, field(s.p, e))) a.locus_roots.push_back(r.value);
        std::sort(a.locus_roots.begin(), a.locus_roots.end());
        auto it = s.supersingular.find(e);
        if (it != s.supersingular.end()) a.oracle_values = it->second;
        a.equal = a.locus_roots == a.oracle_values;
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace pfkit
