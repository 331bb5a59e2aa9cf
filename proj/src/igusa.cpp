#include "pfkit/igusa.hpp"

#include <algorithm>

namespace pfkit {

namespace {

const Rational kJ1 = Rational(BigInt(16807), BigInt(128));     // 2^-7 7^5
const Rational kJ2 = Rational(BigInt(343), BigInt(128));       // 2^-7 7^3
const Rational kJ3 = Rational(BigInt(49), BigInt(384));        // 2^-7 3^-1 7^2
constexpr long kJ3Sqrt = 432;                                   // 2^4 3^3

std::string term(const GF& a, const GF& b) {
    if (b.is_zero()) return a.str();
    std::string s = b.str() + "*sqrt5";
    return a.is_zero() ? s : a.str() + "+" + s;
}

}  // namespace

std::string IgusaTriple::str() const { return "(" + J1.str() + ", " + J2.str() + ", " + term(J3a, J3b) + ")"; }

bool operator==(const IgusaTriple& x, const IgusaTriple& y) {
    return x.J1 == y.J1 && x.J2 == y.J2 && x.J3a == y.J3a && x.J3b == y.J3b;
}

bool equal_up_to_sqrt5(const IgusaTriple& x, const IgusaTriple& y) { return x == y || x == y.conj(); }

IgusaTriple igusa_restrict(const GF& J) {
    const FieldContext* k = J.ctx();
    u64 p = k->p();
    if (p == 2 || p == 3 || p == 7) throw DenominatorNotInvertible(p, "restricted Igusa invariants need 2, 3, 7 invertible");
    GF c1 = reduce_to_field(kJ1, k), c2 = reduce_to_field(kJ2, k), c3 = reduce_to_field(kJ3, k);
    GF J2 = J * J;
    return {c1 * J2, c2 * J2, c3 * GF::from_int(k, 5) * J2, -(c3 * GF::from_int(k, kJ3Sqrt) * J)};
}

IgusaExact igusa_restrict(const Rational& J) {
    QuadraticElement j(5, J);
    QuadraticElement j2 = j * j;
    QuadraticElement inner = QuadraticElement(5, Rational(5)) * j - QuadraticElement(5, Rational(0), Rational(kJ3Sqrt));
    return {QuadraticElement(5, kJ1) * j2, QuadraticElement(5, kJ2) * j2, QuadraticElement(5, kJ3) * j * inner};
}

IgusaTable igusa_table(const CurveFamilyDescriptor& d, u64 p) {
    LocusReport rep = locus_report(d, p);
    IgusaTable t;
    t.family = d.name;
    t.hash = d.hash;
    t.p = p;
    for (const auto& f : rep.ss_factors) {
        auto roots = roots_in_field(f.factor, field(p, f.degree));
        if (roots.empty()) throw Error("irreducible factor without a root in its splitting field");
        GF rep_root = std::min_element(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; })->value;
        t.rows.push_back({rep_root, f.degree, igusa_restrict(rep_root)});
    }
    std::sort(t.rows.begin(), t.rows.end(), [](const IgusaRow& a, const IgusaRow& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.J < b.J;
    });
    return t;
}

IgusaTriple igusa_triple_from_ints(u64 p, long j1, long j2, long a, long b) {
    const FieldContext* k = field(p, 1);
    return {GF::from_int(k, j1), GF::from_int(k, j2), GF::from_int(k, a), GF::from_int(k, b)};
}

}  // namespace pfkit
