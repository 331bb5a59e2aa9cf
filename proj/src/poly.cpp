#include "pfkit/poly.hpp"

#include <mutex>
#include <set>

namespace pfkit {

PolyF poly_over(const FieldContext* ctx, const std::vector<long long>& coeffs) {
    std::vector<GF> v;
    for (long long c : coeffs) v.push_back(GF::from_int(ctx, c));
    return PolyF(std::move(v), GF(ctx, 0));
}

PolyF reduce_poly(const PolyQ& a, const FieldContext* ctx) {
    return a.map([ctx](const Rational& q) { return reduce_to_field(q, ctx); }, GF(ctx, 0));
}

namespace {

const FieldContext* ctx_of(const PolyF& a) {
    const FieldContext* c = a.zero().ctx();
    if (c == nullptr) throw Error("polynomial without field context");
    return c;
}

// Inverse Frobenius on coefficients: c -> c^{q/p}.
GF pth_root(const GF& c) {
    const FieldContext* k = c.ctx();
    return c.pow(k->size() / k->p());
}

PolyF x_poly(const FieldContext* ctx) { return PolyF::x(GF(ctx, 0)); }

}  // namespace

PolyF squarefree_part(const PolyF& a0) {
    if (a0.is_zero()) throw Error("squarefree_part of the zero polynomial");
    PolyF a = a0.monic();
    if (a.degree() <= 0) return a;
    PolyF d = a.derivative();
    if (d.is_zero()) {
        const FieldContext* k = ctx_of(a);
        std::vector<GF> b;
        for (size_t i = 0; i < a.coeffs().size(); i += k->p()) b.push_back(pth_root(a.coeffs()[i]));
        return squarefree_part(PolyF(std::move(b), a.zero()));
    }
    PolyF g = gcd(a, d);
    PolyF u = exact_div(a, g).monic();
    if (g.degree() == 0) return u;
    return lcm(u, squarefree_part(g));
}

std::vector<std::pair<unsigned, PolyF>> distinct_degree_factorization(const PolyF& a0) {
    if (a0.is_zero()) throw Error("distinct_degree_factorization of zero");
    PolyF f = a0.monic();
    if (gcd(f, f.derivative()).degree() > 0) throw Error("distinct_degree_factorization expects a squarefree input");
    const FieldContext* k = ctx_of(f);
    std::vector<std::pair<unsigned, PolyF>> out;
    PolyF x = x_poly(k);
    PolyF h = x % f;
    unsigned deg = 0;
    while (f.degree() >= 2 * static_cast<int>(deg + 1)) {
        ++deg;
        h = powmod(h, BigInt(static_cast<unsigned long>(k->size())), f);
        PolyF g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(deg, g);
            f = exact_div(f, g).monic();
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(static_cast<unsigned>(f.degree()), f);
    return out;
}

namespace {

// Splits a product of distinct irreducibles of degree k with a deterministic
// sweep of test polynomials u (encoded by an integer in base q).
void equal_degree_split(const PolyF& f, unsigned k, std::vector<PolyF>& out) {
    if (f.degree() == static_cast<int>(k)) {
        out.push_back(f.monic());
        return;
    }
    const FieldContext* ctx = ctx_of(f);
    if (ctx->p() == 2) throw Error("equal-degree splitting in characteristic 2 is not supported");
    BigInt qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= static_cast<unsigned long>(ctx->size());
    BigInt e = (qk - 1) / 2;
    u64 q = ctx->size();
    for (u64 n = q; ; ++n) {
        std::vector<GF> u;
        for (u64 t = n; t; t /= q) u.emplace_back(ctx, t % q);
        PolyF up(std::move(u), GF(ctx, 0));
        if (up.degree() >= f.degree()) throw Error("equal-degree splitting sweep exhausted");
        PolyF w = powmod(up, e, f) - PolyF::constant(GF(ctx, 1));
        PolyF g = gcd(f, w);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, k, out);
            equal_degree_split(exact_div(f, g).monic(), k, out);
            return;
        }
    }
}

bool poly_less(const PolyF& a, const PolyF& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.coeffs().size(); i-- > 0;)
        if (a.coeffs()[i].index() != b.coeffs()[i].index()) return a.coeffs()[i].index() < b.coeffs()[i].index();
    return false;
}

}  // namespace

std::vector<std::pair<PolyF, unsigned>> factor(const PolyF& a) {
    if (a.is_zero()) throw Error("factor of zero");
    std::vector<std::pair<PolyF, unsigned>> out;
    PolyF rad = squarefree_part(a);
    std::vector<PolyF> irr;
    for (auto& [k, part] : distinct_degree_factorization(rad)) equal_degree_split(part, k, irr);
    std::sort(irr.begin(), irr.end(), poly_less);
    for (const auto& f : irr) {
        unsigned m = 0;
        PolyF r = a;
        while (true) {
            auto [q, rem] = divmod(r, f);
            if (!rem.is_zero()) break;
            r = q;
            ++m;
        }
        out.emplace_back(f, m);
    }
    return out;
}

std::vector<std::pair<PolyF, unsigned>> squarefree_decomposition(const PolyF& a) {
    std::map<unsigned, PolyF> by_mult;
    for (auto& [f, m] : factor(a)) {
        auto it = by_mult.find(m);
        if (it == by_mult.end()) by_mult.emplace(m, f);
        else it->second = it->second * f;
    }
    std::vector<std::pair<PolyF, unsigned>> out;
    for (auto& [m, f] : by_mult) out.emplace_back(f, m);
    return out;
}

namespace {

std::vector<GF> linear_roots(const PolyF& a, const FieldContext* target) {
    std::vector<GF> roots;
    if (a.degree() <= 0) return roots;
    if (target->size() <= FieldContext::kTableLimit) {
        for (u64 v = 0; v < target->size(); ++v) {
            GF x(target, v);
            if (a.eval(x).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    PolyF x = x_poly(target);
    PolyF xq = powmod(x, BigInt(static_cast<unsigned long>(target->size())), a.monic());
    PolyF g = gcd(a, xq - x);
    std::vector<PolyF> lin;
    if (g.degree() > 0) equal_degree_split(g, 1, lin);
    for (const auto& l : lin) roots.push_back(-l.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

GF embed(const GF& x, const FieldContext* target) {
    const FieldContext* src = x.ctx();
    if (src == target) return x;
    if (src->p() != target->p() || target->e() % src->e() != 0)
        throw MixedRings("no embedding between the requested fields");
    if (src->e() == 1) return GF(target, x.index());
    static std::mutex mu;
    static std::map<std::pair<const FieldContext*, const FieldContext*>, u64> cache;
    u64 gen;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({src, target});
        if (it != cache.end()) {
            gen = it->second;
        } else {
            std::vector<long long> mc(src->modulus().begin(), src->modulus().end());
            PolyF m = poly_over(target, mc);
            auto r = linear_roots(m, target);
            if (r.empty()) throw Error("defining polynomial has no root in the target field");
            gen = r.front().index();
            cache.emplace(std::make_pair(src, target), gen);
        }
    }
    GF acc(target, 0), g(target, gen);
    auto d = x.coeffs();
    for (size_t i = d.size(); i-- > 0;) acc = acc * g + GF(target, d[i]);
    return acc;
}

std::vector<Root> roots_in_field(const PolyF& a, const FieldContext* target) {
    if (a.is_zero()) throw Error("roots of the zero polynomial");
    PolyF b = a.map([target](const GF& c) { return embed(c, target); }, GF(target, 0));
    std::vector<Root> out;
    for (const GF& r : linear_roots(squarefree_part(b), target)) {
        unsigned m = 0;
        PolyF cur = b;
        PolyF lin(std::vector<GF>{-r, GF(target, 1)}, r);
        while (true) {
            auto [q, rem] = divmod(cur, lin);
            if (!rem.is_zero()) break;
            cur = q;
            ++m;
        }
        out.push_back({r, m});
    }
    return out;
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
    if (n < 0) n = -n;
    if (n > BigInt("1000000000000")) throw UnsupportedOperator("rational root search on oversized coefficients");
    std::vector<BigInt> ds;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d * d != n) ds.push_back(n / d);
        }
    }
    return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const PolyQ& a) {
    if (a.is_zero()) throw Error("rational roots of zero");
    BigInt l = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> z;
    for (const auto& c : a.coeffs()) z.push_back(c.num() * (l / c.den()));
    std::set<Rational> roots;
    size_t v = 0;
    while (v < z.size() && z[v] == 0) ++v;
    if (v > 0) roots.insert(Rational(0));
    if (z.size() - v > 1) {
        for (const auto& num : divisors(z[v]))
            for (const auto& den : divisors(z.back()))
                for (int s : {1, -1}) {
                    Rational cand(num * s, den);
                    if (a.eval(cand).is_zero()) roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace pfkit
