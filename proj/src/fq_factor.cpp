#include "enrq/fq_factor.hpp"
#include "enrq/rng.hpp"

#include <algorithm>

namespace enrq {

namespace {

UniPoly<Fq> xpoly(const FqCtx* ctx) {
    return UniPoly<Fq>::monomial(Fq::one(ctx), 1);
}

// coefficient-wise p-th root composed with exponent division:
// f = g(x^p) with g recovered via a -> a^(p^(k-1))
UniPoly<Fq> pth_root(const UniPoly<Fq>& f) {
    const FqCtx* ctx = f.lc().ctx();
    const uint64_t p = ctx->p;
    mpz_class e = 1;
    for (int i = 0; i < ctx->k - 1; ++i) e *= static_cast<unsigned long>(p);
    std::vector<Fq> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        c.push_back(f.coeff(i).pow(e));
    return UniPoly<Fq>(std::move(c));
}

// multiplicity-annotated squarefree decomposition (Yun, char p variant)
void squarefree_decomp(const UniPoly<Fq>& fin, int mult_scale,
                       std::vector<std::pair<UniPoly<Fq>, int>>& out) {
    UniPoly<Fq> f = fin.monic();
    if (f.degree() <= 0) return;
    const FqCtx* ctx = f.lc().ctx();
    const int p = static_cast<int>(ctx->p);
    UniPoly<Fq> d = f.derivative();
    if (d.is_zero()) {
        squarefree_decomp(pth_root(f), mult_scale * p, out);
        return;
    }
    UniPoly<Fq> c = poly_gcd(f, d);
    UniPoly<Fq> w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        UniPoly<Fq> y = poly_gcd(w, c);
        UniPoly<Fq> z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult_scale);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_decomp(pth_root(c), mult_scale * p, out);
}

// distinct-degree split of a squarefree monic polynomial:
// returns (product of irreducibles of degree d, d)
std::vector<std::pair<UniPoly<Fq>, int>> ddf(UniPoly<Fq> f) {
    const FqCtx* ctx = f.lc().ctx();
    std::vector<std::pair<UniPoly<Fq>, int>> out;
    UniPoly<Fq> x = xpoly(ctx);
    UniPoly<Fq> h = x % f;
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, ctx->card, f);
        UniPoly<Fq> g = poly_gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2)
void edf(const UniPoly<Fq>& g, int d, Rng& rng, std::vector<UniPoly<Fq>>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const FqCtx* ctx = g.lc().ctx();
    const uint64_t p = ctx->p;
    while (true) {
        // random polynomial of degree < deg g
        std::vector<Fq> rc(static_cast<size_t>(g.degree()), Fq());
        for (auto& c : rc) {
            Fq v = Fq::zero(ctx);
            for (int i = 0; i < ctx->k; ++i) v.set_coeff(i, rng.below(p));
            c = v;
        }
        UniPoly<Fq> r{std::move(rc)};
        if (r.degree() < 1) continue;
        UniPoly<Fq> s;
        if (p == 2) {
            // trace map sum r^(2^i), i < k*d
            UniPoly<Fq> t = r % g, acc = t;
            long n = static_cast<long>(ctx->k) * d;
            for (long i = 1; i < n; ++i) {
                t = (t * t) % g;
                acc += t;
            }
            s = acc;
        } else {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), ctx->card.get_mpz_t(), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            s = powmod(r, e, g) - UniPoly<Fq>::constant(Fq::one(ctx));
        }
        if (s.is_zero()) continue;
        UniPoly<Fq> h = poly_gcd(s, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            edf(h, d, rng, out);
            edf(g / h, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FqFactor> factor_fq(const UniPoly<Fq>& f, uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
    if (f.degree() == 0) return {};
    Rng rng(seed ^ fnv1a(f.str()));
    std::vector<std::pair<UniPoly<Fq>, int>> parts;
    squarefree_decomp(f, 1, parts);
    std::vector<FqFactor> out;
    for (auto& [part, mult] : parts) {
        for (auto& [prod, d] : ddf(part)) {
            std::vector<UniPoly<Fq>> irr;
            edf(prod, d, rng, irr);
            for (auto& q : irr) out.push_back({q, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FqFactor& a, const FqFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        for (int i = a.poly.degree(); i >= 0; --i) {
            if (a.poly.coeff(i) != b.poly.coeff(i)) return a.poly.coeff(i) < b.poly.coeff(i);
        }
        return a.mult < b.mult;
    });
    return out;
}

std::vector<int> cycle_type_fq(const UniPoly<Fq>& f) {
    if (f.is_zero()) throw std::domain_error("cycle_type: zero polynomial");
    UniPoly<Fq> d = f.derivative();
    UniPoly<Fq> g = d.is_zero() ? f.monic() : poly_gcd(f, d);
    if (g.degree() != 0) throw NotSquarefreeError(g);
    std::vector<int> type;
    for (auto& [prod, deg] : ddf(f.monic())) {
        int n = prod.degree() / deg;
        for (int i = 0; i < n; ++i) type.push_back(deg);
    }
    std::sort(type.begin(), type.end());
    return type;
}

bool is_irreducible_fq(const UniPoly<Fq>& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const FqCtx* ctx = f.lc().ctx();
    UniPoly<Fq> fm = f.monic();
    UniPoly<Fq> x = xpoly(ctx);
    const int n = fm.degree();
    // x^(Q^n) == x mod f
    UniPoly<Fq> h = x % fm;
    for (int i = 0; i < n; ++i) h = powmod(h, ctx->card, fm);
    if (h != x % fm) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lp = true;
        for (int d = 2; d * d <= l; ++d) if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        UniPoly<Fq> hh = x % fm;
        for (int i = 0; i < n / l; ++i) hh = powmod(hh, ctx->card, fm);
        if (poly_gcd(hh - x, fm).degree() != 0) return false;
    }
    return true;
}

std::vector<Fq> roots_in_field(const UniPoly<Fq>& f, uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("roots: zero polynomial");
    if (f.degree() == 0) return {};
    const FqCtx* ctx = f.lc().ctx();
    UniPoly<Fq> fm = f.monic();
    // strip repeated roots so gcd with x^Q - x captures each root once
    UniPoly<Fq> d = fm.derivative();
    if (!d.is_zero()) {
        UniPoly<Fq> g = poly_gcd(fm, d);
        if (g.degree() > 0) fm = fm / g;
    } else {
        fm = pth_root(fm);
        return roots_in_field(fm, seed);
    }
    UniPoly<Fq> x = xpoly(ctx);
    UniPoly<Fq> frob = powmod(x, ctx->card, fm);
    UniPoly<Fq> lin = poly_gcd(frob - x, fm);
    std::vector<Fq> roots;
    if (lin.degree() >= 1) {
        Rng rng(seed ^ fnv1a(f.str()) ^ 0x9d5);
        std::vector<UniPoly<Fq>> ls;
        edf(lin, 1, rng, ls);
        for (auto& l : ls) roots.push_back(-l.coeff(0));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

UniPoly<Fq> lift_poly(const UniPoly<Fq>& f, const FqCtx* ext) {
    std::vector<Fq> c;
    for (int i = 0; i <= f.degree(); ++i) c.push_back(embed(f.coeff(i), ext));
    return UniPoly<Fq>(std::move(c));
}

UniPoly<Fq> minimal_irreducible(uint64_t p, int k) {
    const FqCtx* ext = FqCtx::get(p, k);
    const FqCtx* base = FqCtx::get(p, 1);
    std::vector<Fq> c;
    for (int i = 0; i <= k; ++i) c.emplace_back(base, ext->mod[static_cast<size_t>(i)]);
    if (k == 1) return xpoly(base); // prime field: modulus is x itself by convention
    return UniPoly<Fq>(std::move(c));
}

UniPoly<Fq> random_poly(const FqCtx* ctx, int d, Rng& rng, bool monic) {
    std::vector<Fq> c(static_cast<size_t>(d) + 1, Fq());
    for (int i = 0; i <= d; ++i) {
        Fq v = Fq::zero(ctx);
        for (int j = 0; j < ctx->k; ++j) v.set_coeff(j, rng.below(ctx->p));
        c[static_cast<size_t>(i)] = v;
    }
    if (monic) c[static_cast<size_t>(d)] = Fq::one(ctx);
    else if (c[static_cast<size_t>(d)].is_zero()) c[static_cast<size_t>(d)] = Fq::one(ctx);
    return UniPoly<Fq>(std::move(c));
}

} // namespace enrq
