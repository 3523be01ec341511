#include "enrq/points.hpp"
#include "enrq/fq_factor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace enrq {

namespace {

constexpr long FIBER_CAP = 200000;      // P^1 sizes we scan directly
constexpr long AMBIENT_CAP = 10000000;  // hard guard for blind product scans
constexpr long P2_ENUM_CAP = 300000;    // P^2 sizes we may enumerate per fiber
constexpr size_t POINT_CAP = 300000;    // refuse to materialize more points

const FqCtx* system_ctx(const std::vector<MultiPoly<Fq>>& sys) {
    for (const auto& f : sys)
        for (const auto& [e, c] : f.terms()) { (void)e; return c.ctx(); }
    return nullptr;
}

std::vector<Fq> scale_block(std::vector<Fq> v) {
    for (const auto& c : v) {
        if (!c.is_zero()) {
            Fq inv = c.inv();
            for (auto& x : v) x = x * inv;
            break;
        }
    }
    return v;
}

// canonical representatives of P^n(F_Q): leading 1 at position i, free
// coordinates after it, emitted in a stable order
template <class F>
void enumerate_proj(const FqCtx* ctx, int n, F&& fn) {
    std::vector<Fq> elems;
    {
        mpz_class total = ctx->card;
        for (mpz_class i = 0; i < total; ++i) {
            Fq v = Fq::zero(ctx);
            mpz_class t = i;
            for (int d = 0; d < ctx->k; ++d) {
                mpz_class dig = t % static_cast<unsigned long>(ctx->p);
                v.set_coeff(d, dig.get_ui());
                t /= static_cast<unsigned long>(ctx->p);
            }
            elems.push_back(v);
        }
    }
    std::vector<Fq> pt(static_cast<size_t>(n + 1), Fq::zero(ctx));
    for (int i = 0; i <= n; ++i) {
        for (auto& c : pt) c = Fq::zero(ctx);
        pt[static_cast<size_t>(i)] = Fq::one(ctx);
        int free = n - i;
        std::vector<size_t> idx(static_cast<size_t>(free), 0);
        while (true) {
            for (int j = 0; j < free; ++j)
                pt[static_cast<size_t>(i + 1 + j)] = elems[idx[static_cast<size_t>(j)]];
            fn(pt);
            int j = free - 1;
            while (j >= 0 && idx[static_cast<size_t>(j)] + 1 == elems.size()) {
                idx[static_cast<size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++idx[static_cast<size_t>(j)];
        }
    }
}

long proj_size(const mpz_class& card, int n) {
    mpz_class s = 0, p = 1;
    for (int i = 0; i <= n; ++i) { s += p; p *= card; }
    if (!s.fits_slong_p()) return -1;
    return s.get_si();
}

using Biv = UniPoly<UniPoly<Fq>>; // outer w2, inner w1

// dehomogenize a frame-X (or Y) polynomial on the chart coord == 1
Biv to_bivariate(const MultiPoly<Fq>& f, int block_offset, int chart) {
    std::vector<int> others;
    for (int i = 0; i < 3; ++i)
        if (i != chart) others.push_back(i);
    std::map<std::pair<int, int>, Fq> coef;
    for (const auto& [e, c] : f.terms()) {
        int e1 = e[static_cast<size_t>(block_offset + others[0])];
        int e2 = e[static_cast<size_t>(block_offset + others[1])];
        auto key = std::make_pair(e1, e2);
        auto it = coef.find(key);
        if (it == coef.end()) coef.emplace(key, c);
        else it->second += c;
    }
    Biv out;
    for (const auto& [k, c] : coef) {
        if (c.is_zero()) continue;
        UniPoly<Fq> inner = UniPoly<Fq>::monomial(c, k.first);
        out += Biv::monomial(inner, k.second);
    }
    return out;
}

std::array<Fq, 3> chart_point(int chart, const Fq& w1, const Fq& w2, const FqCtx* ctx) {
    std::array<Fq, 3> p = {Fq::zero(ctx), Fq::zero(ctx), Fq::zero(ctx)};
    std::vector<int> others;
    for (int i = 0; i < 3; ++i)
        if (i != chart) others.push_back(i);
    p[static_cast<size_t>(chart)] = Fq::one(ctx);
    p[static_cast<size_t>(others[0])] = w1;
    p[static_cast<size_t>(others[1])] = w2;
    return p;
}

struct P2Result {
    std::vector<std::array<Fq, 3>> pts;
    bool positive_dimensional = false; // solution set not finite
    bool failed = false;               // could not even enumerate within budget
};

bool eval_zero_at(const std::vector<MultiPoly<Fq>>& sys, const std::array<Fq, NVARS>& pt) {
    for (const auto& f : sys)
        if (!f.eval(std::span<const Fq, NVARS>(pt)).is_zero()) return false;
    return true;
}

// rational points of an arbitrary single-block system by plain enumeration
P2Result enumerate_p2(const std::vector<MultiPoly<Fq>>& sys, int block_offset, const FqCtx* ctx) {
    P2Result out;
    out.positive_dimensional = true;
    long n = proj_size(ctx->card, 2);
    if (n < 0 || n > P2_ENUM_CAP) {
        out.failed = true;
        return out;
    }
    std::array<Fq, NVARS> pt;
    for (auto& c : pt) c = Fq::zero(ctx);
    enumerate_proj(ctx, 2, [&](const std::vector<Fq>& xv) {
        for (int i = 0; i < 3; ++i) pt[static_cast<size_t>(block_offset + i)] = xv[static_cast<size_t>(i)];
        if (eval_zero_at(sys, pt)) {
            std::vector<Fq> v = scale_block({xv[0], xv[1], xv[2]});
            out.pts.push_back({v[0], v[1], v[2]});
        }
    });
    return out;
}

// Common zeros on P^2 of a homogeneous single-block system over the
// coefficient field. Finite sets are computed by resultant elimination;
// positive-dimensional sets fall back to enumeration (when the field is
// small enough) with positive_dimensional set.
P2Result solve_p2(const std::vector<MultiPoly<Fq>>& system, const FqCtx* ctx, int block_offset) {
    P2Result out;
    std::vector<MultiPoly<Fq>> nonzero;
    for (const auto& f : system)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty()) return enumerate_p2(system, block_offset, ctx);

    std::set<std::array<Fq, 3>> found;
    for (int chart = 0; chart < 3; ++chart) {
        std::vector<Biv> bs;
        bool has_nonzero_const = false;
        for (const auto& f : nonzero) {
            Biv b = to_bivariate(f, block_offset, chart);
            if (b.degree() == 0 && !b.is_zero() && b.coeff(0).degree() == 0) has_nonzero_const = true;
            else if (!b.is_zero()) bs.push_back(std::move(b));
        }
        if (has_nonzero_const) continue; // no solutions on this chart
        if (bs.empty()) return enumerate_p2(system, block_offset, ctx);
        bool all_w2_free = true;
        for (const auto& b : bs)
            if (b.degree() > 0) all_w2_free = false;
        if (all_w2_free || bs.size() == 1) {
            // either a pencil of vertical lines or a single curve: any
            // solution locus here is positive-dimensional unless empty
            if (all_w2_free) {
                UniPoly<Fq> g;
                for (const auto& b : bs) g = g.is_zero() ? b.coeff(0) : poly_gcd(g, b.coeff(0));
                if (g.degree() == 0) continue; // provably empty on this chart
            }
            return enumerate_p2(system, block_offset, ctx);
        }
        size_t base = 0;
        while (bs[base].degree() == 0) ++base;
        UniPoly<Fq> g;
        bool have = false;
        for (size_t j = 0; j < bs.size(); ++j) {
            if (j == base) continue;
            UniPoly<Fq> r = resultant_ring(bs[base], bs[j]);
            if (r.is_zero()) continue;
            g = have ? poly_gcd(g, r) : r.monic();
            have = true;
        }
        if (!have) return enumerate_p2(system, block_offset, ctx);
        if (g.degree() == 0) continue;
        for (const Fq& a : roots_in_field(g)) {
            UniPoly<Fq> h;
            bool hset = false, fiber_zero = true;
            for (const auto& b : bs) {
                std::vector<Fq> cs;
                for (int i = 0; i <= b.degree(); ++i) cs.push_back(b.coeff(i).eval(a));
                UniPoly<Fq> ci{std::move(cs)};
                if (!ci.is_zero()) {
                    fiber_zero = false;
                    h = hset ? poly_gcd(h, ci) : ci.monic();
                    hset = true;
                }
            }
            if (fiber_zero) return enumerate_p2(system, block_offset, ctx); // whole line
            if (!hset || h.degree() == 0) continue;
            for (const Fq& b : roots_in_field(h))
                found.insert(std::array<Fq, 3>(chart_point(chart, a, b, ctx)));
        }
    }
    std::array<Fq, NVARS> pt;
    for (auto& c : pt) c = Fq::zero(ctx);
    for (const auto& cand : found) {
        for (int i = 0; i < 3; ++i) pt[static_cast<size_t>(block_offset + i)] = cand[static_cast<size_t>(i)];
        if (!eval_zero_at(nonzero, pt)) continue;
        std::vector<Fq> v = scale_block({cand[0], cand[1], cand[2]});
        out.pts.push_back({v[0], v[1], v[2]});
    }
    std::sort(out.pts.begin(), out.pts.end(), [](const auto& a, const auto& b) {
        for (int i = 0; i < 3; ++i) {
            if (a[static_cast<size_t>(i)] < b[static_cast<size_t>(i)]) return true;
            if (b[static_cast<size_t>(i)] < a[static_cast<size_t>(i)]) return false;
        }
        return false;
    });
    out.pts.erase(std::unique(out.pts.begin(), out.pts.end()), out.pts.end());
    return out;
}

// specialize the (s,t)-block of a lifted STX system and solve the x-fiber
P2Result solve_fiber(const std::vector<MultiPoly<Fq>>& sys_ext, const FqCtx* ext, const Fq& sv,
                     const Fq& tv) {
    std::vector<MultiPoly<Fq>> xs;
    for (const auto& f : sys_ext) xs.push_back(f.substitute({{Var::S, sv}, {Var::T, tv}}));
    return solve_p2(xs, ext, 2);
}

struct Collector {
    std::set<ProjPoint> pts;
    bool positive_dimensional = false;
    bool over_cap = false;

    void take_fiber(const Fq& sv, const Fq& tv, const P2Result& sol) {
        if (sol.positive_dimensional) positive_dimensional = true;
        for (const auto& xp : sol.pts) {
            ProjPoint p;
            p.st = scale_block({sv, tv});
            p.x = {xp[0], xp[1], xp[2]};
            pts.insert(std::move(p));
            if (pts.size() > POINT_CAP) { over_cap = true; return; }
        }
    }
};

BruteForceResult finish(Collector&& col, std::string note) {
    BruteForceResult res;
    res.note = std::move(note);
    if (col.over_cap) {
        res.status = BruteForceResult::Status::BudgetExceeded;
        res.note += "; point cap exceeded";
        return res;
    }
    if (col.positive_dimensional) res.note += "; positive-dimensional solution set";
    res.points.assign(col.pts.begin(), col.pts.end());
    return res;
}

BruteForceResult fiber_scan_stx(const std::vector<MultiPoly<Fq>>& sys, const FqCtx* ext) {
    std::vector<MultiPoly<Fq>> lifted;
    for (const auto& f : sys) lifted.push_back(lift_multipoly(f, ext));
    Collector col;
    bool failed = false;
    enumerate_proj(ext, 1, [&](const std::vector<Fq>& stv) {
        if (failed || col.over_cap) return;
        P2Result sol = solve_fiber(lifted, ext, stv[0], stv[1]);
        if (sol.failed) { failed = true; return; }
        col.take_fiber(stv[0], stv[1], sol);
    });
    if (failed) {
        BruteForceResult res;
        res.status = BruteForceResult::Status::BudgetExceeded;
        res.note = "fiber-scan: fiber enumeration over budget";
        return res;
    }
    return finish(std::move(col), "fiber-scan");
}

// Elimination-guided enumeration for STX systems: on the chart s = 1 the
// iterated pair resultants produce G(u) that vanishes at the t-coordinate of
// every solution, so only fibers over roots of G (plus s = 0) are visited.
BruteForceResult guided_stx(const std::vector<MultiPoly<Fq>>& sys, const FqCtx* ext) {
    std::vector<MultiPoly<Fq>> lifted;
    for (const auto& f : sys) lifted.push_back(lift_multipoly(f, ext));
    Collector col;

    {
        P2Result sol = solve_fiber(lifted, ext, Fq::zero(ext), Fq::one(ext));
        if (sol.failed) {
            BruteForceResult res;
            res.status = BruteForceResult::Status::BudgetExceeded;
            res.note = "eliminant-guided: s=0 fiber over budget";
            return res;
        }
        col.take_fiber(Fq::zero(ext), Fq::one(ext), sol);
    }

    std::set<Fq> candidates;
    bool chart_incomplete = false;
    for (int chart = 0; chart < 3; ++chart) {
        using Triv = UniPoly<UniPoly<UniPoly<Fq>>>;
        std::vector<Triv> bs;
        for (const auto& f : sys) {
            if (f.is_zero()) continue;
            std::vector<int> others;
            for (int i = 0; i < 3; ++i)
                if (i != chart) others.push_back(i);
            std::map<std::pair<int, int>, std::map<int, Fq>> coef;
            for (const auto& [e, c] : f.terms()) {
                int e1 = e[static_cast<size_t>(2 + others[0])];
                int e2 = e[static_cast<size_t>(2 + others[1])];
                auto& slot = coef[{e1, e2}][e[1]]; // u-exponent = t-exponent on s = 1
                slot += c;
            }
            Triv b;
            for (const auto& [k, uc] : coef) {
                int maxd = -1;
                for (const auto& [d, v] : uc)
                    if (!v.is_zero()) maxd = std::max(maxd, d);
                if (maxd < 0) continue;
                std::vector<Fq> inner_c(static_cast<size_t>(maxd) + 1, Fq());
                for (const auto& [d, v] : uc) if (d <= maxd) inner_c[static_cast<size_t>(d)] = v;
                UniPoly<Fq> up{std::move(inner_c)};
                if (up.is_zero()) continue;
                b += Triv::monomial(UniPoly<UniPoly<Fq>>::monomial(up, k.first), k.second);
            }
            if (!b.is_zero()) bs.push_back(b);
        }
        if (bs.size() < 3) { chart_incomplete = true; continue; }
        size_t b0 = 0;
        while (b0 < bs.size() && bs[b0].degree() == 0) ++b0;
        if (b0 == bs.size()) b0 = 0;
        std::vector<UniPoly<UniPoly<Fq>>> rs;
        for (size_t j = 0; j < bs.size(); ++j) {
            if (j == b0) continue;
            UniPoly<UniPoly<Fq>> r = resultant_ring(bs[b0], bs[j]);
            if (!r.is_zero()) rs.push_back(r);
        }
        UniPoly<Fq> G;
        bool haveG = false;
        for (size_t a = 0; a + 1 < rs.size(); ++a) {
            UniPoly<Fq> g2 = resultant_ring(rs[a], rs[a + 1]);
            if (g2.is_zero()) continue;
            G = haveG ? poly_gcd(G, g2) : g2.monic();
            haveG = true;
        }
        if (!haveG) { chart_incomplete = true; continue; }
        if (G.degree() == 0) continue;
        UniPoly<Fq> Ge = lift_poly(G, ext);
        for (const Fq& a : roots_in_field(Ge)) candidates.insert(a);
    }

    if (chart_incomplete) {
        long p1 = proj_size(ext->card, 1);
        if (p1 > 0 && p1 <= FIBER_CAP) return fiber_scan_stx(sys, ext);
        BruteForceResult res;
        res.status = BruteForceResult::Status::Degenerate;
        res.note = "eliminant-guided: elimination degenerated (system not 0-dimensional?)";
        return res;
    }

    for (const Fq& a : candidates) {
        if (col.over_cap) break;
        P2Result sol = solve_fiber(lifted, ext, Fq::one(ext), a);
        if (sol.failed) {
            BruteForceResult res;
            res.status = BruteForceResult::Status::BudgetExceeded;
            res.note = "eliminant-guided: fiber enumeration over budget";
            return res;
        }
        col.take_fiber(Fq::one(ext), a, sol);
    }
    return finish(std::move(col), "eliminant-guided");
}

BruteForceResult stxy_scan(const std::vector<MultiPoly<Fq>>& sys, const FqCtx* ext) {
    BruteForceResult res;
    long base_size = proj_size(ext->card, 1);
    long p2_size = proj_size(ext->card, 2);
    if (base_size < 0 || p2_size < 0 || base_size > AMBIENT_CAP / std::max(p2_size, 1L)) {
        res.status = BruteForceResult::Status::BudgetExceeded;
        res.note = "enumeration budget exceeded";
        return res;
    }
    std::vector<MultiPoly<Fq>> lifted;
    for (const auto& f : sys) lifted.push_back(lift_multipoly(f, ext));
    std::set<ProjPoint> pts;
    bool over = false, failed = false, posdim = false;
    enumerate_proj(ext, 1, [&](const std::vector<Fq>& stv) {
        if (over || failed) return;
        std::vector<MultiPoly<Fq>> half;
        for (const auto& f : lifted)
            half.push_back(f.substitute({{Var::S, stv[0]}, {Var::T, stv[1]}}));
        enumerate_proj(ext, 2, [&](const std::vector<Fq>& xv) {
            if (over || failed) return;
            std::vector<MultiPoly<Fq>> ysys;
            for (const auto& f : half)
                ysys.push_back(
                    f.substitute({{Var::X0, xv[0]}, {Var::X1, xv[1]}, {Var::X2, xv[2]}}));
            P2Result sol = solve_p2(ysys, ext, 5);
            if (sol.failed) { failed = true; return; }
            if (sol.positive_dimensional) posdim = true;
            for (const auto& yp : sol.pts) {
                ProjPoint p;
                p.st = scale_block({stv[0], stv[1]});
                p.x = scale_block({xv[0], xv[1], xv[2]});
                p.y = {yp[0], yp[1], yp[2]};
                pts.insert(std::move(p));
                if (pts.size() > POINT_CAP) { over = true; return; }
            }
        });
    });
    if (failed || over) {
        res.status = BruteForceResult::Status::BudgetExceeded;
        res.note = over ? "point cap exceeded" : "fiber enumeration over budget";
        return res;
    }
    res.note = "base-scan+fiber-solver";
    if (posdim) res.note += "; positive-dimensional solution set";
    res.points.assign(pts.begin(), pts.end());
    return res;
}

} // namespace

bool ProjPoint::operator<(const ProjPoint& o) const {
    auto cmp = [](const std::vector<Fq>& a, const std::vector<Fq>& b) {
        for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
            if (a[i] < b[i]) return -1;
            if (b[i] < a[i]) return 1;
        }
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        return 0;
    };
    int c = cmp(st, o.st);
    if (c) return c < 0;
    c = cmp(x, o.x);
    if (c) return c < 0;
    return cmp(y, o.y) < 0;
}

std::string ProjPoint::str() const {
    auto blk = [](const std::vector<Fq>& v) {
        std::string s = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ":";
            s += v[i].str();
        }
        return s + ")";
    };
    std::string s = blk(st) + "x" + blk(x);
    if (!y.empty()) s += "x" + blk(y);
    return s;
}

std::optional<Fq> ProjPoint::affine_t() const {
    if (st[0].is_zero()) return std::nullopt;
    return st[1] * st[0].inv();
}

MultiPoly<Fq> lift_multipoly(const MultiPoly<Fq>& f, const FqCtx* ext) {
    MultiPoly<Fq> r(f.frame());
    for (const auto& [e, c] : f.terms()) r.add_term(e, embed(c, ext));
    return r;
}

P2Solutions solve_p2_system(const std::vector<MultiPoly<Fq>>& system) {
    const FqCtx* ctx = system_ctx(system);
    P2Solutions out;
    if (!ctx) { out.degenerate = true; return out; }
    int block_offset = 2;
    for (const auto& f : system) {
        if (f.is_zero()) continue;
        if (f.frame() == FRAME_Y) block_offset = 5;
        else if (f.frame() != FRAME_X)
            throw std::invalid_argument("solve_p2_system: expected a single-block system");
    }
    P2Result r = solve_p2(system, ctx, block_offset);
    out.degenerate = r.positive_dimensional || r.failed;
    out.pts = std::move(r.pts);
    return out;
}

BruteForceResult brute_force_points(const std::vector<MultiPoly<Fq>>& system, int ext_degree) {
    BruteForceResult res;
    const FqCtx* base = system_ctx(system);
    if (!base) {
        res.status = BruteForceResult::Status::Degenerate;
        res.note = "system has no coefficients; ambient field unknown";
        return res;
    }
    if (ext_degree < 1) throw std::invalid_argument("brute_force_points: ext_degree >= 1");
    if (ext_degree > 1 && base->k != 1)
        throw std::invalid_argument("brute_force_points: extensions require a prime base field");
    const FqCtx* ext = ext_degree == 1 ? base : FqCtx::get(base->p, ext_degree);

    Frame fr = 0;
    for (const auto& f : system) fr |= f.frame();
    if (fr & FRAME_Y) return stxy_scan(system, ext);

    long p1 = proj_size(ext->card, 1);
    if (p1 > 0 && p1 <= FIBER_CAP) return fiber_scan_stx(system, ext);
    return guided_stx(system, ext);
}

BruteForceResult brute_force_points_exhaustive(const std::vector<MultiPoly<Fq>>& system,
                                               int ext_degree) {
    BruteForceResult res;
    res.note = "exhaustive";
    const FqCtx* base = system_ctx(system);
    if (!base) {
        res.status = BruteForceResult::Status::Degenerate;
        res.note = "system has no coefficients; ambient field unknown";
        return res;
    }
    if (ext_degree > 1 && base->k != 1)
        throw std::invalid_argument("brute_force_points: extensions require a prime base field");
    const FqCtx* ext = ext_degree == 1 ? base : FqCtx::get(base->p, ext_degree);
    Frame fr = 0;
    for (const auto& f : system) fr |= f.frame();
    bool has_y = (fr & FRAME_Y) != 0;

    long p1 = proj_size(ext->card, 1), p2 = proj_size(ext->card, 2);
    long ambient = -1;
    if (p1 > 0 && p2 > 0 && p1 <= AMBIENT_CAP / p2) {
        ambient = p1 * p2;
        if (has_y) ambient = ambient <= AMBIENT_CAP / p2 ? ambient * p2 : -1;
    }
    if (ambient < 0 || ambient > AMBIENT_CAP) {
        res.status = BruteForceResult::Status::BudgetExceeded;
        res.note = "enumeration budget exceeded";
        return res;
    }

    std::vector<MultiPoly<Fq>> lifted;
    for (const auto& f : system) lifted.push_back(lift_multipoly(f, ext));
    std::array<Fq, NVARS> pt;
    for (auto& c : pt) c = Fq::zero(ext);
    std::vector<ProjPoint> pts;
    enumerate_proj(ext, 1, [&](const std::vector<Fq>& stv) {
        pt[0] = stv[0]; pt[1] = stv[1];
        enumerate_proj(ext, 2, [&](const std::vector<Fq>& xv) {
            pt[2] = xv[0]; pt[3] = xv[1]; pt[4] = xv[2];
            if (has_y) {
                enumerate_proj(ext, 2, [&](const std::vector<Fq>& yv) {
                    pt[5] = yv[0]; pt[6] = yv[1]; pt[7] = yv[2];
                    if (!eval_zero_at(lifted, pt)) return;
                    ProjPoint p;
                    p.st = scale_block({pt[0], pt[1]});
                    p.x = scale_block({pt[2], pt[3], pt[4]});
                    p.y = scale_block({pt[5], pt[6], pt[7]});
                    pts.push_back(std::move(p));
                });
            } else {
                if (!eval_zero_at(lifted, pt)) return;
                ProjPoint p;
                p.st = scale_block({pt[0], pt[1]});
                p.x = scale_block({pt[2], pt[3], pt[4]});
                pts.push_back(std::move(p));
            }
        });
    });
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    res.points = std::move(pts);
    return res;
}

PointCensus closed_point_census(const std::vector<MultiPoly<Fq>>& system, int dmax) {
    PointCensus pc;
    for (int d = 1; d <= dmax; ++d) {
        BruteForceResult r = brute_force_points(system, d);
        if (r.status == BruteForceResult::Status::Degenerate ||
            r.note.find("positive-dimensional") != std::string::npos) {
            pc.degenerate = true;
            return pc;
        }
        if (r.status == BruteForceResult::Status::BudgetExceeded) {
            pc.budget_exceeded = true;
            return pc;
        }
        pc.rational_counts.push_back(static_cast<long>(r.points.size()));
    }
    pc.closed_counts.assign(static_cast<size_t>(dmax), 0);
    for (int d = 1; d <= dmax; ++d) {
        long s = 0;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) s += e * pc.closed_counts[static_cast<size_t>(e - 1)];
        long md = (pc.rational_counts[static_cast<size_t>(d - 1)] - s) / d;
        pc.closed_counts[static_cast<size_t>(d - 1)] = md;
        pc.total_degree += d * md;
    }
    return pc;
}

} // namespace enrq
