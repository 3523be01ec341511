#include "enrq/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace enrq {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod_u64(uint64_t a, uint64_t p) {
    // extended Euclid
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
    while (nr != 0) {
        int64_t qu = r / nr;
        int64_t tmp = t - qu * nt; t = nt; nt = tmp;
        tmp = r - qu * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

// ---- dense polynomial helpers over F_p (used only to build moduli) ----
using PolyP = std::vector<uint64_t>; // low-first, normalized

void norm(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mulp(const PolyP& a, const PolyP& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    norm(r);
    return r;
}

PolyP modp(PolyP a, const PolyP& m, uint64_t p) {
    // m monic
    while (a.size() >= m.size()) {
        uint64_t c = a.back();
        size_t off = a.size() - m.size();
        if (c) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t s = mulmod(c, m[i], p);
                uint64_t& t = a[off + i];
                t = (t + p - s) % p;
            }
        }
        a.pop_back();
        norm(a);
        if (a.size() < m.size()) break;
    }
    norm(a);
    return a;
}

PolyP powmod_xq(const PolyP& base, uint64_t e, const PolyP& m, uint64_t p) {
    PolyP r{1}, b = modp(base, m, p);
    while (e) {
        if (e & 1) r = modp(mulp(r, b, p), m, p);
        b = modp(mulp(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

PolyP modp_rem(PolyP a, const PolyP& b, uint64_t p) {
    // remainder of a by b (b nonzero, not necessarily monic)
    uint64_t li = invmod_u64(b.back(), p);
    while (a.size() >= b.size()) {
        uint64_t c = mulmod(a.back(), li, p);
        size_t off = a.size() - b.size();
        if (c) {
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t s = mulmod(c, b[i], p);
                uint64_t& t = a[off + i];
                t = (t + p - s) % p;
            }
        }
        a.pop_back();
        norm(a);
    }
    return a;
}

PolyP gcdp(PolyP a, PolyP b, uint64_t p) {
    norm(a); norm(b);
    while (!b.empty()) {
        PolyP r = modp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t c = invmod_u64(a.back(), p);
        for (auto& x : a) x = mulmod(x, c, p);
    }
    return a;
}

// x^(p^j) mod m, by iterating the p-th power map
PolyP frob_iter(const PolyP& m, uint64_t p, int j) {
    PolyP h{0, 1}; // x
    for (int i = 0; i < j; ++i) h = powmod_xq(h, p, m, p);
    return h;
}

bool irreducible_modp(const PolyP& m, uint64_t p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k < 1) return false;
    // x^(p^k) == x mod m
    PolyP h = frob_iter(m, p, k);
    PolyP x{0, 1};
    if (modp(h, m, p) != modp(x, m, p)) return false;
    // gcd(x^(p^(k/l)) - x, m) == 1 for prime l | k
    for (int l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        bool lp = true;
        for (int d = 2; d * d <= l; ++d) if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        PolyP g = frob_iter(m, p, k / l);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        norm(g);
        PolyP gg = gcdp(g, m, p);
        if (gg.size() != 1) return false;
    }
    return true;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

const FqCtx* FqCtx::get(uint64_t p, int k) {
    if (k < 1 || k > MAXK) throw std::invalid_argument("FqCtx: extension degree out of range");
    if (!is_prime_u64(p)) throw std::invalid_argument("FqCtx: p is not prime");
    static std::mutex mu;
    static std::map<std::pair<uint64_t, int>, std::unique_ptr<FqCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();

    auto ctx = std::make_unique<FqCtx>();
    ctx->p = p;
    ctx->k = k;
    mpz_class card;
    mpz_ui_pow_ui(card.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    ctx->card = card;
    ctx->mod.fill(0);
    if (k >= 2) {
        // smallest monic irreducible of degree k in the lexicographic order
        // of the coefficient counter a_0 + a_1*p + ... (a_i < p)
        mpz_class bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        for (mpz_class ctr = 0; ctr < bound; ++ctr) {
            PolyP m(static_cast<size_t>(k) + 1, 0);
            mpz_class t = ctr;
            for (int i = 0; i < k; ++i) {
                mpz_class digit = t % static_cast<unsigned long>(p);
                m[static_cast<size_t>(i)] = digit.get_ui();
                t /= static_cast<unsigned long>(p);
            }
            m[static_cast<size_t>(k)] = 1;
            if (irreducible_modp(m, p)) {
                for (int i = 0; i <= k; ++i) ctx->mod[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
                break;
            }
        }
        if (ctx->mod[static_cast<size_t>(k)] != 1)
            throw std::runtime_error("FqCtx: no irreducible modulus found");
    }
    const FqCtx* raw = ctx.get();
    cache.emplace(key, std::move(ctx));
    return raw;
}

Fq Fq::gen(const FqCtx* ctx) {
    Fq r = zero(ctx);
    if (ctx->k >= 2) r.c_[1] = 1;
    return r;
}

bool Fq::is_zero() const {
    if (!ctx_) return true;
    for (int i = 0; i < ctx_->k; ++i) if (c_[static_cast<size_t>(i)]) return false;
    return true;
}

bool Fq::is_one() const {
    if (!ctx_) return false;
    if (c_[0] != 1) return false;
    for (int i = 1; i < ctx_->k; ++i) if (c_[static_cast<size_t>(i)]) return false;
    return true;
}

bool Fq::in_prime_field() const {
    if (!ctx_) return true;
    for (int i = 1; i < ctx_->k; ++i) if (c_[static_cast<size_t>(i)]) return false;
    return true;
}

Fq Fq::operator-() const {
    if (!ctx_) return *this;
    Fq r = *this;
    for (int i = 0; i < ctx_->k; ++i) {
        size_t ii = static_cast<size_t>(i);
        r.c_[ii] = c_[ii] ? ctx_->p - c_[ii] : 0;
    }
    return r;
}

Fq& Fq::operator+=(const Fq& o) {
    if (!o.ctx_) return *this;
    if (!ctx_) { *this = o; return *this; }
    if (ctx_ != o.ctx_) throw std::invalid_argument("Fq: characteristic/context mismatch");
    for (int i = 0; i < ctx_->k; ++i) {
        size_t ii = static_cast<size_t>(i);
        c_[ii] += o.c_[ii];
        if (c_[ii] >= ctx_->p) c_[ii] -= ctx_->p;
    }
    return *this;
}

Fq& Fq::operator-=(const Fq& o) {
    if (!o.ctx_) return *this;
    if (!ctx_) { *this = -o; return *this; }
    if (ctx_ != o.ctx_) throw std::invalid_argument("Fq: characteristic/context mismatch");
    for (int i = 0; i < ctx_->k; ++i) {
        size_t ii = static_cast<size_t>(i);
        c_[ii] = (c_[ii] + ctx_->p - o.c_[ii]) % ctx_->p;
    }
    return *this;
}

Fq& Fq::operator*=(const Fq& o) {
    if (!ctx_ || !o.ctx_) { *this = Fq(); return *this; }
    if (ctx_ != o.ctx_) throw std::invalid_argument("Fq: characteristic/context mismatch");
    const uint64_t p = ctx_->p;
    const int k = ctx_->k;
    if (k == 1) {
        c_[0] = mulmod(c_[0], o.c_[0], p);
        return *this;
    }
    std::array<uint64_t, 2 * FqCtx::MAXK> t{};
    for (int i = 0; i < k; ++i) {
        if (!c_[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < k; ++j) {
            size_t ij = static_cast<size_t>(i + j);
            t[ij] = (t[ij] + static_cast<unsigned __int128>(c_[static_cast<size_t>(i)]) *
                                 o.c_[static_cast<size_t>(j)]) % p;
        }
    }
    // reduce by the monic modulus
    for (int i = 2 * k - 2; i >= k; --i) {
        uint64_t ci = t[static_cast<size_t>(i)];
        if (!ci) continue;
        t[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < k; ++j) {
            size_t tj = static_cast<size_t>(i - k + j);
            uint64_t s = mulmod(ci, ctx_->mod[static_cast<size_t>(j)], p);
            t[tj] = (t[tj] + p - s) % p;
        }
    }
    for (int i = 0; i < k; ++i) c_[static_cast<size_t>(i)] = t[static_cast<size_t>(i)];
    return *this;
}

bool operator==(const Fq& a, const Fq& b) {
    if (!a.ctx_ || !b.ctx_) return a.is_zero() && b.is_zero();
    if (a.ctx_ != b.ctx_) return false;
    for (int i = 0; i < a.ctx_->k; ++i)
        if (a.c_[static_cast<size_t>(i)] != b.c_[static_cast<size_t>(i)]) return false;
    return true;
}

bool operator<(const Fq& a, const Fq& b) {
    int ka = a.ctx_ ? a.ctx_->k : 1, kb = b.ctx_ ? b.ctx_->k : 1;
    for (int i = std::max(ka, kb) - 1; i >= 0; --i) {
        uint64_t ca = i < ka ? a.c_[static_cast<size_t>(i)] : 0;
        uint64_t cb = i < kb ? b.c_[static_cast<size_t>(i)] : 0;
        if (ca != cb) return ca < cb;
    }
    return false;
}

Fq Fq::inv() const {
    if (is_zero()) throw std::domain_error("Fq: inverse of zero");
    const uint64_t p = ctx_->p;
    if (ctx_->k == 1) {
        Fq r = *this;
        r.c_[0] = invmod_u64(c_[0], p);
        return r;
    }
    // extended Euclid in F_p[x] between this (deg < k) and the modulus
    PolyP a, m;
    for (int i = 0; i < ctx_->k; ++i) a.push_back(c_[static_cast<size_t>(i)]);
    norm(a);
    for (int i = 0; i <= ctx_->k; ++i) m.push_back(ctx_->mod[static_cast<size_t>(i)]);
    PolyP r0 = m, r1 = a, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        PolyP q;
        PolyP rem = r0;
        uint64_t li = invmod_u64(r1.back(), p);
        if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint64_t c = mulmod(rem.back(), li, p);
            size_t off = rem.size() - r1.size();
            q[off] = c;
            if (c) {
                for (size_t i = 0; i < r1.size(); ++i) {
                    uint64_t s = mulmod(c, r1[i], p);
                    rem[off + i] = (rem[off + i] + p - s) % p;
                }
            }
            rem.pop_back();
            norm(rem);
        }
        norm(q);
        // s = s0 - q*s1
        PolyP qs = mulp(q, s1, p);
        PolyP s = s0;
        if (s.size() < qs.size()) s.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s[i] = (s[i] + p - qs[i]) % p;
        norm(s);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s);
    }
    // r0 = gcd (a unit), s0 * a == r0 mod m
    if (r0.size() != 1) throw std::domain_error("Fq: inverse failed (modulus not irreducible?)");
    uint64_t ci = invmod_u64(r0[0], p);
    Fq r = zero(ctx_);
    for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(ctx_->k); ++i)
        r.c_[i] = mulmod(s0[i], ci, p);
    return r;
}

Fq Fq::pow(uint64_t e) const {
    Fq r = one(ctx_), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Fq Fq::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(mpz_class(-e));
    Fq r = one(ctx_), b = *this;
    mpz_class m = e;
    while (m > 0) {
        if (mpz_odd_p(m.get_mpz_t())) r *= b;
        b *= b;
        m >>= 1;
    }
    return r;
}

std::string Fq::str() const {
    if (!ctx_) return "0";
    std::ostringstream os;
    for (int i = 0; i < ctx_->k; ++i) {
        if (i) os << ",";
        os << c_[static_cast<size_t>(i)];
    }
    return os.str();
}

Fq embed(const Fq& a, const FqCtx* ext) {
    if (!a.ctx()) return Fq::zero(ext);
    if (a.ctx() == ext) return a;
    if (!a.in_prime_field() || a.ctx()->p != ext->p)
        throw std::invalid_argument("Fq: embed supports prime-field constants only");
    return Fq(ext, a.as_prime_field());
}

} // namespace enrq
