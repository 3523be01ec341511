#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace enrq {

// Context for F_{p^k}: prime p, extension degree k <= 12, monic irreducible
// modulus (lowest coefficient first, mod[k] == 1). Contexts are interned and
// immutable; pointers are stable for the process lifetime and can be shared
// across threads.
struct FqCtx {
    static constexpr int MAXK = 12;

    uint64_t p = 0;
    int k = 1;
    std::array<uint64_t, MAXK + 1> mod{};
    mpz_class card; // p^k

    // Interned context. For k >= 2 the modulus is the lexicographically
    // smallest monic irreducible of degree k, so every run agrees on the
    // coordinates of extension-field elements.
    static const FqCtx* get(uint64_t p, int k = 1);

    bool operator==(const FqCtx& o) const { return p == o.p && k == o.k; }
};

bool is_prime_u64(uint64_t n);

class Fq {
public:
    Fq() = default;
    Fq(const FqCtx* ctx, uint64_t v) : ctx_(ctx) { c_.fill(0); c_[0] = v % ctx->p; }
    Fq(const FqCtx* ctx, int64_t v) : ctx_(ctx) {
        c_.fill(0);
        int64_t m = v % static_cast<int64_t>(ctx->p);
        if (m < 0) m += static_cast<int64_t>(ctx->p);
        c_[0] = static_cast<uint64_t>(m);
    }

    static Fq zero(const FqCtx* ctx) { return Fq(ctx, uint64_t{0}); }
    static Fq one(const FqCtx* ctx) { return Fq(ctx, uint64_t{1}); }
    // the generator of the extension (the class of x); for k == 1 this is 0
    static Fq gen(const FqCtx* ctx);

    const FqCtx* ctx() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    uint64_t coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    void set_coeff(int i, uint64_t v) { c_[static_cast<size_t>(i)] = v; }

    // true if the element lies in the prime field
    bool in_prime_field() const;
    uint64_t as_prime_field() const { return c_[0]; }

    Fq operator-() const;
    Fq& operator+=(const Fq& o);
    Fq& operator-=(const Fq& o);
    Fq& operator*=(const Fq& o);
    Fq& operator/=(const Fq& o) { return *this *= o.inv(); }

    friend Fq operator+(Fq a, const Fq& b) { a += b; return a; }
    friend Fq operator-(Fq a, const Fq& b) { a -= b; return a; }
    friend Fq operator*(Fq a, const Fq& b) { a *= b; return a; }
    friend Fq operator/(Fq a, const Fq& b) { a /= b; return a; }

    friend bool operator==(const Fq& a, const Fq& b);
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
    // lexicographic on coefficients; used for canonical sorting only
    friend bool operator<(const Fq& a, const Fq& b);

    Fq inv() const;
    Fq pow(const mpz_class& e) const;
    Fq pow(uint64_t e) const;

    std::string str() const;

private:
    std::array<uint64_t, FqCtx::MAXK> c_{};
    const FqCtx* ctx_ = nullptr;

    friend struct FqCtx;
};

// lift an element of F_p into F_{p^k} (constant embedding)
Fq embed(const Fq& a, const FqCtx* ext);

} // namespace enrq
