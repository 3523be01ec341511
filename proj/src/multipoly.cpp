#include "enrq/multipoly.hpp"

namespace enrq {

namespace {
void splits3(int d, std::vector<std::array<int, 3>>& out) {
    out.clear();
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
}
} // namespace

std::vector<Exp> monomials_of(const BlockDeg& d) {
    std::vector<Exp> out;
    std::vector<std::array<int, 3>> xs, ys;
    splits3(d.x, xs);
    splits3(d.y, ys);
    for (int es = d.st; es >= 0; --es) {
        int et = d.st - es;
        for (const auto& ex : xs) {
            for (const auto& ey : ys) {
                Exp e{};
                e[0] = static_cast<uint8_t>(es);
                e[1] = static_cast<uint8_t>(et);
                e[2] = static_cast<uint8_t>(ex[0]);
                e[3] = static_cast<uint8_t>(ex[1]);
                e[4] = static_cast<uint8_t>(ex[2]);
                e[5] = static_cast<uint8_t>(ey[0]);
                e[6] = static_cast<uint8_t>(ey[1]);
                e[7] = static_cast<uint8_t>(ey[2]);
                out.push_back(e);
            }
        }
    }
    return out;
}

MultiPoly<Fq> reduce_mod(const MultiPoly<Rat>& f, const FqCtx* ctx) {
    MultiPoly<Fq> r(f.frame());
    const unsigned long p = static_cast<unsigned long>(ctx->p);
    for (const auto& [e, c] : f.terms()) {
        mpz_class num = c.num() % p;
        mpz_class den = c.den() % p;
        if (den == 0)
            throw std::domain_error("reduce_mod: denominator divisible by p (bad reduction)");
        if (num < 0) num += p;
        Fq fn(ctx, static_cast<uint64_t>(num.get_ui()));
        Fq fd(ctx, static_cast<uint64_t>(den.get_ui()));
        r.add_term(e, fn * fd.inv());
    }
    return r;
}

} // namespace enrq
