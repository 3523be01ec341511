#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enrq/fq.hpp"
#include "enrq/fq_factor.hpp"
#include "enrq/multipoly.hpp"
#include "enrq/rat.hpp"
#include "enrq/rng.hpp"
#include "enrq/unipoly.hpp"

#include <algorithm>

using namespace enrq;

namespace {

UniPoly<Rat> qpoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rat> c;
    for (long v : coeffs_low_first) c.emplace_back(v);
    return UniPoly<Rat>(std::move(c));
}

UniPoly<Fq> fqpoly(const FqCtx* ctx, std::initializer_list<long> coeffs_low_first) {
    std::vector<Fq> c;
    for (long v : coeffs_low_first) c.emplace_back(ctx, static_cast<int64_t>(v));
    return UniPoly<Fq>(std::move(c));
}

// independent determinant oracle: sum over permutations
template <class P>
P perm_det(const std::vector<std::vector<P>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    P acc{};
    bool first = true;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        P term = m[0][static_cast<size_t>(perm[0])];
        for (int i = 1; i < n; ++i)
            term = term * m[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
        if (inv % 2) term = -term;
        if (first) { acc = term; first = false; }
        else acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

TEST_CASE("rational arithmetic canonical form") {
    Rat a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(1, -2).den() == 2); // positive denominator
    CHECK(Rat(1, -2).num() == -1);
}

TEST_CASE("Fq basics and extension arithmetic") {
    const FqCtx* f5 = FqCtx::get(5);
    CHECK(Fq(f5, int64_t{-1}) == Fq(f5, uint64_t{4}));
    CHECK((Fq(f5, uint64_t{3}) * Fq(f5, uint64_t{4})) == Fq(f5, uint64_t{2}));
    CHECK(Fq(f5, uint64_t{3}).inv() * Fq(f5, uint64_t{3}) == Fq::one(f5));

    const FqCtx* f25 = FqCtx::get(5, 2);
    Fq g = Fq::gen(f25);
    // multiplicative group order 24
    CHECK(g.pow(uint64_t{24}) == Fq::one(f25));
    CHECK(g.pow(uint64_t{12}) != Fq::one(f25)); // g generates a group of even order > 12? not guaranteed
}

TEST_CASE("Fq inverse round-trips over extensions") {
    for (int k : {2, 3, 4}) {
        const FqCtx* ctx = FqCtx::get(7, k);
        Rng rng(42);
        for (int t = 0; t < 50; ++t) {
            Fq v = Fq::zero(ctx);
            for (int i = 0; i < k; ++i) v.set_coeff(i, rng.below(7));
            if (v.is_zero()) continue;
            CHECK(v * v.inv() == Fq::one(ctx));
        }
    }
}

TEST_CASE("multipoly power rule: d/dx0 (x0^2 y1) = 2 x0 y1") {
    MultiPoly<Rat> f(FRAME_STXY);
    Exp e{};
    e[static_cast<size_t>(Var::X0)] = 2;
    e[static_cast<size_t>(Var::Y1)] = 1;
    f.add_term(e, Rat(1));
    MultiPoly<Rat> d = f.partial_derivative(Var::X0);
    MultiPoly<Rat> want(FRAME_STXY);
    Exp e2{};
    e2[static_cast<size_t>(Var::X0)] = 1;
    e2[static_cast<size_t>(Var::Y1)] = 1;
    want.add_term(e2, Rat(2));
    CHECK(d == want);
}

TEST_CASE("tridegree additivity under multiplication") {
    MultiPoly<Rat> a(FRAME_STXY), b(FRAME_STXY);
    // a of tridegree (2,2,0): s^2 x0 x1 ; b of tridegree (2,0,2): t^2 y0 y2
    Exp ea{};
    ea[0] = 2; ea[2] = 1; ea[3] = 1;
    a.add_term(ea, Rat(3));
    Exp eb{};
    eb[1] = 2; eb[5] = 1; eb[7] = 1;
    b.add_term(eb, Rat(-2));
    auto da = a.homogeneous_block_degree();
    auto db = b.homogeneous_block_degree();
    REQUIRE(da.has_value());
    REQUIRE(db.has_value());
    CHECK(*da == BlockDeg{2, 2, 0, 0});
    CHECK(*db == BlockDeg{2, 0, 2, 0});
    auto dab = (a * b).homogeneous_block_degree();
    REQUIRE(dab.has_value());
    CHECK(*dab == BlockDeg{4, 2, 2, 0});
}

TEST_CASE("evaluation is a ring homomorphism over F_1009") {
    const FqCtx* ctx = FqCtx::get(1009);
    Rng rng(7);
    auto random_poly_stxy = [&](int terms) {
        MultiPoly<Fq> f(FRAME_STXY);
        for (int i = 0; i < terms; ++i) {
            Exp e{};
            for (int v = 0; v < 8; ++v) e[static_cast<size_t>(v)] = static_cast<uint8_t>(rng.below(3));
            f.add_term(e, Fq(ctx, rng.below(1009)));
        }
        return f;
    };
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly<Fq> f = random_poly_stxy(5), g = random_poly_stxy(5);
        std::array<Fq, NVARS> pt;
        for (auto& c : pt) c = Fq(ctx, rng.below(1009));
        std::span<const Fq, NVARS> sp(pt);
        CHECK((f + g).eval(sp) == f.eval(sp) + g.eval(sp));
        CHECK((f * g).eval(sp) == f.eval(sp) * g.eval(sp));
    }
}

TEST_CASE("pinned Sylvester convention: Res(x-1, x-2) = -1") {
    auto f = qpoly({-1, 1});
    auto g = qpoly({-2, 1});
    CHECK(resultant(f, g) == Rat(-1)); // |Res| = 1, sign from the pinned layout
}

TEST_CASE("Res(x^2+1, x+1) = 2") {
    CHECK(resultant(qpoly({1, 0, 1}), qpoly({1, 1})) == Rat(2));
}

TEST_CASE("resultant vanishes iff gcd nonconstant, over F_101") {
    const FqCtx* ctx = FqCtx::get(101);
    Rng rng(11);
    int nonzero_seen = 0, zero_seen = 0;
    for (int t = 0; t < 100; ++t) {
        UniPoly<Fq> f = random_poly(ctx, 3 + static_cast<int>(rng.below(3)), rng);
        UniPoly<Fq> g = random_poly(ctx, 3 + static_cast<int>(rng.below(3)), rng);
        if (t % 3 == 0) {
            // plant a common factor
            UniPoly<Fq> c = random_poly(ctx, 1, rng, true);
            f = f * c;
            g = g * c;
        }
        bool res_zero = resultant(f, g).is_zero();
        bool gcd_nonconst = poly_gcd(f, g).degree() > 0;
        CHECK(res_zero == gcd_nonconst);
        (res_zero ? zero_seen : nonzero_seen)++;
    }
    CHECK(zero_seen > 10);
    CHECK(nonzero_seen > 10);
}

TEST_CASE("resultant multiplicativity Res(fg,h) = Res(f,h)Res(g,h)") {
    const FqCtx* ctx = FqCtx::get(101);
    Rng rng(13);
    for (int t = 0; t < 50; ++t) {
        UniPoly<Fq> f = random_poly(ctx, 2 + static_cast<int>(rng.below(3)), rng);
        UniPoly<Fq> g = random_poly(ctx, 2 + static_cast<int>(rng.below(3)), rng);
        UniPoly<Fq> h = random_poly(ctx, 2 + static_cast<int>(rng.below(3)), rng);
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}

TEST_CASE("factor x^2 over F_3 is (x)^2") {
    const FqCtx* ctx = FqCtx::get(3);
    auto fs = factor_fq(fqpoly(ctx, {0, 0, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].mult == 2);
    CHECK(fs[0].poly == fqpoly(ctx, {0, 1}));
}

TEST_CASE("factor x^2+1 over F_5 is (x+2)(x+3)") {
    const FqCtx* ctx = FqCtx::get(5);
    auto fs = factor_fq(fqpoly(ctx, {1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].mult == 1);
    CHECK(fs[1].mult == 1);
    CHECK(fs[0].poly == fqpoly(ctx, {2, 1}));
    CHECK(fs[1].poly == fqpoly(ctx, {3, 1}));
}

TEST_CASE("remultiplication recovers the input over F_10039") {
    REQUIRE(is_prime_u64(10039));
    const FqCtx* ctx = FqCtx::get(10039);
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        int d = 1 + static_cast<int>(rng.below(24));
        UniPoly<Fq> f = random_poly(ctx, d, rng);
        auto fs = factor_fq(f);
        UniPoly<Fq> prod = UniPoly<Fq>::constant(f.lc());
        for (const auto& [q, m] : fs)
            for (int i = 0; i < m; ++i) prod = prod * q;
        CHECK(prod == f);
        for (const auto& [q, m] : fs) {
            (void)m;
            CHECK(is_irreducible_fq(q));
        }
    }
}

TEST_CASE("cycle type x^3 - x over F_5 is [1,1,1]") {
    const FqCtx* ctx = FqCtx::get(5);
    CHECK(cycle_type_fq(fqpoly(ctx, {0, -1, 0, 1})) == std::vector<int>{1, 1, 1});
}

TEST_CASE("cycle type x^2+1 over F_3 is [2]") {
    const FqCtx* ctx = FqCtx::get(3);
    CHECK(cycle_type_fq(fqpoly(ctx, {1, 0, 1})) == std::vector<int>{2});
}

TEST_CASE("cycle type rejects non-squarefree input with a gcd witness") {
    const FqCtx* ctx = FqCtx::get(5);
    auto f = fqpoly(ctx, {0, 1}) * fqpoly(ctx, {0, 1}) * fqpoly(ctx, {1, 1});
    CHECK_THROWS_AS(cycle_type_fq(f), NotSquarefreeError);
    try {
        cycle_type_fq(f);
    } catch (const NotSquarefreeError& e) {
        CHECK(e.witness.degree() >= 1);
    }
}

TEST_CASE("cycle type agrees with full factorization on 200 random squarefree inputs") {
    const FqCtx* ctx = FqCtx::get(101);
    Rng rng(23);
    int done = 0;
    while (done < 200) {
        UniPoly<Fq> f = random_poly(ctx, 2 + static_cast<int>(rng.below(14)), rng);
        if (!is_squarefree(f)) continue;
        ++done;
        std::vector<int> t1 = cycle_type_fq(f);
        std::vector<int> t2;
        for (const auto& [q, m] : factor_fq(f)) {
            CHECK(m == 1);
            t2.push_back(q.degree());
        }
        std::sort(t2.begin(), t2.end());
        CHECK(t1 == t2);
    }
}

TEST_CASE("derivative linearity and Leibniz rule, exact over Q") {
    Rng rng(29);
    auto rnd = [&]() {
        std::vector<Rat> c;
        int d = 1 + static_cast<int>(rng.below(6));
        for (int i = 0; i <= d; ++i) c.emplace_back(rng.range(-9, 9));
        return UniPoly<Rat>(std::move(c));
    };
    for (int t = 0; t < 50; ++t) {
        auto f = rnd(), g = rnd();
        CHECK((f + g).derivative() == f.derivative() + g.derivative());
        CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    }
}

TEST_CASE("matrix minors: 2x2 of [[a,b],[c,d]] is ad-bc") {
    MultiPoly<Rat> a = MultiPoly<Rat>::variable(FRAME_STXY, Var::X0, Rat(1));
    MultiPoly<Rat> b = MultiPoly<Rat>::variable(FRAME_STXY, Var::X1, Rat(1));
    MultiPoly<Rat> c = MultiPoly<Rat>::variable(FRAME_STXY, Var::Y0, Rat(1));
    MultiPoly<Rat> d = MultiPoly<Rat>::variable(FRAME_STXY, Var::Y1, Rat(1));
    auto ms = matrix_minors<MultiPoly<Rat>>({{a, b}, {c, d}}, 2);
    REQUIRE(ms.size() == 1);
    CHECK(ms[0] == a * d - b * c);
}

TEST_CASE("matrix with a zero row has vanishing maximal minors") {
    MultiPoly<Rat> z(FRAME_STXY);
    MultiPoly<Rat> a = MultiPoly<Rat>::variable(FRAME_STXY, Var::S, Rat(1));
    auto ms = matrix_minors<MultiPoly<Rat>>({{a, a, a}, {z, z, z}}, 2);
    REQUIRE(ms.size() == 3);
    for (const auto& m : ms) CHECK(m.is_zero());
}

TEST_CASE("Laplace expansion equals permutation-sum on random 3x3 polynomial matrices") {
    Rng rng(31);
    auto rnd = [&]() {
        MultiPoly<Rat> f(FRAME_STXY);
        for (int i = 0; i < 3; ++i) {
            Exp e{};
            for (int v = 0; v < 4; ++v) e[static_cast<size_t>(v)] = static_cast<uint8_t>(rng.below(2));
            f.add_term(e, Rat(rng.range(-5, 5)));
        }
        return f;
    };
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<MultiPoly<Rat>>> m(3, std::vector<MultiPoly<Rat>>(3));
        for (auto& row : m)
            for (auto& e : row) e = rnd();
        CHECK(laplace_det(m) == perm_det(m));
    }
}

TEST_CASE("deg-0 resultant conventions") {
    // matches the determinant of the (possibly empty) Sylvester matrix
    CHECK(resultant(qpoly({5}), qpoly({0, 0, 1})) == Rat(25)); // 5^2
    CHECK(resultant(qpoly({0, 0, 1}), qpoly({5})) == Rat(25));
    CHECK(resultant(qpoly({7}), qpoly({3})) == Rat(1));
}

TEST_CASE("bareiss determinant over F_q[u] agrees with Gaussian value at samples") {
    const FqCtx* ctx = FqCtx::get(101);
    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        std::vector<std::vector<UniPoly<Fq>>> m(4, std::vector<UniPoly<Fq>>(4));
        for (auto& row : m)
            for (auto& e : row) e = random_poly(ctx, static_cast<int>(rng.below(3)), rng);
        UniPoly<Fq> d = det_bareiss(m);
        for (int s = 0; s < 5; ++s) {
            Fq a(ctx, rng.below(101));
            std::vector<std::vector<Fq>> mv(4, std::vector<Fq>(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    mv[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(a);
            CHECK(d.eval(a) == det_gauss(mv));
        }
    }
}

TEST_CASE("frame mismatch raises") {
    MultiPoly<Rat> a = MultiPoly<Rat>::variable(FRAME_STX, Var::S, Rat(1));
    MultiPoly<Rat> b = MultiPoly<Rat>::variable(FRAME_STXY, Var::S, Rat(1));
    CHECK_THROWS_AS(a + b, FrameMismatchError);
}

TEST_CASE("characteristic mismatch raises") {
    const FqCtx* f5 = FqCtx::get(5);
    const FqCtx* f7 = FqCtx::get(7);
    Fq a(f5, uint64_t{1}), b(f7, uint64_t{1});
    CHECK_THROWS(a + b);
}
