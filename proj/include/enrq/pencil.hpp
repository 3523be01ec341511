#pragma once
#include "enrq/polyset.hpp"

#include <array>
#include <optional>
#include <vector>

namespace enrq {

// 2x3 matrix of the one-parameter pencil of bundle maps. Row one entries are
// tri-homogeneous (2,2,0) and linear in (lambda,mu); row two (2,0,2).
template <class K>
struct PencilMatrixT {
    std::array<std::array<MultiPoly<K>, 3>, 2> m;
    void validate() const {
        for (int j = 0; j < 3; ++j) {
            auto d1 = m[0][static_cast<size_t>(j)].homogeneous_block_degree();
            auto d2 = m[1][static_cast<size_t>(j)].homogeneous_block_degree();
            if (!d1 || !(*d1 == BlockDeg{2, 2, 0, 1}))
                throw std::domain_error("pencil: row 1 entry fails (2,2,0) x lm-linear grading");
            if (!d2 || !(*d2 == BlockDeg{2, 0, 2, 1}))
                throw std::domain_error("pencil: row 2 entry fails (2,0,2) x lm-linear grading");
        }
    }
};

// 2x3 matrix after substituting a base point (lambda:mu)
template <class K>
struct SpecializedPencilT {
    std::array<std::array<MultiPoly<K>, 3>, 2> m;
    std::pair<K, K> base; // the substituted (lambda, mu)
};

// The three 2x2 minors of a specialized pencil, each of tridegree (4,2,2).
template <class K>
struct DegeneracyIdealT {
    std::vector<MultiPoly<K>> minors; // order: (cols 01), (cols 02), (cols 12)
    std::pair<K, K> base;
};

namespace detail {
template <class K>
MultiPoly<K> var_poly(Var v, const K& one) {
    return MultiPoly<K>::variable(FRAME_PENCIL, v, one);
}
} // namespace detail

// Entry pattern:
//   row 1: lam*s*p0 + mu*r0,  lam*(s-t)*p1 + mu*r1,  lam*(s+t)*p2 + mu*r2
//   row 2: lam*s*t*q0 + mu*s0, lam*t*(s-t)*q1 + mu*s1, lam*t*(s+t)*q2 + mu*s2
template <class K>
PencilMatrixT<K> build_pencil(const PolySetT<K>& ps) {
    ps.validate();
    K one = [&] {
        for (const auto& f : ps.p)
            for (const auto& [e, c] : f.terms()) { (void)e; return c * c.inv(); }
        throw std::domain_error("build_pencil: empty PolySet");
    }();
    using detail::var_poly;
    MultiPoly<K> S = var_poly(Var::S, one), T = var_poly(Var::T, one);
    MultiPoly<K> L = var_poly(Var::LAM, one), M = var_poly(Var::MU, one);
    std::array<MultiPoly<K>, 3> fac1 = {S, S - T, S + T};
    std::array<MultiPoly<K>, 3> fac2 = {S * T, T * (S - T), T * (S + T)};
    PencilMatrixT<K> pm;
    for (int j = 0; j < 3; ++j) {
        size_t js = static_cast<size_t>(j);
        pm.m[0][js] = L * fac1[js] * ps.p[js].promoted(FRAME_PENCIL) +
                      M * ps.r[js].promoted(FRAME_PENCIL);
        pm.m[1][js] = L * fac2[js] * ps.q[js].promoted(FRAME_PENCIL) +
                      M * ps.s[js].promoted(FRAME_PENCIL);
    }
    pm.validate();
    return pm;
}

template <class K>
SpecializedPencilT<K> specialize(const PencilMatrixT<K>& pm, const K& lam, const K& mu) {
    SpecializedPencilT<K> sp;
    sp.base = {lam, mu};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            sp.m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                pm.m[static_cast<size_t>(i)][static_cast<size_t>(j)]
                    .substitute({{Var::LAM, lam}, {Var::MU, mu}})
                    .promoted(FRAME_STXY);
    return sp;
}

// The three 2x2 minors of the specialized matrix, in column-pair order
// (0,1), (0,2), (1,2). Tridegree (4,2,2).
template <class K>
DegeneracyIdealT<K> degeneracy_ideal(const SpecializedPencilT<K>& sp) {
    DegeneracyIdealT<K> di;
    di.base = sp.base;
    std::vector<std::vector<MultiPoly<K>>> m = {
        {sp.m[0][0], sp.m[0][1], sp.m[0][2]},
        {sp.m[1][0], sp.m[1][1], sp.m[1][2]},
    };
    di.minors = matrix_minors(m, 2);
    for (const auto& g : di.minors) {
        if (!g.is_tri_homogeneous({4, 2, 2, 0}))
            throw std::domain_error("degeneracy ideal: minor fails (4,2,2) grading");
    }
    return di;
}

// Equations of the top row at a base point: three (2,2)-forms on P^1 x P^2
// (the y-block does not occur).
template <class K>
std::array<MultiPoly<K>, 3> cover_equations(const PolySetT<K>& ps, const K& lam, const K& mu) {
    PencilMatrixT<K> pm = build_pencil(ps);
    std::array<MultiPoly<K>, 3> eq;
    for (int j = 0; j < 3; ++j) {
        size_t js = static_cast<size_t>(j);
        MultiPoly<K> e =
            pm.m[0][js].substitute({{Var::LAM, lam}, {Var::MU, mu}});
        // the result mentions only s,t,x; keep the STX frame for downstream work
        eq[js] = MultiPoly<K>(FRAME_STX);
        for (const auto& [ex, c] : e.terms()) eq[js].add_term(ex, c);
        if (!eq[js].is_tri_homogeneous({2, 2, 0, 0}))
            throw std::domain_error("cover equations: entry fails (2,2) grading");
    }
    return eq;
}

} // namespace enrq
