#pragma once
#include "enrq/pencil.hpp"

namespace enrq {

// Components of the special fiber over (lambda:mu) = (1,0) of the flat
// closure of the pencil family, together with the plane groups carried by
// each component.
template <class K>
struct FlatLimitT {
    // X~0: the 2x2 minors of N = [[p0,p1,p2],[q0,q1,q2]]
    std::vector<MultiPoly<K>> x0_eqs;
    // R0: t = det[[p],[q],[s-row]] = 0
    std::vector<MultiPoly<K>> r0_eqs;
    // R1: s = p2 q1 - p1 q2 = 0 ; R2: s-t = p2 q0 - p0 q2 = 0 ; R3: s+t = p1 q0 - p0 q1 = 0
    std::array<std::vector<MultiPoly<K>>, 3> r_eqs;
    // plane groups: 12 planes p0 = p1 = p2 = 0 on X~0, and 4 planes each on R_l
    std::vector<MultiPoly<K>> x0_planes;
    std::array<std::vector<MultiPoly<K>>, 3> r_planes;
    // generators of the flat closure: the 3x3 minors of the bordered matrix
    std::vector<MultiPoly<K>> closure_minors;
};

template <class K>
FlatLimitT<K> flat_limit(const PolySetT<K>& ps) {
    ps.validate();
    K one = [&] {
        for (const auto& f : ps.p)
            for (const auto& [e, c] : f.terms()) { (void)e; return c * c.inv(); }
        throw std::domain_error("flat_limit: empty PolySet");
    }();
    auto V = [&](Var v) { return MultiPoly<K>::variable(FRAME_PENCIL, v, one); };
    MultiPoly<K> S = V(Var::S), T = V(Var::T), L = V(Var::LAM), M = V(Var::MU);
    auto up = [&](const MultiPoly<K>& f) { return f.promoted(FRAME_PENCIL); };

    FlatLimitT<K> fl;
    std::vector<std::vector<MultiPoly<K>>> N = {
        {up(ps.p[0]), up(ps.p[1]), up(ps.p[2])},
        {up(ps.q[0]), up(ps.q[1]), up(ps.q[2])},
    };
    fl.x0_eqs = matrix_minors(N, 2);

    std::vector<std::vector<MultiPoly<K>>> pqs = {
        {up(ps.p[0]), up(ps.p[1]), up(ps.p[2])},
        {up(ps.q[0]), up(ps.q[1]), up(ps.q[2])},
        {up(ps.s[0]), up(ps.s[1]), up(ps.s[2])},
    };
    fl.r0_eqs = {T, laplace_det(pqs)};

    // R_l: one P^1-linear form plus one 2x2 minor of N
    fl.r_eqs[0] = {S, up(ps.p[2]) * up(ps.q[1]) - up(ps.p[1]) * up(ps.q[2])};
    fl.r_eqs[1] = {S - T, up(ps.p[2]) * up(ps.q[0]) - up(ps.p[0]) * up(ps.q[2])};
    fl.r_eqs[2] = {S + T, up(ps.p[1]) * up(ps.q[0]) - up(ps.p[0]) * up(ps.q[1])};

    fl.x0_planes = {up(ps.p[0]), up(ps.p[1]), up(ps.p[2])};
    fl.r_planes[0] = {S, up(ps.p[1]), up(ps.p[2])};
    fl.r_planes[1] = {S - T, up(ps.p[0]), up(ps.p[2])};
    fl.r_planes[2] = {S + T, up(ps.p[0]), up(ps.p[1])};

    // flat closure: 3x3 minors of
    //   [ lam*s*p0+mu*r0   lam*(s-t)*p1+mu*r1   lam*(s+t)*p2+mu*r2   0  ]
    //   [ lam*s*q0         lam*(s-t)*q1         lam*(s+t)*q2         mu ]
    //   [ s0               s1                   s2                  -t  ]
    PencilMatrixT<K> pm = build_pencil(ps);
    MultiPoly<K> zero(FRAME_PENCIL);
    std::vector<std::vector<MultiPoly<K>>> B = {
        {pm.m[0][0], pm.m[0][1], pm.m[0][2], zero},
        {L * S * up(ps.q[0]), L * (S - T) * up(ps.q[1]), L * (S + T) * up(ps.q[2]), M},
        {up(ps.s[0]), up(ps.s[1]), up(ps.s[2]), -T},
    };
    fl.closure_minors = matrix_minors(B, 3);
    return fl;
}

// Certifies that two of the R_l components are disjoint: their combined
// ideal contains both s and t (hence 1 on every chart of P^1), because the
// two P^1-linear generators are independent. Returns true when the linear
// parts span <s, t>.
template <class K>
bool linear_parts_span_st(const MultiPoly<K>& a, const MultiPoly<K>& b) {
    auto coeff_of = [](const MultiPoly<K>& f, Var v) {
        Exp e{};
        e[static_cast<size_t>(v)] = 1;
        auto it = f.terms().find(e);
        return it == f.terms().end() ? K() : it->second;
    };
    K a0 = coeff_of(a, Var::S), a1 = coeff_of(a, Var::T);
    K b0 = coeff_of(b, Var::S), b1 = coeff_of(b, Var::T);
    K det = a0 * b1 - a1 * b0;
    return !det.is_zero();
}

} // namespace enrq
