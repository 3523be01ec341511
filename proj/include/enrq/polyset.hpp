#pragma once
#include "enrq/multipoly.hpp"
#include "enrq/rng.hpp"

#include <array>
#include <string>

namespace enrq {

// The twelve input forms of the construction:
//   p_i : tridegree (1,2,0)   q_i : (0,0,2)   r_i : (2,2,0)   s_i : (2,0,2)
// All live in the (s,t|x|y) frame.
template <class K>
struct PolySetT {
    std::array<MultiPoly<K>, 3> p, q, r, s;

    static BlockDeg deg_p() { return {1, 2, 0, 0}; }
    static BlockDeg deg_q() { return {0, 0, 2, 0}; }
    static BlockDeg deg_r() { return {2, 2, 0, 0}; }
    static BlockDeg deg_s() { return {2, 0, 2, 0}; }

    // throws on the first tridegree violation
    void validate() const {
        auto check = [](const MultiPoly<K>& f, BlockDeg want, const char* who) {
            if (!f.is_tri_homogeneous(want))
                throw std::domain_error(std::string("PolySet: ") + who +
                                        " is not tri-homogeneous of tridegree " + want.str());
        };
        for (int i = 0; i < 3; ++i) {
            check(p[static_cast<size_t>(i)], deg_p(), "p");
            check(q[static_cast<size_t>(i)], deg_q(), "q");
            check(r[static_cast<size_t>(i)], deg_r(), "r");
            check(s[static_cast<size_t>(i)], deg_s(), "s");
        }
    }

    std::string canonical_string() const {
        std::string out;
        for (int i = 0; i < 3; ++i) out += "p" + std::to_string(i) + "=" + p[static_cast<size_t>(i)].str() + ";";
        for (int i = 0; i < 3; ++i) out += "q" + std::to_string(i) + "=" + q[static_cast<size_t>(i)].str() + ";";
        for (int i = 0; i < 3; ++i) out += "r" + std::to_string(i) + "=" + r[static_cast<size_t>(i)].str() + ";";
        for (int i = 0; i < 3; ++i) out += "s" + std::to_string(i) + "=" + s[static_cast<size_t>(i)].str() + ";";
        return out;
    }

    std::string digest() const { return hex64(fnv1a(canonical_string())); }
};

using PolySet = PolySetT<Rat>;
using PolySetFq = PolySetT<Fq>;

// Seeded random PolySet with integer coefficients drawn uniformly from
// [-height, height]; every monomial of the target tridegree gets a
// coefficient, so the forms are honestly "general".
PolySet random_polyset(uint64_t seed, int height = 9);

PolySetFq reduce_polyset(const PolySet& ps, const FqCtx* ctx);

// explicit coefficient-list (de)serialization; see docs for the schema
PolySet polyset_from_json_text(const std::string& text);
std::string polyset_to_json_text(const PolySet& ps);

} // namespace enrq
