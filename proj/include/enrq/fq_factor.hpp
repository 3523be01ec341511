#pragma once
#include "enrq/fq.hpp"
#include "enrq/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace enrq {

struct NotSquarefreeError : std::domain_error {
    UniPoly<Fq> witness; // nonconstant gcd(f, f')
    explicit NotSquarefreeError(UniPoly<Fq> w)
        : std::domain_error("polynomial is not squarefree; gcd(f,f') = " + w.str()),
          witness(std::move(w)) {}
};

struct FqFactor {
    UniPoly<Fq> poly; // monic irreducible
    int mult = 0;
};

// Full factorization over F_{p^k}: squarefree split, distinct-degree split,
// then randomized equal-degree splitting. The returned list is sorted
// canonically (degree, then coefficients), so the output does not depend on
// the splitting randomness; `seed` only perturbs the internal search.
std::vector<FqFactor> factor_fq(const UniPoly<Fq>& f, uint64_t seed = 0x0fac70e5eedull);

// Degrees of the irreducible factors of a squarefree polynomial, sorted
// ascending. Uses distinct-degree splitting only. Throws NotSquarefreeError
// (carrying the gcd witness) if gcd(f, f') is nonconstant.
std::vector<int> cycle_type_fq(const UniPoly<Fq>& f);

bool is_irreducible_fq(const UniPoly<Fq>& f);

// Roots of f lying in its coefficient field, sorted canonically.
std::vector<Fq> roots_in_field(const UniPoly<Fq>& f, uint64_t seed = 0x0fac70e5eedull);

// Coefficient-wise embedding of a prime-field polynomial into an extension.
UniPoly<Fq> lift_poly(const UniPoly<Fq>& f, const FqCtx* ext);

// Lexicographically smallest monic irreducible of degree k over F_p
// (the modulus FqCtx::get(p, k) uses).
UniPoly<Fq> minimal_irreducible(uint64_t p, int k);

// Uniformly random polynomial of degree exactly d (monic if `monic`).
UniPoly<Fq> random_poly(const FqCtx* ctx, int d, class Rng& rng, bool monic = false);

} // namespace enrq
