#pragma once
#include "enrq/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enrq {

// A point of P^1 x P^2 (x P^2), each block canonically scaled so its first
// nonzero coordinate is 1.
struct ProjPoint {
    std::vector<Fq> st, x, y; // y empty for P1 x P2 systems

    bool operator==(const ProjPoint& o) const { return st == o.st && x == o.x && y == o.y; }
    bool operator<(const ProjPoint& o) const;
    std::string str() const;
    // value t/s in the coordinate field, or nullopt for s = 0
    std::optional<Fq> affine_t() const;
};

struct BruteForceResult {
    enum class Status { Ok, BudgetExceeded, Degenerate };
    Status status = Status::Ok;
    std::vector<ProjPoint> points; // sorted, deduplicated under scaling
    std::string note;

    bool ok() const { return status == Status::Ok; }
};

// All common zeros over F_{q^ext} of a system over F_q on P^1 x P^2
// (frame STX) or P^1 x P^2 x P^2 (frame STXY), deduplicated under scaling.
// Strategy is chosen by enumeration budget:
//   - P^1-fiber scan with an exact P^2 solver when |P^1(F_{q^ext})| is small,
//   - elimination-guided fiber selection otherwise (STX only),
//   - full product scan for STXY systems within budget.
// Positive-dimensional solution sets are reported as Degenerate.
BruteForceResult brute_force_points(const std::vector<MultiPoly<Fq>>& system, int ext_degree);

// Plain product-space enumeration with the hard ambient guard
// |ambient(F_{q^ext})| <= 10^7. Used as the independent cross-check for the
// cleverer strategies.
BruteForceResult brute_force_points_exhaustive(const std::vector<MultiPoly<Fq>>& system,
                                               int ext_degree);

// Closed-point census of a 0-dimensional STX system: counts m_d of closed
// points of residue degree d for d = 1..dmax, via rational point counts over
// F_{q^d} and Moebius inversion. total_degree = sum d*m_d.
struct PointCensus {
    std::vector<long> rational_counts; // index d-1: #points over F_{q^d}
    std::vector<long> closed_counts;   // index d-1: m_d
    long total_degree = 0;
    bool degenerate = false;
    bool budget_exceeded = false;
};
PointCensus closed_point_census(const std::vector<MultiPoly<Fq>>& system, int dmax);

// Common zeros on P^2 over the coefficient field of a homogeneous system in
// one coordinate block (frame X or Y). degenerate = true when the solution
// set is positive-dimensional.
struct P2Solutions {
    std::vector<std::array<Fq, 3>> pts;
    bool degenerate = false;
};
P2Solutions solve_p2_system(const std::vector<MultiPoly<Fq>>& system);

MultiPoly<Fq> lift_multipoly(const MultiPoly<Fq>& f, const FqCtx* ext);

} // namespace enrq
