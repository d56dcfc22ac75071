#pragma once

#include "gtnl/bell.hpp"
#include "gtnl/numeric.hpp"
#include "gtnl/scenario.hpp"

#include <string>
#include <vector>

namespace gtnl {

/// Halfspace representation in exact rationals: equality rows eq.x = eq_rhs
/// and inequality rows ineq.x >= ineq_rhs over an ambient dimension.
struct HRep {
    int dim = 0;
    std::vector<std::vector<Rat>> eq;
    std::vector<Rat> eq_rhs;
    std::vector<std::vector<Rat>> ineq;
    std::vector<Rat> ineq_rhs;
    std::string label;

    void check_consistent_shape() const;
};

/// No-signalling polytope of a three-party binary-outcome scenario:
/// marginal equalities for consecutive setting pairs, one normalization row
/// per settings triple, non-negativity for every cell.
HRep build_ns_hrep(const Scenario& s);

/// Two-party analogue (binary outcomes), used by small-instance oracles.
HRep build_ns_hrep_bipartite(int nx, int ny);

/// Appends the inequality bound - B.P >= 0 (i.e. B.P <= bound).
HRep intersect_halfspace(HRep h, const BellVector& w);

/// Appends the equality B.P = bound.
HRep intersect_hyperplane(HRep h, const BellVector& w);

/// Dimension of the affine hull of the equality system's solution set,
/// dim - rank(eq); -1 when the equalities are inconsistent. (Implicit
/// equalities hiding among the inequalities are not detected.)
int affine_dimension(const HRep& h);

/// Parametrization x = point + basis * t of the equality system's solution
/// set; consistent == false when the system has no solution.
struct AffineChart {
    bool consistent = true;
    std::vector<Rat> point;               // size dim
    std::vector<std::vector<Rat>> basis;  // k columns, each of size dim
};

AffineChart solve_equalities(const HRep& h);

}  // namespace gtnl
