#pragma once

#include "omcalc/phase_grid.hpp"
#include "omcalc/phase_point.hpp"

namespace omcalc {

enum class Strictness { strict_everywhere, strict_on_multipliers, formal_only };

// One row of the ordering table: the factor Omega(zeta) dividing the symbol's
// symplectic Fourier transform, plus metadata used by the conversion guards.
struct OrderingRule {
    Ordering name;
    bool has_zeros;          // entire-function zero set is nonempty
    Strictness strictness;

    // Omega evaluated verbatim at zeta, through the complex coordinates
    // zeta+/- of the point. On real lattices the quadratic argument
    // (1/4)[(zeta+)^2 - (zeta-)^2] equals (i/2) zeta_q zeta_p, so the
    // symmetric and Born-Jordan rows become hyperbolic (zero-free but
    // unbounded); the magnitude guards in the conversion code handle the
    // extreme cells.
    cplx omega(const PhasePoint& zeta) const;

    // Omega with the frequency argument measured in sqrt(hbar) units,
    // Omega(zeta / sqrt(hbar)). This is the factor the strict-symbol
    // conversions actually divide by; the scaling is pinned by the matrix
    // oracles (e.g. Weyl z+z- converts to normal z+z- + hbar/2).
    cplx omega_scaled(const PhasePoint& zeta, double hbar) const;
};

const OrderingRule& ordering_rule(Ordering name);

// omega factor on a grid's frequency lattice (d = 1), scaled variant.
Eigen::VectorXcd omega_table_on_dual(const PhaseGrid& grid, Ordering rule);

} // namespace omcalc
