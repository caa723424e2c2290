#pragma once

#include "omcalc/phase_grid.hpp"
#include "omcalc/polynomial.hpp"

namespace omcalc {

// Smooth plateau taper along one axis: identically 1 for |x| <= r0 * L,
// rolling off C^inf-style to zero by |x| = r1 * L. Polynomial symbols
// do not vanish at the window boundary on their own; multiplying by this
// taper makes them admissible for the transform while leaving the central
// plateau untouched, so interior comparisons still see the bare polynomial.
double plateau_taper(double x, double L, double r0 = 0.70, double r1 = 0.95);

// Sample a (q,p)-polynomial on the grid with the product taper applied.
Symbol sample_windowed_polynomial(GridPtr grid, Ordering ordering, const Poly2& poly,
                                  double r0 = 0.70, double r1 = 0.95);

// Tapered monomial q^n p^m (unit coefficient).
Symbol monomial_symbol(GridPtr grid, Ordering ordering, int n, int m);

// Indices of the central `fraction` sub-window along each axis (d = 1).
struct InteriorBox {
    int j0, j1, k0, k1; // half-open index ranges
};
InteriorBox interior_box(const PhaseGrid& grid, double fraction = 0.5);

// Max |a - b| / max(interior |b|, floor) over the central sub-window.
double interior_rel_error(const Symbol& a, const Symbol& b, double fraction = 0.5);

// Max |a - ref(z)| over the central sub-window, relative to max |ref|.
double interior_rel_error_vs(const Symbol& a, const std::function<cplx(const PhasePoint&)>& ref,
                             double fraction = 0.5);

} // namespace omcalc
