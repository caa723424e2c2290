#pragma once

#include <array>
#include <cstddef>

#include "omcalc/types.hpp"

namespace omcalc {

// A point of flat phase space R^{2d}, d <= 2. Complex coordinates follow
//   z+ = (q + i p)/sqrt(2),   z- = (q - i p)/sqrt(2)
// componentwise, so (q, p) is recovered exactly from (z+, z-).
struct PhasePoint {
    int d = 1;
    std::array<double, 2> q{0.0, 0.0};
    std::array<double, 2> p{0.0, 0.0};

    static PhasePoint make1d(double q0, double p0) { return PhasePoint{1, {q0, 0.0}, {p0, 0.0}}; }
    static PhasePoint make2d(double q0, double q1, double p0, double p1) {
        return PhasePoint{2, {q0, q1}, {p0, p1}};
    }

    cplx zplus(int axis = 0) const { return cplx(q[axis], p[axis]) / std::sqrt(2.0); }
    cplx zminus(int axis = 0) const { return cplx(q[axis], -p[axis]) / std::sqrt(2.0); }

    static PhasePoint from_complex(int d, const std::array<cplx, 2>& zp) {
        PhasePoint z;
        z.d = d;
        for (int a = 0; a < d; ++a) {
            z.q[a] = std::sqrt(2.0) * zp[a].real();
            z.p[a] = std::sqrt(2.0) * zp[a].imag();
        }
        return z;
    }
};

// Standard symplectic form [z1, z2] = p1.q2 - p2.q1 (real-valued, antisymmetric).
double symplectic_form(const PhasePoint& z1, const PhasePoint& z2);

// The same form written in complex coordinates, (1/i)(z1+ z2- - z1- z2+).
// Equals symplectic_form up to roundoff; exposed so the identity can be checked.
cplx symplectic_form_complex(const PhasePoint& z1, const PhasePoint& z2);

} // namespace omcalc
