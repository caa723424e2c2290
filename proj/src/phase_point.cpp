#include "omcalc/phase_point.hpp"

#include <cmath>

namespace omcalc {

double symplectic_form(const PhasePoint& z1, const PhasePoint& z2) {
    if (z1.d != z2.d) throw validation_error("symplectic_form: dimension mismatch");
    double s = 0.0;
    for (int a = 0; a < z1.d; ++a) s += z1.p[a] * z2.q[a] - z2.p[a] * z1.q[a];
    return s;
}

cplx symplectic_form_complex(const PhasePoint& z1, const PhasePoint& z2) {
    if (z1.d != z2.d) throw validation_error("symplectic_form: dimension mismatch");
    cplx s = 0.0;
    for (int a = 0; a < z1.d; ++a)
        s += z1.zplus(a) * z2.zminus(a) - z1.zminus(a) * z2.zplus(a);
    return s / cplx(0.0, 1.0);
}

} // namespace omcalc
