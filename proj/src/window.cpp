#include "omcalc/window.hpp"

#include <cmath>

namespace omcalc {

double plateau_taper(double x, double L, double r0, double r1) {
    const double a = std::abs(x) / L;
    if (a <= r0) return 1.0;
    if (a >= r1) return 0.0;
    // smooth step based on exp(-1/t): C^inf transition
    const double t = (a - r0) / (r1 - r0);
    const double f1 = std::exp(-1.0 / std::max(t, 1e-300));
    const double f2 = std::exp(-1.0 / std::max(1.0 - t, 1e-300));
    return f2 / (f1 + f2);
}

Symbol sample_windowed_polynomial(GridPtr grid, Ordering ordering, const Poly2& poly, double r0,
                                  double r1) {
    if (grid->d != 1) throw validation_error("sample_windowed_polynomial: d = 1 only");
    Symbol s(grid, ordering, Domain::phase);
    const PhaseGrid& g = *grid;
    std::vector<double> wq(g.n_q), wp(g.n_p);
    for (int j = 0; j < g.n_q; ++j) wq[j] = plateau_taper(g.q(j), g.L_q, r0, r1);
    for (int k = 0; k < g.n_p; ++k) wp[k] = plateau_taper(g.p(k), g.L_p, r0, r1);
    for (int j = 0; j < g.n_q; ++j)
        for (int k = 0; k < g.n_p; ++k)
            s.at(j, k) = poly.eval(g.q(j), g.p(k)) * wq[j] * wp[k];
    return s;
}

Symbol monomial_symbol(GridPtr grid, Ordering ordering, int n, int m) {
    return sample_windowed_polynomial(grid, ordering, Poly2::monomial(n, m));
}

InteriorBox interior_box(const PhaseGrid& g, double fraction) {
    const int mq = static_cast<int>(g.n_q * (1.0 - fraction) / 2.0);
    const int mp = static_cast<int>(g.n_p * (1.0 - fraction) / 2.0);
    return {mq, g.n_q - mq, mp, g.n_p - mp};
}

double interior_rel_error(const Symbol& a, const Symbol& b, double fraction) {
    const PhaseGrid& g = *a.grid;
    const auto box = interior_box(g, fraction);
    double scale = 0.0, err = 0.0;
    for (int j = box.j0; j < box.j1; ++j)
        for (int k = box.k0; k < box.k1; ++k) scale = std::max(scale, std::abs(b.at(j, k)));
    if (scale == 0.0) scale = 1.0;
    for (int j = box.j0; j < box.j1; ++j)
        for (int k = box.k0; k < box.k1; ++k)
            err = std::max(err, std::abs(a.at(j, k) - b.at(j, k)));
    return err / scale;
}

double interior_rel_error_vs(const Symbol& a, const std::function<cplx(const PhasePoint&)>& ref,
                             double fraction) {
    const PhaseGrid& g = *a.grid;
    const auto box = interior_box(g, fraction);
    double scale = 0.0, err = 0.0;
    for (int j = box.j0; j < box.j1; ++j)
        for (int k = box.k0; k < box.k1; ++k) {
            const cplx r = ref(g.point(j, k));
            scale = std::max(scale, std::abs(r));
            err = std::max(err, std::abs(a.at(j, k) - r));
        }
    if (scale == 0.0) scale = 1.0;
    return err / scale;
}

} // namespace omcalc
