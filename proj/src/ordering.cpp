#include "omcalc/ordering.hpp"

#include <array>
#include <cmath>

namespace omcalc {

namespace {

// (1/4) sum_a [(zeta_a^+)^2 - (zeta_a^-)^2]
cplx quad_argument(const PhasePoint& z) {
    cplx x = 0.0;
    for (int a = 0; a < z.d; ++a) {
        const cplx zp = z.zplus(a), zm = z.zminus(a);
        x += zp * zp - zm * zm;
    }
    return 0.25 * x;
}

// (1/2) sum_a zeta_a^+ zeta_a^-
cplx pair_argument(const PhasePoint& z) {
    cplx x = 0.0;
    for (int a = 0; a < z.d; ++a) x += z.zplus(a) * z.zminus(a);
    return 0.5 * x;
}

cplx sinc(cplx x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

} // namespace

cplx OrderingRule::omega(const PhasePoint& zeta) const {
    switch (name) {
        case Ordering::weyl: return 1.0;
        case Ordering::standard: return std::exp(quad_argument(zeta));
        case Ordering::antistandard: return std::exp(-quad_argument(zeta));
        case Ordering::normal: return std::exp(pair_argument(zeta));
        case Ordering::antinormal: return std::exp(-pair_argument(zeta));
        case Ordering::symmetric: return std::cos(quad_argument(zeta));
        case Ordering::born_jordan: return sinc(quad_argument(zeta));
    }
    return 1.0;
}

cplx OrderingRule::omega_scaled(const PhasePoint& zeta, double hbar) const {
    const double s = 1.0 / std::sqrt(hbar);
    PhasePoint zs = zeta;
    for (int a = 0; a < zeta.d; ++a) {
        zs.q[a] *= s;
        zs.p[a] *= s;
    }
    return omega(zs);
}

const OrderingRule& ordering_rule(Ordering name) {
    static const std::array<OrderingRule, 7> table = {{
        {Ordering::weyl, false, Strictness::strict_everywhere},
        {Ordering::standard, false, Strictness::strict_everywhere},
        {Ordering::antistandard, false, Strictness::strict_everywhere},
        {Ordering::normal, false, Strictness::strict_everywhere},
        {Ordering::antinormal, false, Strictness::strict_on_multipliers},
        {Ordering::symmetric, true, Strictness::strict_on_multipliers},
        {Ordering::born_jordan, true, Strictness::strict_on_multipliers},
    }};
    return table[static_cast<std::size_t>(name)];
}

Eigen::VectorXcd omega_table_on_dual(const PhaseGrid& grid, Ordering rule) {
    if (grid.d != 1) throw validation_error("omega_table_on_dual: d = 1 only");
    const OrderingRule& r = ordering_rule(rule);
    Eigen::VectorXcd w(grid.cell_count_frequency());
    for (int m = 0; m < grid.n_zq(); ++m)
        for (int l = 0; l < grid.n_zp(); ++l)
            w[static_cast<Eigen::Index>(m) * grid.n_zp() + l] =
                r.omega_scaled(grid.frequency_point(m, l), grid.hbar);
    return w;
}

} // namespace omcalc
