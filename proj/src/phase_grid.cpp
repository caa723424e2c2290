#include "omcalc/phase_grid.hpp"

#include <cmath>
#include <functional>

namespace omcalc {

PhaseGrid::PhaseGrid(int d_, int n_q_, int n_p_, double L_q_, double L_p_, double hbar_)
    : d(d_), n_q(n_q_), n_p(n_p_), L_q(L_q_), L_p(L_p_), hbar(hbar_) {
    if (d < 1 || d > 2) throw validation_error("PhaseGrid: d must be 1 or 2");
    if (n_q < 8 || n_p < 8 || n_q % 2 != 0 || n_p % 2 != 0)
        throw validation_error("PhaseGrid: n_q, n_p must be even and >= 8");
    if (L_q <= 0 || L_p <= 0) throw validation_error("PhaseGrid: half-widths must be positive");
    if (hbar <= 0) throw validation_error("PhaseGrid: hbar must be positive");
}

PhaseGrid PhaseGrid::standard(double hbar, int n, int d) {
    const double L = 8.0 * std::sqrt(hbar);
    return PhaseGrid(d, n, n, L, L, hbar);
}

std::size_t PhaseGrid::cell_count() const {
    std::size_t c = 1;
    for (int a = 0; a < d; ++a) c *= static_cast<std::size_t>(n_q) * n_p;
    return c;
}

std::size_t PhaseGrid::cell_count_frequency() const { return cell_count(); }

double PhaseGrid::cell_measure() const {
    double m = 1.0;
    for (int a = 0; a < d; ++a) m *= dq() * dp() / (2.0 * kPi * hbar);
    return m;
}

double PhaseGrid::cell_measure_frequency() const {
    double m = 1.0;
    for (int a = 0; a < d; ++a) m *= dzq() * dzp() / (2.0 * kPi * hbar);
    return m;
}

bool PhaseGrid::operator==(const PhaseGrid& o) const {
    return d == o.d && n_q == o.n_q && n_p == o.n_p && L_q == o.L_q && L_p == o.L_p &&
           hbar == o.hbar;
}

Symbol::Symbol(GridPtr g, Ordering ord, Domain dom) : grid(std::move(g)), ordering(ord), domain(dom) {
    values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(grid->cell_count()));
}

double Symbol::l2_norm() const {
    const double mu =
        domain == Domain::phase ? grid->cell_measure() : grid->cell_measure_frequency();
    return std::sqrt(values.squaredNorm() * mu);
}

double Symbol::max_abs() const {
    double m = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i) m = std::max(m, std::abs(values[i]));
    return m;
}

Symbol sample_symbol(GridPtr grid, Ordering ordering,
                     const std::function<cplx(const PhasePoint&)>& f) {
    Symbol s(grid, ordering, Domain::phase);
    const PhaseGrid& g = *grid;
    if (g.d == 1) {
        for (int j = 0; j < g.n_q; ++j)
            for (int k = 0; k < g.n_p; ++k) s.values[g.index(j, k)] = f(g.point(j, k));
    } else {
        std::size_t idx = 0;
        for (int j1 = 0; j1 < g.n_q; ++j1)
            for (int j2 = 0; j2 < g.n_q; ++j2)
                for (int k1 = 0; k1 < g.n_p; ++k1)
                    for (int k2 = 0; k2 < g.n_p; ++k2)
                        s.values[idx++] =
                            f(PhasePoint::make2d(g.q(j1), g.q(j2), g.p(k1), g.p(k2)));
    }
    return s;
}

namespace {

// Per-axis sizes in storage order; phase: [q axes..., p axes...],
// frequency: [zeta_q axes..., zeta_p axes...].
std::vector<int> axis_sizes(const PhaseGrid& g, Domain dom) {
    std::vector<int> n;
    for (int a = 0; a < g.d; ++a) n.push_back(dom == Domain::phase ? g.n_q : g.n_zq());
    for (int a = 0; a < g.d; ++a) n.push_back(dom == Domain::phase ? g.n_p : g.n_zp());
    return n;
}

} // namespace

double boundary_shell_fraction(const Symbol& s, double shell_fraction) {
    const auto n = axis_sizes(*s.grid, s.domain);
    const int naxes = static_cast<int>(n.size());
    double total = 0.0, shell = 0.0;
    const Eigen::Index count = s.values.size();
    for (Eigen::Index i = 0; i < count; ++i) {
        const double e = std::norm(s.values[i]);
        total += e;
        Eigen::Index rest = i;
        bool outer = false;
        for (int t = naxes - 1; t >= 0; --t) {
            const int idx = static_cast<int>(rest % n[t]);
            rest /= n[t];
            const double centered = std::abs(idx - n[t] / 2 + 0.5);
            if (centered >= (1.0 - shell_fraction) * (n[t] / 2.0)) outer = true;
        }
        if (outer) shell += e;
    }
    return total > 0 ? shell / total : 0.0;
}

double boundary_edge_ratio(const Symbol& s) {
    const auto n = axis_sizes(*s.grid, s.domain);
    const int naxes = static_cast<int>(n.size());
    double edge = 0.0, peak = 0.0;
    const Eigen::Index count = s.values.size();
    for (Eigen::Index i = 0; i < count; ++i) {
        const double m = std::abs(s.values[i]);
        peak = std::max(peak, m);
        Eigen::Index rest = i;
        bool boundary = false;
        for (int t = naxes - 1; t >= 0; --t) {
            const int idx = static_cast<int>(rest % n[t]);
            rest /= n[t];
            if (idx == 0 || idx == n[t] - 1) boundary = true;
        }
        if (boundary) edge = std::max(edge, m);
    }
    return peak > 0 ? edge / peak : 0.0;
}

void require_windowed(const Symbol& s, double tol) {
    const double r = boundary_edge_ratio(s);
    if (r > tol)
        throw window_error("symbol not negligible at the grid window boundary (edge ratio " +
                           std::to_string(r) + ")");
}

void require_band_limited(const Symbol& freq_symbol, double energy_tol) {
    const double frac = boundary_shell_fraction(freq_symbol, 0.1);
    if (frac > energy_tol)
        throw aliasing_error("grid too coarse for the symbol bandwidth (outer-shell energy " +
                             std::to_string(frac) + ")");
}

const char* ordering_name(Ordering o) {
    switch (o) {
        case Ordering::weyl: return "weyl";
        case Ordering::standard: return "standard";
        case Ordering::antistandard: return "antistandard";
        case Ordering::normal: return "normal";
        case Ordering::antinormal: return "antinormal";
        case Ordering::symmetric: return "symmetric";
        case Ordering::born_jordan: return "born-jordan";
    }
    return "?";
}

Ordering ordering_from_name(const std::string& name) {
    for (Ordering o : {Ordering::weyl, Ordering::standard, Ordering::antistandard,
                       Ordering::normal, Ordering::antinormal, Ordering::symmetric,
                       Ordering::born_jordan})
        if (name == ordering_name(o)) return o;
    throw validation_error("unknown ordering rule: " + name);
}

} // namespace omcalc
