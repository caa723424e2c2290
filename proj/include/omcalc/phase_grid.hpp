#pragma once

#include <memory>
#include <vector>

#include <Eigen/Core>

#include "omcalc/phase_point.hpp"
#include "omcalc/types.hpp"

namespace omcalc {

enum class Domain { phase, frequency };

// Ordering tags shared between symbols, the conversion machinery and the CLI.
enum class Ordering {
    weyl,
    standard,
    antistandard,
    normal,
    antinormal,
    symmetric,
    born_jordan,
};

// Uniform lattice on the window [-L_q, L_q)^d x [-L_p, L_p)^d, centered so the
// origin is a grid point (n even). Sample points along a q axis are
// q_j = (j - n_q/2) dq with dq = 2 L_q / n_q, and likewise for p.
//
// The frequency-domain (dual) lattice is determined by the transform: the
// zeta_q axes carry n_p points of spacing pi*hbar/L_p and the zeta_p axes
// n_q points of spacing pi*hbar/L_q, so the dual of the dual is the original
// lattice and the transform is an involution.
struct PhaseGrid {
    int d = 1;
    int n_q = 128;
    int n_p = 128;
    double L_q = 8.0;
    double L_p = 8.0;
    double hbar = 1.0;

    PhaseGrid() = default;
    PhaseGrid(int d_, int n_q_, int n_p_, double L_q_, double L_p_, double hbar_);

    // Default window: half-width 8*sqrt(hbar), resolving Gaussians of
    // covariance hbar with >= 6 cells per standard deviation at n = 128.
    static PhaseGrid standard(double hbar, int n = 128, int d = 1);

    double dq() const { return 2.0 * L_q / n_q; }
    double dp() const { return 2.0 * L_p / n_p; }
    double q(int j) const { return (j - n_q / 2) * dq(); }
    double p(int k) const { return (k - n_p / 2) * dp(); }

    // Dual lattice spacings and half-widths.
    double dzq() const { return kPi * hbar / L_p; }
    double dzp() const { return kPi * hbar / L_q; }
    int n_zq() const { return n_p; }
    int n_zp() const { return n_q; }
    double zq(int m) const { return (m - n_zq() / 2) * dzq(); }
    double zp(int l) const { return (l - n_zp() / 2) * dzp(); }
    double L_zq() const { return n_zq() / 2 * dzq(); }
    double L_zp() const { return n_zp() / 2 * dzp(); }

    std::size_t cell_count() const;
    std::size_t cell_count_frequency() const; // same number, dual shape

    // Liouville cell measures dlambda = prod(dq dp) / (2 pi hbar)^d.
    double cell_measure() const;
    double cell_measure_frequency() const;

    // Row-major flattening, q axes slowest ("q-major"): for d = 1 the index of
    // (j, k) is j * n_p + k.
    std::size_t index(int j, int k) const { return static_cast<std::size_t>(j) * n_p + k; }

    PhasePoint point(int j, int k) const { return PhasePoint::make1d(q(j), p(k)); }
    PhasePoint frequency_point(int m, int l) const { return PhasePoint::make1d(zq(m), zp(l)); }

    bool operator==(const PhaseGrid& other) const;
};

using GridPtr = std::shared_ptr<const PhaseGrid>;

// Complex-valued function sampled on a PhaseGrid (or on its dual lattice when
// domain == frequency), tagged with the ordering rule it is a symbol for.
struct Symbol {
    GridPtr grid;
    Eigen::VectorXcd values;
    Ordering ordering = Ordering::weyl;
    Domain domain = Domain::phase;

    Symbol() = default;
    Symbol(GridPtr g, Ordering ord, Domain dom = Domain::phase);

    cplx& at(int j, int k) { return values[grid->index(j, k)]; }
    cplx at(int j, int k) const { return values[grid->index(j, k)]; }

    double l2_norm() const; // sqrt( sum |f|^2 * cell measure )
    double max_abs() const;
};

// Build a phase-domain symbol from a callable f(PhasePoint) -> cplx (d = 1, 2).
Symbol sample_symbol(GridPtr grid, Ordering ordering, const std::function<cplx(const PhasePoint&)>& f);

// Fraction of |f|^2 mass in the outermost `shell_fraction` of each axis.
double boundary_shell_fraction(const Symbol& s, double shell_fraction = 0.1);

// Max |f| over the outermost cell layer relative to max over the grid.
double boundary_edge_ratio(const Symbol& s);

// Windowing guard: boundary magnitude must stay below `tol * max|f|`.
void require_windowed(const Symbol& s, double tol = 1e-8);

// Aliasing guard for frequency-domain symbols: > `energy_tol` of the energy in
// the outer 10% frequency shell is an error.
void require_band_limited(const Symbol& freq_symbol, double energy_tol = 0.01);

const char* ordering_name(Ordering o);
Ordering ordering_from_name(const std::string& name);

} // namespace omcalc
