#pragma once

#include "omcalc/fock.hpp"
#include "omcalc/operator_matrix.hpp"
#include "omcalc/ordering.hpp"
#include "omcalc/polynomial.hpp"
#include "omcalc/window.hpp"

namespace omcalc {

// Monomial to quantize: either q^n p^m or the ladder form (z+)^a (z-)^b,
// where z+ labels the creation slot. d = 1.
struct MonomialOp {
    enum class Form { qp, ladder };
    Form form = Form::qp;
    int n = 0; // q exponent, or creation exponent a
    int m = 0; // p exponent, or annihilation exponent b
    static constexpr int degree_cap = 6;

    static MonomialOp qp(int n, int m) { return {Form::qp, n, m}; }
    static MonomialOp ladder(int a, int b) { return {Form::ladder, a, b}; }
    int degree() const { return n + m; }
};

// Exact finite operator sum prescribed by the ordering table row, built from
// the truncated ladder/coordinate matrices. Truncation error is confined to
// the trailing ~degree rows and columns.
OperatorMatrix quantize_monomial(const MonomialOp& mono, Ordering rule, const BasisSpec& basis);

// Rule-linear extension to (q,p) polynomials.
OperatorMatrix quantize_polynomial(const Poly2& poly, Ordering rule, const BasisSpec& basis);

// Displacement family over a grid's frequency lattice (Fock basis):
//   D(zeta) = exp( (i/hbar)(p_zeta q_hat - q_zeta p_hat) ),
// computed exactly from the truncated generator. The production path
// diagonalizes the fixed tridiagonal generator once and reaches every lattice
// point by a number-phase conjugation, which reproduces the scaling-and-
// squaring exponential to roundoff while keeping D unitary by construction;
// the reference path exponentiates each generator directly.
class DisplacementEngine {
  public:
    DisplacementEngine(int n_levels, double hbar);

    int dim() const { return n_; }
    double hbar() const { return hbar_; }

    Eigen::MatrixXcd displacement(double zeta_q, double zeta_p) const;
    Eigen::MatrixXcd displacement_reference(double zeta_q, double zeta_p) const;

    // G(rho) = V exp(-i (rho/sqrt(hbar)) Lambda) V^dagger, the theta = 0 slice.
    Eigen::MatrixXcd radial_part(double rho) const;
    // column phases exp(i k theta)
    Eigen::VectorXcd phase_column(double theta) const;

  private:
    int n_;
    double hbar_;
    Eigen::MatrixXcd eigvecs_;
    Eigen::VectorXd eigvals_;
};

// Riemann sum over the frequency lattice of ft(zeta) * D(zeta): the Weyl
// operator of a (Weyl-ordering, band-limited) symbol in the Fock basis.
// Position-basis symbol quantization is not provided; quantize polynomial
// symbols in the position basis through quantize_monomial instead.
//
// The unitary truncated-generator exponential reflects amplitude at the
// truncation edge, so the trailing ~sqrt(N) rows of the plain sum carry O(1)
// junk. `guard_levels` runs the sweep on an enlarged basis and crops back,
// which confines the junk to the discarded rows (32 guard rows reach machine
// precision at desk scales).
OperatorMatrix quantize_symbol(const Symbol& f, const BasisSpec& basis,
                               Exec exec = Exec::parallel, bool check = true,
                               int guard_levels = 0);

// Batch variant sharing the displacement sweep across many symbols on the
// same grid.
std::vector<OperatorMatrix> quantize_symbols(const std::vector<Symbol>& fs, const BasisSpec& basis,
                                             Exec exec = Exec::parallel, bool check = true,
                                             int guard_levels = 0);

// Weyl frequency symbol recovered from the displacement traces
// ft(zeta) = Tr(A D(zeta)^dagger), back-transformed and divided into the
// requested ordering. Throws zero_set_violation when the ordering factor's
// magnitude guard excludes more than `zero_mass_tol` of the frequency mass.
// The displacement family is evaluated on a basis enlarged by `guard_levels`
// (with A zero-padded) so its truncation-edge reflections stay clear of A's
// support.
Symbol dequantize(const OperatorMatrix& A, Ordering rule, GridPtr grid,
                  Exec exec = Exec::parallel, int guard_levels = 32);

std::vector<Symbol> dequantize_batch(const std::vector<OperatorMatrix>& As, Ordering rule,
                                     GridPtr grid, Exec exec = Exec::parallel,
                                     int guard_levels = 32);

// Grid pairing sum f * rho * dlambda (plain bilinear, no conjugation: the
// convention that reproduces Tr(f_hat rho_hat) in the Weyl case; other rules
// carry a reportable discrepancy, see trace_pairing_report).
cplx trace_pairing(const Symbol& f, const Symbol& rho, Ordering rule);

struct TracePairingReport {
    cplx pairing;
    cplx matrix_trace;
    double rel_discrepancy;
};
TracePairingReport trace_pairing_report(const Symbol& f, const Symbol& rho, Ordering rule,
                                        const BasisSpec& basis);

// Coordinate kernel <q''|U|q'> from a standard-ordering symbol, realized as
// the p-axis sum with plane waves <q|p> = (2 pi hbar)^{-1/2} exp(i p q / hbar).
// The qp ordering puts position on the left, so the symbol argument is the
// output coordinate q''. Output is indexed [q'', q'] on the grid's q lattice.
Eigen::MatrixXcd green_function(const Symbol& u_std, Exec exec = Exec::parallel);

// Ordering-factor division/multiplication with magnitude guards: cells where
// |Omega| falls outside [margin, 1/margin] are zeroed and their mass
// accumulated; mass fraction above `tol` raises zero_set_violation.
void apply_omega_factor(Eigen::VectorXcd& freq_values, const Eigen::VectorXcd& omega, bool divide,
                        double margin = 1e-6, double tol = 1e-10);

} // namespace omcalc
