#pragma once

#include "omcalc/phase_grid.hpp"

namespace omcalc {

// hbar-symplectic Fourier transform
//
//   (F f)(zeta) = integral f(z) exp( (i/hbar) [p_z q_zeta - p_zeta q_z] ) dlambda(z),
//   dlambda(z) = (2 pi hbar)^{-d} dq dp,
//
// realized as the Riemann sum over the grid window. The oscillatory kernel is
// the real symplectic form times i; the round-trip and Parseval tests pin the
// convention. F is an involution (F o F = id), so the inverse transform is the
// same sum read on the dual lattice; the discrete realization is exact to
// roundoff for any grid function.
//
// `check == true` enforces the windowing guard on phase-domain input and the
// aliasing guard on the result.
Symbol symplectic_fourier(const Symbol& f, Exec exec = Exec::parallel, bool check = true);
Symbol inverse_symplectic_fourier(const Symbol& g, Exec exec = Exec::parallel, bool check = false);

namespace kernels {

// One pass of the centered, sign-split DFT along every axis; production path
// batches FFTW line transforms, the reference path evaluates the defining
// Riemann sum directly (O(M^2), use on small grids only).
void symplectic_fft(const PhaseGrid& grid, Domain input_domain,
                    const Eigen::VectorXcd& in, Eigen::VectorXcd& out, Exec exec);

} // namespace kernels

// Spectral partial derivative d^{a_q}/dq^{a_q} d^{a_p}/dp^{a_p} of a
// phase-domain symbol (d = 1), via the transform pair.
Symbol spectral_derivative(const Symbol& f, int order_q, int order_p);

} // namespace omcalc
