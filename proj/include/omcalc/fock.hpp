#pragma once

#include "omcalc/operator_matrix.hpp"

namespace omcalc {

// Ladder and coordinate operators in the truncated bases (d = 1).
//
// Fock basis: the annihilator has matrix elements sqrt(hbar (k+1)) on the
// superdiagonal and the creator is its adjoint, so [annih, create] = hbar * 1
// holds exactly on the upper-left (N-1) block. Coordinates:
//   q_hat = (create + annih)/sqrt(2),   p_hat = i (create - annih)/sqrt(2),
// giving [q_hat, p_hat] = i hbar on the interior block.
//
// Position basis: q_hat is diagonal in the samples, p_hat is the periodic
// spectral derivative (Nyquist mode zeroed, which keeps it Hermitian).
Eigen::MatrixXcd annihilator(const BasisSpec& basis);
Eigen::MatrixXcd creator(const BasisSpec& basis);
Eigen::MatrixXcd position_op(const BasisSpec& basis);
Eigen::MatrixXcd momentum_op(const BasisSpec& basis);

// Fock-basis eigenvector battery of smooth interior-supported states used for
// action-based checks in the position basis.
std::vector<Eigen::VectorXcd> smooth_test_states(const BasisSpec& basis, int count,
                                                 unsigned seed = 7);

} // namespace omcalc
