#pragma once

#include <Eigen/Dense>

#include "omcalc/types.hpp"

namespace omcalc {

enum class BasisKind { fock, position };

struct BasisSpec {
    BasisKind kind = BasisKind::fock;
    int dim = 64;        // Fock levels, or position samples n_x
    double L_x = 0.0;    // half-width of the position window (position basis)
    double hbar = 1.0;

    static BasisSpec fock(int n_levels, double hbar) { return {BasisKind::fock, n_levels, 0.0, hbar}; }
    static BasisSpec position(int n_x, double L_x, double hbar) {
        return {BasisKind::position, n_x, L_x, hbar};
    }
    bool operator==(const BasisSpec& o) const = default;
};

// Dense complex matrix representing an operator in a truncated basis. The
// trailing ~degree rows/columns of ladder-built matrices carry truncation
// garbage by construction, so assertions use the upper-left interior block.
struct OperatorMatrix {
    BasisSpec basis;
    Eigen::MatrixXcd m;

    OperatorMatrix() = default;
    OperatorMatrix(BasisSpec b, Eigen::MatrixXcd mat) : basis(b), m(std::move(mat)) {
        if (m.rows() != m.cols() || m.rows() != b.dim)
            throw validation_error("OperatorMatrix: square matrix of basis dimension required");
        if (b.dim < 8) throw validation_error("OperatorMatrix: basis dimension must be >= 8");
    }

    static OperatorMatrix identity(BasisSpec b) {
        return OperatorMatrix(b, Eigen::MatrixXcd::Identity(b.dim, b.dim));
    }
    static OperatorMatrix zero(BasisSpec b) {
        return OperatorMatrix(b, Eigen::MatrixXcd::Zero(b.dim, b.dim));
    }

    int dim() const { return basis.dim; }

    Eigen::MatrixXcd interior(int margin) const {
        const int n = dim() - margin;
        if (n <= 0) throw validation_error("interior: margin exceeds dimension");
        return m.topLeftCorner(n, n);
    }
};

inline double interior_rel_error(const OperatorMatrix& a, const OperatorMatrix& b, int margin) {
    const Eigen::MatrixXcd da = a.interior(margin) - b.interior(margin);
    const double scale = std::max(a.interior(margin).norm(), b.interior(margin).norm());
    return scale > 0 ? da.norm() / scale : da.norm();
}

} // namespace omcalc
