#include "omcalc/fock.hpp"

#include <cmath>
#include <random>

namespace omcalc {

namespace {

Eigen::MatrixXcd fock_annihilator(int n, double hbar) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) a(k, k + 1) = std::sqrt(hbar * (k + 1));
    return a;
}

} // namespace

Eigen::MatrixXcd annihilator(const BasisSpec& b) {
    if (b.kind == BasisKind::fock) return fock_annihilator(b.dim, b.hbar);
    return (position_op(b) + cplx(0, 1) * momentum_op(b)) / std::sqrt(2.0);
}

Eigen::MatrixXcd creator(const BasisSpec& b) {
    if (b.kind == BasisKind::fock) return fock_annihilator(b.dim, b.hbar).adjoint();
    return (position_op(b) - cplx(0, 1) * momentum_op(b)) / std::sqrt(2.0);
}

Eigen::MatrixXcd position_op(const BasisSpec& b) {
    if (b.kind == BasisKind::fock) {
        const Eigen::MatrixXcd a = fock_annihilator(b.dim, b.hbar);
        return (a + Eigen::MatrixXcd(a.adjoint())) / std::sqrt(2.0);
    }
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(b.dim, b.dim);
    const double dx = 2.0 * b.L_x / b.dim;
    for (int j = 0; j < b.dim; ++j) q(j, j) = (j - b.dim / 2) * dx;
    return q;
}

Eigen::MatrixXcd momentum_op(const BasisSpec& b) {
    if (b.kind == BasisKind::fock) {
        const Eigen::MatrixXcd a = fock_annihilator(b.dim, b.hbar);
        return cplx(0, 1) * (Eigen::MatrixXcd(a.adjoint()) - a) / std::sqrt(2.0);
    }
    const int n = b.dim;
    const double dx = 2.0 * b.L_x / n;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
    // p_jl = (hbar / n) sum_m kappa_m exp(i kappa_m (x_j - x_l)),
    // kappa_m = 2 pi (m - n/2) / (n dx), Nyquist term dropped.
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            cplx acc = 0.0;
            for (int m = 1; m < n; ++m) {
                const double kappa = 2.0 * kPi * (m - n / 2) / (n * dx);
                acc += kappa * std::polar(1.0, kappa * dx * (j - l));
            }
            p(j, l) = b.hbar * acc / double(n);
        }
    return p;
}

std::vector<Eigen::VectorXcd> smooth_test_states(const BasisSpec& b, int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.25, 0.25);
    std::vector<Eigen::VectorXcd> out;
    if (b.kind == BasisKind::position) {
        const double dx = 2.0 * b.L_x / b.dim;
        for (int s = 0; s < count; ++s) {
            const double c = u(rng) * b.L_x, k0 = u(rng) * kPi / dx * 0.5;
            const double w = 0.08 * b.L_x * (1.0 + 0.5 * std::abs(u(rng)));
            Eigen::VectorXcd psi(b.dim);
            for (int j = 0; j < b.dim; ++j) {
                const double x = (j - b.dim / 2) * dx;
                psi[j] = std::exp(-(x - c) * (x - c) / (2 * w * w)) * std::polar(1.0, k0 * x);
            }
            psi.normalize();
            out.push_back(psi);
        }
    } else {
        std::normal_distribution<double> nd(0.0, 1.0);
        for (int s = 0; s < count; ++s) {
            Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(b.dim);
            for (int k = 0; k < b.dim / 3; ++k)
                psi[k] = cplx(nd(rng), nd(rng)) * std::exp(-3.0 * k / double(b.dim));
            psi.normalize();
            out.push_back(psi);
        }
    }
    return out;
}

} // namespace omcalc
