#include "omcalc/quantize.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "omcalc/fourier.hpp"

namespace omcalc {

namespace {

long binom(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

Eigen::MatrixXcd matpow(const Eigen::MatrixXcd& a, int n) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

} // namespace

OperatorMatrix quantize_monomial(const MonomialOp& mono, Ordering rule, const BasisSpec& basis) {
    if (mono.n < 0 || mono.m < 0) throw validation_error("quantize_monomial: negative exponent");
    if (mono.degree() > MonomialOp::degree_cap)
        throw validation_error("quantize_monomial: degree exceeds cap");
    if (basis.dim < 4 + mono.degree())
        throw validation_error("quantize_monomial: truncation below 4 + degree");

    if (mono.form == MonomialOp::Form::ladder) {
        if (rule == Ordering::normal || rule == Ordering::antinormal) {
            const Eigen::MatrixXcd zp = creator(basis), zm = annihilator(basis);
            Eigen::MatrixXcd r = rule == Ordering::normal
                                     ? matpow(zp, mono.n) * matpow(zm, mono.m)
                                     : matpow(zm, mono.m) * matpow(zp, mono.n);
            return OperatorMatrix(basis, std::move(r));
        }
        // other rules: expand the slot monomial into a (q,p) polynomial and
        // quantize termwise
        return quantize_polynomial(slot_to_qp(Poly2::monomial(mono.n, mono.m)), rule, basis);
    }

    const int n = mono.n, m = mono.m;
    const Eigen::MatrixXcd q = position_op(basis), p = momentum_op(basis);
    const Eigen::MatrixXcd qn = matpow(q, n), pm = matpow(p, m);
    switch (rule) {
        case Ordering::weyl: {
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(basis.dim, basis.dim);
            for (int j = 0; j <= n; ++j)
                acc += double(binom(n, j)) * matpow(q, n - j) * pm * matpow(q, j);
            return OperatorMatrix(basis, acc / std::pow(2.0, n));
        }
        case Ordering::standard: return OperatorMatrix(basis, qn * pm);
        case Ordering::antistandard: return OperatorMatrix(basis, pm * qn);
        case Ordering::symmetric: return OperatorMatrix(basis, 0.5 * (qn * pm + pm * qn));
        case Ordering::born_jordan: {
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(basis.dim, basis.dim);
            for (int j = 0; j <= m; ++j) acc += matpow(p, m - j) * qn * matpow(p, j);
            return OperatorMatrix(basis, acc / double(m + 1));
        }
        case Ordering::normal:
        case Ordering::antinormal: {
            // expand q^n p^m in the slot variables and order the ladders
            const Poly2 slot = qp_to_slot(Poly2::monomial(n, m));
            const Eigen::MatrixXcd zp = creator(basis), zm = annihilator(basis);
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(basis.dim, basis.dim);
            for (const auto& [key, c] : slot.terms()) {
                const Eigen::MatrixXcd term =
                    rule == Ordering::normal ? matpow(zp, key.first) * matpow(zm, key.second)
                                             : matpow(zm, key.second) * matpow(zp, key.first);
                acc += c * term;
            }
            return OperatorMatrix(basis, acc);
        }
    }
    throw validation_error("quantize_monomial: unknown rule");
}

OperatorMatrix quantize_polynomial(const Poly2& poly, Ordering rule, const BasisSpec& basis) {
    OperatorMatrix acc = OperatorMatrix::zero(basis);
    for (const auto& [key, c] : poly.terms())
        acc.m += c * quantize_monomial(MonomialOp::qp(key.first, key.second), rule, basis).m;
    return acc;
}

DisplacementEngine::DisplacementEngine(int n_levels, double hbar) : n_(n_levels), hbar_(hbar) {
    // generator slice at theta = 0: (create - annih)/sqrt(hbar), unit ladder scale
    Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(n_, n_);
    for (int k = 0; k + 1 < n_; ++k) {
        a1(k + 1, k) = std::sqrt(double(k + 1));
        a1(k, k + 1) = -std::sqrt(double(k + 1));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(cplx(0, 1) * a1);
    eigvecs_ = es.eigenvectors();
    eigvals_ = es.eigenvalues();
}

Eigen::MatrixXcd DisplacementEngine::radial_part(double rho) const {
    const double s = rho / std::sqrt(hbar_);
    Eigen::VectorXcd ph(n_);
    for (int k = 0; k < n_; ++k) ph[k] = std::polar(1.0, -s * eigvals_[k]);
    return eigvecs_ * ph.asDiagonal() * eigvecs_.adjoint();
}

Eigen::VectorXcd DisplacementEngine::phase_column(double theta) const {
    Eigen::VectorXcd ph(n_);
    for (int k = 0; k < n_; ++k) ph[k] = std::polar(1.0, k * theta);
    return ph;
}

Eigen::MatrixXcd DisplacementEngine::displacement(double zeta_q, double zeta_p) const {
    const cplx alpha = cplx(zeta_q, zeta_p) / std::sqrt(2.0);
    const double rho = std::abs(alpha);
    if (rho == 0.0) return Eigen::MatrixXcd::Identity(n_, n_);
    const double theta = std::arg(alpha);
    Eigen::MatrixXcd g = radial_part(rho);
    const Eigen::VectorXcd ph = phase_column(theta);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) g(r, c) *= ph[r] * std::conj(ph[c]);
    return g;
}

Eigen::MatrixXcd DisplacementEngine::displacement_reference(double zeta_q, double zeta_p) const {
    const cplx alpha = cplx(zeta_q, zeta_p) / std::sqrt(2.0);
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(n_, n_);
    for (int k = 0; k + 1 < n_; ++k) {
        const double s = std::sqrt(hbar_ * (k + 1)) / hbar_;
        gen(k + 1, k) += alpha * s;          // alpha * create / hbar
        gen(k, k + 1) -= std::conj(alpha) * s; // - conj(alpha) * annih / hbar
    }
    return gen.exp();
}

namespace {

struct FreqLattice {
    const PhaseGrid& g;
    int nm, nl;
    double mu;
    FreqLattice(const PhaseGrid& grid)
        : g(grid), nm(grid.n_zq()), nl(grid.n_zp()), mu(grid.cell_measure_frequency()) {
        if (grid.d != 1) throw validation_error("quantizer: d = 1 grids only");
    }
};

} // namespace

std::vector<OperatorMatrix> quantize_symbols(const std::vector<Symbol>& fs, const BasisSpec& basis,
                                             Exec exec, bool check, int guard_levels) {
    if (fs.empty()) return {};
    if (basis.kind != BasisKind::fock)
        throw validation_error(
            "quantize_symbol: position-basis route not provided; use quantize_monomial");
    const GridPtr grid = fs.front().grid;
    for (const auto& f : fs) {
        if (!(*f.grid == *grid)) throw validation_error("quantize_symbols: mixed grids");
        if (f.ordering != Ordering::weyl)
            throw validation_error("quantize_symbol: convert to the Weyl ordering first");
        if (f.domain != Domain::phase) throw validation_error("quantize_symbol: phase domain input");
    }
    const FreqLattice lat(*grid);
    const int nsym = static_cast<int>(fs.size());
    std::vector<Eigen::VectorXcd> fts(nsym);
    for (int s = 0; s < nsym; ++s)
        fts[s] = symplectic_fourier(fs[s], Exec::parallel, check).values;

    const int N = basis.dim + guard_levels;
    const DisplacementEngine eng(N, basis.hbar);
    std::vector<Eigen::MatrixXcd> acc(nsym, Eigen::MatrixXcd::Zero(N, N));

    if (exec == Exec::serial_reference) {
        for (int m = 0; m < lat.nm; ++m)
            for (int l = 0; l < lat.nl; ++l) {
                const Eigen::MatrixXcd d =
                    eng.displacement_reference(lat.g.zq(m), lat.g.zp(l));
                for (int s = 0; s < nsym; ++s)
                    acc[s] += (fts[s][static_cast<Eigen::Index>(m) * lat.nl + l] * lat.mu) * d;
            }
    } else {
#pragma omp parallel
        {
            std::vector<Eigen::MatrixXcd> local(nsym, Eigen::MatrixXcd::Zero(N, N));
#pragma omp for schedule(static)
            for (int m = 0; m < lat.nm; ++m) {
                for (int l = 0; l < lat.nl; ++l) {
                    const Eigen::MatrixXcd d = eng.displacement(lat.g.zq(m), lat.g.zp(l));
                    for (int s = 0; s < nsym; ++s)
                        local[s] +=
                            (fts[s][static_cast<Eigen::Index>(m) * lat.nl + l] * lat.mu) * d;
                }
            }
#pragma omp critical(omcalc_quantize_reduce)
            for (int s = 0; s < nsym; ++s) acc[s] += local[s];
        }
    }

    std::vector<OperatorMatrix> out;
    out.reserve(nsym);
    for (int s = 0; s < nsym; ++s)
        out.emplace_back(basis, Eigen::MatrixXcd(acc[s].topLeftCorner(basis.dim, basis.dim)));
    if (check) {
        for (const auto& A : out) {
            const int edge = std::max(2, basis.dim / 16);
            const double total = A.m.norm();
            const double tail = A.m.bottomRows(edge).norm();
            if (total > 0 && tail / total > 0.01)
                throw truncation_error("quantize_symbol: boundary-row mass " +
                                       std::to_string(tail / total) + " of Frobenius norm");
        }
    }
    return out;
}

OperatorMatrix quantize_symbol(const Symbol& f, const BasisSpec& basis, Exec exec, bool check,
                               int guard_levels) {
    return quantize_symbols({f}, basis, exec, check, guard_levels).front();
}

std::vector<Symbol> dequantize_batch(const std::vector<OperatorMatrix>& As, Ordering rule,
                                     GridPtr grid, Exec exec, int guard_levels) {
    const FreqLattice lat(*grid);
    const int nmat = static_cast<int>(As.size());
    for (const auto& A : As)
        if (A.basis.kind != BasisKind::fock)
            throw validation_error("dequantize: Fock-basis matrices only");
    const int N = As.front().basis.dim;
    const DisplacementEngine eng(N + guard_levels, grid->hbar);

    std::vector<Eigen::VectorXcd> fts(nmat);
    for (auto& v : fts) v.resize(static_cast<Eigen::Index>(grid->cell_count_frequency()));

#pragma omp parallel for schedule(static)
    for (int m = 0; m < lat.nm; ++m) {
        for (int l = 0; l < lat.nl; ++l) {
            const Eigen::MatrixXcd d = exec == Exec::serial_reference
                                           ? eng.displacement_reference(lat.g.zq(m), lat.g.zp(l))
                                           : eng.displacement(lat.g.zq(m), lat.g.zp(l));
            for (int s = 0; s < nmat; ++s)
                fts[s][static_cast<Eigen::Index>(m) * lat.nl + l] =
                    (As[s].m.array() * d.topLeftCorner(N, N).array().conjugate()).sum();
        }
    }

    std::vector<Symbol> out;
    for (int s = 0; s < nmat; ++s) {
        Symbol ft(grid, Ordering::weyl, Domain::frequency);
        ft.values = std::move(fts[s]);
        if (rule != Ordering::weyl)
            apply_omega_factor(ft.values, omega_table_on_dual(*grid, rule), true);
        Symbol f = inverse_symplectic_fourier(ft, Exec::parallel, false);
        f.ordering = rule;
        out.push_back(std::move(f));
    }
    return out;
}

Symbol dequantize(const OperatorMatrix& A, Ordering rule, GridPtr grid, Exec exec,
                  int guard_levels) {
    return dequantize_batch({A}, rule, grid, exec, guard_levels).front();
}

void apply_omega_factor(Eigen::VectorXcd& freq_values, const Eigen::VectorXcd& omega, bool divide,
                        double margin, double tol) {
    double total = 0.0, excluded = 0.0;
    for (Eigen::Index i = 0; i < freq_values.size(); ++i) {
        const double mass = std::abs(freq_values[i]);
        total += mass;
        const double w = std::abs(omega[i]);
        const bool bad = divide ? (w < margin) : (w > 1.0 / margin);
        if (bad) {
            excluded += mass;
            freq_values[i] = 0.0;
        } else {
            freq_values[i] = divide ? freq_values[i] / omega[i] : freq_values[i] * omega[i];
        }
    }
    if (total > 0 && excluded / total > tol)
        throw zero_set_violation("ordering factor magnitude guard excluded " +
                                 std::to_string(excluded / total) + " of the frequency mass");
}

cplx trace_pairing(const Symbol& f, const Symbol& rho, Ordering rule) {
    if (!(*f.grid == *rho.grid)) throw validation_error("trace_pairing: grids differ");
    if (f.ordering != rule || rho.ordering != rule)
        throw validation_error("trace_pairing: symbols must be in the requested ordering");
    if (boundary_edge_ratio(rho) > 1e-6)
        throw numeric_guard_error("trace_pairing: density symbol fails the decay check");
    return (f.values.array() * rho.values.array()).sum() * f.grid->cell_measure();
}

TracePairingReport trace_pairing_report(const Symbol& f, const Symbol& rho, Ordering rule,
                                        const BasisSpec& basis) {
    TracePairingReport rep{};
    rep.pairing = trace_pairing(f, rho, rule);
    Symbol fw = f, rw = rho;
    if (rule != Ordering::weyl) {
        // convert through the frequency side: multiply by Omega (rule -> Weyl)
        for (Symbol* s : {&fw, &rw}) {
            Symbol ft = symplectic_fourier(*s, Exec::parallel, false);
            apply_omega_factor(ft.values, omega_table_on_dual(*s->grid, rule), false);
            *s = inverse_symplectic_fourier(ft, Exec::parallel, false);
            s->ordering = Ordering::weyl;
        }
    }
    const int guard = 32; // keep truncation-edge reflections out of the traced block
    const OperatorMatrix A = quantize_symbol(fw, basis, Exec::parallel, false, guard);
    const OperatorMatrix B = quantize_symbol(rw, basis, Exec::parallel, false, guard);
    rep.matrix_trace = (A.m * B.m).trace();
    rep.rel_discrepancy = std::abs(rep.pairing - rep.matrix_trace) /
                          std::max(1e-300, std::abs(rep.matrix_trace));
    return rep;
}

Eigen::MatrixXcd green_function(const Symbol& u_std, Exec exec) {
    if (u_std.ordering != Ordering::standard)
        throw validation_error("green_function: standard-ordering symbol required");
    if (u_std.domain != Domain::phase) throw validation_error("green_function: phase domain input");
    const PhaseGrid& g = *u_std.grid;
    if (g.d != 1) throw validation_error("green_function: d = 1 only");
    const int n = g.n_q, np = g.n_p;
    const double mu = g.dp() / (2.0 * kPi * g.hbar);
    Eigen::MatrixXcd G(n, n);
    if (exec == Exec::serial_reference) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cplx acc = 0.0;
                for (int k = 0; k < np; ++k)
                    acc += u_std.at(i, k) * std::polar(1.0, g.p(k) * (g.q(i) - g.q(j)) / g.hbar);
                G(i, j) = acc * mu;
            }
        return G;
    }
    // phase table over lattice offsets: e^{i p_k (i - j) dq / hbar}
    Eigen::MatrixXcd table(np, 2 * n - 1);
    for (int k = 0; k < np; ++k)
        for (int dlt = -(n - 1); dlt <= n - 1; ++dlt)
            table(k, dlt + n - 1) = std::polar(1.0, g.p(k) * dlt * g.dq() / g.hbar);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < np; ++k) acc += u_std.at(i, k) * table(k, i - j + n - 1);
            G(i, j) = acc * mu;
        }
    return G;
}

} // namespace omcalc
