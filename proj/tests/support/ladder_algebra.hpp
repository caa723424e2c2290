#pragma once

// Test-side symbolic ladder algebra: exact normal ordering over the relations
// [annih, create] = hbar. Written independently of the library's quantizer so
// it can serve as the CCR-reduction oracle; everything here is coefficient
// bookkeeping on normal-ordered words create^a annih^b.

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "omcalc/polynomial.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Normal-ordered ladder polynomial: sum of c_{ab} create^a annih^b.
class LadderPoly {
  public:
    using Key = std::pair<int, int>;

    static LadderPoly zero() { return {}; }
    static LadderPoly constant(cplx c) {
        LadderPoly r;
        if (c != cplx(0.0)) r.c_[{0, 0}] = c;
        return r;
    }
    static LadderPoly create() {
        LadderPoly r;
        r.c_[{1, 0}] = 1.0;
        return r;
    }
    static LadderPoly annih() {
        LadderPoly r;
        r.c_[{0, 1}] = 1.0;
        return r;
    }

    const std::map<Key, cplx>& terms() const { return c_; }

    LadderPoly& operator+=(const LadderPoly& o) {
        for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
        return *this;
    }
    LadderPoly operator+(const LadderPoly& o) const {
        LadderPoly r = *this;
        r += o;
        return r;
    }
    LadderPoly operator*(cplx s) const {
        LadderPoly r;
        for (const auto& [k, v] : c_)
            if (v * s != cplx(0.0)) r.c_[k] = v * s;
        return r;
    }
    LadderPoly operator-(const LadderPoly& o) const { return *this + o * cplx(-1.0); }

    // Normal-ordered product with [annih, create] = hbar:
    //   annih^b create^c = sum_k k! C(b,k) C(c,k) hbar^k create^{c-k} annih^{b-k}
    LadderPoly mul(const LadderPoly& o, double hbar) const {
        LadderPoly r;
        for (const auto& [k1, v1] : c_)
            for (const auto& [k2, v2] : o.c_) {
                const int a = k1.first, b = k1.second, c = k2.first, d = k2.second;
                double coeff = 1.0; // k = 0 term
                for (int k = 0; k <= std::min(b, c); ++k) {
                    if (k > 0) coeff *= hbar * double(b - k + 1) * double(c - k + 1) / double(k);
                    r.add(a + c - k, b + d - k, v1 * v2 * coeff);
                }
            }
        r.prune();
        return r;
    }

    void add(int a, int b, cplx v) {
        auto it = c_.find({a, b});
        if (it == c_.end()) {
            if (v != cplx(0.0)) c_[{a, b}] = v;
        } else {
            it->second += v;
            if (std::abs(it->second) == 0.0) c_.erase(it);
        }
    }
    void prune(double tol = 1e-15) {
        double peak = 0.0;
        for (const auto& [k, v] : c_) peak = std::max(peak, std::abs(v));
        for (auto it = c_.begin(); it != c_.end();)
            it = (std::abs(it->second) <= tol * peak) ? c_.erase(it) : std::next(it);
    }

    // Dense matrix on N Fock levels (annih = sqrt(hbar k) ladder).
    Eigen::MatrixXcd matrix(int N, double hbar) const {
        Eigen::MatrixXcd zm = Eigen::MatrixXcd::Zero(N, N);
        for (int k = 0; k + 1 < N; ++k) zm(k, k + 1) = std::sqrt(hbar * (k + 1));
        const Eigen::MatrixXcd zp = zm.adjoint();
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(N, N);
        for (const auto& [key, v] : c_) {
            Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(N, N);
            for (int i = 0; i < key.first; ++i) t = t * zp;
            for (int i = 0; i < key.second; ++i) t = t * zm;
            acc += v * t;
        }
        return acc;
    }

  private:
    std::map<Key, cplx> c_;
};

// q = (create + annih)/sqrt(2), p = i (create - annih)/sqrt(2)
inline LadderPoly q_op() {
    return (LadderPoly::create() + LadderPoly::annih()) * cplx(1.0 / std::sqrt(2.0));
}
inline LadderPoly p_op() {
    return (LadderPoly::create() - LadderPoly::annih()) * cplx(0.0, 1.0 / std::sqrt(2.0));
}

inline LadderPoly word(const std::vector<const LadderPoly*>& factors, double hbar) {
    LadderPoly r = LadderPoly::constant(1.0);
    for (const auto* f : factors) r = r.mul(*f, hbar);
    return r;
}

inline LadderPoly pow(const LadderPoly& x, int n, double hbar) {
    LadderPoly r = LadderPoly::constant(1.0);
    for (int i = 0; i < n; ++i) r = r.mul(x, hbar);
    return r;
}

inline long binom(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// The ordering-table rows as exact ladder polynomials (independent of the
// library's matrix route).
inline LadderPoly table_row(int n, int m, const std::string& rule, double hbar) {
    const LadderPoly q = q_op(), p = p_op();
    const LadderPoly qn = pow(q, n, hbar), pm = pow(p, m, hbar);
    if (rule == "weyl") {
        LadderPoly acc;
        for (int j = 0; j <= n; ++j)
            acc += pow(q, n - j, hbar).mul(pm, hbar).mul(pow(q, j, hbar), hbar) *
                   cplx(double(binom(n, j)));
        return acc * cplx(1.0 / std::pow(2.0, n));
    }
    if (rule == "standard") return qn.mul(pm, hbar);
    if (rule == "antistandard") return pm.mul(qn, hbar);
    if (rule == "symmetric") return (qn.mul(pm, hbar) + pm.mul(qn, hbar)) * cplx(0.5);
    if (rule == "born-jordan") {
        LadderPoly acc;
        for (int j = 0; j <= m; ++j)
            acc += pow(p, m - j, hbar).mul(qn, hbar).mul(pow(p, j, hbar), hbar);
        return acc * cplx(1.0 / double(m + 1));
    }
    if (rule == "normal" || rule == "antinormal") {
        // expand q^n p^m in slot variables (w+ paired with create)
        const omcalc::Poly2 slot = omcalc::qp_to_slot(omcalc::Poly2::monomial(n, m));
        LadderPoly acc;
        for (const auto& [key, c] : slot.terms()) {
            LadderPoly t;
            if (rule == "normal")
                t = pow(LadderPoly::create(), key.first, hbar)
                        .mul(pow(LadderPoly::annih(), key.second, hbar), hbar);
            else
                t = pow(LadderPoly::annih(), key.second, hbar)
                        .mul(pow(LadderPoly::create(), key.first, hbar), hbar);
            acc += t * c;
        }
        return acc;
    }
    throw std::runtime_error("table_row: unknown rule " + rule);
}

// Exact normal-ordered coefficients of a finite-degree operator recovered
// from its Fock matrix: on the diagonal m - n = s the matrix elements are a
// triangular system in the coefficients c_{b+s, b}.
inline LadderPoly read_off(const Eigen::MatrixXcd& M, int max_degree, double hbar) {
    LadderPoly out;
    const int N = static_cast<int>(M.rows());
    auto elem = [&](int a, int b, int n) {
        // <n + a - b | create^a annih^b | n>
        double v = 1.0;
        for (int i = 0; i < b; ++i) v *= hbar * (n - i);
        for (int i = 0; i < a; ++i) v *= hbar * (n - b + 1 + i);
        return std::sqrt(v);
    };
    for (int s = -max_degree; s <= max_degree; ++s) {
        const int bmax = (max_degree - std::abs(s)) / 2 +
                         (s < 0 ? -s : 0); // enough b's on this diagonal
        std::vector<cplx> coeff(bmax + 1, 0.0);
        for (int b = (s < 0 ? -s : 0); b <= bmax; ++b) {
            const int a = b + s;
            if (a < 0 || a + b > max_degree) continue;
            const int n = b; // lowest state with nonzero element
            const int row = n + s;
            if (row < 0 || row >= N || n >= N) continue;
            cplx val = M(row, n);
            for (int bp = (s < 0 ? -s : 0); bp < b; ++bp)
                val -= coeff[bp] * elem(bp + s, bp, n);
            coeff[b] = val / elem(a, b, n);
            if (std::abs(coeff[b]) > 1e-12) out.add(a, b, coeff[b]);
        }
    }
    return out;
}

// Weyl phase-space polynomial of a normal-ordered ladder polynomial: send
// create^a annih^b to the slot monomial (z+)^a (z-)^b, then apply the inverse
// Gaussian flow exp(-(hbar/2) d2/dz+ dz-) and return the (q,p) polynomial.
inline omcalc::Poly2 weyl_polynomial(const LadderPoly& L, double hbar) {
    omcalc::Poly2 slot;
    for (const auto& [key, v] : L.terms()) slot.add_term(key.first, key.second, v);
    return omcalc::slot_to_qp(omcalc::heat_flow(slot, -0.5 * hbar));
}

// Normal (Wick) phase-space polynomial: the slot monomials themselves.
inline omcalc::Poly2 normal_polynomial(const LadderPoly& L) {
    omcalc::Poly2 slot;
    for (const auto& [key, v] : L.terms()) slot.add_term(key.first, key.second, v);
    return omcalc::slot_to_qp(slot);
}

} // namespace oracle
