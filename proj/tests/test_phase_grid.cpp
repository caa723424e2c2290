#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "omcalc/fourier.hpp"
#include "omcalc/phase_grid.hpp"

using namespace omcalc;

namespace {

std::mt19937_64 rng(12345);

PhasePoint random_point(int d = 1) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    PhasePoint z;
    z.d = d;
    for (int a = 0; a < d; ++a) {
        z.q[a] = u(rng);
        z.p[a] = u(rng);
    }
    return z;
}

// Composite 16-point Gauss-Legendre rule over [-L, L], 8 panels per axis.
// Independent quadrature oracle for the defining transform integral.
double gl_node(int i) {
    static const double x[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                0.9445750230732326, 0.9894009349916499};
    return i < 8 ? -x[7 - i] : x[i - 8];
}
double gl_weight(int i) {
    static const double w[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                0.0622535239386479, 0.0271524594117541};
    return i < 8 ? w[7 - i] : w[i - 8];
}

cplx quadrature_transform(const std::function<cplx(double, double)>& f, double L, double hbar,
                          double zq, double zp) {
    const int panels = 8;
    const double h = 2.0 * L / panels;
    cplx acc = 0.0;
    for (int pq = 0; pq < panels; ++pq)
        for (int iq = 0; iq < 16; ++iq) {
            const double q = -L + (pq + 0.5 * (1.0 + gl_node(iq))) * h;
            const double wq = gl_weight(iq) * 0.5 * h;
            for (int pp = 0; pp < panels; ++pp)
                for (int ip = 0; ip < 16; ++ip) {
                    const double p = -L + (pp + 0.5 * (1.0 + gl_node(ip))) * h;
                    const double wp = gl_weight(ip) * 0.5 * h;
                    const double phase = (p * zq - zp * q) / hbar;
                    acc += wq * wp * f(q, p) * std::polar(1.0, phase);
                }
        }
    return acc / (2.0 * kPi * hbar);
}

} // namespace

TEST_CASE("symplectic form: displayed values and antisymmetry") {
    auto z1 = PhasePoint::make1d(1.0, 0.0);
    auto z2 = PhasePoint::make1d(0.0, 1.0);
    CHECK(symplectic_form(z1, z2) == doctest::Approx(-1.0));
    CHECK(symplectic_form(z2, z1) == doctest::Approx(1.0));
    CHECK(symplectic_form(z1, z1) == doctest::Approx(0.0));

    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_point();
        auto b = random_point();
        CHECK(symplectic_form(a, b) == doctest::Approx(-symplectic_form(b, a)).epsilon(1e-12));
        // complex-coordinate identity
        const cplx c = symplectic_form_complex(a, b);
        CHECK(std::abs(c - symplectic_form(a, b)) < 1e-12);
    }
}

TEST_CASE("symplectic form is bilinear") {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_point();
        auto b = random_point();
        auto c = random_point();
        const double alpha = u(rng);
        PhasePoint ab;
        ab.d = 1;
        ab.q[0] = a.q[0] + alpha * b.q[0];
        ab.p[0] = a.p[0] + alpha * b.p[0];
        CHECK(symplectic_form(ab, c) ==
              doctest::Approx(symplectic_form(a, c) + alpha * symplectic_form(b, c))
                  .epsilon(1e-11));
    }
}

TEST_CASE("grid covers the window exactly") {
    PhaseGrid g(1, 64, 32, 5.0, 7.0, 0.5);
    CHECK(g.dq() * g.n_q == doctest::Approx(2.0 * g.L_q));
    CHECK(g.dp() * g.n_p == doctest::Approx(2.0 * g.L_p));
    double vol = 0.0;
    for (int j = 0; j < g.n_q; ++j)
        for (int k = 0; k < g.n_p; ++k) vol += g.dq() * g.dp();
    CHECK(vol == doctest::Approx((2 * g.L_q) * (2 * g.L_p)).epsilon(1e-14));
    CHECK_THROWS_AS(PhaseGrid(1, 6, 32, 1, 1, 1), validation_error);
    CHECK_THROWS_AS(PhaseGrid(1, 16, 17, 1, 1, 1), validation_error);
    CHECK_THROWS_AS(PhaseGrid(1, 16, 16, 1, 1, -1.0), validation_error);
}

TEST_CASE("transform: zero maps to zero, FFT equals direct Riemann sum") {
    auto g = std::make_shared<PhaseGrid>(1, 16, 16, 5.0, 5.0, 1.0);
    Symbol zero(g, Ordering::weyl);
    Symbol tz = symplectic_fourier(zero, Exec::parallel, false);
    CHECK(tz.values.norm() == 0.0);

    std::normal_distribution<double> nd(0.0, 1.0);
    Symbol f(g, Ordering::weyl);
    for (int j = 0; j < g->n_q; ++j)
        for (int k = 0; k < g->n_p; ++k) f.at(j, k) = cplx(nd(rng), nd(rng));
    Symbol fast = symplectic_fourier(f, Exec::parallel, false);
    Symbol ref = symplectic_fourier(f, Exec::serial_reference, false);
    const double rel = (fast.values - ref.values).norm() / ref.values.norm();
    CHECK(rel < 1e-8);
    CHECK(fast.domain == Domain::frequency);
}

TEST_CASE("transform: centered Gaussian is a fixed point") {
    auto g = std::make_shared<PhaseGrid>(std::move(PhaseGrid::standard(1.0, 64)));
    const double hbar = g->hbar;
    Symbol f = sample_symbol(g, Ordering::weyl, [&](const PhasePoint& z) {
        return cplx(std::exp(-(z.q[0] * z.q[0] + z.p[0] * z.p[0]) / (2.0 * hbar)), 0.0);
    });
    Symbol ft = symplectic_fourier(f);
    // analytic image: the same Gaussian on the dual lattice
    double max_err = 0.0;
    for (int m = 0; m < g->n_zq(); ++m)
        for (int l = 0; l < g->n_zp(); ++l) {
            const double zq = g->zq(m), zp = g->zp(l);
            const double expect = std::exp(-(zq * zq + zp * zp) / (2.0 * hbar));
            max_err = std::max(max_err,
                               std::abs(ft.values[m * g->n_zp() + l] - cplx(expect, 0.0)));
        }
    CHECK(max_err < 1e-9);

    // independent quadrature oracle at a few frequency points
    auto gauss = [&](double q, double p) {
        return cplx(std::exp(-(q * q + p * p) / (2.0 * hbar)), 0.0);
    };
    for (auto [m, l] : {std::pair{32, 32}, {36, 32}, {32, 40}, {29, 35}}) {
        const cplx oracle = quadrature_transform(gauss, g->L_q, hbar, g->zq(m), g->zp(l));
        CHECK(std::abs(ft.values[m * g->n_zp() + l] - oracle) < 1e-8);
    }
}

TEST_CASE("transform: parity f(-z) -> ft(-zeta)") {
    auto g = std::make_shared<PhaseGrid>(std::move(PhaseGrid::standard(1.0, 32)));
    Symbol f = sample_symbol(g, Ordering::weyl, [&](const PhasePoint& z) {
        const double q = z.q[0], p = z.p[0];
        return cplx(q + 0.3 * p, 0.2 * q * p) * std::exp(-(q * q + p * p) / 2.0);
    });
    Symbol fr(g, Ordering::weyl);
    // reflected input: index j -> n-j on both axes; the j = 0 row has no
    // partner on the centered lattice, so skip it (value is negligible).
    for (int j = 1; j < g->n_q; ++j)
        for (int k = 1; k < g->n_p; ++k) fr.at(j, k) = f.at(g->n_q - j, g->n_p - k);
    Symbol t1 = symplectic_fourier(f, Exec::parallel, false);
    Symbol t2 = symplectic_fourier(fr, Exec::parallel, false);
    double max_err = 0.0;
    for (int m = 1; m < g->n_zq(); ++m)
        for (int l = 1; l < g->n_zp(); ++l)
            max_err = std::max(max_err, std::abs(t2.values[m * g->n_zp() + l] -
                                                 t1.values[(g->n_zq() - m) * g->n_zp() +
                                                           (g->n_zp() - l)]));
    CHECK(max_err < 1e-10);
}

TEST_CASE("round trip is the identity and Parseval holds") {
    auto g = std::make_shared<PhaseGrid>(1, 48, 32, 6.0, 6.0, 0.7);
    std::normal_distribution<double> nd(0.0, 1.0);
    Symbol f(g, Ordering::normal);
    for (int j = 0; j < g->n_q; ++j)
        for (int k = 0; k < g->n_p; ++k) f.at(j, k) = cplx(nd(rng), nd(rng));
    Symbol ft = symplectic_fourier(f, Exec::parallel, false);
    Symbol back = inverse_symplectic_fourier(ft, Exec::parallel, false);
    CHECK(back.domain == Domain::phase);
    CHECK(back.ordering == Ordering::normal);
    CHECK((back.values - f.values).norm() / f.values.norm() < 1e-12);

    const double a = f.l2_norm(), b = ft.l2_norm();
    CHECK(std::abs(a - b) / a < 1e-12);
}

TEST_CASE("band-limited round trip through the guarded path") {
    auto g = std::make_shared<PhaseGrid>(std::move(PhaseGrid::standard(0.5, 64)));
    std::normal_distribution<double> nd(0.0, 1.0);
    // random smooth symbol: a few Gaussian bumps well inside the window
    Symbol f(g, Ordering::weyl);
    std::uniform_real_distribution<double> ctr(-0.15, 0.15);
    for (int b = 0; b < 5; ++b) {
        const double cq = ctr(rng) * g->L_q, cp = ctr(rng) * g->L_p;
        const cplx amp(nd(rng), nd(rng));
        for (int j = 0; j < g->n_q; ++j)
            for (int k = 0; k < g->n_p; ++k) {
                const double dq = g->q(j) - cq, dp = g->p(k) - cp;
                f.at(j, k) += amp * std::exp(-(dq * dq + dp * dp) / (1.5 * g->hbar));
            }
    }
    Symbol ft = symplectic_fourier(f); // guards on
    Symbol back = inverse_symplectic_fourier(ft);
    CHECK((back.values - f.values).norm() / f.values.norm() < 1e-10);
}

TEST_CASE("delta-like frequency spike maps to a constant") {
    auto g = std::make_shared<PhaseGrid>(std::move(PhaseGrid::standard(1.0, 32)));
    Symbol spike(g, Ordering::weyl, Domain::frequency);
    spike.values[(g->n_zq() / 2) * g->n_zp() + g->n_zp() / 2] = 1.0;
    Symbol f = inverse_symplectic_fourier(spike, Exec::parallel, false);
    const cplx c0 = f.values[0];
    double dev = 0.0;
    for (Eigen::Index i = 0; i < f.values.size(); ++i)
        dev = std::max(dev, std::abs(f.values[i] - c0));
    CHECK(dev < 1e-12 * std::abs(c0));
}

TEST_CASE("windowing and aliasing guards fire") {
    auto g = std::make_shared<PhaseGrid>(std::move(PhaseGrid::standard(1.0, 16)));
    Symbol bad = sample_symbol(g, Ordering::weyl,
                               [](const PhasePoint& z) { return cplx(z.q[0], 0.0); });
    CHECK_THROWS_AS(symplectic_fourier(bad), window_error);

    // narrow spike in phase space -> broad in frequency -> aliasing guard
    Symbol spike(g, Ordering::weyl);
    spike.at(g->n_q / 2, g->n_p / 2) = 1.0;
    CHECK_THROWS_AS(symplectic_fourier(spike), aliasing_error);
}

TEST_CASE("d = 2 transform round trips and fixes the Gaussian") {
    auto g = std::make_shared<PhaseGrid>(2, 16, 16, 6.0, 6.0, 1.0);
    Symbol f = sample_symbol(g, Ordering::weyl, [&](const PhasePoint& z) {
        double s = 0.0;
        for (int a = 0; a < 2; ++a) s += z.q[a] * z.q[a] + z.p[a] * z.p[a];
        return cplx(std::exp(-s / 2.0), 0.0);
    });
    Symbol ft = symplectic_fourier(f, Exec::parallel, false);
    // fixed point at the center of the dual lattice
    const int nzq = g->n_zq(), nzp = g->n_zp();
    auto fidx = [&](int m1, int m2, int l1, int l2) {
        return ((static_cast<Eigen::Index>(m1) * nzq + m2) * nzp + l1) * nzp + l2;
    };
    for (auto [m, l] : {std::pair{8, 8}, {9, 10}}) {
        const double zq = g->zq(m), zp = g->zp(l);
        const double expect = std::exp(-2.0 * (zq * zq + zp * zp) / 2.0);
        CHECK(std::abs(ft.values[fidx(m, m, l, l)] - cplx(expect, 0.0)) < 1e-7);
    }
    Symbol back = symplectic_fourier(ft, Exec::parallel, false);
    CHECK((back.values - f.values).norm() / f.values.norm() < 1e-12);
}

TEST_CASE("spectral derivative matches the analytic derivative") {
    auto g = std::make_shared<PhaseGrid>(std::move(PhaseGrid::standard(1.0, 64)));
    Symbol f = sample_symbol(g, Ordering::weyl, [](const PhasePoint& z) {
        const double q = z.q[0], p = z.p[0];
        return cplx(std::exp(-(q * q + p * p) / 2.0), 0.0);
    });
    Symbol dfq = spectral_derivative(f, 1, 0);
    Symbol dfp2 = spectral_derivative(f, 0, 2);
    double e1 = 0.0, e2 = 0.0;
    for (int j = g->n_q / 4; j < 3 * g->n_q / 4; ++j)
        for (int k = g->n_p / 4; k < 3 * g->n_p / 4; ++k) {
            const double q = g->q(j), p = g->p(k);
            const double gau = std::exp(-(q * q + p * p) / 2.0);
            e1 = std::max(e1, std::abs(dfq.at(j, k) - cplx(-q * gau, 0.0)));
            e2 = std::max(e2, std::abs(dfp2.at(j, k) - cplx((p * p - 1.0) * gau, 0.0)));
        }
    CHECK(e1 < 1e-9);
    CHECK(e2 < 1e-8);
}
