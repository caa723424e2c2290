#include "omcalc/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace omcalc {

namespace {

// FFTW plan cache, keyed by (length, sign). Plan creation is not thread-safe;
// execution on distinct buffers is. Plans are created UNALIGNED so they can be
// executed on any caller buffer.
class PlanCache {
  public:
    static fftw_plan get(int n, int sign) {
        static PlanCache cache;
        std::lock_guard<std::mutex> lock(cache.mutex_);
        auto key = std::make_pair(n, sign);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;
        std::vector<cplx> buf(static_cast<std::size_t>(n));
        fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf.data()),
                                       reinterpret_cast<fftw_complex*>(buf.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache.plans_.emplace(key, p);
        return p;
    }

  private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [k, p] : plans_) fftw_destroy_plan(p);
    }
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

cplx i_pow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

std::vector<int> axis_sizes(const PhaseGrid& g, Domain dom) {
    std::vector<int> n;
    for (int a = 0; a < g.d; ++a) n.push_back(dom == Domain::phase ? g.n_q : g.n_zq());
    for (int a = 0; a < g.d; ++a) n.push_back(dom == Domain::phase ? g.n_p : g.n_zp());
    return n;
}

// (-1)^(sum of axis indices) mask, applied in place.
void apply_parity_mask(Eigen::VectorXcd& v, const std::vector<int>& dims) {
    const Eigen::Index count = v.size();
    for (Eigen::Index i = 0; i < count; ++i) {
        Eigen::Index rest = i;
        int s = 0;
        for (int t = static_cast<int>(dims.size()) - 1; t >= 0; --t) {
            s += static_cast<int>(rest % dims[t]);
            rest /= dims[t];
        }
        if (s & 1) v[i] = -v[i];
    }
}

// In-place 1D transforms along axis `t` of a row-major array.
void transform_axis(Eigen::VectorXcd& v, const std::vector<int>& dims, int t, int sign) {
    const int n = dims[t];
    Eigen::Index stride = 1;
    for (int u = t + 1; u < static_cast<int>(dims.size()); ++u) stride *= dims[u];
    Eigen::Index block = stride * n;
    const Eigen::Index nlines = v.size() / n;
    fftw_plan plan = PlanCache::get(n, sign);
#pragma omp parallel
    {
        std::vector<cplx> line(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
        for (Eigen::Index li = 0; li < nlines; ++li) {
            const Eigen::Index outer = li / stride;
            const Eigen::Index inner = li % stride;
            const Eigen::Index base = outer * block + inner;
            for (int s = 0; s < n; ++s) line[s] = v[base + s * stride];
            fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(line.data()),
                             reinterpret_cast<fftw_complex*>(line.data()));
            for (int s = 0; s < n; ++s) v[base + s * stride] = line[s];
        }
    }
}

// Swap the q-like and p-like axis groups: out[group2..., group1...] = in[group1..., group2...].
void swap_groups(const Eigen::VectorXcd& in, Eigen::VectorXcd& out, const std::vector<int>& dims,
                 int d) {
    const int naxes = 2 * d;
    std::vector<Eigen::Index> stride_in(naxes, 1);
    for (int t = naxes - 2; t >= 0; --t) stride_in[t] = stride_in[t + 1] * dims[t + 1];
    std::vector<int> dims_out;
    for (int t = d; t < naxes; ++t) dims_out.push_back(dims[t]);
    for (int t = 0; t < d; ++t) dims_out.push_back(dims[t]);
    const Eigen::Index count = in.size();
    out.resize(count);
    for (Eigen::Index o = 0; o < count; ++o) {
        Eigen::Index rest = o, idx_in = 0;
        for (int t = naxes - 1; t >= 0; --t) {
            const int outdim = dims_out[t];
            const int idx = static_cast<int>(rest % outdim);
            rest /= outdim;
            const int in_axis = (t < d) ? (t + d) : (t - d);
            idx_in += idx * stride_in[in_axis];
        }
        out[o] = in[idx_in];
    }
}

Symbol direct_reference_transform(const Symbol& f) {
    const PhaseGrid& g = *f.grid;
    const Domain out_dom = f.domain == Domain::phase ? Domain::frequency : Domain::phase;
    Symbol out(f.grid, f.ordering, out_dom);
    const double mu = f.domain == Domain::phase ? g.cell_measure() : g.cell_measure_frequency();
    if (g.d != 1)
        throw validation_error("reference transform implemented for d = 1 only");
    const int n_in_q = f.domain == Domain::phase ? g.n_q : g.n_zq();
    const int n_in_p = f.domain == Domain::phase ? g.n_p : g.n_zp();
    const int n_out_q = out_dom == Domain::phase ? g.n_q : g.n_zq();
    const int n_out_p = out_dom == Domain::phase ? g.n_p : g.n_zp();
    auto in_pt = [&](int j, int k) {
        return f.domain == Domain::phase ? g.point(j, k) : g.frequency_point(j, k);
    };
    auto out_pt = [&](int m, int l) {
        return out_dom == Domain::phase ? g.point(m, l) : g.frequency_point(m, l);
    };
    for (int m = 0; m < n_out_q; ++m) {
        for (int l = 0; l < n_out_p; ++l) {
            const PhasePoint w = out_pt(m, l);
            cplx acc = 0.0;
            for (int j = 0; j < n_in_q; ++j)
                for (int k = 0; k < n_in_p; ++k) {
                    const PhasePoint z = in_pt(j, k);
                    const double phase = symplectic_form(z, w) / g.hbar;
                    acc += f.values[static_cast<Eigen::Index>(j) * n_in_p + k] *
                           std::polar(1.0, phase);
                }
            out.values[static_cast<Eigen::Index>(m) * n_out_p + l] = acc * mu;
        }
    }
    return out;
}

} // namespace

namespace kernels {

void symplectic_fft(const PhaseGrid& grid, Domain input_domain, const Eigen::VectorXcd& in,
                    Eigen::VectorXcd& out, Exec exec) {
    const int d = grid.d;
    const auto dims = axis_sizes(grid, input_domain);
    Eigen::VectorXcd work = in;
    apply_parity_mask(work, dims);
    // Group-1 axes (q-like) pair against the output fast group with a forward
    // (-) transform, group-2 axes (p-like) against the output slow group with
    // a backward (+) transform.
    for (int t = 0; t < d; ++t) transform_axis(work, dims, t, FFTW_FORWARD);
    for (int t = d; t < 2 * d; ++t) transform_axis(work, dims, t, FFTW_BACKWARD);
    swap_groups(work, out, dims, d);
    std::vector<int> dims_out;
    for (int t = d; t < 2 * d; ++t) dims_out.push_back(dims[t]);
    for (int t = 0; t < d; ++t) dims_out.push_back(dims[t]);
    apply_parity_mask(out, dims_out);
    const double mu = input_domain == Domain::phase ? grid.cell_measure()
                                                    : grid.cell_measure_frequency();
    cplx c = mu;
    for (int t = 0; t < d; ++t) c *= i_pow(-dims[t]);  // (-i)^n per forward axis
    for (int t = d; t < 2 * d; ++t) c *= i_pow(dims[t]); // i^n per backward axis
    out *= c;
    (void)exec;
}

} // namespace kernels

Symbol symplectic_fourier(const Symbol& f, Exec exec, bool check) {
    if (check && f.domain == Domain::phase) require_windowed(f);
    Symbol out(f.grid, f.ordering,
               f.domain == Domain::phase ? Domain::frequency : Domain::phase);
    if (exec == Exec::serial_reference) {
        out = direct_reference_transform(f);
    } else {
        kernels::symplectic_fft(*f.grid, f.domain, f.values, out.values, exec);
    }
    if (check && out.domain == Domain::frequency) require_band_limited(out);
    return out;
}

Symbol inverse_symplectic_fourier(const Symbol& g, Exec exec, bool check) {
    if (g.domain != Domain::frequency)
        throw validation_error("inverse_symplectic_fourier expects a frequency-domain symbol");
    return symplectic_fourier(g, exec, check);
}

Symbol spectral_derivative(const Symbol& f, int order_q, int order_p) {
    if (f.grid->d != 1) throw validation_error("spectral_derivative: d = 1 only");
    if (f.domain != Domain::phase) throw validation_error("spectral_derivative: phase domain only");
    Symbol ft = symplectic_fourier(f, Exec::parallel, false);
    const PhaseGrid& g = *f.grid;
    const cplx i_over_h(0.0, 1.0 / g.hbar);
    for (int m = 0; m < g.n_zq(); ++m)
        for (int l = 0; l < g.n_zp(); ++l) {
            cplx mult = 1.0;
            for (int r = 0; r < order_q; ++r) mult *= i_over_h * g.zp(l);
            for (int r = 0; r < order_p; ++r) mult *= -i_over_h * g.zq(m);
            ft.values[static_cast<Eigen::Index>(m) * g.n_zp() + l] *= mult;
        }
    return symplectic_fourier(ft, Exec::parallel, false);
}

} // namespace omcalc
