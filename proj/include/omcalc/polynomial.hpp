#pragma once

#include <map>
#include <utility>

#include "omcalc/types.hpp"

namespace omcalc {

// Sparse bivariate polynomial with complex coefficients. Used both for
// phase-space polynomials in (q, p) and for "slot" polynomials in the two
// independent complex variables (z+, z-) that label creation/annihilation
// sides; the container is the same, the variable names are a usage convention.
class Poly2 {
  public:
    using Key = std::pair<int, int>; // exponents of the two variables

    Poly2() = default;
    static Poly2 constant(cplx c) {
        Poly2 r;
        if (c != cplx(0.0)) r.c_[{0, 0}] = c;
        return r;
    }
    static Poly2 var1() { // q (or z+)
        Poly2 r;
        r.c_[{1, 0}] = 1.0;
        return r;
    }
    static Poly2 var2() { // p (or z-)
        Poly2 r;
        r.c_[{0, 1}] = 1.0;
        return r;
    }
    static Poly2 monomial(int a, int b, cplx c = 1.0) {
        Poly2 r;
        if (c != cplx(0.0)) r.c_[{a, b}] = c;
        return r;
    }

    const std::map<Key, cplx>& terms() const { return c_; }
    bool empty() const { return c_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
        return d;
    }

    Poly2& operator+=(const Poly2& o) {
        for (const auto& [k, v] : o.c_) add_term(k.first, k.second, v);
        return *this;
    }
    Poly2 operator+(const Poly2& o) const {
        Poly2 r = *this;
        r += o;
        return r;
    }
    Poly2 operator-(const Poly2& o) const { return *this + o * cplx(-1.0); }
    Poly2 operator*(cplx s) const {
        Poly2 r;
        for (const auto& [k, v] : c_)
            if (v * s != cplx(0.0)) r.c_[k] = v * s;
        return r;
    }
    Poly2 operator*(const Poly2& o) const {
        Poly2 r;
        for (const auto& [k1, v1] : c_)
            for (const auto& [k2, v2] : o.c_)
                r.add_term(k1.first + k2.first, k1.second + k2.second, v1 * v2);
        r.prune();
        return r;
    }
    Poly2 pow(int n) const {
        Poly2 r = constant(1.0);
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    void add_term(int a, int b, cplx v) {
        auto it = c_.find({a, b});
        if (it == c_.end()) {
            if (v != cplx(0.0)) c_[{a, b}] = v;
        } else {
            it->second += v;
            if (std::abs(it->second) == 0.0) c_.erase(it);
        }
    }

    cplx eval(cplx x, cplx y) const {
        cplx acc = 0.0;
        for (const auto& [k, v] : c_) {
            cplx t = v;
            for (int i = 0; i < k.first; ++i) t *= x;
            for (int i = 0; i < k.second; ++i) t *= y;
            acc += t;
        }
        return acc;
    }

    // Substitute var1 -> s1, var2 -> s2 (polynomial composition).
    Poly2 substitute(const Poly2& s1, const Poly2& s2) const {
        Poly2 r;
        for (const auto& [k, v] : c_) r += s1.pow(k.first) * s2.pow(k.second) * v;
        r.prune();
        return r;
    }

    Poly2 derivative1() const {
        Poly2 r;
        for (const auto& [k, v] : c_)
            if (k.first > 0) r.c_[{k.first - 1, k.second}] = v * double(k.first);
        return r;
    }
    Poly2 derivative2() const {
        Poly2 r;
        for (const auto& [k, v] : c_)
            if (k.second > 0) r.c_[{k.first, k.second - 1}] = v * double(k.second);
        return r;
    }

    void prune(double tol = 0.0) {
        for (auto it = c_.begin(); it != c_.end();)
            it = (std::abs(it->second) <= tol) ? c_.erase(it) : std::next(it);
    }

  private:
    std::map<Key, cplx> c_;
};

// (q,p)-polynomial -> slot polynomial in (w+, w-), where w+ is the variable
// paired with the creation side and w- with the annihilation side:
//   q = (w+ + w-)/sqrt(2),  p = i (w+ - w-)/sqrt(2),
// mirroring q_hat = (z+_hat + z-_hat)/sqrt(2), p_hat = i (z+_hat - z-_hat)/sqrt(2).
inline Poly2 qp_to_slot(const Poly2& f) {
    const double s = 1.0 / std::sqrt(2.0);
    Poly2 wsum = (Poly2::var1() + Poly2::var2()) * s;           // q
    Poly2 wdif = (Poly2::var1() - Poly2::var2()) * cplx(0, s);  // p
    return f.substitute(wsum, wdif);
}

// Slot polynomial -> (q,p) polynomial: w+ = (q - i p)/sqrt(2), w- = (q + i p)/sqrt(2).
inline Poly2 slot_to_qp(const Poly2& w) {
    const double s = 1.0 / std::sqrt(2.0);
    Poly2 wp = (Poly2::var1() - Poly2::var2() * cplx(0, 1)) * s;
    Poly2 wm = (Poly2::var1() + Poly2::var2() * cplx(0, 1)) * s;
    return w.substitute(wp, wm);
}

// exp(c * d^2/(dv1 dv2)) applied to a polynomial: finite triangular flow.
inline Poly2 heat_flow(const Poly2& f, cplx c) {
    Poly2 r;
    for (const auto& [k, v] : f.terms()) {
        const int a = k.first, b = k.second;
        cplx factor = v;
        for (int j = 0; j <= std::min(a, b); ++j) {
            if (j > 0) factor *= c * double(a - j + 1) * double(b - j + 1) / double(j);
            r.add_term(a - j, b - j, factor);
        }
    }
    r.prune();
    return r;
}

} // namespace omcalc
