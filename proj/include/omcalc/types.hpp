#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace omcalc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Execution policy for the heavy kernels. `parallel` is the production path
// (OpenMP where available); `serial_reference` is the slow, independently
// coded variant kept for correctness tests and the benchmark tool.
enum class Exec { serial_reference, parallel };

// --- error taxonomy -------------------------------------------------------
//
// validation_error  -> bad arguments / config fields        (CLI exit 2)
// numeric_guard_error -> a numerical invariant tripped      (CLI exit 3)
// io_error          -> file problems                        (CLI exit 4)

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_guard_error : std::runtime_error {
    explicit numeric_guard_error(const std::string& what) : std::runtime_error(what) {}
};

struct aliasing_error : numeric_guard_error {
    explicit aliasing_error(const std::string& what) : numeric_guard_error(what) {}
};

struct window_error : numeric_guard_error {
    explicit window_error(const std::string& what) : numeric_guard_error(what) {}
};

struct zero_set_violation : numeric_guard_error {
    explicit zero_set_violation(const std::string& what) : numeric_guard_error(what) {}
};

struct truncation_error : numeric_guard_error {
    explicit truncation_error(const std::string& what) : numeric_guard_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace omcalc
