#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "grid.hpp"

namespace scatnet {

using cplx = std::complex<double>;

struct GridMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Complex-valued function sampled on a uniform grid. Norms are Riemann
// approximations of the continuous ones (weighted by the grid step).
struct SampledSignal {
    Grid grid;
    std::vector<cplx> samples;

    SampledSignal() = default;
    SampledSignal(Grid g, std::vector<cplx> s) : grid(g), samples(std::move(s)) {
        if (static_cast<int>(samples.size()) != grid.n)
            throw std::invalid_argument("SampledSignal: sample count does not match grid");
    }
    static SampledSignal zeros(Grid g) {
        return SampledSignal(g, std::vector<cplx>(g.n, cplx{0.0, 0.0}));
    }
};

// Sampled Fourier transform; freq_grid is in cycles per unit.
struct Spectrum {
    Grid freq_grid;
    std::vector<cplx> values;
};

inline double l1_norm(const SampledSignal& f) {
    double s = 0.0;
    for (const cplx& v : f.samples) s += std::abs(v);
    return f.grid.step * s;
}

inline double l2_norm(const SampledSignal& f) {
    double s = 0.0;
    for (const cplx& v : f.samples) s += std::norm(v);
    return std::sqrt(f.grid.step * s);
}

inline double linf_norm(const SampledSignal& f) {
    double m = 0.0;
    for (const cplx& v : f.samples) m = std::max(m, std::abs(v));
    return m;
}

inline double l2_norm(const Spectrum& s) {
    double acc = 0.0;
    for (const cplx& v : s.values) acc += std::norm(v);
    return std::sqrt(s.freq_grid.step * acc);
}

inline double linf_norm(const Spectrum& s) {
    double m = 0.0;
    for (const cplx& v : s.values) m = std::max(m, std::abs(v));
    return m;
}

inline SampledSignal operator-(const SampledSignal& a, const SampledSignal& b) {
    if (a.grid != b.grid)
        throw GridMismatch("signal subtraction: grids differ: " + a.grid.describe() + " vs " +
                           b.grid.describe());
    SampledSignal r = a;
    for (int i = 0; i < a.grid.n; ++i) r.samples[i] -= b.samples[i];
    return r;
}

enum class Interp { Sinc, Linear };

namespace detail {

inline double sinc(double t) {
    if (std::abs(t) < 1e-12) return 1.0;
    double pt = std::numbers::pi * t;
    return std::sin(pt) / pt;
}

// Interpolated evaluation of f at an arbitrary point; zero outside the grid.
inline cplx interp_at(const SampledSignal& f, double t, Interp method) {
    const Grid& g = f.grid;
    if (t < g.x_min - g.step || t > g.x_max + g.step) return {0.0, 0.0};
    if (method == Interp::Linear) {
        double u = (t - g.x_min) / g.step;
        int i0 = static_cast<int>(std::floor(u));
        double w = u - i0;
        cplx a = (i0 >= 0 && i0 < g.n) ? f.samples[i0] : cplx{0, 0};
        cplx b = (i0 + 1 >= 0 && i0 + 1 < g.n) ? f.samples[i0 + 1] : cplx{0, 0};
        return a * (1.0 - w) + b * w;
    }
    // band-limited (sinc) interpolation
    cplx acc{0.0, 0.0};
    double u = (t - g.x_min) / g.step;
    for (int j = 0; j < g.n; ++j) acc += f.samples[j] * sinc(u - j);
    return acc;
}

} // namespace detail

// Dilation f_lambda(x) = lambda * f(lambda * x), resampled onto f's own grid.
inline SampledSignal dilate(const SampledSignal& f, double lambda,
                            Interp method = Interp::Sinc) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
    if (lambda == 1.0) return f;
    SampledSignal r = SampledSignal::zeros(f.grid);
    for (int i = 0; i < f.grid.n; ++i)
        r.samples[i] = lambda * detail::interp_at(f, lambda * f.grid.point(i), method);
    return r;
}

// Displacement + modulation fields for the deformation operator
// F_{tau,omega} f(x) = e^{2*pi*i*omega(x)} f(x - tau(x)).
struct Deformation {
    SampledSignal tau;
    SampledSignal omega;
};

inline SampledSignal deform(const SampledSignal& f, const Deformation& d,
                            Interp method = Interp::Sinc) {
    if (d.tau.grid != f.grid || d.omega.grid != f.grid)
        throw GridMismatch("deform: field grids must match the signal grid");
    for (const cplx& v : d.tau.samples)
        if (v.imag() != 0.0) throw std::invalid_argument("deform: tau must be real-valued");
    for (const cplx& v : d.omega.samples)
        if (v.imag() != 0.0) throw std::invalid_argument("deform: omega must be real-valued");
    SampledSignal r = SampledSignal::zeros(f.grid);
    for (int i = 0; i < f.grid.n; ++i) {
        double tau = d.tau.samples[i].real();
        double om = d.omega.samples[i].real();
        cplx ph = std::polar(1.0, 2.0 * std::numbers::pi * om);
        cplx val = (tau == 0.0) ? f.samples[i]
                                : detail::interp_at(f, f.grid.point(i) - tau, method);
        r.samples[i] = ph * val;
    }
    return r;
}

} // namespace scatnet
