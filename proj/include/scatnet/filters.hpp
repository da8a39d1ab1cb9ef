#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fft.hpp"
#include "signal.hpp"

namespace scatnet {

enum class FilterKind { HaarPhi, HaarPsi, Bump, Delta, Samples, SpectrumDef };

// One additive term of a bump-combination spectrum: F(w - c), G(w - c), or
// the indicator chi_(a,b). F is the C^inf bump edge
//   F(w) = exp(4w^2 / (4w^2 - 1)) on (-1/2, 0], 0 elsewhere,
// right-closed at 0 so that assembled spectra are continuous with value 1 at
// band junctions; G(w) = F(-w).
struct BumpTerm {
    enum Fn { F, G, Chi } fn;
    double a = 0.0; // F/G: translation c; Chi: left endpoint
    double b = 0.0; // Chi: right endpoint
};

namespace detail {

inline double bump_F(double w) {
    if (w > -0.5 && w <= 0.0) {
        double q = 4.0 * w * w;
        return std::exp(q / (q - 1.0));
    }
    return 0.0;
}

inline double bump_eval(const std::vector<BumpTerm>& terms, double w) {
    double v = 0.0;
    for (const BumpTerm& t : terms) {
        switch (t.fn) {
        case BumpTerm::F: v += bump_F(w - t.a); break;
        case BumpTerm::G: v += bump_F(t.a - w); break;
        case BumpTerm::Chi: v += (w > t.a && w < t.b) ? 1.0 : 0.0; break;
        }
    }
    return v;
}

} // namespace detail

// A convolution filter: time-domain samples plus cached frequency response
// and cached L1 norm. Delta filters are identity edges: frequency response
// identically 1, no time-domain realization.
struct Filter {
    std::string name;
    FilterKind kind = FilterKind::Samples;
    SampledSignal time;                       // empty for Delta
    Spectrum spectrum;                        // on the time grid's DFT dual
    double l1 = 0.0;
    std::function<double(double)> spectral_fn; // analytic response, if known

    bool is_delta() const { return kind == FilterKind::Delta; }
};

namespace detail {

// L1 quadrature for spectrum-defined filters. The inverse transform is
// sampled at cell midpoints (midpoint rule): an on-grid Riemann sum is biased
// by several percent for filters whose time realization has sharp lobes near
// grid points, and the midpoint rule removes that bias.
inline double l1_midpoint(const Spectrum& s, const Grid& time_grid) {
    SampledSignal mid = inverse_fourier_transform(s, time_grid.x_min + time_grid.step / 2.0);
    return l1_norm(mid);
}

} // namespace detail

inline Filter make_filter_from_samples(std::string name, SampledSignal time,
                                       FilterKind kind = FilterKind::Samples) {
    Filter f;
    f.name = std::move(name);
    f.kind = kind;
    f.spectrum = fourier_transform(time);
    f.time = std::move(time);
    f.l1 = l1_norm(f.time);
    return f;
}

inline Filter make_filter_from_spectrum(std::string name, Spectrum spec, const Grid& grid,
                                        FilterKind kind = FilterKind::SpectrumDef) {
    if (spec.freq_grid.n != grid.n)
        throw std::invalid_argument("make_filter_from_spectrum: spectrum size must match grid");
    Filter f;
    f.name = std::move(name);
    f.kind = kind;
    f.time = inverse_fourier_transform(spec, grid.x_min);
    f.l1 = detail::l1_midpoint(spec, grid);
    f.spectrum = std::move(spec);
    return f;
}

inline Filter make_delta(std::string name, const Grid& grid) {
    Filter f;
    f.name = std::move(name);
    f.kind = FilterKind::Delta;
    double df = 1.0 / (grid.n * grid.step);
    f.spectrum.freq_grid = Grid::from_count(-(grid.n / 2) * df, df, grid.n);
    f.spectrum.values.assign(grid.n, cplx{1.0, 0.0});
    f.l1 = 1.0;
    f.spectral_fn = [](double) { return 1.0; };
    return f;
}

// Haar wavelet psi_{2^j}(x) = 2^j psi(2^j x), psi = chi_[0,1/2) - chi_[1/2,1),
// sampled exactly (the breakpoints align with the grid whenever 2^{-j-1} is a
// grid multiple, which holds for the default grid and j >= -4).
inline Filter make_haar_psi(const Grid& grid, int j, std::string name = {}) {
    double s = std::ldexp(1.0, j);
    SampledSignal v = SampledSignal::zeros(grid);
    for (int i = 0; i < grid.n; ++i) {
        double t = s * grid.point(i);
        if (t >= 0.0 && t < 0.5)
            v.samples[i] = s;
        else if (t >= 0.5 && t < 1.0)
            v.samples[i] = -s;
    }
    if (name.empty()) name = "haar_psi(2^" + std::to_string(j) + ")";
    return make_filter_from_samples(std::move(name), std::move(v), FilterKind::HaarPsi);
}

// Haar scaling output atom 2^{-J} phi(2^{-J} x), phi = chi_[0,1).
inline Filter make_haar_phi(const Grid& grid, int J, std::string name = {}) {
    double s = std::ldexp(1.0, -J);
    SampledSignal v = SampledSignal::zeros(grid);
    for (int i = 0; i < grid.n; ++i) {
        double t = s * grid.point(i);
        if (t >= 0.0 && t < 1.0) v.samples[i] = s;
    }
    if (name.empty()) name = "haar_phi(2^-" + std::to_string(J) + ")";
    return make_filter_from_samples(std::move(name), std::move(v), FilterKind::HaarPhi);
}

inline Filter make_bump_filter(std::string name, const Grid& grid,
                               std::vector<BumpTerm> terms) {
    double df = 1.0 / (grid.n * grid.step);
    Spectrum s;
    s.freq_grid = Grid::from_count(-(grid.n / 2) * df, df, grid.n);
    s.values.resize(grid.n);
    for (int k = 0; k < grid.n; ++k)
        s.values[k] = detail::bump_eval(terms, s.freq_grid.point(k));
    Filter f = make_filter_from_spectrum(std::move(name), std::move(s), grid, FilterKind::Bump);
    f.spectral_fn = [terms = std::move(terms)](double w) { return detail::bump_eval(terms, w); };
    return f;
}

// The named bump-combination presets used by the three-layer example bank.
inline std::vector<BumpTerm> bump_preset(const std::string& which) {
    using T = BumpTerm;
    auto band = [](double lo, double hi) {
        // F(w + hi') ... symmetric pair of pass bands +-(lo,hi) with smooth edges
        return std::vector<T>{{T::F, -hi}, {T::Chi, -hi, -lo}, {T::G, -lo},
                              {T::F, lo},  {T::Chi, lo, hi},   {T::G, hi}};
    };
    auto lowpass = [](double r) {
        return std::vector<T>{{T::F, -r}, {T::Chi, -r, r}, {T::G, r}};
    };
    if (which == "phi1") return lowpass(1.0);
    if (which == "g11") return band(2.0, 3.0);
    if (which == "g12") return band(4.0, 5.0);
    if (which == "g13") return band(6.0, 7.0);
    if (which == "g14") return band(8.0, 9.0);
    if (which == "phi2") return lowpass(2.0);
    if (which == "g21") return band(3.0, 4.0);
    if (which == "g22") return band(5.0, 6.0);
    if (which == "g23") return band(7.0, 8.0);
    if (which == "g24") return band(3.0, 5.0);
    if (which == "g25") return band(6.0, 8.0);
    if (which == "phi3") return lowpass(9.0);
    throw std::invalid_argument("unknown bump preset: " + which);
}

inline const std::vector<std::string>& bump_bank_names() {
    static const std::vector<std::string> names = {"phi1", "g11", "g12", "g13", "g14", "phi2",
                                                   "g21",  "g22", "g23", "g24", "g25", "phi3"};
    return names;
}

// All 12 filters of the bump example bank, in table order.
inline std::vector<Filter> make_bump_filterbank(const Grid& grid) {
    std::vector<Filter> out;
    out.reserve(12);
    for (const std::string& nm : bump_bank_names())
        out.push_back(make_bump_filter(nm, grid, bump_preset(nm)));
    return out;
}

// Haar filter bank: one wavelet filter per dilation exponent plus the
// scaling-function output atom. Every L1 norm is exactly 1.
inline std::pair<std::vector<Filter>, Filter>
make_haar_filterbank(const Grid& grid, int J, const std::vector<int>& j_values) {
    if (J < 1) throw std::invalid_argument("make_haar_filterbank: J must be >= 1");
    if (j_values.empty()) throw std::invalid_argument("make_haar_filterbank: need j values");
    std::vector<Filter> filters;
    filters.reserve(j_values.size());
    for (int j : j_values) filters.push_back(make_haar_psi(grid, j));
    return {std::move(filters), make_haar_phi(grid, J)};
}

// Weighted layer Bessel bound: max over the frequency grid of
//   sum_l w_l |g_l^(w)|^2 + |phi^(w)|^2   (atom term omitted when absent).
// When every participant has an analytic response the maximum is refined on a
// 4x denser grid.
inline double bessel_bound(const std::vector<const Filter*>& filters, const Filter* atom,
                           const std::vector<double>& weights) {
    if (weights.size() != filters.size())
        throw std::invalid_argument("bessel_bound: one weight per filter required");
    if (filters.empty() && atom == nullptr) return 0.0;
    const Grid* fg = nullptr;
    bool analytic = true;
    auto check = [&](const Filter* f) {
        if (fg == nullptr)
            fg = &f->spectrum.freq_grid;
        else if (*fg != f->spectrum.freq_grid)
            throw GridMismatch("bessel_bound: spectra on mismatched frequency grids");
        analytic = analytic && static_cast<bool>(f->spectral_fn);
    };
    for (const Filter* f : filters) check(f);
    if (atom) check(atom);

    double best = 0.0;
    for (int k = 0; k < fg->n; ++k) {
        double s = 0.0;
        for (size_t l = 0; l < filters.size(); ++l)
            s += weights[l] * std::norm(filters[l]->spectrum.values[k]);
        if (atom) s += std::norm(atom->spectrum.values[k]);
        best = std::max(best, s);
    }
    if (analytic) {
        const int refine = 4;
        for (int k = 0; k < refine * (fg->n - 1); ++k) {
            double w = fg->x_min + fg->step * k / refine;
            double s = 0.0;
            for (size_t l = 0; l < filters.size(); ++l) {
                double v = filters[l]->spectral_fn(w);
                s += weights[l] * v * v;
            }
            if (atom) {
                double v = atom->spectral_fn(w);
                s += v * v;
            }
            best = std::max(best, s);
        }
    }
    return best;
}

} // namespace scatnet
