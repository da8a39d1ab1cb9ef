#pragma once

#include <cstring>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include <fftw3.h>

#include "signal.hpp"

namespace scatnet {

// Process-wide cache of FFTW plans, one per (size, direction). Plans use
// FFTW_ESTIMATE so the chosen algorithm (and hence the exact rounding) is
// reproducible run to run. Execution is serialized on the cached buffer.
class FftEngine {
  public:
    static FftEngine& instance() {
        static FftEngine e;
        return e;
    }

    // In-place unnormalized DFT: sign -1 forward (e^{-2pi i km/n}), +1 backward.
    void transform(std::vector<cplx>& data, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        Slot& s = slot(data.size(), sign);
        std::memcpy(s.buf, data.data(), data.size() * sizeof(cplx));
        fftw_execute(s.plan);
        std::memcpy(data.data(), s.buf, data.size() * sizeof(cplx));
    }

    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

  private:
    struct Slot {
        fftw_complex* buf = nullptr;
        fftw_plan plan = nullptr;
    };

    FftEngine() = default;
    ~FftEngine() {
        for (auto& [key, s] : slots_) {
            fftw_destroy_plan(s.plan);
            fftw_free(s.buf);
        }
    }

    Slot& slot(size_t n, int sign) {
        auto key = std::make_pair(n, sign);
        auto it = slots_.find(key);
        if (it != slots_.end()) return it->second;
        Slot s;
        s.buf = fftw_alloc_complex(n);
        s.plan = fftw_plan_dft_1d(static_cast<int>(n), s.buf, s.buf,
                                  sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
        return slots_.emplace(key, s).first->second;
    }

    std::mutex mu_;
    std::map<std::pair<size_t, int>, Slot> slots_;
};

// Continuous-convention Fourier transform f^(w) = \int f(x) e^{-2pi i w x} dx,
// approximated by the Riemann sum on the grid. The frequency grid is the DFT
// dual: n points spaced 1/(n*step), centered so w_k = k/(n*step) for
// k = -floor(n/2) .. n-1-floor(n/2).
inline Spectrum fourier_transform(const SampledSignal& f) {
    const int n = f.grid.n;
    const double dt = f.grid.step;
    const double df = 1.0 / (n * dt);
    const int k0 = n / 2;

    std::vector<cplx> buf = f.samples;
    FftEngine::instance().transform(buf, -1);

    Spectrum s;
    s.freq_grid = Grid::from_count(-k0 * df, df, n);
    s.values.resize(n);
    for (int idx = 0; idx < n; ++idx) {
        int k = idx - k0; // signed frequency index
        double w = k * df;
        cplx ph = std::polar(dt, -2.0 * std::numbers::pi * w * f.grid.x_min);
        s.values[idx] = ph * buf[((k % n) + n) % n];
    }
    return s;
}

// Inverse transform onto a time grid with step 1/(n*df) whose origin is
// x_min (defaults to the symmetric grid, matching fourier_transform's dual).
// Works for any uniform frequency grid: time[j] = df * sum_k v_k e^{2pi i w_k x_j}.
inline SampledSignal inverse_fourier_transform(const Spectrum& s,
                                               double x_min = std::nan("")) {
    const int n = s.freq_grid.n;
    const double df = s.freq_grid.step;
    const double dt = 1.0 / (n * df);
    if (std::isnan(x_min)) x_min = -(n / 2) * dt;

    std::vector<cplx> buf(n);
    for (int k = 0; k < n; ++k) {
        double wk = s.freq_grid.point(k);
        buf[k] = s.values[k] * std::polar(1.0, 2.0 * std::numbers::pi * wk * x_min);
    }
    FftEngine::instance().transform(buf, +1);

    const double w0 = s.freq_grid.x_min;
    SampledSignal f = SampledSignal::zeros(Grid::from_count(x_min, dt, n));
    for (int j = 0; j < n; ++j) {
        cplx ph = std::polar(df, 2.0 * std::numbers::pi * w0 * (j * dt));
        f.samples[j] = ph * buf[j];
    }
    return f;
}

namespace detail {

inline size_t conv_fft_size(int n) {
    size_t m = 1;
    while (m < static_cast<size_t>(2 * n - 1)) m <<= 1;
    return m;
}

// Forward FFT of a signal zero-padded to the linear-convolution size.
inline std::vector<cplx> padded_fft(const std::vector<cplx>& v, size_t nfft) {
    std::vector<cplx> buf(nfft, cplx{0.0, 0.0});
    std::copy(v.begin(), v.end(), buf.begin());
    FftEngine::instance().transform(buf, -1);
    return buf;
}

// Completes a linear convolution given the padded product spectrum.
// The full convolution lives on positions 2*x_min + j*step; truncating back
// to the input grid starts at index -x_min/step.
inline SampledSignal conv_finish(std::vector<cplx> prod, const Grid& grid) {
    const size_t nfft = prod.size();
    FftEngine::instance().transform(prod, +1);
    const double scale = grid.step / static_cast<double>(nfft);
    const long off = std::lround(-grid.x_min / grid.step);
    SampledSignal out = SampledSignal::zeros(grid);
    for (int i = 0; i < grid.n; ++i) {
        long j = i + off;
        if (j >= 0 && j < static_cast<long>(nfft)) out.samples[i] = prod[j] * scale;
    }
    return out;
}

} // namespace detail

// Linear (zero-padded) convolution scaled by the grid step, truncated back
// to the common grid.
inline SampledSignal convolve(const SampledSignal& f, const SampledSignal& g) {
    if (f.grid != g.grid)
        throw GridMismatch("convolve: grids differ: " + f.grid.describe() + " vs " +
                           g.grid.describe());
    const size_t nfft = detail::conv_fft_size(f.grid.n);
    std::vector<cplx> a = detail::padded_fft(f.samples, nfft);
    std::vector<cplx> b = detail::padded_fft(g.samples, nfft);
    for (size_t i = 0; i < nfft; ++i) a[i] *= b[i];
    return detail::conv_finish(std::move(a), f.grid);
}

} // namespace scatnet
