#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <scatnet/fft.hpp>
#include <scatnet/filters.hpp>
#include <scatnet/signal.hpp>

using namespace scatnet;

namespace {

const Grid kGrid = Grid::from_range(-20.0, 20.0, 0.025);

SampledSignal random_signal(const Grid& g, unsigned seed, bool complex_valued = true) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SampledSignal f = SampledSignal::zeros(g);
    for (auto& v : f.samples) v = complex_valued ? cplx{u(rng), u(rng)} : cplx{u(rng), 0.0};
    return f;
}

// Single sample of height 1/step at x = 0: the discrete convolution identity.
SampledSignal discrete_delta(const Grid& g) {
    SampledSignal d = SampledSignal::zeros(g);
    int i0 = static_cast<int>(std::lround(-g.x_min / g.step));
    d.samples[i0] = 1.0 / g.step;
    return d;
}

double sinc(double t) { return t == 0.0 ? 1.0 : std::sin(std::numbers::pi * t) / (std::numbers::pi * t); }

} // namespace

TEST_CASE("fourier transform of discrete delta is identically 1") {
    Spectrum s = fourier_transform(discrete_delta(kGrid));
    for (const cplx& v : s.values) {
        CHECK(std::abs(v.real() - 1.0) < 1e-9);
        CHECK(std::abs(v.imag()) < 1e-9);
    }
}

TEST_CASE("fourier transform of Haar phi matches |sinc|") {
    Filter phi = make_haar_phi(kGrid, 0); // chi_[0,1)
    const Spectrum& s = phi.spectrum;
    for (int k = 0; k < s.freq_grid.n; ++k) {
        double w = s.freq_grid.point(k);
        CHECK(std::abs(std::abs(s.values[k]) - std::abs(sinc(w))) < 1e-3);
    }
}

TEST_CASE("fourier transform of zero is zero") {
    Spectrum s = fourier_transform(SampledSignal::zeros(kGrid));
    for (const cplx& v : s.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("inverse transform of spectrum 1 is the discrete delta") {
    Spectrum s;
    double df = 1.0 / (kGrid.n * kGrid.step);
    s.freq_grid = Grid::from_count(-(kGrid.n / 2) * df, df, kGrid.n);
    s.values.assign(kGrid.n, cplx{1.0, 0.0});
    SampledSignal f = inverse_fourier_transform(s, kGrid.x_min);
    SampledSignal d = discrete_delta(kGrid);
    for (int i = 0; i < kGrid.n; ++i) CHECK(std::abs(f.samples[i] - d.samples[i]) < 1e-6);
}

TEST_CASE("smoothed indicator spectrum realizes the phi1 filter L1 value") {
    Filter phi1 = make_bump_filter("phi1", kGrid, bump_preset("phi1"));
    CHECK(phi1.l1 == doctest::Approx(1.8265).epsilon(0.01));
}

TEST_CASE("FT/IFT round trip and Parseval on random signals") {
    for (unsigned seed : {1u, 2u, 3u}) {
        SampledSignal f = random_signal(kGrid, seed);
        Spectrum s = fourier_transform(f);
        CHECK(l2_norm(s) == doctest::Approx(l2_norm(f)).epsilon(1e-9));
        SampledSignal back = inverse_fourier_transform(s, kGrid.x_min);
        double err = l2_norm(back - f) / l2_norm(f);
        CHECK(err < 1e-9);
    }
    // also a non power-of-two small grid
    Grid g = Grid::from_range(0.0, 1.0, 1.0 / 52);
    SampledSignal f = random_signal(g, 7);
    SampledSignal back = inverse_fourier_transform(fourier_transform(f), g.x_min);
    CHECK(l2_norm(back - f) / l2_norm(f) < 1e-9);
}

TEST_CASE("convolution with the discrete delta is the identity") {
    SampledSignal f = random_signal(kGrid, 11);
    SampledSignal r = convolve(f, discrete_delta(kGrid));
    CHECK(l2_norm(r - f) / l2_norm(f) < 1e-9);
}

TEST_CASE("box convolved with box peaks at 1") {
    Filter box = make_haar_phi(kGrid, 0);
    SampledSignal tri = convolve(box.time, box.time);
    int i1 = static_cast<int>(std::lround((1.0 - kGrid.x_min) / kGrid.step));
    CHECK(std::abs(tri.samples[i1].real() - 1.0) < 2 * kGrid.step);
    CHECK(std::abs(tri.samples[i1].imag()) < 1e-12);
}

TEST_CASE("convolution matches the direct sum and satisfies Young's inequality") {
    Grid g = Grid::from_range(-0.75, 0.75, 0.025); // 61 points
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        SampledSignal f = SampledSignal::zeros(g), h = SampledSignal::zeros(g);
        for (auto& v : f.samples) v = {u(rng), u(rng)};
        for (auto& v : h.samples) v = {u(rng), u(rng)};
        SampledSignal c = convolve(f, h);
        // direct quadratic-time linear convolution truncated to the grid
        long off = std::lround(-g.x_min / g.step);
        for (int i = 0; i < g.n; ++i) {
            long jfull = i + off;
            cplx acc{0, 0};
            for (long a = 0; a < g.n; ++a) {
                long b = jfull - a;
                if (b >= 0 && b < g.n) acc += f.samples[a] * h.samples[b];
            }
            acc *= g.step;
            CHECK(std::abs(acc - c.samples[i]) < 1e-9);
        }
        CHECK(l2_norm(c) <= l2_norm(f) * l1_norm(h) + 1e-9);
    }
}

TEST_CASE("convolve rejects mismatched grids") {
    SampledSignal f = random_signal(kGrid, 1);
    SampledSignal h = random_signal(Grid::from_range(-20.0, 20.0, 0.05), 2);
    CHECK_THROWS_AS(convolve(f, h), GridMismatch);
}

TEST_CASE("convolution theorem") {
    SampledSignal f = random_signal(kGrid, 21);
    // use a compactly supported smooth-ish g so truncation does not bite
    SampledSignal g = SampledSignal::zeros(kGrid);
    for (int i = 0; i < kGrid.n; ++i) {
        double x = kGrid.point(i);
        g.samples[i] = std::exp(-x * x);
    }
    // restrict f's support so the linear convolution stays inside the window
    for (int i = 0; i < kGrid.n; ++i)
        if (std::abs(kGrid.point(i)) > 8.0) f.samples[i] = 0.0;
    Spectrum lhs = fourier_transform(convolve(f, g));
    Spectrum ff = fourier_transform(f), fg = fourier_transform(g);
    double num = 0.0, den = 0.0;
    for (int k = 0; k < kGrid.n; ++k) {
        num += std::norm(lhs.values[k] - ff.values[k] * fg.values[k]);
        den += std::norm(ff.values[k] * fg.values[k]);
    }
    CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("norms: Haar psi, zero signal, bump g25") {
    Filter psi = make_haar_psi(kGrid, 0);
    CHECK(psi.l1 == doctest::Approx(1.0).epsilon(1e-6));
    SampledSignal z = SampledSignal::zeros(kGrid);
    CHECK(l1_norm(z) == 0.0);
    CHECK(l2_norm(z) == 0.0);
    CHECK(linf_norm(z) == 0.0);
    Filter g25 = make_bump_filter("g25", kGrid, bump_preset("g25"));
    CHECK(g25.l1 == doctest::Approx(2.3175).epsilon(0.01));
}

TEST_CASE("dilate: identity, Haar psi by 1/2, Haar phi by 2^-3") {
    Filter psi = make_haar_psi(kGrid, 0);
    SampledSignal same = dilate(psi.time, 1.0);
    CHECK(l2_norm(same - psi.time) == 0.0);

    // support doubles to [0,2); L1 within 1% (interpolating a jump
    // discontinuity costs more than smooth-signal accuracy)
    SampledSignal half = dilate(psi.time, 0.5, Interp::Linear);
    CHECK(l1_norm(half) == doctest::Approx(1.0).epsilon(0.01));
    for (int i = 0; i < kGrid.n; ++i) {
        double x = kGrid.point(i);
        if (x < -0.5 || x > 2.5) CHECK(std::abs(half.samples[i]) < 1e-9);
    }

    Filter phi0 = make_haar_phi(kGrid, 0);
    Filter phi3 = make_haar_phi(kGrid, 3);
    SampledSignal d = dilate(phi0.time, std::ldexp(1.0, -3), Interp::Linear);
    CHECK(l2_norm(d - phi3.time) < 0.05); // jump edges dominate the residual
    CHECK(l1_norm(d) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("dilate rejects non-positive lambda") {
    Filter psi = make_haar_psi(kGrid, 0);
    CHECK_THROWS(dilate(psi.time, 0.0));
    CHECK_THROWS(dilate(psi.time, -2.0));
}

TEST_CASE("deform: identities and closed-form shift") {
    SampledSignal f = SampledSignal::zeros(kGrid);
    for (int i = 0; i < kGrid.n; ++i) {
        double x = kGrid.point(i);
        f.samples[i] = std::exp(-x * x / 4.0);
    }
    Deformation none{SampledSignal::zeros(kGrid), SampledSignal::zeros(kGrid)};
    SampledSignal r0 = deform(f, none);
    CHECK(l2_norm(r0 - f) == 0.0);

    // constant modulation: |result| = |f| exactly
    Deformation mod{SampledSignal::zeros(kGrid), SampledSignal::zeros(kGrid)};
    for (auto& v : mod.omega.samples) v = 0.37;
    SampledSignal rm = deform(f, mod);
    for (int i = 0; i < kGrid.n; ++i)
        CHECK(std::abs(std::abs(rm.samples[i]) - std::abs(f.samples[i])) < 1e-12);

    // constant displacement vs analytically shifted signal
    Deformation shift{SampledSignal::zeros(kGrid), SampledSignal::zeros(kGrid)};
    for (auto& v : shift.tau.samples) v = 0.5;
    SampledSignal rs = deform(f, shift);
    SampledSignal expect = SampledSignal::zeros(kGrid);
    for (int i = 0; i < kGrid.n; ++i) {
        double x = kGrid.point(i) - 0.5;
        expect.samples[i] = std::exp(-x * x / 4.0);
    }
    CHECK(l2_norm(rs - expect) < 1e-2);
    CHECK(std::abs(linf_norm(rs) - linf_norm(f)) < 1e-2);
}

TEST_CASE("deform rejects complex fields") {
    SampledSignal f = random_signal(kGrid, 3);
    Deformation d{SampledSignal::zeros(kGrid), SampledSignal::zeros(kGrid)};
    d.tau.samples[10] = cplx{0.0, 0.1};
    CHECK_THROWS(deform(f, d));
}
