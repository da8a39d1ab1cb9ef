#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace scatnet {

// Uniform sampling grid over an interval [x_min, x_max] with n points,
// x_max = x_min + (n-1)*step. Used for both time and frequency domains
// (units differ; frequency grids are in cycles per unit).
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    double step = 1.0;
    int n = 0;

    static Grid from_range(double x_min, double x_max, double step) {
        if (!(step > 0.0))
            throw std::invalid_argument("Grid: step must be positive");
        double len = x_max - x_min;
        if (!(len > 0.0))
            throw std::invalid_argument("Grid: x_max must exceed x_min");
        int n = static_cast<int>(std::lround(len / step)) + 1;
        if (n < 2 || std::abs(x_min + (n - 1) * step - x_max) > 1e-9 * (std::abs(len) + step))
            throw std::invalid_argument("Grid: (x_max - x_min) is not a multiple of step");
        return Grid{x_min, x_max, step, n};
    }

    static Grid from_count(double x_min, double step, int n) {
        if (!(step > 0.0))
            throw std::invalid_argument("Grid: step must be positive");
        if (n < 2)
            throw std::invalid_argument("Grid: need at least 2 points");
        return Grid{x_min, x_min + (n - 1) * step, step, n};
    }

    double point(int i) const { return x_min + step * i; }

    bool operator==(const Grid& o) const {
        return n == o.n && close(x_min, o.x_min) && close(step, o.step);
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

    std::string describe() const {
        char buf[128];
        std::snprintf(buf, sizeof buf, "[%g, %g] step %g (n=%d)", x_min, x_max, step, n);
        return buf;
    }

  private:
    static bool close(double a, double b) {
        return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b));
    }
};

} // namespace scatnet
