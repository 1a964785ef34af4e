#pragma once

// Seeded generators and independent oracles shared by the test files.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "slicereg/slicereg.hpp"

namespace testsupport {

using namespace slicereg;

inline double rel_diff(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

// Left-multiplication matrix of a = (w, x, y, z): a * b = L(a) b on R^4.
inline Quaternion matrix_product(const Quaternion& a, const Quaternion& b) {
    const double L[4][4] = {{a.w, -a.x, -a.y, -a.z},
                            {a.x, a.w, -a.z, a.y},
                            {a.y, a.z, a.w, -a.x},
                            {a.z, -a.y, a.x, a.w}};
    const double v[4] = {b.w, b.x, b.y, b.z};
    double r[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) r[i] += L[i][k] * v[k];
    return {r[0], r[1], r[2], r[3]};
}

// sum q^n a_n through explicit powers, no Horner.
inline Quaternion naive_eval(const SliceSeries& f, const Quaternion& q) {
    Quaternion acc{};
    Quaternion power = 1.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
        acc += matrix_product(power, f[n]);
        power = matrix_product(power, q);
    }
    return acc;
}

inline std::complex<double> naive_eval(const ComplexSeries& F, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t n = 0; n < F.size(); ++n) acc += F[n] * std::pow(z, static_cast<int>(n));
    return acc;
}

inline SliceSeries random_series(Rng& rng, std::size_t degree, double decay = 0.8) {
    std::vector<Quaternion> a(degree + 1);
    double s = 1.0;
    for (auto& c : a) {
        c = rng.quaternion() * s;
        s *= decay;
    }
    return SliceSeries(std::move(a));
}

inline SliceSeries random_real_series(Rng& rng, std::size_t degree, double decay = 0.8) {
    std::vector<Quaternion> a(degree + 1);
    double s = 1.0;
    for (auto& c : a) {
        c = Quaternion(rng.normal() * s);
        s *= decay;
    }
    return SliceSeries(std::move(a));
}

inline ComplexSeries random_complex_series(Rng& rng, std::size_t degree, double decay = 0.8) {
    std::vector<Complex> a(degree + 1);
    double s = 1.0;
    for (auto& c : a) {
        c = Complex(rng.normal(), rng.normal()) * s;
        s *= decay;
    }
    return ComplexSeries(std::move(a));
}

inline ComplexSeries real_part_series(const SliceSeries& f) {
    std::vector<Complex> a(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) a[n] = f[n].w;
    return ComplexSeries(std::move(a));
}

inline AtomicMeasure random_atoms(Rng& rng, std::size_t count, double radius = 0.97) {
    RandomMeasureConfig cfg;
    cfg.atoms = count;
    cfg.max_radius = radius;
    return random_measure(rng, cfg);
}

inline double max_coeff_diff(const SliceSeries& a, const SliceSeries& b) {
    double d = 0.0;
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) d = std::max(d, (a[n] - b[n]).norm());
    return d;
}

}  // namespace testsupport
