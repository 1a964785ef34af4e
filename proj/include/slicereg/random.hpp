#pragma once

// Seeded pseudo-randomness with a portable contract.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard distributions are implementation-defined, so every
// variate is derived here from raw 64-bit words:
//   uniform01   = (word >> 11) * 2^-53                 in [0, 1)
//   normal      = Box-Muller on two uniform01 draws     (cosine branch only)
//   index(n)    = floor(uniform01 * n)
// Identical seeds therefore produce identical families on every platform.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "slicereg/quaternion.hpp"

namespace slicereg {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::size_t index(std::size_t n) {
        const auto k = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

    double normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform point on S.
    ImaginaryUnit unit() {
        for (;;) {
            const double a = normal();
            const double b = normal();
            const double c = normal();
            const double n2 = a * a + b * b + c * c;
            if (n2 > 1e-12) return ImaginaryUnit::normalized(a, b, c);
        }
    }

    Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }

    /// Uniform point of the open ball of the given radius in R^4.
    Quaternion ball_point(double radius = 1.0) {
        for (;;) {
            const Quaternion q = quaternion();
            const double n = q.norm();
            if (n < 1e-12) continue;
            const double rho = radius * std::pow(uniform01(), 0.25);
            const Quaternion p = q * (rho / n);
            if (p.norm2() < 1.0) return p;
        }
    }

    Complex disc_point(double radius = 1.0) {
        const double rho = radius * std::sqrt(uniform01());
        const double phi = uniform(0.0, 2.0 * std::numbers::pi);
        return std::polar(rho, phi);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace slicereg
