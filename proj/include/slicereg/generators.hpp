#pragma once

// Seeded measure generators used by the experiments and the CLI.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "slicereg/measures.hpp"
#include "slicereg/random.hpp"

namespace slicereg {

/// Mass law along a dyadic ray: 2^-k, k 2^-k or 4^-k.
enum class RayLaw { Geometric, LinearGeometric, Quartic };

inline RayLaw ray_law_from_string(const std::string& s) {
    if (s == "geometric") return RayLaw::Geometric;
    if (s == "linear_geometric") return RayLaw::LinearGeometric;
    if (s == "quartic") return RayLaw::Quartic;
    throw std::invalid_argument("unknown ray mass law '" + s + "' (expected geometric, linear_geometric, quartic)");
}

inline std::string to_string(RayLaw law) {
    switch (law) {
        case RayLaw::Geometric: return "geometric";
        case RayLaw::LinearGeometric: return "linear_geometric";
        case RayLaw::Quartic: return "quartic";
    }
    return "unknown";
}

inline double ray_mass(RayLaw law, std::size_t k) {
    const int e = static_cast<int>(k);
    switch (law) {
        case RayLaw::Geometric: return std::ldexp(1.0, -e);
        case RayLaw::LinearGeometric: return static_cast<double>(k) * std::ldexp(1.0, -e);
        case RayLaw::Quartic: return std::ldexp(1.0, -2 * e);
    }
    return 0.0;
}

/// Atoms at rho_k e^{I angle}, rho_k = 1 - 2^-k, k = 1..depth.
inline AtomicMeasure dyadic_ray(std::size_t depth, RayLaw law, double angle = 0.0,
                                const ImaginaryUnit& I = ImaginaryUnit::i()) {
    AtomicMeasure mu;
    for (std::size_t k = 1; k <= depth; ++k) {
        const double rho = 1.0 - std::ldexp(1.0, -static_cast<int>(k));
        if (angle == 0.0)
            mu.add(rho, 0.0, I, ray_mass(law, k));
        else
            mu.add(rho * std::cos(angle), rho * std::sin(angle), I, ray_mass(law, k));
    }
    return mu;
}

struct RandomMeasureConfig {
    std::size_t atoms = 200;
    /// Fraction of atoms placed on the real axis.
    double real_fraction = 0.1;
    /// Fraction of atoms sharing an (x, y) fiber with a previous atom but carrying another unit.
    double fiber_fraction = 0.1;
    double max_radius = 0.97;
};

/// Random atomic measure: uniform points of the ball of radius max_radius,
/// masses uniform in (0, 1].
inline AtomicMeasure random_measure(Rng& rng, const RandomMeasureConfig& cfg = {}) {
    AtomicMeasure mu;
    for (std::size_t n = 0; n < cfg.atoms; ++n) {
        const double mass = 1.0 - rng.uniform01();
        const double u = rng.uniform01();
        if (u < cfg.real_fraction) {
            mu.add(rng.uniform(-cfg.max_radius, cfg.max_radius), 0.0, ImaginaryUnit::i(), mass);
        } else if (u < cfg.real_fraction + cfg.fiber_fraction && !mu.empty()) {
            const SlicePoint& base = mu.atoms()[rng.index(mu.size())].point;
            mu.add(base.x, base.y, rng.unit(), mass);
        } else {
            mu.add(rng.ball_point(cfg.max_radius), mass);
        }
    }
    return mu;
}

}  // namespace slicereg
