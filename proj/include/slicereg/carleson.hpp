#pragma once

// Symmetric boxes and box-ratio scans for Carleson-type conditions.
//
//   S(q) = { rho e^{I alpha} : |alpha - t| <= 1 - r, 0 < 1 - rho <= 1 - r, I in S }
//
// for q = r e^{Jt}. The set does not depend on J; it is stored as (t, r)
// with t in [0, pi]. The complex box S_i(z) is the same data read on the
// slice B_i.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slicereg/measures.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/summation.hpp"

namespace slicereg {

struct SymmetricBox {
    double t = 0.0;
    double r = 0.0;

    void validate() const {
        if (!(t >= 0.0 && t <= std::numbers::pi)) throw std::invalid_argument("symmetric box: need t in [0, pi]");
        if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("symmetric box: need r in [0, 1)");
    }
    double aperture() const { return 1.0 - r; }
};

/// Membership of a canonical slice point (y >= 0, angle in [0, pi]). The
/// branches alpha + t and 2 pi - alpha - t come from writing rho e^{I alpha}
/// as rho e^{(-I)(-alpha)}.
inline bool box_contains(const SymmetricBox& box, const SlicePoint& p) {
    const double rho = std::hypot(p.x, p.y);
    const double h = box.aperture();
    const double gap = 1.0 - rho;
    if (!(gap > 0.0 && gap <= h)) return false;
    const double alpha = std::atan2(p.y, p.x);
    const double d = std::min({std::abs(alpha - box.t), alpha + box.t, 2.0 * std::numbers::pi - alpha - box.t});
    return d <= h;
}

/// Membership of z in the complex box S_i(z0) with the same (t, r) data.
inline bool box_contains(const SymmetricBox& box, Complex z) {
    const double rho = std::hypot(z.real(), z.imag());
    const double h = box.aperture();
    const double gap = 1.0 - rho;
    if (!(gap > 0.0 && gap <= h)) return false;
    const double alpha = std::atan2(z.imag(), z.real());  // (-pi, pi]
    const double diff = std::abs(alpha - box.t);
    const double d = std::min(diff, 2.0 * std::numbers::pi - diff);
    return d <= h;
}

inline double box_mass(const AtomicMeasure& mu, const SymmetricBox& box) {
    ExactSum s;
    for (const auto& a : mu.atoms())
        if (box_contains(box, a.point)) s.add(a.mass);
    return s.value();
}

inline double box_mass(const ComplexAtomicMeasure& nu, const SymmetricBox& box) {
    ExactSum s;
    for (const auto& a : nu.atoms())
        if (box_contains(box, a.z)) a.each_mass([&](double m) { s.add(m); });
    return s.value();
}

struct BoxRatio {
    double t = 0.0;
    double r = 0.0;
    double mass = 0.0;
    double ratio = 0.0;  // mass / (1 - r)
};

struct RatioReport {
    std::vector<BoxRatio> boxes;
    std::vector<double> shell_radii;
    /// Max ratio over the t grid, per radius shell.
    std::vector<double> shell_max;
    double sup = 0.0;
};

/// Box centers t_k = pi k / (t_count - 1), k = 0..t_count-1.
inline std::vector<double> box_centers(std::size_t t_count) {
    std::vector<double> t(t_count);
    for (std::size_t k = 0; k < t_count; ++k)
        t[k] = std::numbers::pi * static_cast<double>(k) / static_cast<double>(t_count - 1);
    return t;
}

/// Radii 1 - 2^{-k}, k = 1..depth.
inline std::vector<double> dyadic_shells(std::size_t depth) {
    std::vector<double> r(depth);
    for (std::size_t k = 1; k <= depth; ++k) r[k - 1] = 1.0 - std::ldexp(1.0, -static_cast<int>(k));
    return r;
}

namespace detail {

inline void check_scan_args(std::size_t t_count, const std::vector<double>& r_levels) {
    if (t_count < 4) throw std::invalid_argument("ratio scan: need t_count >= 4");
    if (r_levels.empty()) throw std::invalid_argument("ratio scan: need at least one radius shell");
    for (std::size_t m = 0; m < r_levels.size(); ++m) {
        if (!(r_levels[m] > 0.0 && r_levels[m] < 1.0))
            throw std::invalid_argument("ratio scan: shell radii must lie in (0, 1)");
        if (m > 0 && !(r_levels[m] > r_levels[m - 1]))
            throw std::invalid_argument("ratio scan: shell radii must be strictly increasing");
    }
}

template <class Measure>
RatioReport ratio_scan_impl(const Measure& mu, std::size_t t_count, const std::vector<double>& r_levels) {
    check_scan_args(t_count, r_levels);
    RatioReport rep;
    rep.shell_radii = r_levels;
    const auto centers = box_centers(t_count);
    for (double r : r_levels) {
        double shell = 0.0;
        for (double t : centers) {
            const SymmetricBox box{t, r};
            const double m = box_mass(mu, box);
            const double ratio = m / box.aperture();
            rep.boxes.push_back({t, r, m, ratio});
            shell = std::max(shell, ratio);
        }
        rep.shell_max.push_back(shell);
        rep.sup = std::max(rep.sup, shell);
    }
    return rep;
}

}  // namespace detail

/// Ratios mu(S(q)) / (1 - |q|) on the (t, r) grid.
inline RatioReport ratio_scan(const AtomicMeasure& mu, std::size_t t_count, const std::vector<double>& r_levels) {
    return detail::ratio_scan_impl(mu, t_count, r_levels);
}

inline RatioReport ratio_scan(const ComplexAtomicMeasure& nu, std::size_t t_count,
                              const std::vector<double>& r_levels) {
    return detail::ratio_scan_impl(nu, t_count, r_levels);
}

struct VanishingCriteria {
    /// Number of trailing shells that must be nonincreasing.
    std::size_t window = 5;
    /// Final shell max must not exceed threshold * global max.
    double threshold = 1e-3;
};

struct VanishingReport {
    RatioReport scan;
    bool vanishing = false;
    /// Least-squares slope of log(shell max) against log(1 - r), positive shells only.
    double decay_rate = 0.0;
    double global_max = 0.0;
    double final_max = 0.0;
};

inline VanishingReport vanishing_from_scan(RatioReport scan, const VanishingCriteria& crit = {}) {
    VanishingReport rep;
    const auto& s = scan.shell_max;
    rep.global_max = s.empty() ? 0.0 : *std::max_element(s.begin(), s.end());
    rep.final_max = s.empty() ? 0.0 : s.back();
    if (rep.global_max == 0.0) {
        rep.vanishing = true;
    } else {
        const std::size_t w = std::min(crit.window, s.size());
        bool nonincreasing = true;
        for (std::size_t m = s.size() - w + 1; m < s.size(); ++m)
            if (s[m] > s[m - 1]) nonincreasing = false;
        rep.vanishing = nonincreasing && rep.final_max <= crit.threshold * rep.global_max;
    }
    // Diagnostic fit.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t m = 0; m < s.size(); ++m) {
        if (!(s[m] > 0.0)) continue;
        const double x = std::log(1.0 - scan.shell_radii[m]);
        const double y = std::log(s[m]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++n;
    }
    if (n >= 2) {
        const double nd = static_cast<double>(n);
        const double den = nd * sxx - sx * sx;
        if (den != 0.0) rep.decay_rate = (nd * sxy - sx * sy) / den;
    }
    rep.scan = std::move(scan);
    return rep;
}

/// Vanishing verdict: the last `window` shell maxima are nonincreasing (ties
/// allowed) and the final one is at most threshold times the global max. An
/// all-zero scan is vanishing.
inline VanishingReport vanishing_scan(const AtomicMeasure& mu, std::size_t t_count,
                                      const std::vector<double>& r_levels, const VanishingCriteria& crit = {}) {
    return vanishing_from_scan(ratio_scan(mu, t_count, r_levels), crit);
}

inline VanishingReport vanishing_scan(const ComplexAtomicMeasure& nu, std::size_t t_count,
                                      const std::vector<double>& r_levels, const VanishingCriteria& crit = {}) {
    return vanishing_from_scan(ratio_scan(nu, t_count, r_levels), crit);
}

/// Boxes S(q_n) over disjoint arcs of the upper half circle.
struct BoxFamily {
    std::vector<std::pair<double, double>> arcs;
    std::vector<SymmetricBox> boxes;
};

/// Arc (theta1, theta2) in [0, pi] maps to t = (theta1 + theta2)/2 and
/// r = 1 - (theta2 - theta1)/2, so the box trace on the upper unit circle is
/// the closed arc. Arcs may touch at endpoints (they are open).
inline BoxFamily boxes_from_arcs(std::vector<std::pair<double, double>> arcs) {
    for (const auto& [a, b] : arcs) {
        if (!(a >= 0.0 && a < b && b <= std::numbers::pi))
            throw std::invalid_argument("boxes_from_arcs: need 0 <= theta1 < theta2 <= pi");
        if ((b - a) / 2.0 > 1.0)
            throw std::invalid_argument("boxes_from_arcs: arc half-length exceeds 1 (box radius would be negative)");
    }
    auto sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t m = 1; m < sorted.size(); ++m)
        if (sorted[m].first < sorted[m - 1].second)
            throw std::invalid_argument("boxes_from_arcs: arcs overlap");
    BoxFamily fam;
    fam.arcs = std::move(arcs);
    for (const auto& [a, b] : fam.arcs) fam.boxes.push_back({(a + b) / 2.0, 1.0 - (b - a) / 2.0});
    return fam;
}

/// Mass of the union S(O) of the family's boxes (each atom counted once).
inline double family_mass(const AtomicMeasure& mu, const BoxFamily& fam) {
    ExactSum s;
    for (const auto& a : mu.atoms())
        if (std::any_of(fam.boxes.begin(), fam.boxes.end(),
                        [&](const SymmetricBox& b) { return box_contains(b, a.point); }))
            s.add(a.mass);
    return s.value();
}

inline double family_mass(const ComplexAtomicMeasure& nu, const BoxFamily& fam) {
    ExactSum s;
    for (const auto& a : nu.atoms())
        if (std::any_of(fam.boxes.begin(), fam.boxes.end(),
                        [&](const SymmetricBox& b) { return box_contains(b, a.z); }))
            a.each_mass([&](double m) { s.add(m); });
    return s.value();
}

}  // namespace slicereg
