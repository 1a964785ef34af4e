#pragma once

// Banach norms on the base spaces X_D (coefficient-weighted Hilbert spaces,
// Hardy H^p, weighted Besov B^p_alpha) and on their quaternionic lifts X_B.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicereg/parallel.hpp"
#include "slicereg/quadrature.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/series.hpp"
#include "slicereg/summation.hpp"

namespace slicereg {

enum class SpaceKind { CoefficientWeighted, Hardy, Besov };

inline std::string to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::CoefficientWeighted: return "coefficient_weighted";
        case SpaceKind::Hardy: return "hardy";
        case SpaceKind::Besov: return "besov";
    }
    return "unknown";
}

struct SpaceSpec {
    SpaceKind kind = SpaceKind::CoefficientWeighted;
    std::vector<double> weights;  // CoefficientWeighted only
    double p = 2.0;               // Hardy, Besov
    double alpha = 0.0;           // Besov
    double j_norm = 1.0;          // operator norm of J on X_D

    static SpaceSpec coefficient_weighted(std::vector<double> w, double j_norm = 1.0) {
        SpaceSpec s;
        s.kind = SpaceKind::CoefficientWeighted;
        s.weights = std::move(w);
        s.j_norm = j_norm;
        s.validate();
        return s;
    }
    static SpaceSpec hardy(double p) {
        SpaceSpec s;
        s.kind = SpaceKind::Hardy;
        s.p = p;
        s.validate();
        return s;
    }
    static SpaceSpec besov(double p, double alpha) {
        SpaceSpec s;
        s.kind = SpaceKind::Besov;
        s.p = p;
        s.alpha = alpha;
        s.validate();
        return s;
    }

    /// Norm exponent: 2 for the Hilbert kinds.
    double exponent() const { return kind == SpaceKind::CoefficientWeighted ? 2.0 : p; }

    void validate() const {
        if (!(j_norm >= 1.0) || !std::isfinite(j_norm))
            throw std::invalid_argument("space spec: j_norm must be a finite real >= 1");
        switch (kind) {
            case SpaceKind::CoefficientWeighted: validate_weights(); break;
            case SpaceKind::Hardy:
                if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("hardy space: need p >= 1");
                break;
            case SpaceKind::Besov:
                if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("besov space: need p >= 1");
                if (!(alpha > -1.0)) throw std::invalid_argument("besov space: need alpha > -1");
                if (!(p >= alpha + 1.0)) throw std::invalid_argument("besov space: need p >= alpha + 1");
                break;
        }
    }

    /// Polynomial decay allowance of the finite liminf surrogate: on the tail
    /// n >= max(1, N/2), require (n+1)^K c_n >= (1 - 1e-9)^n.
    static constexpr double kWeightDecayOrder = 4.0;

private:
    void validate_weights() const {
        if (weights.empty()) throw std::invalid_argument("coefficient-weighted space: empty weight table");
        for (double c : weights)
            if (!(c > 0.0) || !std::isfinite(c))
                throw std::invalid_argument("coefficient-weighted space: weights must be positive and finite");
        const std::size_t N = weights.size() - 1;
        const double floor_rate = std::log1p(-1e-9);
        for (std::size_t n = std::max<std::size_t>(1, N / 2); n <= N; ++n) {
            const auto nd = static_cast<double>(n);
            const double lhs = std::log(weights[n]) + kWeightDecayOrder * std::log(nd + 1.0);
            if (lhs < nd * floor_rate)
                throw std::invalid_argument("coefficient-weighted space: weights decay geometrically (c_" +
                                            std::to_string(n) + " = " + std::to_string(weights[n]) +
                                            "), liminf c_n^(1/n) >= 1 fails");
        }
    }
};

/// H^2: c_n = 1.
inline SpaceSpec hardy2_preset(std::size_t degree = kDefaultDegree) {
    return SpaceSpec::coefficient_weighted(std::vector<double>(degree + 1, 1.0));
}

/// A^2: c_n = 1/(n+1).
inline SpaceSpec bergman_preset(std::size_t degree = kDefaultDegree) {
    std::vector<double> c(degree + 1);
    for (std::size_t n = 0; n <= degree; ++n) c[n] = 1.0 / static_cast<double>(n + 1);
    return SpaceSpec::coefficient_weighted(std::move(c));
}

/// Dirichlet: c_0 = 1, c_n = n.
inline SpaceSpec dirichlet_preset(std::size_t degree = kDefaultDegree) {
    std::vector<double> c(degree + 1);
    c[0] = 1.0;
    for (std::size_t n = 1; n <= degree; ++n) c[n] = static_cast<double>(n);
    return SpaceSpec::coefficient_weighted(std::move(c));
}

inline SpaceSpec preset_by_name(const std::string& name, std::size_t degree = kDefaultDegree) {
    if (name == "hardy2") return hardy2_preset(degree);
    if (name == "bergman") return bergman_preset(degree);
    if (name == "dirichlet") return dirichlet_preset(degree);
    throw std::invalid_argument("unknown space preset '" + name + "' (expected hardy2, bergman, dirichlet)");
}

struct QuadratureSpec {
    std::size_t n_theta = 4096;
    std::vector<double> radii{0.9, 0.99, 0.999, 0.9999};
    std::size_t n_r = 256;
    std::size_t n_phi = 1024;

    void validate() const {
        if (n_theta < 8 || n_r < 8 || n_phi < 8)
            throw std::invalid_argument("quadrature spec: all sample counts must be >= 8");
        for (std::size_t m = 0; m < radii.size(); ++m) {
            if (!(radii[m] > 0.0 && radii[m] < 1.0))
                throw std::invalid_argument("quadrature spec: radii must lie in (0, 1)");
            if (m > 0 && !(radii[m] > radii[m - 1]))
                throw std::invalid_argument("quadrature spec: radii must be strictly increasing");
        }
    }
};

/// Norm value plus the Hardy limit diagnostics (empty for other kinds).
struct NormEvaluation {
    double value = 0.0;
    /// Integral means M_p(r)^p at the quadrature radii, then at r = 1.
    std::vector<double> radius_means;
    double boundary_mean = 0.0;
    /// Means nondecreasing in r (up to rounding), as they must be for holomorphic F.
    bool monotone = true;
    /// Relative gap between the mean at the largest radius and the boundary mean.
    double convergence_gap = 0.0;
};

namespace detail {

inline double hardy_mean(const ComplexSeries& F, double p, double r, std::span<const double> angles) {
    std::vector<double> v(angles.size());
    for (std::size_t m = 0; m < angles.size(); ++m) v[m] = abs_pow(std::abs(F(std::polar(r, angles[m]))), p);
    return pairwise_sum(v) / static_cast<double>(angles.size());
}

inline void check_weight_table(const ComplexSeries& F, const SpaceSpec& spec) {
    for (std::size_t n = spec.weights.size(); n < F.size(); ++n)
        if (F.coeffs()[n] != Complex{})
            throw std::invalid_argument("coefficient-weighted norm: series degree " + std::to_string(F.degree()) +
                                        " exceeds the weight table (" + std::to_string(spec.weights.size()) +
                                        " weights)");
}

}  // namespace detail

/// Hardy means use the trapezoid rule on circles. Truncated series extend
/// continuously to the closed disc, so the limit r -> 1- is the mean on the
/// unit circle; the radii only feed the monotonicity diagnostic.
inline NormEvaluation complex_norm_detailed(const ComplexSeries& F, const SpaceSpec& spec,
                                            const QuadratureSpec& quad = {}) {
    spec.validate();
    NormEvaluation out;
    switch (spec.kind) {
        case SpaceKind::CoefficientWeighted: {
            detail::check_weight_table(F, spec);
            std::vector<double> terms(F.size());
            for (std::size_t n = 0; n < F.size(); ++n) terms[n] = spec.weights[n] * std::norm(F.coeffs()[n]);
            out.value = std::sqrt(pairwise_sum(terms));
            return out;
        }
        case SpaceKind::Hardy: {
            quad.validate();
            const auto angles = circle_angles(quad.n_theta);
            for (double r : quad.radii) out.radius_means.push_back(detail::hardy_mean(F, spec.p, r, angles));
            out.boundary_mean = detail::hardy_mean(F, spec.p, 1.0, angles);
            out.radius_means.push_back(out.boundary_mean);
            constexpr double kRounding = 1e-12;
            for (std::size_t m = 1; m < out.radius_means.size(); ++m)
                if (out.radius_means[m] < out.radius_means[m - 1] * (1.0 - kRounding)) out.monotone = false;
            const double last = out.radius_means.size() >= 2 ? out.radius_means[out.radius_means.size() - 2]
                                                             : out.boundary_mean;
            out.convergence_gap =
                out.boundary_mean > 0.0 ? (out.boundary_mean - last) / out.boundary_mean : 0.0;
            out.value = std::pow(out.boundary_mean, 1.0 / spec.p);
            return out;
        }
        case SpaceKind::Besov: {
            quad.validate();
            const ComplexSeries dF = F.derivative();
            const GaussRule rule = gauss_legendre(quad.n_r, 0.0, 1.0);
            const auto angles = circle_angles(quad.n_phi);
            const double dphi = 2.0 * std::numbers::pi / static_cast<double>(quad.n_phi);
            std::vector<double> ring(quad.n_r);
            std::vector<double> v(angles.size());
            for (std::size_t i = 0; i < quad.n_r; ++i) {
                const double r = rule.nodes[i];
                for (std::size_t m = 0; m < angles.size(); ++m)
                    v[m] = abs_pow(std::abs(dF(std::polar(r, angles[m]))), spec.p);
                const double weight = spec.alpha == 0.0 ? 1.0 : std::pow(1.0 - r * r, spec.alpha);
                ring[i] = rule.weights[i] * r * weight * dphi * pairwise_sum(v);
            }
            const double area = pairwise_sum(ring);
            out.value = std::pow(abs_pow(std::abs(F(0.0)), spec.p) + area, 1.0 / spec.p);
            return out;
        }
    }
    return out;
}

inline double complex_norm(const ComplexSeries& F, const SpaceSpec& spec, const QuadratureSpec& quad = {}) {
    return complex_norm_detailed(F, spec, quad).value;
}

/// sqrt(|F|^2 + |G|^2) for the splitting f = F + GJ on B_I.
inline double slice_norm(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                         const SpaceSpec& spec, const QuadratureSpec& quad = {}) {
    const auto [F, G] = split(f, I, J);
    const double a = complex_norm(F, spec, quad);
    const double b = complex_norm(G, spec, quad);
    return std::sqrt(a * a + b * b);
}

inline double slice_norm(const SliceSeries& f, const ImaginaryUnit& I, const SpaceSpec& spec,
                         const QuadratureSpec& quad = {}) {
    return slice_norm(f, I, orthogonal_unit(I), spec, quad);
}

/// Hardy slice norm computed directly from |f| on circles of B_I,
/// (mean of |f(e^{It})|^p)^(1/p), without splitting.
inline double hardy_slice_norm_direct(const SliceSeries& f, const ImaginaryUnit& I, double p,
                                      const QuadratureSpec& quad = {}) {
    quad.validate();
    const auto angles = circle_angles(quad.n_theta);
    std::vector<double> v(angles.size());
    for (std::size_t m = 0; m < angles.size(); ++m) {
        const Quaternion q = to_slice(std::polar(1.0, angles[m]), I);
        v[m] = abs_pow(eval_unchecked(f, q).norm(), p);
    }
    return std::pow(pairwise_sum(v) / static_cast<double>(angles.size()), 1.0 / p);
}

/// Deterministic Fibonacci lattice of n points on S, followed by the six axis units.
inline std::vector<ImaginaryUnit> sphere_lattice(std::size_t n) {
    std::vector<ImaginaryUnit> out;
    out.reserve(n + 6);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < n; ++k) {
        const double zc = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
        const double rad = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        const double phi = golden * static_cast<double>(k);
        out.push_back(ImaginaryUnit::normalized(rad * std::cos(phi), rad * std::sin(phi), zc));
    }
    out.push_back(ImaginaryUnit::i());
    out.push_back(-ImaginaryUnit::i());
    out.push_back(ImaginaryUnit::j());
    out.push_back(-ImaginaryUnit::j());
    out.push_back(ImaginaryUnit::k());
    out.push_back(-ImaginaryUnit::k());
    return out;
}

inline constexpr std::size_t kDefaultSphereSamples = 64;

struct LiftNorm {
    double value = 0.0;
    /// Unit attaining the sampled maximum (i for the closed form).
    ImaginaryUnit argmax{};
    /// True when value is the exact norm; false when it is a sampled lower bound of the sup.
    bool exact = false;
    std::size_t samples = 0;
};

/// Norm of the quaternionic lift, sup over I of the slice norms.
/// Coefficient-weighted spaces use the slice-independent closed form
/// sqrt(sum c_n |a_n|^2); other kinds maximize over a sphere lattice plus
/// any extra units supplied by the caller.
inline LiftNorm lift_norm(const SliceSeries& f, const SpaceSpec& spec, const QuadratureSpec& quad = {},
                          std::size_t sphere_samples = kDefaultSphereSamples,
                          std::span<const ImaginaryUnit> extra_units = {}) {
    spec.validate();
    if (sphere_samples < 1) throw std::invalid_argument("lift_norm: need at least one sphere sample");
    LiftNorm out;
    if (spec.kind == SpaceKind::CoefficientWeighted) {
        if (f.size() > spec.weights.size())
            for (std::size_t n = spec.weights.size(); n < f.size(); ++n)
                if (f.coeffs()[n] != Quaternion{})
                    throw std::invalid_argument("lift_norm: series degree exceeds the weight table");
        std::vector<double> terms(f.size());
        for (std::size_t n = 0; n < f.size(); ++n) terms[n] = spec.weights[n] * f.coeffs()[n].norm2();
        out.value = std::sqrt(pairwise_sum(terms));
        out.exact = true;
        out.samples = 0;
        return out;
    }
    auto units = sphere_lattice(sphere_samples);
    units.insert(units.end(), extra_units.begin(), extra_units.end());
    std::vector<double> values(units.size());
    parallel_for(units.size(), [&](std::size_t u) { values[u] = slice_norm(f, units[u], spec, quad); });
    const auto best = std::max_element(values.begin(), values.end());
    out.value = *best;
    out.argmax = units[static_cast<std::size_t>(best - values.begin())];
    out.exact = f.slice_preserving(0.0);  // slice norms coincide for slice preserving f
    out.samples = units.size();
    return out;
}

struct SandwichReport {
    double slice_norm = 0.0;
    double lift_norm = 0.0;
    /// slice / lift, at most 1.
    double lower_ratio = 1.0;
    /// lift / slice, at most 2(1 + |J|).
    double upper_ratio = 1.0;
    double bound = 4.0;
    bool pass = true;
};

/// Checks |f|_{X_{B_I}} <= |f|_{X_B} <= 2(1 + |J|) |f|_{X_{B_I}}. The lift
/// norm is sampled with I included, so the lower inequality is exact up to
/// rounding of the closed form (relative 1e-12 allowance).
inline SandwichReport sandwich_check(const SliceSeries& f, const ImaginaryUnit& I, const SpaceSpec& spec,
                                     const QuadratureSpec& quad = {},
                                     std::size_t sphere_samples = kDefaultSphereSamples) {
    SandwichReport rep;
    rep.bound = 2.0 * (1.0 + spec.j_norm);
    rep.slice_norm = slice_norm(f, I, spec, quad);
    const ImaginaryUnit extra[] = {I};
    rep.lift_norm = lift_norm(f, spec, quad, sphere_samples, extra).value;
    if (rep.slice_norm == 0.0 && rep.lift_norm == 0.0) return rep;
    rep.lower_ratio = rep.lift_norm > 0.0 ? rep.slice_norm / rep.lift_norm : INFINITY;
    rep.upper_ratio = rep.slice_norm > 0.0 ? rep.lift_norm / rep.slice_norm : INFINITY;
    constexpr double kRounding = 1e-12;
    rep.pass = rep.lower_ratio <= 1.0 + kRounding && rep.upper_ratio <= rep.bound;
    return rep;
}

}  // namespace slicereg
