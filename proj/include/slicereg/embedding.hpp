#pragma once

// Embedding-constant estimates for X_B -> L^p(mu) and X_D -> L^p(mu^s), and
// the experiment comparing them through the explicit two-sided bounds
//
//   c_cplx <= 2^{(p-1)/p} (1 + |J|) c_quat
//   c_quat <= K(p) (1 + |J|) c_cplx,   K(p) = 4^{(p-1)/p}               (p >= 2)
//                                      K(p) = (2^{2-p} 4^{p-1})^{1/p}   (1 <= p < 2)
//
// Sup estimates over finite families satisfy these only when the family is
// closed under the decompositions used to derive them: F -> (F1, F2) with
// F = F1 + iF2, and f -> (f0, f1, f2, f3) with f = f0 + f1 i + f2 j + f3 ij.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "slicereg/carleson.hpp"
#include "slicereg/measures.hpp"
#include "slicereg/parallel.hpp"
#include "slicereg/random.hpp"
#include "slicereg/series.hpp"
#include "slicereg/spaces.hpp"

namespace slicereg {

struct TestFamily {
    std::vector<SliceSeries> quat;
    std::vector<ComplexSeries> complex;

    std::size_t size() const { return quat.size() + complex.size(); }

    std::vector<SliceSeries> quat_real() const {
        std::vector<SliceSeries> out;
        for (const auto& f : quat)
            if (f.slice_preserving(0.0)) out.push_back(f);
        return out;
    }
    std::vector<ComplexSeries> complex_real() const {
        std::vector<ComplexSeries> out;
        for (const auto& F : complex)
            if (F.has_real_coefficients()) out.push_back(F);
        return out;
    }
};

struct FamilyConfig {
    std::uint64_t seed = 1;
    std::size_t degree = 16;
    std::size_t random_quat = 48;
    std::size_t random_complex = 48;
    /// Kernel probes drawn from the atoms of the measure.
    std::size_t kernel_probes = 16;
};

namespace detail {

/// Weights used by kernel members: c_n for coefficient-weighted spaces, 1 otherwise.
inline double kernel_weight(const SpaceSpec& spec, std::size_t n) {
    if (spec.kind == SpaceKind::CoefficientWeighted && n < spec.weights.size()) return spec.weights[n];
    return 1.0;
}

/// Scale used to bring random members to unit norm: the exact norm for
/// coefficient-weighted spaces, the norm on the slice B_i otherwise.
inline double normalizer(const SliceSeries& f, const SpaceSpec& spec, const QuadratureSpec& quad) {
    if (spec.kind == SpaceKind::CoefficientWeighted) return lift_norm(f, spec, quad).value;
    return slice_norm(f, ImaginaryUnit::i(), spec, quad);
}

inline ComplexSeries slice_to_real_series(const SliceSeries& f) {
    std::vector<Complex> a(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) a[n] = {f.coeffs()[n].w, 0.0};
    return ComplexSeries(std::move(a));
}

template <class Series, class Key>
void push_unique(std::vector<Series>& out, std::map<std::vector<Key>, bool>& seen, const Series& s,
                 std::vector<Key> key) {
    if (s.is_zero()) return;
    if (seen.emplace(std::move(key), true).second) out.push_back(s);
}

inline std::vector<std::array<double, 4>> key_of(const SliceSeries& f) {
    std::vector<std::array<double, 4>> k;
    for (const auto& a : f.coeffs()) k.push_back({a.w, a.x, a.y, a.z});
    while (!k.empty() && k.back() == std::array<double, 4>{0, 0, 0, 0}) k.pop_back();
    return k;
}

inline std::vector<std::array<double, 2>> key_of(const ComplexSeries& F) {
    std::vector<std::array<double, 2>> k;
    for (const auto& a : F.coeffs()) k.push_back({a.real(), a.imag()});
    while (!k.empty() && k.back() == std::array<double, 2>{0, 0}) k.pop_back();
    return k;
}

}  // namespace detail

/// Adds the decomposition closure: real/imaginary coefficient parts of every
/// complex member, the four slice preserving parts (w.r.t. i, j) of every
/// quaternionic member, and the common real-coefficient series on both sides.
/// Exact duplicates and zero series are dropped.
inline TestFamily close_family(const TestFamily& base) {
    TestFamily out;
    std::map<std::vector<std::array<double, 4>>, bool> seen_q;
    std::map<std::vector<std::array<double, 2>>, bool> seen_c;
    std::vector<ComplexSeries> reals;

    for (const auto& f : base.quat) {
        detail::push_unique(out.quat, seen_q, f, detail::key_of(f));
        const auto parts = symmetric_decomposition(f, ImaginaryUnit::i(), ImaginaryUnit::j());
        for (const auto* part : {&parts.f0, &parts.f1, &parts.f2, &parts.f3})
            reals.push_back(detail::slice_to_real_series(*part));
    }
    for (const auto& F : base.complex) {
        detail::push_unique(out.complex, seen_c, F, detail::key_of(F));
        const auto [F1, F2] = real_imag_parts(F);
        reals.push_back(F1);
        reals.push_back(F2);
    }
    for (const auto& R : reals) {
        detail::push_unique(out.complex, seen_c, R, detail::key_of(R));
        const SliceSeries r = detail::real_extension(R);
        detail::push_unique(out.quat, seen_q, r, detail::key_of(r));
    }
    return out;
}

/// Seeded family: monomials, random polynomials at unit norm and normalized
/// kernel-like polynomials sum q^n conj(w)^n / c_n at probe atoms w of mu,
/// then closed under the decompositions (see close_family).
inline TestFamily build_test_family(const FamilyConfig& cfg, const SpaceSpec& spec, const AtomicMeasure& mu,
                                    const QuadratureSpec& quad = {}) {
    Rng rng(cfg.seed);
    TestFamily base;
    const std::size_t N = cfg.degree;

    for (std::size_t n = 0; n <= N; ++n) {
        base.quat.push_back(SliceSeries::monomial(n));
        base.complex.push_back(ComplexSeries::monomial(n));
    }
    for (std::size_t m = 0; m < cfg.random_quat; ++m) {
        const double decay = rng.uniform(0.5, 1.0);
        std::vector<Quaternion> a(N + 1);
        double scale = 1.0;
        for (auto& c : a) {
            c = rng.quaternion() * scale;
            scale *= decay;
        }
        SliceSeries f(std::move(a));
        const double nrm = detail::normalizer(f, spec, quad);
        if (nrm > 0.0) base.quat.push_back(f * Quaternion(1.0 / nrm));
    }
    for (std::size_t m = 0; m < cfg.random_complex; ++m) {
        const double decay = rng.uniform(0.5, 1.0);
        std::vector<Complex> a(N + 1);
        double scale = 1.0;
        for (auto& c : a) {
            c = Complex(rng.normal(), rng.normal()) * scale;
            scale *= decay;
        }
        ComplexSeries F(std::move(a));
        const double nrm = complex_norm(F, spec, quad);
        if (nrm > 0.0) base.complex.push_back((1.0 / nrm) * F);
    }
    if (!mu.empty()) {
        for (std::size_t m = 0; m < cfg.kernel_probes; ++m) {
            const SlicePoint w = mu.atoms()[rng.index(mu.size())].point;
            const Quaternion wbar = w.to_quaternion().conj();
            const Complex zbar = std::conj(w.to_complex());
            std::vector<Quaternion> a(N + 1);
            std::vector<Complex> b(N + 1);
            Quaternion wp = 1.0;
            Complex zp = 1.0;
            for (std::size_t n = 0; n <= N; ++n) {
                const double c = detail::kernel_weight(spec, n);
                a[n] = wp / c;
                b[n] = zp / c;
                wp = wp * wbar;
                zp *= zbar;
            }
            SliceSeries f(std::move(a));
            ComplexSeries F(std::move(b));
            const double nf = detail::normalizer(f, spec, quad);
            const double nF = complex_norm(F, spec, quad);
            if (nf > 0.0) base.quat.push_back(f * Quaternion(1.0 / nf));
            if (nF > 0.0) base.complex.push_back((1.0 / nF) * F);
        }
    }
    return close_family(base);
}

struct EmbeddingEstimate {
    /// max over the family of |f|_{L^p} / |f|_X; a lower bound for the embedding constant.
    double value = 0.0;
    std::size_t argmax = 0;
    std::size_t members = 0;
};

struct EmbeddingOptions {
    QuadratureSpec quad{};
    std::size_t sphere_samples = kDefaultSphereSamples;
};

inline EmbeddingEstimate embedding_constant(const AtomicMeasure& mu, const SpaceSpec& spec, double p,
                                            std::span<const SliceSeries> family,
                                            const EmbeddingOptions& opt = {}) {
    if (family.empty()) throw std::invalid_argument("embedding_constant: empty family");
    std::vector<double> ratio(family.size());
    parallel_for(family.size(), [&](std::size_t m) {
        const double nrm = lift_norm(family[m], spec, opt.quad, opt.sphere_samples).value;
        if (!(nrm > 0.0)) throw std::invalid_argument("embedding_constant: family member with zero space norm");
        ratio[m] = lp_norm_quat(family[m], mu, p) / nrm;
    });
    EmbeddingEstimate est;
    est.members = family.size();
    const auto best = std::max_element(ratio.begin(), ratio.end());
    est.value = *best;
    est.argmax = static_cast<std::size_t>(best - ratio.begin());
    return est;
}

inline EmbeddingEstimate embedding_constant(const ComplexAtomicMeasure& nu, const SpaceSpec& spec, double p,
                                            std::span<const ComplexSeries> family,
                                            const EmbeddingOptions& opt = {}) {
    if (family.empty()) throw std::invalid_argument("embedding_constant: empty family");
    std::vector<double> ratio(family.size());
    parallel_for(family.size(), [&](std::size_t m) {
        const double nrm = complex_norm(family[m], spec, opt.quad);
        if (!(nrm > 0.0)) throw std::invalid_argument("embedding_constant: family member with zero space norm");
        ratio[m] = lp_norm_complex(family[m], nu, p) / nrm;
    });
    EmbeddingEstimate est;
    est.members = family.size();
    const auto best = std::max_element(ratio.begin(), ratio.end());
    est.value = *best;
    est.argmax = static_cast<std::size_t>(best - ratio.begin());
    return est;
}

/// 2^{(p-1)/p}: forward constant factor.
inline double forward_factor(double p) { return std::pow(2.0, (p - 1.0) / p); }

/// K(p) of the reverse bound.
inline double backward_factor(double p) {
    if (p >= 2.0) return std::pow(4.0, (p - 1.0) / p);
    return std::pow(std::pow(2.0, 2.0 - p) * std::pow(4.0, p - 1.0), 1.0 / p);
}

struct EquivalenceOptions {
    EmbeddingOptions embedding{};
    std::size_t t_count = 64;
    std::vector<double> r_levels = dyadic_shells(20);
    VanishingCriteria vanishing{};
};

struct EquivalenceReport {
    double p = 2.0;
    double j_norm = 1.0;
    std::size_t quat_members = 0;
    std::size_t complex_members = 0;
    std::size_t real_members = 0;

    double c_quat = 0.0;
    double c_cplx = 0.0;
    double c_quat_real = 0.0;
    double c_cplx_real = 0.0;
    /// |c_quat_real - c_cplx_real| / max(c_quat_real, c_cplx_real).
    double real_gap = 0.0;

    double forward_bound = 0.0;   // 2^{(p-1)/p} (1+|J|) c_quat
    double backward_bound = 0.0;  // K(p) (1+|J|) c_cplx
    double forward_slack = 0.0;   // forward_bound - c_cplx
    double backward_slack = 0.0;  // backward_bound - c_quat
    bool forward_ok = false;
    bool backward_ok = false;
    /// c_cplx <= (1+|J|) c_quat, the sharper form of the forward bound.
    bool forward_sharp_ok = false;
    bool chain_ok = false;

    /// Box masses of mu and mu^s agree on every scanned box.
    bool box_identity_ok = false;
    /// max over complex members of the relative gap between
    /// int |G|^p d(nu-hat) and int |JG|^p d(nu), nu = mu^s.
    double reflection_gap = 0.0;

    VanishingReport quat_scan;
    VanishingReport cplx_scan;
};

/// Relative tolerance for comparing two floating evaluations of the same bound.
inline constexpr double kChainRounding = 1e-12;

inline EquivalenceReport equivalence_experiment(const AtomicMeasure& mu, const SpaceSpec& spec, double p,
                                                const TestFamily& family, const EquivalenceOptions& opt = {}) {
    spec.validate();
    if (!std::isfinite(spec.j_norm)) throw std::invalid_argument("equivalence_experiment: J must be bounded");
    EquivalenceReport rep;
    rep.p = p;
    rep.j_norm = spec.j_norm;
    const ComplexAtomicMeasure mus = project_slice(mu);

    rep.quat_members = family.quat.size();
    rep.complex_members = family.complex.size();
    rep.c_quat = embedding_constant(mu, spec, p, family.quat, opt.embedding).value;
    rep.c_cplx = embedding_constant(mus, spec, p, family.complex, opt.embedding).value;

    const auto qr = family.quat_real();
    const auto cr = family.complex_real();
    rep.real_members = std::min(qr.size(), cr.size());
    if (!qr.empty()) rep.c_quat_real = embedding_constant(mu, spec, p, qr, opt.embedding).value;
    if (!cr.empty()) rep.c_cplx_real = embedding_constant(mus, spec, p, cr, opt.embedding).value;
    const double real_scale = std::max(rep.c_quat_real, rep.c_cplx_real);
    rep.real_gap = real_scale > 0.0 ? std::abs(rep.c_quat_real - rep.c_cplx_real) / real_scale : 0.0;

    const double one_plus_j = 1.0 + spec.j_norm;
    rep.forward_bound = forward_factor(p) * one_plus_j * rep.c_quat;
    rep.backward_bound = backward_factor(p) * one_plus_j * rep.c_cplx;
    rep.forward_slack = rep.forward_bound - rep.c_cplx;
    rep.backward_slack = rep.backward_bound - rep.c_quat;
    rep.forward_ok = rep.c_cplx <= rep.forward_bound * (1.0 + kChainRounding);
    rep.backward_ok = rep.c_quat <= rep.backward_bound * (1.0 + kChainRounding);
    rep.forward_sharp_ok = rep.c_cplx <= one_plus_j * rep.c_quat * (1.0 + kChainRounding);
    rep.chain_ok = rep.forward_ok && rep.backward_ok;

    rep.quat_scan = vanishing_scan(mu, opt.t_count, opt.r_levels, opt.vanishing);
    rep.cplx_scan = vanishing_scan(mus, opt.t_count, opt.r_levels, opt.vanishing);
    rep.box_identity_ok = rep.quat_scan.scan.boxes.size() == rep.cplx_scan.scan.boxes.size();
    for (std::size_t b = 0; rep.box_identity_ok && b < rep.quat_scan.scan.boxes.size(); ++b)
        rep.box_identity_ok = rep.quat_scan.scan.boxes[b].mass == rep.cplx_scan.scan.boxes[b].mass;

    const ComplexAtomicMeasure mus_hat = reflect(mus);
    for (const auto& G : family.complex) {
        const double lhs = lp_integral_complex(G, mus_hat, p);
        const double rhs = lp_integral_complex(j_operator(G), mus, p);
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        if (scale > 0.0) rep.reflection_gap = std::max(rep.reflection_gap, std::abs(lhs - rhs) / scale);
    }
    return rep;
}

}  // namespace slicereg
