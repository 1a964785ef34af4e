#pragma once

// Batch commands behind the CLI. Each takes a JSON config and returns a JSON
// report holding the resolved config, the command result, the list of
// asserted properties and an overall "ok".
//
// Config values that name a file (a string where an object or array is
// expected) are read relative to the config's directory and inlined into
// the resolved config.
//
// Measure sources, by key:
//   "measure": {"atoms": [...]} or a path
//   "ray":     {"law": "geometric"|"linear_geometric"|"quartic", "depth": 20,
//               "depths": [..], "angle": 0, "I": [1,0,0]}
//   "random":  {"atoms": 200, "real_fraction": 0.1, "fiber_fraction": 0.1,
//               "max_radius": 0.97}, drawn from "seed"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicereg/carleson.hpp"
#include "slicereg/embedding.hpp"
#include "slicereg/generators.hpp"
#include "slicereg/json_io.hpp"
#include "slicereg/measures.hpp"
#include "slicereg/random.hpp"
#include "slicereg/series.hpp"
#include "slicereg/spaces.hpp"

namespace slicereg {

/// Input errors (malformed config, unreadable file); the CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

namespace detail {

/// Records asserted properties with both sides of each comparison.
class PropertyLog {
public:
    void check(const std::string& name, bool ok, double lhs, const std::string& relation, double rhs) {
        items_.push_back({{"name", name}, {"ok", ok}, {"lhs", lhs}, {"relation", relation}, {"rhs", rhs}});
        if (!ok) {
            ok_ = false;
            std::ostringstream msg;
            msg.precision(17);
            msg << name << ": expected " << lhs << ' ' << relation << ' ' << rhs;
            violations_.push_back(msg.str());
        }
    }
    void check_le(const std::string& name, double lhs, double rhs) { check(name, lhs <= rhs, lhs, "<=", rhs); }

    void write(json& report) const {
        report["properties"] = items_;
        report["violations"] = violations_;
        report["ok"] = ok_;
    }

private:
    json items_ = json::array();
    json violations_ = json::array();
    bool ok_ = true;
};

/// Replaces a string value by the JSON document it names.
inline json& inline_file(json& cfg, const char* key, const std::filesystem::path& base) {
    json& v = cfg.at(key);
    if (v.is_string()) v = read_json_file(base / v.get<std::string>());
    return v;
}

template <class T>
T get_as(const json& cfg, const char* key, const char* what) {
    try {
        return cfg.at(key).get<T>();
    } catch (const std::exception& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

inline std::uint64_t seed_of(const json& cfg) { return cfg.value("seed", std::uint64_t{0}); }

inline std::vector<double> shells_of(const json& cfg) {
    if (!cfg.contains("shells")) return dyadic_shells(20);
    const json& s = cfg.at("shells");
    if (s.is_number_integer()) {
        const auto depth = s.get<long long>();
        if (depth < 1 || depth > 60) throw ConfigError("shells: dyadic depth must lie in [1, 60]");
        return dyadic_shells(static_cast<std::size_t>(depth));
    }
    return get_as<std::vector<double>>(cfg, "shells", "shells");
}

inline std::size_t t_count_of(const json& cfg) { return cfg.value("t_count", std::size_t{64}); }

inline VanishingCriteria vanishing_of(const json& cfg) {
    VanishingCriteria c;
    c.window = cfg.value("window", c.window);
    c.threshold = cfg.value("threshold", c.threshold);
    if (c.window < 1) throw ConfigError("window must be at least 1");
    if (!(c.threshold >= 0.0)) throw ConfigError("threshold must be nonnegative");
    return c;
}

inline QuadratureSpec quadrature_of(json& cfg, const std::filesystem::path& base) {
    if (!cfg.contains("quadrature")) return {};
    return inline_file(cfg, "quadrature", base).get<QuadratureSpec>();
}

/// Space from "space", or the H^2 preset covering `min_degree`.
inline SpaceSpec space_of(json& cfg, const std::filesystem::path& base, std::size_t min_degree) {
    if (!cfg.contains("space")) {
        const SpaceSpec s = hardy2_preset(std::max(min_degree, kDefaultDegree));
        cfg["space"] = s;
        return s;
    }
    json& s = inline_file(cfg, "space", base);
    if (s.is_object() && s.value("kind", "") == "coefficient_weighted" && s.contains("preset") &&
        !s.contains("degree"))
        s["degree"] = std::max(min_degree, static_cast<std::size_t>(cfg.value("degree", std::size_t{0})));
    return s.get<SpaceSpec>();
}

struct MeasureSource {
    /// Truncation depths; a single entry for non-ray sources.
    std::vector<std::size_t> depths;
    std::vector<AtomicMeasure> measures;
};

inline MeasureSource measures_of(json& cfg, const std::filesystem::path& base) {
    MeasureSource src;
    const int given = int(cfg.contains("measure")) + int(cfg.contains("ray")) + int(cfg.contains("random"));
    if (given != 1) throw ConfigError("exactly one of \"measure\", \"ray\", \"random\" is required");
    if (cfg.contains("measure")) {
        src.measures.push_back(inline_file(cfg, "measure", base).get<AtomicMeasure>());
        src.depths.push_back(0);
    } else if (cfg.contains("ray")) {
        json& r = cfg.at("ray");
        const RayLaw law = ray_law_from_string(r.value("law", std::string("geometric")));
        const double angle = r.value("angle", 0.0);
        const ImaginaryUnit I = r.contains("I") ? r.at("I").get<ImaginaryUnit>() : ImaginaryUnit::i();
        std::vector<std::size_t> depths;
        if (r.contains("depths"))
            depths = r.at("depths").get<std::vector<std::size_t>>();
        else
            depths.push_back(r.value("depth", std::size_t{20}));
        if (depths.empty()) throw ConfigError("ray: empty depth list");
        for (std::size_t d : depths) {
            if (d < 1 || d > 60) throw ConfigError("ray: depths must lie in [1, 60]");
            src.measures.push_back(dyadic_ray(d, law, angle, I));
            src.depths.push_back(d);
        }
    } else {
        const json& r = cfg.at("random");
        RandomMeasureConfig rc;
        rc.atoms = r.value("atoms", rc.atoms);
        rc.real_fraction = r.value("real_fraction", rc.real_fraction);
        rc.fiber_fraction = r.value("fiber_fraction", rc.fiber_fraction);
        rc.max_radius = r.value("max_radius", rc.max_radius);
        if (!(rc.max_radius > 0.0 && rc.max_radius < 1.0)) throw ConfigError("random: max_radius must lie in (0, 1)");
        Rng rng(seed_of(cfg));
        src.measures.push_back(random_measure(rng, rc));
        src.depths.push_back(0);
    }
    return src;
}

/// Family seed derived from the run seed so measures and families use distinct streams.
inline constexpr std::uint64_t kFamilyStream = 0x9e3779b97f4a7c15ULL;

inline FamilyConfig family_of(const json& cfg) {
    FamilyConfig fc;
    fc.seed = seed_of(cfg) ^ kFamilyStream;
    fc.degree = cfg.value("degree", fc.degree);
    if (cfg.contains("family")) {
        const json& f = cfg.at("family");
        fc.degree = f.value("degree", fc.degree);
        fc.random_quat = f.value("random_quat", fc.random_quat);
        fc.random_complex = f.value("random_complex", fc.random_complex);
        fc.kernel_probes = f.value("kernel_probes", fc.kernel_probes);
    }
    return fc;
}

inline EmbeddingOptions embedding_options_of(json& cfg, const std::filesystem::path& base) {
    EmbeddingOptions opt;
    opt.quad = quadrature_of(cfg, base);
    opt.sphere_samples = cfg.value("sphere_samples", opt.sphere_samples);
    return opt;
}

inline std::vector<double> exponents_of(const json& cfg) {
    std::vector<double> ps;
    if (cfg.contains("p") && cfg.at("p").is_array())
        ps = cfg.at("p").get<std::vector<double>>();
    else
        ps.push_back(cfg.value("p", 2.0));
    for (double p : ps)
        if (!(p >= 1.0)) throw ConfigError("p must be at least 1");
    return ps;
}

inline json finish(const std::string& command, const json& cfg, json result, const PropertyLog& log) {
    json report{{"command", command}, {"config", cfg}, {"result", std::move(result)}};
    log.write(report);
    return report;
}

inline double rel_gap(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace detail

/// Evaluates "series" at "points" (and "complex_series" at "complex_points").
inline json run_eval(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    json result;
    if (!cfg.contains("series") && !cfg.contains("complex_series"))
        throw ConfigError("eval: need \"series\" or \"complex_series\"");
    if (cfg.contains("series")) {
        const auto f = detail::inline_file(cfg, "series", base).get<SliceSeries>();
        const auto pts = detail::get_as<std::vector<Quaternion>>(cfg, "points", "eval points");
        json values = json::array();
        for (const auto& q : pts) values.push_back(eval(f, q));
        result["values"] = values;
    }
    if (cfg.contains("complex_series")) {
        const auto F = detail::inline_file(cfg, "complex_series", base).get<ComplexSeries>();
        json values = json::array();
        for (const auto& z : cfg.at("complex_points")) values.push_back(complex_to_json(eval(F, complex_from_json(z))));
        result["complex_values"] = values;
    }
    return detail::finish("eval", cfg, std::move(result), log);
}

/// Norms of "series" (slice, lift, sandwich) or of "complex_series" with quadrature diagnostics.
inline json run_norm(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    json result;
    const QuadratureSpec quad = detail::quadrature_of(cfg, base);
    const std::size_t samples = cfg.value("sphere_samples", kDefaultSphereSamples);
    if (!cfg.contains("series") && !cfg.contains("complex_series"))
        throw ConfigError("norm: need \"series\" or \"complex_series\"");
    if (cfg.contains("series")) {
        const auto f = detail::inline_file(cfg, "series", base).get<SliceSeries>();
        const SpaceSpec spec = detail::space_of(cfg, base, f.degree());
        const ImaginaryUnit I = cfg.contains("slice") ? cfg.at("slice").get<ImaginaryUnit>() : ImaginaryUnit::i();
        const ImaginaryUnit J = orthogonal_unit(I);
        const Splitting s = split(f, I, J);
        result["slice"] = I;
        result["split_norms"] = {{"F", complex_norm_detailed(s.F, spec, quad)},
                                 {"G", complex_norm_detailed(s.G, spec, quad)}};
        const SandwichReport sw = sandwich_check(f, I, spec, quad, samples);
        result["slice_norm"] = sw.slice_norm;
        const ImaginaryUnit extra[] = {I};
        result["lift_norm"] = lift_norm(f, spec, quad, samples, extra);
        result["sandwich"] = sw;
        log.check_le("sandwich_lower", sw.slice_norm, sw.lift_norm * (1.0 + 1e-12));
        log.check_le("sandwich_upper", sw.lift_norm, sw.bound * sw.slice_norm);
        if (spec.kind == SpaceKind::CoefficientWeighted) {
            // Slice norms of a coefficient-weighted lift do not depend on I.
            double sampled = 0.0;
            for (const auto& u : sphere_lattice(samples)) sampled = std::max(sampled, slice_norm(f, u, spec, quad));
            result["sampled_sup"] = sampled;
            log.check_le("closed_form_vs_sampled", detail::rel_gap(sampled, sw.lift_norm), 1e-10);
        }
        if (spec.kind == SpaceKind::Hardy) result["hardy_direct"] = hardy_slice_norm_direct(f, I, spec.p, quad);
    }
    if (cfg.contains("complex_series")) {
        const auto F = detail::inline_file(cfg, "complex_series", base).get<ComplexSeries>();
        const SpaceSpec spec = detail::space_of(cfg, base, F.degree());
        const NormEvaluation e = complex_norm_detailed(F, spec, quad);
        result["complex_norm"] = e;
        if (spec.kind == SpaceKind::Hardy) log.check("hardy_means_monotone", e.monotone, 1.0, "==", e.monotone);
    }
    return detail::finish("norm", cfg, std::move(result), log);
}

/// Splitting F + GJ and the four slice preserving parts, with round-trip checks.
inline json run_split(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    json result;
    if (!cfg.contains("series")) throw ConfigError("split: need \"series\"");
    const auto f = detail::inline_file(cfg, "series", base).get<SliceSeries>();
    const ImaginaryUnit I = cfg.contains("I") ? cfg.at("I").get<ImaginaryUnit>() : ImaginaryUnit::i();
    const ImaginaryUnit J = cfg.contains("J") ? cfg.at("J").get<ImaginaryUnit>() : orthogonal_unit(I);
    cfg["I"] = I;
    cfg["J"] = J;
    const Splitting s = split(f, I, J);
    const SymmetricParts parts = symmetric_decomposition(f, I, J);
    result["F"] = s.F;
    result["G"] = s.G;
    result["symmetric_parts"] = {{"f0", parts.f0}, {"f1", parts.f1}, {"f2", parts.f2}, {"f3", parts.f3}};

    const SliceSeries back = combine(s.F, s.G, I, J);
    const SliceSeries again = parts.reconstruct(I, J);
    double coeff_err = 0.0;
    double sym_err = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
        coeff_err = std::max(coeff_err, (back[n] - f[n]).norm());
        sym_err = std::max(sym_err, (again[n] - f[n]).norm());
    }
    // Pointwise f = F + GJ on a polar grid of the slice B_I.
    const std::size_t grid = cfg.value("grid", std::size_t{16});
    double point_err = 0.0;
    for (std::size_t a = 0; a < grid; ++a)
        for (std::size_t b = 1; b <= grid; ++b) {
            const double rho = 0.95 * static_cast<double>(b) / static_cast<double>(grid);
            const double th = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(grid);
            const Complex z = std::polar(rho, th);
            const Quaternion lhs = eval(f, to_slice(z, I));
            const Quaternion rhs = to_slice(s.F(z), I) + to_slice(s.G(z), I) * J.as_quaternion();
            const double scale = std::max(1.0, lhs.norm());
            point_err = std::max(point_err, (lhs - rhs).norm() / scale);
        }
    result["coefficient_error"] = coeff_err;
    result["symmetric_error"] = sym_err;
    result["pointwise_error"] = point_err;
    log.check_le("split_combine_roundtrip", coeff_err, 1e-12);
    log.check_le("symmetric_roundtrip", sym_err, 1e-12);
    log.check_le("slice_grid_roundtrip", point_err, 1e-12);
    return detail::finish("split", cfg, std::move(result), log);
}

/// mu -> mu^s, with optional real/non-real split and reflection of the projection.
inline json run_project(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    json result;
    const auto src = detail::measures_of(cfg, base);
    const AtomicMeasure& mu = src.measures.back();
    const ComplexAtomicMeasure mus = project_slice(mu);
    result["projection"] = mus;
    result["mass"] = mu.total_mass();
    result["projected_mass"] = mus.total_mass();
    result["merged_atoms"] = mu.size() - mus.size();
    log.check_le("mass_conservation", detail::rel_gap(mu.total_mass(), mus.total_mass()), 1e-12);
    if (cfg.value("decompose_real", false)) {
        const auto [real_part, rest] = decompose_real(mu);
        result["real_part"] = real_part;
        result["rest"] = rest;
        json marginal = json::array();
        for (const auto& [u, m] : sphere_marginal(mu)) marginal.push_back({{"I", u}, {"mass", m}});
        result["sphere_marginal"] = marginal;
    }
    if (cfg.value("reflect", false)) result["reflection"] = reflect(mus);
    return detail::finish("project", cfg, std::move(result), log);
}

namespace detail {

/// Scans every truncation depth of the source on mu and on mu^s.
inline json carleson_common(json& cfg, const std::filesystem::path& base, bool vanishing, PropertyLog& log) {
    const auto src = measures_of(cfg, base);
    const std::size_t t_count = t_count_of(cfg);
    const auto shells = shells_of(cfg);
    cfg["t_count"] = t_count;
    cfg["shells"] = shells;
    const VanishingCriteria crit = vanishing_of(cfg);
    if (vanishing) {
        cfg["window"] = crit.window;
        cfg["threshold"] = crit.threshold;
    }

    json runs = json::array();
    std::vector<double> sups;
    for (std::size_t m = 0; m < src.measures.size(); ++m) {
        const AtomicMeasure& mu = src.measures[m];
        const ComplexAtomicMeasure mus = project_slice(mu);
        const VanishingReport vq = vanishing_scan(mu, t_count, shells, crit);
        const VanishingReport vc = vanishing_scan(mus, t_count, shells, crit);
        std::size_t mismatched = 0;
        double min_ratio = 0.0;
        for (std::size_t b = 0; b < vq.scan.boxes.size(); ++b) {
            if (vq.scan.boxes[b].mass != vc.scan.boxes[b].mass) ++mismatched;
            min_ratio = std::min(min_ratio, vq.scan.boxes[b].ratio);
        }
        const std::string tag = src.depths[m] ? " (depth " + std::to_string(src.depths[m]) + ")" : "";
        log.check("box_identity" + tag, mismatched == 0, static_cast<double>(mismatched), "==", 0.0);
        log.check("ratios_nonnegative" + tag, min_ratio >= 0.0, min_ratio, ">=", 0.0);
        json run;
        if (vanishing) {
            run = vq;
            log.check("verdicts_agree" + tag, vq.vanishing == vc.vanishing, vq.vanishing, "==", vc.vanishing);
        } else {
            run = vq.scan;
        }
        if (src.depths[m]) run["depth"] = src.depths[m];
        json c = vanishing ? json(vc) : json(vc.scan);
        c.erase("boxes");
        run["complex_scan"] = c;
        if (cfg.contains("arcs")) {
            std::vector<std::pair<double, double>> arcs;
            for (const auto& a : cfg.at("arcs")) arcs.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
            const BoxFamily fam = boxes_from_arcs(arcs);
            json fj;
            fj["boxes"] = fam.boxes;
            fj["mass"] = family_mass(mu, fam);
            fj["complex_mass"] = family_mass(mus, fam);
            log.check("family_box_identity" + tag, fj["mass"] == fj["complex_mass"], fj["mass"].get<double>(), "==",
                      fj["complex_mass"].get<double>());
            run["family"] = fj;
        }
        sups.push_back(vq.scan.sup);
        runs.push_back(std::move(run));
    }
    json result;
    result["runs"] = runs;
    if (src.measures.size() > 1) {
        bool increasing = true;
        for (std::size_t m = 1; m < sups.size(); ++m)
            if (!(sups[m] > sups[m - 1])) increasing = false;
        result["trend"] = {{"depths", src.depths},
                           {"sup", sups},
                           {"sup_max", *std::max_element(sups.begin(), sups.end())},
                           {"sup_strictly_increasing", increasing}};
    }
    if (cfg.contains("csv")) {
        const auto path = base / cfg.at("csv").get<std::string>();
        std::ofstream out(path);
        if (!out) throw ConfigError("cannot write '" + path.string() + "'");
        // Last (deepest) run.
        out << shell_csv(ratio_scan(src.measures.back(), t_count, shells));
    }
    return result;
}

}  // namespace detail

/// Box-ratio scan of mu and mu^s; "depths" on a ray source gives a truncation trend.
inline json run_carleson(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    json result = detail::carleson_common(cfg, base, false, log);
    return detail::finish("carleson", cfg, std::move(result), log);
}

/// Vanishing-shell verdict for mu and mu^s.
inline json run_vanishing(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    json result = detail::carleson_common(cfg, base, true, log);
    return detail::finish("vanishing", cfg, std::move(result), log);
}

/// Embedding-constant estimates for mu (quaternionic family) and mu^s (complex family).
inline json run_embed(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    const auto src = detail::measures_of(cfg, base);
    const AtomicMeasure& mu = src.measures.back();
    const FamilyConfig fc = detail::family_of(cfg);
    const SpaceSpec spec = detail::space_of(cfg, base, fc.degree);
    const EmbeddingOptions opt = detail::embedding_options_of(cfg, base);
    const TestFamily fam = build_test_family(fc, spec, mu, opt.quad);
    const ComplexAtomicMeasure mus = project_slice(mu);
    json result;
    for (double p : detail::exponents_of(cfg)) {
        json r;
        r["p"] = p;
        r["quat"] = embedding_constant(mu, spec, p, fam.quat, opt);
        r["complex"] = embedding_constant(mus, spec, p, fam.complex, opt);
        const auto qr = fam.quat_real();
        const auto cr = fam.complex_real();
        const double a = embedding_constant(mu, spec, p, qr, opt).value;
        const double b = embedding_constant(mus, spec, p, cr, opt).value;
        r["real_quat"] = a;
        r["real_complex"] = b;
        log.check_le("real_subfamily_equal (p=" + json(p).dump() + ")", detail::rel_gap(a, b), 1e-10);
        result["estimates"].push_back(r);
    }
    result["family"] = {{"degree", fc.degree}, {"seed", fc.seed}, {"quat", fam.quat.size()},
                        {"complex", fam.complex.size()}};
    return detail::finish("embed", cfg, std::move(result), log);
}

/// Full experiment: constants, the two-sided chain, real-subfamily equality,
/// box identity and reflection pairing, for every depth and every p.
inline json run_equivalence(json cfg, const std::filesystem::path& base = ".") {
    detail::PropertyLog log;
    const auto src = detail::measures_of(cfg, base);
    const FamilyConfig fc = detail::family_of(cfg);
    const SpaceSpec spec = detail::space_of(cfg, base, fc.degree);
    EquivalenceOptions opt;
    opt.embedding = detail::embedding_options_of(cfg, base);
    opt.t_count = detail::t_count_of(cfg);
    opt.r_levels = detail::shells_of(cfg);
    opt.vanishing = detail::vanishing_of(cfg);
    cfg["t_count"] = opt.t_count;
    cfg["shells"] = opt.r_levels;
    const auto ps = detail::exponents_of(cfg);

    json runs = json::array();
    json trend = json::array();
    for (std::size_t m = 0; m < src.measures.size(); ++m) {
        const AtomicMeasure& mu = src.measures[m];
        const TestFamily fam = build_test_family(fc, spec, mu, opt.embedding.quad);
        for (double p : ps) {
            const EquivalenceReport rep = equivalence_experiment(mu, spec, p, fam, opt);
            std::string tag = "(p=" + json(p).dump();
            if (src.depths[m]) tag += ", depth " + std::to_string(src.depths[m]);
            tag += ")";
            log.check_le("chain_forward " + tag, rep.c_cplx, rep.forward_bound * (1.0 + kChainRounding));
            log.check_le("chain_backward " + tag, rep.c_quat, rep.backward_bound * (1.0 + kChainRounding));
            log.check_le("real_subfamily_equal " + tag, rep.real_gap, 1e-10);
            log.check("box_identity " + tag, rep.box_identity_ok, rep.box_identity_ok, "==", 1.0);
            log.check_le("reflection_pairing " + tag, rep.reflection_gap, 1e-12);
            json r = rep;
            if (src.depths[m]) r["depth"] = src.depths[m];
            r["atoms"] = mu.size();
            trend.push_back({{"depth", src.depths[m]}, {"p", p}, {"sup", rep.quat_scan.scan.sup},
                             {"c_quat", rep.c_quat}, {"c_cplx", rep.c_cplx}, {"chain_ok", rep.chain_ok}});
            runs.push_back(std::move(r));
        }
    }
    json result;
    result["runs"] = runs;
    result["trend"] = trend;
    bool chain = true;
    for (const auto& r : runs) chain = chain && r.at("chain_ok").get<bool>();
    result["chain_ok"] = chain;
    return detail::finish("equivalence", cfg, std::move(result), log);
}

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"eval",      "norm",      "split", "project",
                                                "carleson",  "vanishing", "embed", "equivalence"};
    return names;
}

inline json run_command(const std::string& name, json cfg, const std::filesystem::path& base = ".") {
    if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
    if (name == "eval") return run_eval(std::move(cfg), base);
    if (name == "norm") return run_norm(std::move(cfg), base);
    if (name == "split") return run_split(std::move(cfg), base);
    if (name == "project") return run_project(std::move(cfg), base);
    if (name == "carleson") return run_carleson(std::move(cfg), base);
    if (name == "vanishing") return run_vanishing(std::move(cfg), base);
    if (name == "embed") return run_embed(std::move(cfg), base);
    if (name == "equivalence") return run_equivalence(std::move(cfg), base);
    throw ConfigError("unknown command '" + name + "'");
}

}  // namespace slicereg
