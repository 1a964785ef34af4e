#pragma once

// JSON forms of the library types (nlohmann::json, found by ADL).
//
//   Quaternion            [w, x, y, z]
//   ImaginaryUnit         [ux, uy, uz]
//   SliceSeries           [[w, x, y, z], ...]
//   ComplexSeries         [[re, im], ...]
//   SpaceSpec             {"kind":"coefficient_weighted","weights":[...]}
//                         {"kind":"coefficient_weighted","preset":"bergman","degree":32}
//                         {"kind":"hardy","p":...}  {"kind":"besov","p":...,"alpha":...}
//                         optional "j_norm" (default 1)
//   AtomicMeasure         {"atoms":[{"x":..,"y":..,"I":[..],"mass":..}, ...]}
//   ComplexAtomicMeasure  {"atoms":[{"re":..,"im":..,"mass":..}, ...]}; merged atoms
//                         of a projection also carry their fiber masses in "parts"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slicereg/carleson.hpp"
#include "slicereg/embedding.hpp"
#include "slicereg/measures.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/series.hpp"
#include "slicereg/spaces.hpp"

namespace slicereg {

using json = nlohmann::json;

namespace detail {

inline double number(const json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number, got " + j.dump());
    return j.get<double>();
}

inline const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

inline void expect_array(const json& j, std::size_t n, const char* what) {
    if (!j.is_array() || (n != 0 && j.size() != n))
        throw std::invalid_argument(std::string(what) + ": expected an array" +
                                    (n ? " of " + std::to_string(n) + " numbers" : std::string()) + ", got " +
                                    j.dump());
}

}  // namespace detail

inline void to_json(json& j, const Quaternion& q) { j = json::array({q.w, q.x, q.y, q.z}); }
inline void from_json(const json& j, Quaternion& q) {
    detail::expect_array(j, 4, "quaternion");
    q = {detail::number(j[0], "quaternion"), detail::number(j[1], "quaternion"), detail::number(j[2], "quaternion"),
         detail::number(j[3], "quaternion")};
}

inline void to_json(json& j, const ImaginaryUnit& u) { j = json::array({u.ux(), u.uy(), u.uz()}); }
/// Accepts any nonzero 3-vector within the unit tolerance of length one.
inline void from_json(const json& j, ImaginaryUnit& u) {
    detail::expect_array(j, 3, "imaginary unit");
    u = ImaginaryUnit(detail::number(j[0], "imaginary unit"), detail::number(j[1], "imaginary unit"),
                      detail::number(j[2], "imaginary unit"));
}

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }
inline Complex complex_from_json(const json& j) {
    detail::expect_array(j, 2, "complex number");
    return {detail::number(j[0], "complex number"), detail::number(j[1], "complex number")};
}

inline void to_json(json& j, const SliceSeries& f) {
    j = json::array();
    for (const auto& a : f.coeffs()) j.push_back(a);
}
inline void from_json(const json& j, SliceSeries& f) {
    detail::expect_array(j, 0, "slice series");
    std::vector<Quaternion> a;
    for (const auto& c : j) a.push_back(c.get<Quaternion>());
    f = SliceSeries(std::move(a));
}

inline void to_json(json& j, const ComplexSeries& F) {
    j = json::array();
    for (const auto& a : F.coeffs()) j.push_back(complex_to_json(a));
}
inline void from_json(const json& j, ComplexSeries& F) {
    detail::expect_array(j, 0, "complex series");
    std::vector<Complex> a;
    for (const auto& c : j) a.push_back(complex_from_json(c));
    F = ComplexSeries(std::move(a));
}

inline void to_json(json& j, const SpaceSpec& s) {
    j = json{{"kind", to_string(s.kind)}};
    switch (s.kind) {
        case SpaceKind::CoefficientWeighted: j["weights"] = s.weights; break;
        case SpaceKind::Hardy: j["p"] = s.p; break;
        case SpaceKind::Besov:
            j["p"] = s.p;
            j["alpha"] = s.alpha;
            break;
    }
    j["j_norm"] = s.j_norm;
}

inline void from_json(const json& j, SpaceSpec& s) {
    const std::string kind = detail::field(j, "kind", "space spec").get<std::string>();
    if (kind == "coefficient_weighted") {
        if (j.contains("weights")) {
            s = SpaceSpec::coefficient_weighted(j.at("weights").get<std::vector<double>>());
        } else if (j.contains("preset")) {
            const std::size_t degree = j.value("degree", kDefaultDegree);
            s = preset_by_name(j.at("preset").get<std::string>(), degree);
        } else {
            throw std::invalid_argument("space spec: coefficient_weighted needs \"weights\" or \"preset\"");
        }
    } else if (kind == "hardy") {
        s = SpaceSpec::hardy(detail::number(detail::field(j, "p", "space spec"), "space spec p"));
    } else if (kind == "besov") {
        s = SpaceSpec::besov(detail::number(detail::field(j, "p", "space spec"), "space spec p"),
                             detail::number(detail::field(j, "alpha", "space spec"), "space spec alpha"));
    } else {
        throw std::invalid_argument("space spec: unknown kind '" + kind +
                                    "' (expected coefficient_weighted, hardy, besov)");
    }
    if (j.contains("j_norm")) s.j_norm = detail::number(j.at("j_norm"), "space spec j_norm");
    s.validate();
}

inline void to_json(json& j, const QuadratureSpec& q) {
    j = json{{"n_theta", q.n_theta}, {"radii", q.radii}, {"n_r", q.n_r}, {"n_phi", q.n_phi}};
}
inline void from_json(const json& j, QuadratureSpec& q) {
    if (!j.is_object()) throw std::invalid_argument("quadrature spec: expected an object");
    q = QuadratureSpec{};
    q.n_theta = j.value("n_theta", q.n_theta);
    q.radii = j.value("radii", q.radii);
    q.n_r = j.value("n_r", q.n_r);
    q.n_phi = j.value("n_phi", q.n_phi);
    q.validate();
}

inline void to_json(json& j, const SlicePoint& p) { j = json{{"x", p.x}, {"y", p.y}, {"I", p.I}}; }

inline void to_json(json& j, const AtomicMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms())
        atoms.push_back({{"x", a.point.x}, {"y", a.point.y}, {"I", a.point.I}, {"mass", a.mass}});
    j = json{{"atoms", atoms}};
}
inline void from_json(const json& j, AtomicMeasure& mu) {
    mu = AtomicMeasure{};
    for (const auto& a : detail::field(j, "atoms", "measure")) {
        const ImaginaryUnit I = a.contains("I") ? a.at("I").get<ImaginaryUnit>() : ImaginaryUnit::i();
        mu.add(detail::number(detail::field(a, "x", "atom"), "atom x"),
               detail::number(detail::field(a, "y", "atom"), "atom y"), I,
               detail::number(detail::field(a, "mass", "atom"), "atom mass"));
    }
}

inline void to_json(json& j, const ComplexAtomicMeasure& nu) {
    json atoms = json::array();
    for (const auto& a : nu.atoms()) {
        json atom{{"re", a.z.real()}, {"im", a.z.imag()}, {"mass", a.mass}};
        if (!a.parts.empty()) atom["parts"] = a.parts;
        atoms.push_back(std::move(atom));
    }
    j = json{{"atoms", atoms}};
}
inline void from_json(const json& j, ComplexAtomicMeasure& nu) {
    nu = ComplexAtomicMeasure{};
    for (const auto& a : detail::field(j, "atoms", "complex measure")) {
        ComplexAtom atom{{detail::number(detail::field(a, "re", "atom"), "atom re"),
                          detail::number(detail::field(a, "im", "atom"), "atom im")},
                         detail::number(detail::field(a, "mass", "atom"), "atom mass"),
                         {}};
        if (a.contains("parts")) atom.parts = a.at("parts").get<std::vector<double>>();
        nu.add(std::move(atom));
    }
}

inline void to_json(json& j, const NormEvaluation& e) {
    j = json{{"value", e.value}};
    if (!e.radius_means.empty()) {
        j["radius_means"] = e.radius_means;
        j["boundary_mean"] = e.boundary_mean;
        j["monotone"] = e.monotone;
        j["convergence_gap"] = e.convergence_gap;
    }
}

inline void to_json(json& j, const LiftNorm& n) {
    j = json{{"value", n.value}, {"argmax", n.argmax}, {"exact", n.exact}, {"samples", n.samples}};
}

inline void to_json(json& j, const SandwichReport& s) {
    j = json{{"slice_norm", s.slice_norm}, {"lift_norm", s.lift_norm}, {"lower_ratio", s.lower_ratio},
             {"upper_ratio", s.upper_ratio}, {"bound", s.bound},       {"pass", s.pass}};
}

inline void to_json(json& j, const SymmetricBox& b) { j = json{{"t", b.t}, {"r", b.r}}; }
inline void from_json(const json& j, SymmetricBox& b) {
    b.t = detail::number(detail::field(j, "t", "box"), "box t");
    b.r = detail::number(detail::field(j, "r", "box"), "box r");
    b.validate();
}

inline void to_json(json& j, const BoxRatio& b) {
    j = json{{"t", b.t}, {"r", b.r}, {"mass", b.mass}, {"ratio", b.ratio}};
}

inline void to_json(json& j, const RatioReport& r) {
    j = json{{"boxes", r.boxes}, {"shell_radii", r.shell_radii}, {"shell_max", r.shell_max}, {"sup", r.sup}};
}

inline void to_json(json& j, const VanishingReport& v) {
    j = v.scan;
    j["vanishing"] = v.vanishing;
    j["decay_rate"] = v.decay_rate;
    j["global_max"] = v.global_max;
    j["final_max"] = v.final_max;
}

inline void to_json(json& j, const EmbeddingEstimate& e) {
    j = json{{"value", e.value}, {"argmax", e.argmax}, {"members", e.members}};
}

/// Top level carries the quaternionic box scan ("boxes", "shell_max", "sup")
/// next to the constants; the complex scan is nested.
inline void to_json(json& j, const EquivalenceReport& r) {
    j = r.quat_scan;
    j["p"] = r.p;
    j["j_norm"] = r.j_norm;
    j["quat_members"] = r.quat_members;
    j["complex_members"] = r.complex_members;
    j["real_members"] = r.real_members;
    j["c_quat"] = r.c_quat;
    j["c_cplx"] = r.c_cplx;
    j["c_quat_real"] = r.c_quat_real;
    j["c_cplx_real"] = r.c_cplx_real;
    j["real_gap"] = r.real_gap;
    j["forward_bound"] = r.forward_bound;
    j["backward_bound"] = r.backward_bound;
    j["forward_slack"] = r.forward_slack;
    j["backward_slack"] = r.backward_slack;
    j["forward_ok"] = r.forward_ok;
    j["backward_ok"] = r.backward_ok;
    j["forward_sharp_ok"] = r.forward_sharp_ok;
    j["chain_ok"] = r.chain_ok;
    j["box_identity_ok"] = r.box_identity_ok;
    j["reflection_gap"] = r.reflection_gap;
    json c = r.cplx_scan;
    c.erase("boxes");
    j["complex_scan"] = c;
}

/// Shell maxima as CSV: radius,shell_max.
inline std::string shell_csv(const RatioReport& r) {
    std::ostringstream out;
    out.precision(17);
    out << "radius,shell_max\n";
    for (std::size_t m = 0; m < r.shell_max.size(); ++m) out << r.shell_radii[m] << ',' << r.shell_max[m] << '\n';
    return out.str();
}

}  // namespace slicereg
