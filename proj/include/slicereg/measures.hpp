#pragma once

// Finite atomic measures on the quaternionic ball and on the complex disc.
//
// A measure on B is stored as atoms (x + yI, mass) with y >= 0. At this
// resolution the disintegration d mu = d mu_I^+ d nu(I) is bookkeeping: nu
// is the pushforward of the non-real masses to their units I, and mu_I^+ is
// the fiber of atoms carrying that unit (left unnormalized).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/quaternion.hpp"
#include "slicereg/series.hpp"
#include "slicereg/summation.hpp"

namespace slicereg {

struct Atom {
    SlicePoint point;
    double mass = 0.0;
};

struct ComplexAtom {
    Complex z;
    double mass = 0.0;
    /// Masses of the atoms merged into this one by project_slice (empty when
    /// nothing merged). Exact reductions add these instead of the rounded
    /// total, so mu and mu^s give bit-identical masses and integrals.
    std::vector<double> parts;

    template <class Fn>
    void each_mass(Fn&& fn) const {
        if (parts.empty())
            fn(mass);
        else
            for (double m : parts) fn(m);
    }
};

namespace detail {
inline void check_mass(double m) {
    if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("atom mass must be positive and finite");
}
}  // namespace detail

class AtomicMeasure {
public:
    AtomicMeasure() = default;
    explicit AtomicMeasure(std::vector<Atom> atoms) {
        atoms_.reserve(atoms.size());
        for (const auto& a : atoms) add(a.point.x, a.point.y, a.point.I, a.mass);
    }

    /// Adds an atom at x + yI; y < 0 is canonicalized to (-y, -I).
    void add(double x, double y, const ImaginaryUnit& I, double mass) {
        detail::check_mass(mass);
        atoms_.push_back({make_slice_point(x, y, I), mass});
    }
    void add(const Quaternion& q, double mass) {
        detail::check_mass(mass);
        atoms_.push_back({decompose(q), mass});
    }
    void add(const SlicePoint& p, double mass) { add(p.x, p.y, p.I, mass); }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_mass() const {
        ExactSum s;
        for (const auto& a : atoms_) s.add(a.mass);
        return s.value();
    }

    /// Sum of two measures (atoms concatenated).
    friend AtomicMeasure operator+(const AtomicMeasure& a, const AtomicMeasure& b) {
        AtomicMeasure out = a;
        out.atoms_.insert(out.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
        return out;
    }

private:
    std::vector<Atom> atoms_;
};

class ComplexAtomicMeasure {
public:
    ComplexAtomicMeasure() = default;
    explicit ComplexAtomicMeasure(std::vector<ComplexAtom> atoms) {
        atoms_.reserve(atoms.size());
        for (auto& a : atoms) add(std::move(a));
    }

    void add(Complex z, double mass) { add(ComplexAtom{z, mass, {}}); }

    void add(ComplexAtom a) {
        if (!std::isfinite(a.z.real()) || !std::isfinite(a.z.imag()) || !(std::norm(a.z) < 1.0))
            throw std::domain_error("complex atom lies outside the open unit disc");
        if (!a.parts.empty()) {
            ExactSum s;
            for (double m : a.parts) {
                detail::check_mass(m);
                s.add(m);
            }
            a.mass = s.value();
        }
        detail::check_mass(a.mass);
        atoms_.push_back(std::move(a));
    }

    const std::vector<ComplexAtom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_mass() const {
        ExactSum s;
        for (const auto& a : atoms_) a.each_mass([&](double m) { s.add(m); });
        return s.value();
    }

    friend ComplexAtomicMeasure operator+(const ComplexAtomicMeasure& a, const ComplexAtomicMeasure& b) {
        ComplexAtomicMeasure out = a;
        out.atoms_.insert(out.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
        return out;
    }

private:
    std::vector<ComplexAtom> atoms_;
};

/// mu = mu_R + mu_tilde: real atoms and the rest, relative order preserved.
inline std::pair<AtomicMeasure, AtomicMeasure> decompose_real(const AtomicMeasure& mu) {
    AtomicMeasure real_part;
    AtomicMeasure rest;
    for (const auto& a : mu.atoms()) (a.point.is_real() ? real_part : rest).add(a.point, a.mass);
    return {std::move(real_part), std::move(rest)};
}

/// Pushforward of nu onto the sphere of units: mass of the non-real atoms per unit I.
inline std::vector<std::pair<ImaginaryUnit, double>> sphere_marginal(const AtomicMeasure& mu) {
    std::map<std::array<double, 3>, ExactSum> fibers;
    for (const auto& a : mu.atoms())
        if (!a.point.is_real()) fibers[a.point.I.vec()].add(a.mass);
    std::vector<std::pair<ImaginaryUnit, double>> out;
    for (const auto& [v, s] : fibers) out.emplace_back(ImaginaryUnit::normalized(v[0], v[1], v[2]), s.value());
    return out;
}

inline constexpr double kMergeTolerance = 1e-14;

/// mu^s: each atom at x + yI (y >= 0) is moved to x + yi on the fixed slice;
/// atoms landing within kMergeTolerance of each other merge. Output atoms are
/// sorted lexicographically by (re, im).
inline ComplexAtomicMeasure project_slice(const AtomicMeasure& mu) {
    std::vector<ComplexAtom> pts;
    pts.reserve(mu.size());
    for (const auto& a : mu.atoms()) pts.push_back({a.point.to_complex(), a.mass, {}});
    std::stable_sort(pts.begin(), pts.end(), [](const ComplexAtom& a, const ComplexAtom& b) {
        return a.z.real() < b.z.real() || (a.z.real() == b.z.real() && a.z.imag() < b.z.imag());
    });
    std::vector<ComplexAtom> merged;
    std::vector<bool> used(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        ComplexAtom atom{pts[i].z, pts[i].mass, {}};
        // Candidates share the real part up to the tolerance and are contiguous in sort order.
        for (std::size_t k = i + 1; k < pts.size() && pts[k].z.real() - pts[i].z.real() <= kMergeTolerance; ++k) {
            if (!used[k] && std::abs(pts[k].z - pts[i].z) <= kMergeTolerance) {
                if (atom.parts.empty()) atom.parts.push_back(pts[i].mass);
                atom.parts.push_back(pts[k].mass);
                used[k] = true;
            }
        }
        merged.push_back(std::move(atom));
    }
    return ComplexAtomicMeasure(std::move(merged));
}

/// nu-hat(E) = nu(conj E): every atom moves to its conjugate.
inline ComplexAtomicMeasure reflect(const ComplexAtomicMeasure& nu) {
    std::vector<ComplexAtom> out(nu.atoms());
    for (auto& a : out) a.z = std::conj(a.z);
    return ComplexAtomicMeasure(std::move(out));
}

namespace detail {
inline void check_exponent(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("L^p norm: need p >= 1");
}
}  // namespace detail

/// sum_k mass_k |f(q_k)|^p, correctly rounded (independent of atom order).
inline double lp_integral_quat(const SliceSeries& f, const AtomicMeasure& mu, double p) {
    detail::check_exponent(p);
    ExactSum s;
    for (const auto& a : mu.atoms()) s.add(a.mass * abs_pow(eval(f, a.point.to_quaternion()).norm(), p));
    return s.value();
}

inline double lp_integral_complex(const ComplexSeries& F, const ComplexAtomicMeasure& nu, double p) {
    detail::check_exponent(p);
    ExactSum s;
    for (const auto& a : nu.atoms()) {
        const double v = abs_pow(std::abs(eval(F, a.z)), p);
        a.each_mass([&](double m) { s.add(m * v); });
    }
    return s.value();
}

/// (integral of |f|^p d mu)^(1/p).
inline double lp_norm_quat(const SliceSeries& f, const AtomicMeasure& mu, double p) {
    return std::pow(lp_integral_quat(f, mu, p), 1.0 / p);
}

inline double lp_norm_complex(const ComplexSeries& F, const ComplexAtomicMeasure& nu, double p) {
    return std::pow(lp_integral_complex(F, nu, p), 1.0 / p);
}

}  // namespace slicereg
