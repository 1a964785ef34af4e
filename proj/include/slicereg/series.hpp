#pragma once

// Truncated power series: holomorphic functions on the disc (ComplexSeries)
// and slice regular functions on the ball (SliceSeries, f(q) = sum q^n a_n).

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

inline constexpr std::size_t kDefaultDegree = 64;

/// F(z) = sum_n z^n alpha_n on the unit disc.
class ComplexSeries {
public:
    ComplexSeries() = default;
    explicit ComplexSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}
    ComplexSeries(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {}

    static ComplexSeries zero(std::size_t degree = 0) {
        return ComplexSeries(std::vector<Complex>(degree + 1, Complex{}));
    }
    static ComplexSeries monomial(std::size_t n, Complex c = 1.0) {
        std::vector<Complex> a(n + 1, Complex{});
        a[n] = c;
        return ComplexSeries(std::move(a));
    }

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }
    /// Degree of the truncation (length - 1); -1 is reported as 0 for the empty series.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Complex operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

    /// Horner evaluation. Valid for any z; the disc restriction is semantic.
    Complex operator()(Complex z) const {
        Complex acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    ComplexSeries derivative() const {
        if (coeffs_.size() <= 1) return ComplexSeries::zero();
        std::vector<Complex> d(coeffs_.size() - 1);
        for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = static_cast<double>(n) * coeffs_[n];
        return ComplexSeries(std::move(d));
    }

    bool has_real_coefficients(double tol = 0.0) const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [tol](const Complex& c) { return std::abs(c.imag()) <= tol; });
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) { return c == Complex{}; });
    }

    friend ComplexSeries operator+(const ComplexSeries& a, const ComplexSeries& b) {
        std::vector<Complex> c(std::max(a.size(), b.size()));
        for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] + b[n];
        return ComplexSeries(std::move(c));
    }
    friend ComplexSeries operator-(const ComplexSeries& a, const ComplexSeries& b) {
        std::vector<Complex> c(std::max(a.size(), b.size()));
        for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] - b[n];
        return ComplexSeries(std::move(c));
    }
    friend ComplexSeries operator*(Complex s, const ComplexSeries& a) {
        std::vector<Complex> c(a.coeffs_);
        for (auto& x : c) x *= s;
        return ComplexSeries(std::move(c));
    }
    friend bool operator==(const ComplexSeries&, const ComplexSeries&) = default;

private:
    std::vector<Complex> coeffs_;
};

/// Slice regular f(q) = sum_n q^n a_n with quaternionic coefficients on the RIGHT.
class SliceSeries {
public:
    SliceSeries() = default;
    explicit SliceSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {}
    SliceSeries(std::initializer_list<Quaternion> coeffs) : coeffs_(coeffs) {}

    static SliceSeries zero(std::size_t degree = 0) {
        return SliceSeries(std::vector<Quaternion>(degree + 1, Quaternion{}));
    }
    static SliceSeries monomial(std::size_t n, Quaternion c = 1.0) {
        std::vector<Quaternion> a(n + 1, Quaternion{});
        a[n] = c;
        return SliceSeries(std::move(a));
    }
    /// Real-coefficient series with the given coefficients.
    static SliceSeries from_real(const std::vector<double>& r) {
        std::vector<Quaternion> a(r.size());
        for (std::size_t n = 0; n < r.size(); ++n) a[n] = Quaternion(r[n]);
        return SliceSeries(std::move(a));
    }

    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Quaternion operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Quaternion{}; }

    /// All coefficients real within tol; such series map every slice into itself.
    bool slice_preserving(double tol = 1e-14) const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [tol](const Quaternion& a) { return a.imag_norm() <= tol; });
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Quaternion& a) { return a == Quaternion{}; });
    }

    friend SliceSeries operator+(const SliceSeries& a, const SliceSeries& b) {
        std::vector<Quaternion> c(std::max(a.size(), b.size()));
        for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] + b[n];
        return SliceSeries(std::move(c));
    }
    friend SliceSeries operator-(const SliceSeries& a, const SliceSeries& b) {
        std::vector<Quaternion> c(std::max(a.size(), b.size()));
        for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] - b[n];
        return SliceSeries(std::move(c));
    }
    /// Coefficient-wise right multiplication: (f * c)(q) = f(q) c.
    friend SliceSeries operator*(const SliceSeries& a, const Quaternion& c) {
        std::vector<Quaternion> out(a.coeffs_);
        for (auto& x : out) x = x * c;
        return SliceSeries(std::move(out));
    }
    friend bool operator==(const SliceSeries&, const SliceSeries&) = default;

private:
    std::vector<Quaternion> coeffs_;
};

/// Horner scheme with the variable multiplying from the left:
/// f = a_0 + q(a_1 + q(a_2 + ...)). No domain check.
inline Quaternion eval_unchecked(const SliceSeries& f, const Quaternion& q) {
    const auto& a = f.coeffs();
    Quaternion acc{};
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = q * acc + *it;
    return acc;
}

/// f(q) for q in the open unit ball.
inline Quaternion eval(const SliceSeries& f, const Quaternion& q) {
    if (!(q.norm2() < 1.0)) throw std::domain_error("eval: point lies outside the open unit ball");
    return eval_unchecked(f, q);
}

inline Complex eval(const ComplexSeries& F, Complex z) {
    if (!(std::norm(z) < 1.0)) throw std::domain_error("eval: point lies outside the open unit disc");
    return F(z);
}

/// Cullen derivative: b_n = (n + 1) a_{n+1}.
inline SliceSeries slice_derivative(const SliceSeries& f) {
    const auto& a = f.coeffs();
    if (a.size() <= 1) return SliceSeries::zero();
    std::vector<Quaternion> b(a.size() - 1);
    for (std::size_t n = 0; n + 1 < a.size(); ++n) b[n] = static_cast<double>(n + 1) * a[n + 1];
    return SliceSeries(std::move(b));
}

/// f^c(q) = sum q^n conj(a_n).
inline SliceSeries regular_conjugate(const SliceSeries& f) {
    std::vector<Quaternion> b(f.coeffs());
    for (auto& x : b) x = x.conj();
    return SliceSeries(std::move(b));
}

/// (JF)(z) = conj(F(conj z)); acts on coefficients by conjugation.
inline ComplexSeries j_operator(const ComplexSeries& F) {
    std::vector<Complex> b(F.coeffs());
    for (auto& x : b) x = std::conj(x);
    return ComplexSeries(std::move(b));
}

/// Components of f on the slice B_I with respect to J: f = F + G J.
struct Splitting {
    ComplexSeries F;
    ComplexSeries G;
};

namespace detail {
inline void require_orthonormal(const ImaginaryUnit& I, const ImaginaryUnit& J, const char* who) {
    if (!are_orthonormal(I, J))
        throw std::invalid_argument(std::string(who) + ": imaginary units I and J must be orthogonal");
}
}  // namespace detail

/// Writes each a_n = (p + qI) + (r + sI)J in the real basis {1, I, J, IJ};
/// F has coefficients p + qi and G has r + si.
inline Splitting split(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
    detail::require_orthonormal(I, J, "split");
    const Quaternion qi = I;
    const Quaternion qj = J;
    const Quaternion qk = I * J;
    std::vector<Complex> F(f.size());
    std::vector<Complex> G(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) {
        const Quaternion& a = f.coeffs()[n];
        F[n] = {a.w, dot(a, qi)};
        G[n] = {dot(a, qj), dot(a, qk)};
    }
    return {ComplexSeries(std::move(F)), ComplexSeries(std::move(G))};
}

/// Slice regular extension of F: coefficient p + qi becomes p + qI.
inline SliceSeries extend(const ComplexSeries& F, const ImaginaryUnit& I) {
    std::vector<Quaternion> a(F.size());
    for (std::size_t n = 0; n < F.size(); ++n) a[n] = to_slice(F.coeffs()[n], I);
    return SliceSeries(std::move(a));
}

/// Inverse of split: the slice regular function whose components on B_I are (F, G).
inline SliceSeries combine(const ComplexSeries& F, const ComplexSeries& G, const ImaginaryUnit& I,
                           const ImaginaryUnit& J) {
    detail::require_orthonormal(I, J, "combine");
    return extend(F, I) + extend(G, I) * Quaternion(J);
}

/// f(x + yJ) from fplus = f(x + yI) and fminus = f(x - yI):
/// 1/2 [fplus + fminus] + J (I/2) [fminus - fplus].
inline Quaternion representation_eval(const Quaternion& fplus, const Quaternion& fminus, const ImaginaryUnit& I,
                                      const ImaginaryUnit& J) {
    const Quaternion half_sum = 0.5 * (fplus + fminus);
    const Quaternion JI = Quaternion(J) * Quaternion(I);
    return half_sum + JI * (0.5 * (fminus - fplus));
}

/// f = f0 + f1 I + f2 J + f3 IJ with slice preserving (real-coefficient) parts.
struct SymmetricParts {
    SliceSeries f0, f1, f2, f3;

    SliceSeries reconstruct(const ImaginaryUnit& I, const ImaginaryUnit& J) const {
        const Quaternion qi = I;
        const Quaternion qj = J;
        return f0 + f1 * qi + f2 * qj + f3 * (qi * qj);
    }
};

/// Real and imaginary coefficient parts of F: F = F1 + i F2 with
/// F1 = (F + JF)/2 and F2 = (F - JF)/(2i), both with real coefficients.
inline std::pair<ComplexSeries, ComplexSeries> real_imag_parts(const ComplexSeries& F) {
    const ComplexSeries JF = j_operator(F);
    const ComplexSeries sum = F + JF;
    const ComplexSeries diff = F - JF;
    std::vector<Complex> p(F.size());
    std::vector<Complex> q(F.size());
    const Complex inv_2i = 1.0 / Complex(0.0, 2.0);
    for (std::size_t n = 0; n < F.size(); ++n) {
        p[n] = {(0.5 * sum[n]).real(), 0.0};
        q[n] = {(diff[n] * inv_2i).real(), 0.0};
    }
    return {ComplexSeries(std::move(p)), ComplexSeries(std::move(q))};
}

namespace detail {
inline SliceSeries real_extension(const ComplexSeries& F) {
    std::vector<Quaternion> a(F.size());
    for (std::size_t n = 0; n < F.size(); ++n) a[n] = Quaternion(F.coeffs()[n].real());
    return SliceSeries(std::move(a));
}
}  // namespace detail

inline SymmetricParts symmetric_decomposition(const SliceSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
    detail::require_orthonormal(I, J, "symmetric_decomposition");
    const auto [F, G] = split(f, I, J);
    const auto [F1, F2] = real_imag_parts(F);
    const auto [G1, G2] = real_imag_parts(G);
    return {detail::real_extension(F1), detail::real_extension(F2), detail::real_extension(G1),
            detail::real_extension(G2)};
}

}  // namespace slicereg
