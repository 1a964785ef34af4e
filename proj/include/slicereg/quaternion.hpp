#pragma once

// Quaternion algebra and the slice decomposition q = x + yI of points of the
// open unit ball.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicereg {

using Complex = std::complex<double>;

/// Element of H in the basis {1, i, j, k}.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double real() const { return w; }
    constexpr std::array<double, 3> imag() const { return {x, y, z}; }

    constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
    double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product. Noncommutative.
constexpr Quaternion multiply(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return multiply(p, q); }

inline Quaternion inverse(const Quaternion& q) {
    const double n2 = q.norm2();
    if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
    return q.conj() / n2;
}

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// Purely imaginary unit quaternion, an element of the sphere S.
class ImaginaryUnit {
public:
    static constexpr double kUnitTolerance = 1e-12;

    /// Default is i.
    constexpr ImaginaryUnit() = default;

    /// Validating constructor; the vector must already be unit length.
    ImaginaryUnit(double ux, double uy, double uz) : ux_(ux), uy_(uy), uz_(uz) {
        const double n2 = ux * ux + uy * uy + uz * uz;
        if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kUnitTolerance)
            throw std::invalid_argument("imaginary unit must have unit length, got |u|^2 = " +
                                        std::to_string(n2));
    }

    /// Normalizes an arbitrary nonzero 3-vector.
    static ImaginaryUnit normalized(double ux, double uy, double uz) {
        const double n = std::sqrt(ux * ux + uy * uy + uz * uz);
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("cannot normalize a zero imaginary vector");
        ImaginaryUnit u;
        u.ux_ = ux / n;
        u.uy_ = uy / n;
        u.uz_ = uz / n;
        return u;
    }

    static ImaginaryUnit i() { return {}; }
    static ImaginaryUnit j() { return ImaginaryUnit(0.0, 1.0, 0.0); }
    static ImaginaryUnit k() { return ImaginaryUnit(0.0, 0.0, 1.0); }

    constexpr double ux() const { return ux_; }
    constexpr double uy() const { return uy_; }
    constexpr double uz() const { return uz_; }
    constexpr std::array<double, 3> vec() const { return {ux_, uy_, uz_}; }

    constexpr Quaternion as_quaternion() const { return {0.0, ux_, uy_, uz_}; }
    constexpr operator Quaternion() const { return as_quaternion(); }

    ImaginaryUnit operator-() const {
        ImaginaryUnit u;
        u.ux_ = -ux_;
        u.uy_ = -uy_;
        u.uz_ = -uz_;
        return u;
    }

    friend constexpr bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

private:
    double ux_ = 1.0;
    double uy_ = 0.0;
    double uz_ = 0.0;
};

/// Euclidean inner product of the imaginary parts.
constexpr double dot(const ImaginaryUnit& a, const ImaginaryUnit& b) {
    return a.ux() * b.ux() + a.uy() * b.uy() + a.uz() * b.uz();
}

/// Inner product of H as R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Product IJ of two orthogonal units, which is again a unit (the cross product).
inline ImaginaryUnit cross_unit(const ImaginaryUnit& a, const ImaginaryUnit& b) {
    return ImaginaryUnit::normalized(a.uy() * b.uz() - a.uz() * b.uy(),
                                     a.uz() * b.ux() - a.ux() * b.uz(),
                                     a.ux() * b.uy() - a.uy() * b.ux());
}

/// Deterministic J orthogonal to I: the standard basis vector least aligned
/// with I (lowest index on ties), projected onto the orthogonal complement.
inline ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I) {
    const auto u = I.vec();
    std::size_t best = 0;
    for (std::size_t e = 1; e < 3; ++e)
        if (std::abs(u[e]) < std::abs(u[best])) best = e;
    std::array<double, 3> v{0.0, 0.0, 0.0};
    v[best] = 1.0;
    const double c = u[best];
    for (std::size_t e = 0; e < 3; ++e) v[e] -= c * u[e];
    return ImaginaryUnit::normalized(v[0], v[1], v[2]);
}

inline bool are_orthonormal(const ImaginaryUnit& I, const ImaginaryUnit& J, double tol = 1e-12) {
    return std::abs(dot(I, J)) <= tol;
}

/// q = x + yI with y >= 0. Real points carry I = i; callers must not branch on I when y == 0.
struct SlicePoint {
    double x = 0.0;
    double y = 0.0;
    ImaginaryUnit I{};

    Quaternion to_quaternion() const {
        return {x, y * I.ux(), y * I.uy(), y * I.uz()};
    }
    /// Image under the slice identification x + yI -> x + yi.
    std::complex<double> to_complex() const { return {x, y}; }
    double modulus() const { return std::hypot(x, y); }
    /// Argument in [0, pi].
    double angle() const { return std::atan2(y, x); }
    bool is_real() const { return y == 0.0; }
};

/// Splits q into (x, y, I), y >= 0. Rejects points outside the open ball.
inline SlicePoint decompose(const Quaternion& q) {
    if (!(q.norm2() < 1.0))
        throw std::domain_error("decompose: point lies outside the open unit ball");
    const double y = q.imag_norm();
    if (y == 0.0) return {q.w, 0.0, ImaginaryUnit::i()};
    return {q.w, y, ImaginaryUnit::normalized(q.x / y, q.y / y, q.z / y)};
}

/// Builds a canonical slice point from (x, y, I) with arbitrary sign of y.
inline SlicePoint make_slice_point(double x, double y, const ImaginaryUnit& I) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("slice point coordinates must be finite");
    if (!(x * x + y * y < 1.0))
        throw std::domain_error("slice point lies outside the open unit ball");
    if (y < 0.0) return {x, -y, -I};
    if (y == 0.0) return {x, 0.0, ImaginaryUnit::i()};
    return {x, y, I};
}

/// Maps a complex number into C_I via x + yi -> x + yI.
inline Quaternion to_slice(std::complex<double> c, const ImaginaryUnit& I) {
    return {c.real(), c.imag() * I.ux(), c.imag() * I.uy(), c.imag() * I.uz()};
}

}  // namespace slicereg
