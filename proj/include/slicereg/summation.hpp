#pragma once

// Reductions with a fixed, data-independent evaluation order.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace slicereg {

/// |x|^p for x >= 0 with 0^p = 0.
inline double abs_pow(double x, double p) {
    if (x == 0.0) return 0.0;
    if (p == 2.0) return x * x;
    if (p == 1.0) return x;
    return std::exp(p * std::log(x));
}

/// Recursive pairwise summation; the tree shape depends only on the length.
inline double pairwise_sum(std::span<const double> v) {
    constexpr std::size_t kLeaf = 8;
    if (v.size() <= kLeaf) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

/// Correctly rounded sum of a multiset of doubles (Shewchuk partials, as in
/// Python's math.fsum). The result does not depend on the input order.
class ExactSum {
public:
    void add(double x) {
        std::size_t i = 0;
        for (double y : partials_) {
            if (std::abs(x) < std::abs(y)) std::swap(x, y);
            const double hi = x + y;
            const double lo = y - (hi - x);
            if (lo != 0.0) partials_[i++] = lo;
            x = hi;
        }
        partials_.resize(i);
        partials_.push_back(x);
    }

    double value() const {
        if (partials_.empty()) return 0.0;
        std::size_t n = partials_.size();
        double hi = partials_[--n];
        double lo = 0.0;
        while (n > 0) {
            const double x = hi;
            const double y = partials_[--n];
            hi = x + y;
            const double yr = hi - x;
            lo = y - yr;
            if (lo != 0.0) break;
        }
        // Half-way case: make the rounding agree with the exact sum.
        if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
            const double y = lo * 2.0;
            const double x = hi + y;
            if (y == x - hi) hi = x;
        }
        return hi;
    }

private:
    std::vector<double> partials_;
};

inline double exact_sum(std::span<const double> v) {
    ExactSum s;
    for (double x : v) s.add(x);
    return s.value();
}

}  // namespace slicereg
