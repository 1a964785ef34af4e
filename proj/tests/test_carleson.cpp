#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace slicereg;
using namespace testsupport;

namespace {

SlicePoint polar_point(double rho, double alpha, const ImaginaryUnit& I = ImaginaryUnit::i()) {
    return make_slice_point(rho * std::cos(alpha), rho * std::sin(alpha), I);
}

// Tail sums along the ray, in closed form.
double geometric_tail(int k) { return std::ldexp(2.0, -k); }                          // sum_{j>=k} 2^-j
double linear_tail(int k, int K) {                                                   // sum_{k<=j<=K} j 2^-j
    return double(k + 1) * std::ldexp(2.0, -k) - double(K + 2) * std::ldexp(1.0, -K);
}
double quartic_tail(int k, int K) { return (std::ldexp(1.0, -2 * k) - std::ldexp(1.0, -2 * (K + 1))) * 4.0 / 3.0; }

}  // namespace

TEST_CASE("box membership examples") {
    CHECK(box_contains(SymmetricBox{0.0, 0.5}, polar_point(0.8, 0.3)));
    CHECK_FALSE(box_contains(SymmetricBox{0.0, 0.5}, polar_point(0.4, 0.0)));
    CHECK(box_contains(SymmetricBox{0.1, 0.9}, polar_point(0.95, 0.05)));
    // Near pi, through the 2 pi - alpha - t branch.
    CHECK(box_contains(SymmetricBox{std::numbers::pi - 0.02, 0.9}, polar_point(0.95, std::numbers::pi - 0.05)));
    CHECK(box_contains(SymmetricBox{3.1, 0.9}, make_slice_point(-0.95, 0.0, ImaginaryUnit::i())));
    // Through the alpha + t branch: e^{I 0.03} with t = 0.05 is within 0.1.
    CHECK(box_contains(SymmetricBox{0.05, 0.9}, polar_point(0.95, 0.03)));
    // Boundary conventions: rho = r is in, rho = 1 is out.
    CHECK(box_contains(SymmetricBox{0.0, 0.5}, polar_point(0.5, 0.0)));
    CHECK_FALSE(box_contains(SymmetricBox{0.0, 0.5}, SlicePoint{1.0, 0.0, ImaginaryUnit::i()}));
    // The unit plays no role.
    Rng rng(61);
    for (int n = 0; n < 200; ++n) {
        const SymmetricBox b{rng.uniform(0.0, std::numbers::pi), rng.uniform(0.0, 0.99)};
        const double rho = rng.uniform(0.0, 0.999), alpha = rng.uniform(0.0, std::numbers::pi);
        CHECK(box_contains(b, polar_point(rho, alpha, rng.unit())) == box_contains(b, polar_point(rho, alpha)));
    }
}

TEST_CASE("boxes nest") {
    Rng rng(62);
    for (int n = 0; n < 2000; ++n) {
        const double t = rng.uniform(0.0, std::numbers::pi);
        const double r1 = rng.uniform(0.0, 0.99), r2 = rng.uniform(r1, 0.999);
        const SlicePoint p = polar_point(rng.uniform(0.0, 0.9999), rng.uniform(0.0, std::numbers::pi), rng.unit());
        if (box_contains(SymmetricBox{t, r2}, p)) CHECK(box_contains(SymmetricBox{t, r1}, p));
    }
}

TEST_CASE("box masses of mu and mu^s coincide exactly") {
    Rng rng(63);
    CHECK(box_mass(AtomicMeasure{}, SymmetricBox{0.0, 0.5}) == 0.0);
    AtomicMeasure dirac;
    dirac.add(0.95, 0.0, ImaginaryUnit::i(), 0.7);
    CHECK(box_mass(dirac, SymmetricBox{0.0, 0.9}) == 0.7);
    for (int n = 0; n < 500; ++n) {
        const AtomicMeasure mu = random_atoms(rng, 1 + rng.index(60), 0.999);
        const SymmetricBox b{rng.uniform(0.0, std::numbers::pi), rng.uniform(0.0, 0.95)};
        const ComplexAtomicMeasure nu = project_slice(mu);
        // Oracle: count projected atoms one by one.
        ExactSum oracle;
        for (const auto& a : mu.atoms())
            if (box_contains(b, a.point.to_complex())) oracle.add(a.mass);
        CHECK(box_mass(mu, b) == box_mass(nu, b));
        CHECK(box_mass(mu, b) == oracle.value());
    }
}

TEST_CASE("scan arguments are validated") {
    CHECK_THROWS_AS(ratio_scan(AtomicMeasure{}, 3, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(ratio_scan(AtomicMeasure{}, 8, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(ratio_scan(AtomicMeasure{}, 8, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricBox({4.0, 0.5}).validate(), std::invalid_argument);
}

TEST_CASE("geometric ray: bounded shells with the tail oracle") {
    const auto mu = dyadic_ray(20, RayLaw::Geometric);
    const auto rep = ratio_scan(mu, 64, dyadic_shells(20));
    REQUIRE(rep.shell_max.size() == 20);
    for (int k = 1; k <= 20; ++k) {
        // The t = 0 box of shell k holds atoms j >= k, a mass 2^{1-k} - 2^{-20}.
        const double oracle = (geometric_tail(k) - std::ldexp(1.0, -20)) / std::ldexp(1.0, -k);
        CHECK(rel_diff(rep.shell_max[std::size_t(k - 1)], oracle) <= 1e-14);
        CHECK(rep.shell_max[std::size_t(k - 1)] <= 4.0);
    }
    for (const auto& b : rep.boxes) CHECK(b.ratio >= 0.0);
    CHECK(rep.boxes.size() == 64 * 20);
    CHECK_FALSE(vanishing_scan(mu, 64, dyadic_shells(20)).vanishing);
}

TEST_CASE("linear-geometric ray: truncation sups grow without bound") {
    std::vector<double> sups;
    for (int K = 1; K <= 20; ++K) {
        const auto rep = ratio_scan(dyadic_ray(std::size_t(K), RayLaw::LinearGeometric), 64, dyadic_shells(20));
        double oracle = 0.0;
        for (int k = 1; k <= K; ++k) oracle = std::max(oracle, linear_tail(k, K) / std::ldexp(1.0, -k));
        CHECK(rel_diff(rep.sup, oracle) <= 1e-13);
        sups.push_back(rep.sup);
    }
    for (std::size_t m = 1; m < sups.size(); ++m) CHECK(sups[m] > sups[m - 1]);
    CHECK(sups.back() > 15.0);
}

TEST_CASE("quartic ray vanishes") {
    const auto v = vanishing_scan(dyadic_ray(20, RayLaw::Quartic), 64, dyadic_shells(20));
    CHECK(v.vanishing);
    for (int k = 1; k <= 20; ++k) {
        const double oracle = quartic_tail(k, 20) / std::ldexp(1.0, -k);
        CHECK(rel_diff(v.scan.shell_max[std::size_t(k - 1)], oracle) <= 1e-13);
        CHECK(v.scan.shell_max[std::size_t(k - 1)] <= 4.0 * std::ldexp(1.0, -k));
    }
    CHECK(v.final_max <= 1e-3 * v.global_max);
    CHECK(v.decay_rate > 0.9);
    CHECK(vanishing_scan(AtomicMeasure{}, 16, dyadic_shells(10)).vanishing);
}

TEST_CASE("vanishing verdict rules") {
    RatioReport r;
    r.shell_radii = {0.5, 0.75, 0.875, 0.9375, 0.96875, 0.984375};
    r.shell_max = {1.0, 0.5, 0.5, 0.1, 0.01, 0.001};
    CHECK(vanishing_from_scan(r).vanishing);  // ties count as nonincreasing
    r.shell_max.back() = 0.002;
    CHECK_FALSE(vanishing_from_scan(r).vanishing);
    r.shell_max = {1.0, 0.5, 0.5, 0.1, 0.0001, 0.001};
    CHECK_FALSE(vanishing_from_scan(r).vanishing);
    VanishingCriteria loose;
    loose.threshold = 0.01;
    loose.window = 2;
    r.shell_max = {1.0, 0.5, 0.5, 0.1, 0.01, 0.005};
    CHECK(vanishing_from_scan(r, loose).vanishing);
}

TEST_CASE("boxes from arcs") {
    const BoxFamily a = boxes_from_arcs({{0.0, 1.0}});
    CHECK(a.boxes[0].t == 0.5);
    CHECK(a.boxes[0].r == 0.5);
    const BoxFamily b = boxes_from_arcs({{1.0, 1.2}});
    CHECK(std::abs(b.boxes[0].t - 1.1) <= 1e-15);
    CHECK(std::abs(b.boxes[0].r - 0.9) <= 1e-15);
    CHECK_THROWS_AS(boxes_from_arcs({{0.0, 1.0}, {0.5, 1.5}}), std::invalid_argument);
    CHECK_THROWS_AS(boxes_from_arcs({{0.0, 2.5}}), std::invalid_argument);
    CHECK_THROWS_AS(boxes_from_arcs({{-0.5, 0.5}}), std::invalid_argument);
    CHECK_NOTHROW(boxes_from_arcs({{0.0, 1.0}, {1.0, 1.5}}));

    // Union mass against a per-atom membership oracle.
    Rng rng(64);
    const BoxFamily fam = boxes_from_arcs({{0.2, 0.9}, {0.9, 1.3}, {2.0, 2.4}});
    for (int n = 0; n < 50; ++n) {
        const AtomicMeasure mu = random_atoms(rng, 80, 0.999);
        ExactSum oracle;
        double sum_boxes = 0.0;
        for (const auto& atom : mu.atoms()) {
            bool in = false;
            for (const auto& box : fam.boxes) in = in || box_contains(box, atom.point);
            if (in) oracle.add(atom.mass);
        }
        for (const auto& box : fam.boxes) sum_boxes += box_mass(mu, box);
        CHECK(family_mass(mu, fam) == oracle.value());
        CHECK(family_mass(mu, fam) == family_mass(project_slice(mu), fam));
        CHECK(family_mass(mu, fam) <= sum_boxes * (1.0 + 1e-15));
    }
}
