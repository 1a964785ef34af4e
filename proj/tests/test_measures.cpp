#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "support.hpp"

using namespace slicereg;
using namespace testsupport;

TEST_CASE("atoms are validated and canonical") {
    AtomicMeasure mu;
    CHECK_THROWS_AS(mu.add(0.1, 0.2, ImaginaryUnit::j(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(mu.add(0.1, 0.2, ImaginaryUnit::j(), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(mu.add(0.8, 0.6, ImaginaryUnit::j(), 1.0), std::domain_error);
    mu.add(0.1, -0.2, ImaginaryUnit::j(), 1.0);
    CHECK(mu.atoms()[0].point.y == 0.2);
    CHECK(mu.atoms()[0].point.I == -ImaginaryUnit::j());
    ComplexAtomicMeasure nu;
    CHECK_THROWS_AS(nu.add({1.0, 0.0}, 1.0), std::domain_error);
}

TEST_CASE("decompose_real") {
    AtomicMeasure real_only;
    real_only.add(0.3, 0.0, ImaginaryUnit::i(), 2.0);
    auto [r1, t1] = decompose_real(real_only);
    CHECK(r1.size() == 1);
    CHECK(t1.empty());

    AtomicMeasure off;
    off.add(0.3, 0.1, ImaginaryUnit::k(), 2.0);
    auto [r2, t2] = decompose_real(off);
    CHECK(r2.empty());
    CHECK(t2.size() == 1);

    Rng rng(51);
    for (int n = 0; n < 20; ++n) {
        RandomMeasureConfig cfg;
        cfg.atoms = 10;
        cfg.real_fraction = 0.4;
        const AtomicMeasure mu = random_measure(rng, cfg);
        auto [r, t] = decompose_real(mu);
        CHECK(r.size() + t.size() == mu.size());
        CHECK((r + t).total_mass() == mu.total_mass());
        CHECK(rel_diff(r.total_mass() + t.total_mass(), mu.total_mass()) <= 1e-15);
        const SliceSeries f = random_series(rng, 8);
        ExactSum parts;
        parts.add(lp_integral_quat(f, r, 1.5));
        parts.add(lp_integral_quat(f, t, 1.5));
        CHECK(rel_diff(parts.value(), lp_integral_quat(f, mu, 1.5)) <= 1e-15);
        CHECK(lp_integral_quat(f, r + t, 1.5) == lp_integral_quat(f, mu, 1.5));
    }
}

TEST_CASE("sphere marginal sums fiber masses per unit") {
    AtomicMeasure mu;
    mu.add(0.1, 0.5, ImaginaryUnit::j(), 1.0);
    mu.add(-0.2, 0.3, ImaginaryUnit::j(), 0.5);
    mu.add(0.1, 0.5, ImaginaryUnit::k(), 2.0);
    mu.add(0.4, 0.0, ImaginaryUnit::i(), 7.0);
    const auto m = sphere_marginal(mu);
    REQUIRE(m.size() == 2);
    double total = 0.0;
    for (const auto& [u, w] : m) {
        if (u == ImaginaryUnit::j()) CHECK(w == 1.5);
        if (u == ImaginaryUnit::k()) CHECK(w == 2.0);
        total += w;
    }
    CHECK(total == 3.5);
}

TEST_CASE("project_slice examples") {
    {
        AtomicMeasure mu;
        mu.add(0.1, 0.5, ImaginaryUnit::j(), 1.0);
        const auto nu = project_slice(mu);
        REQUIRE(nu.size() == 1);
        CHECK(nu.atoms()[0].z == Complex(0.1, 0.5));
        CHECK(nu.atoms()[0].mass == 1.0);
    }
    {
        AtomicMeasure mu;
        mu.add(0.3, 0.0, ImaginaryUnit::i(), 2.0);
        const auto nu = project_slice(mu);
        REQUIRE(nu.size() == 1);
        CHECK(nu.atoms()[0].z == Complex(0.3, 0.0));
        CHECK(nu.atoms()[0].mass == 2.0);
    }
    {
        AtomicMeasure mu;
        mu.add(0.1, 0.5, ImaginaryUnit::j(), 1.0);
        mu.add(0.1, 0.5, ImaginaryUnit::k(), 2.0);
        const auto nu = project_slice(mu);
        REQUIRE(nu.size() == 1);
        CHECK(nu.atoms()[0].mass == 3.0);
    }
}

TEST_CASE("projection conserves mass exactly") {
    Rng rng(52);
    for (int n = 0; n < 100; ++n) {
        const AtomicMeasure mu = random_atoms(rng, 1 + rng.index(200));
        const auto nu = project_slice(mu);
        CHECK(nu.total_mass() == mu.total_mass());
        CHECK(nu.size() <= mu.size());
    }
    // Dyadic masses on shared fibers: merges are exact.
    AtomicMeasure fibers;
    for (int k = 0; k < 50; ++k) {
        const double x = 0.01 * (k % 7), y = 0.02 * (k % 5) + 0.01;
        fibers.add(x, y, rng.unit(), std::ldexp(1.0, -(k % 9)));
    }
    const auto nu = project_slice(fibers);
    CHECK(nu.size() == 35);
    CHECK(nu.total_mass() == fibers.total_mass());
}

TEST_CASE("reflection") {
    ComplexAtomicMeasure nu;
    nu.add({0.3, 0.2}, 1.0);
    nu.add({0.4, 0.0}, 2.0);
    const auto r = reflect(nu);
    CHECK(r.atoms()[0].z == Complex(0.3, -0.2));
    CHECK(r.atoms()[1].z == Complex(0.4, 0.0));
    Rng rng(53);
    for (int n = 0; n < 20; ++n) {
        const auto p = project_slice(random_atoms(rng, 50));
        const auto rr = reflect(reflect(p));
        REQUIRE(rr.size() == p.size());
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK(rr.atoms()[k].z == p.atoms()[k].z);
            CHECK(rr.atoms()[k].mass == p.atoms()[k].mass);
        }
    }
}

TEST_CASE("Lp norms: trivial cases") {
    Rng rng(54);
    const AtomicMeasure mu = random_atoms(rng, 30);
    const SliceSeries one{Quaternion(1.0)};
    for (double p : {1.0, 2.0, 3.5}) {
        CHECK(rel_diff(lp_norm_quat(one, mu, p), std::pow(mu.total_mass(), 1.0 / p)) <= 1e-15);
        const Complex c(0.6, -0.8);
        const auto nu = project_slice(mu);
        CHECK(rel_diff(lp_norm_complex(ComplexSeries{c}, nu, p), std::abs(c) * std::pow(nu.total_mass(), 1.0 / p)) <=
              1e-15);
        CHECK(lp_norm_quat(one, AtomicMeasure{}, p) == 0.0);
        CHECK(lp_norm_complex(ComplexSeries{c}, ComplexAtomicMeasure{}, p) == 0.0);
    }
    CHECK_THROWS_AS(lp_norm_quat(one, mu, 0.5), std::invalid_argument);
}

TEST_CASE("Lp integral does not depend on atom order") {
    Rng rng(55);
    for (int n = 0; n < 50; ++n) {
        const AtomicMeasure mu = random_atoms(rng, 100);
        const SliceSeries f = random_series(rng, 16);
        std::vector<Atom> shuffled(mu.atoms());
        for (std::size_t k = shuffled.size(); k > 1; --k) std::swap(shuffled[k - 1], shuffled[rng.index(k)]);
        const AtomicMeasure mu2(shuffled);
        // Independent accumulation in long double.
        long double acc = 0.0L;
        for (const auto& a : shuffled) acc += (long double)a.mass * std::pow((long double)eval(f, a.point.to_quaternion()).norm(), 2.0L);
        const double direct = std::sqrt((double)acc);
        CHECK(lp_norm_quat(f, mu2, 2.0) == lp_norm_quat(f, mu, 2.0));
        CHECK(rel_diff(lp_norm_quat(f, mu, 2.0), direct) <= 1e-13);
    }
}

TEST_CASE("projection identity for real-coefficient functions") {
    Rng rng(56);
    for (int n = 0; n < 60; ++n) {
        const AtomicMeasure mu = random_atoms(rng, 1 + rng.index(200));
        const SliceSeries f = random_real_series(rng, rng.index(33));
        const ComplexSeries F = split(f, ImaginaryUnit::i(), ImaginaryUnit::j()).F;
        const double p = 1.0 + double(n % 3);
        CHECK(rel_diff(lp_integral_quat(f, mu, p), lp_integral_complex(F, project_slice(mu), p)) <= 1e-12);
    }
}

TEST_CASE("reflection pairing") {
    Rng rng(57);
    for (int n = 0; n < 60; ++n) {
        const auto nu = project_slice(random_atoms(rng, 80));
        const ComplexSeries G = random_complex_series(rng, 20);
        const double p = rng.uniform(1.0, 4.0);
        CHECK(rel_diff(lp_integral_complex(G, reflect(nu), p), lp_integral_complex(j_operator(G), nu, p)) <= 1e-12);
    }
}
