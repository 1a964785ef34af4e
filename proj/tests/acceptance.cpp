// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "support.hpp"

using namespace slicereg;
using namespace testsupport;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-34s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

void projection_identity() {
    Rng rng(1001);
    double worst = 0.0;
    int cases = 0;
    for (int n = 0; n < 200; ++n) {
        const SliceSeries f = random_real_series(rng, rng.index(33));
        const AtomicMeasure mu = random_atoms(rng, 1 + rng.index(200));
        const ComplexSeries F = split(f, ImaginaryUnit::i(), ImaginaryUnit::j()).F;
        const ComplexAtomicMeasure mus = project_slice(mu);
        for (double p : {1.0, 2.0, 3.0}) {
            worst = std::max(worst, rel_diff(lp_integral_quat(f, mu, p), lp_integral_complex(F, mus, p)));
            ++cases;
        }
    }
    report(1, "projection identity", worst <= 1e-12, fmt("max rel diff %.2e over %.0f (f, mu, p) triples", worst, cases));
}

void slice_independence() {
    Rng rng(1002);
    double worst = 0.0;
    for (const char* name : {"hardy2", "bergman", "dirichlet"}) {
        const SpaceSpec spec = preset_by_name(name);
        for (int n = 0; n < 100; ++n) {
            const SliceSeries f = random_real_series(rng, 1 + rng.index(64));
            const double base = slice_norm(f, ImaginaryUnit::i(), spec);
            for (int m = 0; m < 50; ++m) worst = std::max(worst, rel_diff(slice_norm(f, rng.unit(), spec), base));
        }
    }
    report(2, "slice independence (presets)", worst <= 1e-10, fmt("max rel deviation %.2e, 3 x 100 x 50 slices", worst));
}

void sandwich() {
    Rng rng(1003);
    int violations = 0, runs = 0;
    double worst_upper = 0.0;
    QuadratureSpec quad;
    quad.n_theta = 256;
    const std::vector<SpaceSpec> specs{hardy2_preset(), bergman_preset(), dirichlet_preset(), SpaceSpec::hardy(3.0)};
    for (const auto& spec : specs)
        for (int n = 0; n < 200; ++n) {
            const SliceSeries f = random_series(rng, rng.index(33));
            const bool sampled = spec.kind != SpaceKind::CoefficientWeighted;
            const SandwichReport s = sandwich_check(f, rng.unit(), spec, quad, sampled ? 16 : kDefaultSphereSamples);
            if (!s.pass) ++violations;
            worst_upper = std::max(worst_upper, s.upper_ratio);
            ++runs;
        }
    report(3, "norm sandwich", violations == 0,
           fmt("%.0f violations in %.0f runs, max lift/slice ratio %.3f (bound 4)", violations, runs, worst_upper));
}

void round_trips() {
    Rng rng(1004);
    double split_err = 0.0, extend_err = 0.0, conj_err = 0.0;
    for (int n = 0; n < 100; ++n) {
        const SliceSeries f = random_series(rng, 1 + rng.index(32));
        const ImaginaryUnit I = rng.unit();
        const ImaginaryUnit J = orthogonal_unit(I);
        const Splitting s = split(f, I, J);
        const Splitting sc = split(regular_conjugate(f), I, J);
        for (int a = 0; a < 20; ++a)
            for (int b = 0; b < 20; ++b) {
                const Complex z(-0.95 + 1.9 * a / 19.0, -0.95 + 1.9 * b / 19.0);
                if (std::abs(z) >= 0.99) continue;
                const Quaternion lhs = eval(f, to_slice(z, I));
                const Quaternion rhs = to_slice(s.F(z), I) + to_slice(s.G(z), I) * Quaternion(J);
                split_err = std::max(split_err, (lhs - rhs).norm() / std::max(1.0, lhs.norm()));
                const Complex jf = std::conj(s.F(std::conj(z)));
                conj_err = std::max(conj_err, std::max(std::abs(sc.F(z) - jf), std::abs(sc.G(z) + s.G(z))) /
                                                  std::max(1.0, std::abs(jf)));
            }
        // Restrict to B_I, extend back, compare anywhere in the ball.
        const SliceSeries g = extend(s.F, I) + extend(s.G, I) * Quaternion(J);
        const Quaternion q = rng.ball_point(0.99);
        const Quaternion fq = eval(f, q);
        extend_err = std::max(extend_err, (eval(g, q) - fq).norm() / std::max(1.0, fq.norm()));
    }
    const bool ok = split_err <= 1e-12 && extend_err <= 1e-12 && conj_err <= 1e-12;
    report(4, "splitting / representation trips", ok,
           fmt("split %.2e, extend %.2e, conjugate %.2e", split_err, extend_err, conj_err));
}

void quadrature_checks() {
    Rng rng(1005);
    double hardy = 0.0, besov = 0.0;
    for (std::size_t d = 0; d <= 16; ++d)
        for (int n = 0; n < 5; ++n) {
            const ComplexSeries F = random_complex_series(rng, d, 1.0);
            double s = 0.0;
            for (const auto& a : F.coeffs()) s += std::norm(a);
            hardy = std::max(hardy, rel_diff(complex_norm(F, SpaceSpec::hardy(2.0)), std::sqrt(s)));
        }
    const SpaceSpec b = SpaceSpec::besov(2.0, 0.0);
    for (std::size_t n = 1; n <= 16; ++n) {
        const double v = complex_norm(ComplexSeries::monomial(n), b);
        besov = std::max(besov, rel_diff(v * v, std::numbers::pi * double(n)));
    }
    report(5, "Hardy / Besov quadrature", hardy <= 1e-8 && besov <= 1e-8,
           fmt("Hardy-2 vs coefficients %.2e, Besov(2,0) z^n vs pi n %.2e", hardy, besov));
}

void asymmetry() {
    const SliceSeries f{Quaternion::i(), Quaternion(1.0)};
    const double a = slice_norm(f, ImaginaryUnit::i(), SpaceSpec::hardy(4.0));
    const double b = slice_norm(f, ImaginaryUnit::j(), SpaceSpec::hardy(4.0));
    const double margin = rel_diff(a, b);
    report(6, "H^4 slice asymmetry", margin > 1e-3, fmt("|q+i| on B_i %.6f, on B_j %.6f, margin %.3e", a, b, margin));
}

void ray_classifier() {
    const auto shells = dyadic_shells(20);
    // 2^-k: every shell bounded by 4, values match the tail sums.
    const auto geo = ratio_scan(dyadic_ray(20, RayLaw::Geometric), 64, shells);
    bool geo_ok = true;
    for (int k = 1; k <= 20; ++k) {
        const double oracle = (std::ldexp(2.0, -k) - std::ldexp(1.0, -20)) / std::ldexp(1.0, -k);
        const double got = geo.shell_max[std::size_t(k - 1)];
        geo_ok = geo_ok && got <= 4.0 && rel_diff(got, oracle) <= 1e-13;
    }
    // k 2^-k: truncations mu_K, K = 5..20; the sup grows strictly with K.
    bool lin_ok = true;
    double prev = 0.0, last = 0.0;
    for (int K = 5; K <= 20; ++K) {
        const double sup = ratio_scan(dyadic_ray(std::size_t(K), RayLaw::LinearGeometric), 64, shells).sup;
        double oracle = 0.0;
        for (int k = 1; k <= K; ++k) {
            const double tail = double(k + 1) * std::ldexp(2.0, -k) - double(K + 2) * std::ldexp(1.0, -K);
            oracle = std::max(oracle, tail / std::ldexp(1.0, -k));
        }
        lin_ok = lin_ok && rel_diff(sup, oracle) <= 1e-13 && sup > prev;
        prev = sup;
        last = sup;
    }
    // 4^-k: vanishing.
    const auto quart = vanishing_scan(dyadic_ray(20, RayLaw::Quartic), 64, shells);
    bool quart_ok = quart.vanishing && quart.final_max <= 1e-3 * quart.global_max;
    for (int k = 1; k <= 20; ++k) {
        const double oracle = (std::ldexp(1.0, -2 * k) - std::ldexp(1.0, -42)) * 4.0 / 3.0 / std::ldexp(1.0, -k);
        quart_ok = quart_ok && rel_diff(quart.scan.shell_max[std::size_t(k - 1)], oracle) <= 1e-13;
    }
    report(7, "Carleson box classifier", geo_ok && lin_ok && quart_ok,
           fmt("2^-k sup %.4f; k2^-k truncation sup -> %.3f; 4^-k final/global %.2e", geo.sup, last,
               quart.final_max / quart.global_max));
}

void equivalence_chain() {
    Rng rng(1008);
    const SpaceSpec spec = hardy2_preset();
    int chain_fail = 0, runs = 0;
    double worst_gap = 0.0;
    std::size_t min_family = SIZE_MAX;
    EquivalenceOptions opt;
    for (int m = 0; m < 20; ++m) {
        const AtomicMeasure mu = random_atoms(rng, 1 + rng.index(200));
        FamilyConfig fc;
        fc.seed = 5000 + std::uint64_t(m);
        const TestFamily fam = build_test_family(fc, spec, mu);
        min_family = std::min({min_family, fam.quat.size(), fam.complex.size()});
        for (double p : {1.0, 2.0, 3.0}) {
            const EquivalenceReport r = equivalence_experiment(mu, spec, p, fam, opt);
            if (!r.chain_ok) ++chain_fail;
            worst_gap = std::max(worst_gap, r.real_gap);
            ++runs;
        }
    }
    const bool ok = chain_fail == 0 && worst_gap <= 1e-10 && min_family >= 200;
    report(8, "two-sided chain on closed families", ok,
           fmt("%.0f/%.0f chain failures, real-subfamily gap %.2e", chain_fail, runs, worst_gap) +
               ", smallest family " + std::to_string(min_family));
}

void reflection_pairing() {
    Rng rng(1009);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const ComplexAtomicMeasure nu = project_slice(random_atoms(rng, 1 + rng.index(200)));
        const ComplexSeries G = random_complex_series(rng, rng.index(33));
        const double p = 1.0 + double(n % 3);
        worst = std::max(worst, rel_diff(lp_integral_complex(G, reflect(nu), p), lp_integral_complex(j_operator(G), nu, p)));
    }
    report(9, "reflection pairing", worst <= 1e-12, fmt("max rel diff %.2e over 100 cases", worst));
}

void determinism() {
    const json cfg = json::parse(R"({"random": {"atoms": 120}, "seed": 2024, "p": [1, 2, 3]})");
    const std::string a = run_equivalence(cfg).dump();
    const std::string b = run_equivalence(cfg).dump();
    report(10, "deterministic reports", a == b, "two equivalence runs, " + std::to_string(a.size()) + " bytes each");
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    projection_identity();
    slice_independence();
    sandwich();
    round_trips();
    quadrature_checks();
    asymmetry();
    ray_classifier();
    equivalence_chain();
    reflection_pairing();
    determinism();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 10 criteria failed (%.1f s)\n", failures, secs);
    return failures == 0 ? 0 : 1;
}
