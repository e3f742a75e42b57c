#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "pwapprox/csv.hpp"
#include "pwapprox/rng.hpp"
#include "pwapprox/signals.hpp"
#include "pwapprox/spectral_ops.hpp"

#include "oracles.hpp"

using namespace pw;

namespace {
const SpectralGrid g4096(4096);
}

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(SpectralGrid(3), InputError);
    CHECK_THROWS_AS(SpectralGrid(0), InputError);
    const SpectralGrid g(8);
    CHECK(g.node(0) == -kPi);
    CHECK(g.node(7) == doctest::Approx(kPi - g.spacing()).epsilon(1e-15));
    for (std::size_t m = 1; m < 8; ++m) CHECK(g.node(m) > g.node(m - 1));
    CHECK(g.level() == 3);
}

TEST_CASE("eval_signal on reference spectra") {
    const Spectrum one = make_constant(g4096);
    CHECK(std::abs(eval_signal(one, 0.0) - cdouble{1.0, 0.0}) < 1e-14);
    // sinc(1) = 0: the grid sum of all roots of unity collapses exactly.
    CHECK(std::abs(eval_signal(one, 1.0)) < 1e-12);

    const Spectrum tri = make_triangle(g4096);
    CHECK(std::abs(eval_signal(tri, 0.0) - cdouble{0.5, 0.0}) < 1e-14);

    CHECK_THROWS_AS(eval_signal(one, std::nan("")), InputError);
}

TEST_CASE("pw1/pw2 norms") {
    const Spectrum one = make_constant(g4096);
    CHECK(pw1_norm(one) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pw2_norm(one) == doctest::Approx(1.0).epsilon(1e-15));

    const Spectrum tri = make_triangle(g4096);
    CHECK(pw1_norm(tri) == doctest::Approx(0.5).epsilon(1e-14));

    // Indicator of [-pi/2, pi/2]: boundary nodes carry O(1/M) quadrature error.
    const Spectrum half = apply_system(lowpass_transfer(g4096, kPi / 2), one);
    CHECK(std::abs(pw2_norm(half) - std::sqrt(0.5)) < 3e-4);
    CHECK(std::abs(pw1_norm(half) - 0.5) < 3e-4);
}

TEST_CASE("pw1 norm matches a 4x refined-grid quadrature oracle") {
    const std::uint64_t seed = 99;
    const double sigma = 0.8 * kPi;
    const Spectrum f = make_smooth_random(g4096, seed, sigma);
    const SpectralGrid fine(4 * 4096);
    const Spectrum f4 = make_smooth_random(fine, seed, sigma);
    CHECK(pw1_norm(f) == doctest::Approx(pw1_norm(f4)).epsilon(1e-6));
    CHECK(pw2_norm(f) == doctest::Approx(pw2_norm(f4)).epsilon(1e-6));
}

TEST_CASE("Parseval over integer samples for a band-pi signal") {
    const Spectrum f = make_smooth_random(g4096, 7, kPi);
    double sum = 0.0;
    for (int n = -256; n <= 256; ++n) sum += std::norm(eval_signal(f, n));
    CHECK(std::sqrt(sum) == doctest::Approx(pw2_norm(f)).epsilon(1e-6));
}

TEST_CASE("apply_system basics") {
    const Spectrum one = make_constant(g4096);
    const Spectrum same = apply_system(identity_transfer(g4096), one);
    for (std::size_t m = 0; m < 4096; m += 97) CHECK(same.values[m] == one.values[m]);

    // Hilbert twice negates away from omega = 0.
    const TransferFunction h = hilbert_transfer(g4096);
    const Spectrum f = make_smooth_random(g4096, 3, kPi);
    const Spectrum hh = apply_system(h, apply_system(h, f));
    for (std::size_t m = 0; m < 4096; ++m) {
        if (g4096.node(m) == 0.0) continue;
        CHECK(std::abs(hh.values[m] + f.values[m]) < 1e-15);
    }

    const SpectralGrid other(2048);
    CHECK_THROWS_AS(apply_system(identity_transfer(other), one), InputError);
}

TEST_CASE("transfer factories") {
    CHECK(hilbert_transfer(g4096).sup_norm == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(lowpass_transfer(g4096, 0.0), InputError);
    CHECK_THROWS_AS(lowpass_transfer(g4096, 4.0), InputError);

    const Spectrum one = make_constant(g4096);
    const Spectrum full = apply_system(lowpass_transfer(g4096, kPi), one);
    CHECK(pw1_norm(full) == doctest::Approx(1.0).epsilon(1e-15));
    const Spectrum half = apply_system(lowpass_transfer(g4096, kPi / 2), one);
    CHECK(std::abs(pw1_norm(half) - 0.5) < 3e-4);
}

TEST_CASE("linearity and norm bound properties") {
    const TransferFunction h = hilbert_transfer(g4096);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Spectrum f = make_smooth_random(g4096, seed, kPi);
        const Spectrum g = make_smooth_random(g4096, seed + 100, kPi);
        const cdouble alpha{keyed_symmetric(seed, 0), keyed_symmetric(seed, 1)};
        const cdouble beta{keyed_symmetric(seed, 2), keyed_symmetric(seed, 3)};

        std::vector<cdouble> mixed(4096);
        for (std::size_t m = 0; m < 4096; ++m)
            mixed[m] = alpha * f.values[m] + beta * g.values[m];
        const Spectrum fg(g4096, std::move(mixed), kPi);

        const Spectrum lhs = apply_system(h, fg);
        const Spectrum tf = apply_system(h, f);
        const Spectrum tg = apply_system(h, g);
        double worst = 0.0;
        for (std::size_t m = 0; m < 4096; ++m)
            worst = std::max(worst,
                             std::abs(lhs.values[m] - (alpha * tf.values[m] + beta * tg.values[m])));
        CHECK(worst < 1e-14);

        CHECK(pw1_norm(apply_system(h, f)) <= h.sup_norm * pw1_norm(f) + 1e-12);
        const TransferFunction lp = lowpass_transfer(g4096, 1.0);
        CHECK(pw1_norm(apply_system(lp, f)) <= lp.sup_norm * pw1_norm(f) + 1e-12);
    }
}

TEST_CASE("grid refinement consistency for a smooth spectrum") {
    const Spectrum f1 = make_smooth_random(g4096, 11, kPi);
    const SpectralGrid g2(8192);
    const Spectrum f2 = make_smooth_random(g2, 11, kPi);
    for (double t : {0.0, 0.3, 2.5, -7.0})
        CHECK(std::abs(eval_signal(f1, t) - eval_signal(f2, t)) < 1e-10);
}

TEST_CASE("spectrum invariant enforcement") {
    std::vector<cdouble> v(g4096.size(), cdouble{0.0, 0.0});
    v[0] = cdouble{1.0, 0.0}; // node at -pi, outside band pi/2
    CHECK_THROWS_AS(Spectrum(g4096, std::move(v), kPi / 2), InputError);

    std::vector<cdouble> w(g4096.size(), cdouble{0.0, 0.0});
    w[1] = cdouble{std::nan(""), 0.0};
    CHECK_THROWS_AS(Spectrum(g4096, std::move(w), kPi), InputError);
}

TEST_CASE("spectral CSV round trip") {
    const Spectrum f = make_smooth_random(SpectralGrid(256), 5, kPi);
    const std::string path = (std::filesystem::temp_directory_path() / "pw_spec_rt.csv").string();
    csv::write_spectrum(path, f);
    const Spectrum back = csv::read_spectrum(path);
    for (std::size_t m = 0; m < f.values.size(); ++m) CHECK(back.values[m] == f.values[m]);
    std::remove(path.c_str());
}
