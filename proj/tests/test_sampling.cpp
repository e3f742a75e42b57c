#include <doctest.h>

#include <cmath>
#include <complex>

#include "pwapprox/gammafn.hpp"
#include "pwapprox/sampling.hpp"
#include "pwapprox/spectral_ops.hpp"

using namespace pw;

namespace {

const SamplingSequence kEqui{SamplingRule::equidistant, 0.0, 0, 64};
SamplingSequence kadec_seq(double delta, std::uint64_t seed = 1, int window = 64) {
    return SamplingSequence{SamplingRule::kadec, delta, seed, window};
}

double sin_pi_over_pi(double z) { return std::sin(kPi * z) / kPi; }

} // namespace

TEST_CASE("log_gamma_right agrees with std::lgamma and the recurrence") {
    for (double x : {17.0, 64.5, 257.0, 1025.25}) {
        CHECK(log_gamma_right({x, 0.0}).real() ==
              doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
    const std::complex<double> w{40.0, 13.5};
    const std::complex<double> lhs = log_gamma_right(w + 1.0);
    const std::complex<double> rhs = log_gamma_right(w) + std::log(w);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK_THROWS_AS(log_gamma_right({2.0, 0.0}), InputError);
}

TEST_CASE("sequence points") {
    CHECK(sequence_point(kEqui, 5) == 5.0);
    CHECK(sequence_point(kEqui, -17) == -17.0);
    CHECK_THROWS_AS(sequence_point(kEqui, 65), RangeError);

    const SamplingSequence ks = kadec_seq(0.1);
    CHECK(sequence_point(ks, 0) == 0.0);
    for (int k = -64; k <= 64; ++k) {
        const double t = sequence_point(ks, k);
        CHECK(std::abs(t - k) <= 0.1);
    }
    // strict increase with gap >= 1 - 2 delta
    for (int k = -64; k < 64; ++k)
        CHECK(sequence_point(ks, k + 1) - sequence_point(ks, k) >= 1.0 - 2 * 0.1);

    // determinism across instances
    const SamplingSequence ks2 = kadec_seq(0.1);
    for (int k = -64; k <= 64; ++k) CHECK(sequence_point(ks, k) == sequence_point(ks2, k));

    CHECK_THROWS_AS(sequence_point(kadec_seq(0.3), 1), InputError);
}

TEST_CASE("generating function: equidistant closed form") {
    const GeneratingFunction gf(kEqui);
    CHECK(gf.value(0.5) == doctest::Approx(1.0 / kPi).epsilon(1e-12));
    CHECK(std::abs(gf.value(3.0)) < 1e-10);

    for (double z = -8.0; z <= 8.0; z += 0.0625) {
        CHECK(std::abs(gf.value(z) - sin_pi_over_pi(z)) < 1e-8);
    }
    // complex agreement
    const std::complex<double> zc{0.3, 0.2};
    const std::complex<double> ref = std::sin(kPi * zc) / kPi;
    CHECK(std::abs(gf.value(zc) - ref) < 1e-10);
}

TEST_CASE("generating function: zeros and radius validation") {
    const SamplingSequence ks = kadec_seq(0.1);
    const GeneratingFunction gf(ks);
    for (int k = -64; k <= 64; ++k)
        CHECK(std::abs(gf.value(sequence_point(ks, k))) < 1e-10);

    CHECK_THROWS_AS(gf.value(1000.0), ConfigError);
}

TEST_CASE("generating function: truncation doubling stability") {
    const SamplingSequence ks = kadec_seq(0.1);
    const GeneratingFunction g1(ks, {256, 32, 1 << 20});
    const GeneratingFunction g2(ks, {512, 32, 1 << 20});

    const double v1 = g1.value(0.37);
    const double v2 = g2.value(0.37);
    CHECK(std::abs(v2 - v1) <= 1e-8 * std::abs(v2));

    // points across the validated disc |z| <= n_prod / 2 = 128
    for (double z : {-7.3, -2.05, 0.37, 1.9, 4.71, 7.99, -55.5, 100.25, 127.5}) {
        const double a = g1.value(z);
        const double b = g2.value(z);
        CHECK(std::abs(b - a) <= 1e-8 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("phi_k interpolation property") {
    SamplingSequence equi = kEqui;
    equi.window = 16;
    const GeneratingFunction ge(equi);
    for (int k = -16; k <= 16; ++k) {
        for (int l = -16; l <= 16; ++l) {
            const double want = k == l ? 1.0 : 0.0;
            CHECK(std::abs(ge.reconstruction(k, static_cast<double>(l)) - want) < 1e-8);
        }
    }

    const SamplingSequence ks = kadec_seq(0.1, 1, 16);
    const GeneratingFunction gk(ks);
    for (int k = -16; k <= 16; ++k) {
        for (int l = -16; l <= 16; ++l) {
            const double want = k == l ? 1.0 : 0.0;
            CHECK(std::abs(gk.reconstruction(k, sequence_point(ks, l)) - want) < 1e-6);
        }
    }
    // closed-form sinc on the equidistant path
    CHECK(ge.reconstruction(2, 2.5) ==
          doctest::Approx(std::sin(kPi * 0.5) / (kPi * 0.5)).epsilon(1e-14));
}

TEST_CASE("phi' via factor removal matches a finite difference") {
    const SamplingSequence ks = kadec_seq(0.12, 9, 16);
    const GeneratingFunction gf(ks);
    CHECK(gf.derivative_at(0) == 1.0);
    for (int k : {-7, -1, 3, 11}) {
        const double tk = sequence_point(ks, k);
        const double h = 1e-5;
        const double fd = (gf.value(tk + h) - gf.value(tk - h)) / (2 * h);
        CHECK(gf.derivative_at(k) == doctest::Approx(fd).epsilon(1e-5));
    }
    const GeneratingFunction ge(kEqui);
    CHECK(ge.derivative_at(3) == -1.0);
    CHECK(ge.derivative_at(4) == 1.0);
}

TEST_CASE("phi_hat_k rows") {
    const SpectralGrid grid(2048);
    SamplingSequence equi = kEqui;
    equi.window = 8;
    const GeneratingFunction ge(equi);

    const Spectrum e0 = phi_hat_k(ge, 0, grid, 256);
    for (std::size_t m = 0; m < grid.size(); m += 61)
        CHECK(std::abs(e0.values[m] - cdouble{1.0, 0.0}) < 1e-14);

    const Spectrum e3 = phi_hat_k(ge, 3, grid, 256);
    for (std::size_t m = 0; m < grid.size(); m += 61) {
        CHECK(std::abs(std::abs(e3.values[m]) - 1.0) < 1e-14);
        const double ph = -grid.node(m) * 3.0;
        CHECK(std::abs(e3.values[m] - cdouble{std::cos(ph), std::sin(ph)}) < 1e-14);
    }

    // kadec: quadrature Parseval against the coefficient sum
    const SamplingSequence ks = kadec_seq(0.1, 1, 8);
    const GeneratingFunction gk(ks, {1024, 32, 1 << 20});
    const Spectrum row = phi_hat_k(gk, 2, grid, 256);
    double lhs = 0.0;
    for (const cdouble& v : row.values) lhs += std::norm(v);
    lhs /= static_cast<double>(grid.size());
    double rhs = 0.0;
    for (int n = -256; n <= 256; ++n) {
        const double c = gk.reconstruction(2, static_cast<double>(n));
        rhs += c * c;
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
}

TEST_CASE("bank and Gram: spectral route equals the time-domain route") {
    const SpectralGrid grid(2048);
    const SamplingSequence ks = kadec_seq(0.1, 1, 6);
    const ReconstructionBank bank = build_bank(ks, grid, 256);
    const GeneratingFunction gf(ks, {std::max({4 * 6, 256, 2 * 256}), 32, 1 << 20});

    const std::vector<cdouble> g = gram_matrix(bank, 4);
    const int dim = 9;
    for (int j : {-4, -1, 0, 2}) {
        for (int k : {-3, 0, 1, 4}) {
            double direct = 0.0;
            for (int n = -256; n <= 256; ++n)
                direct += gf.reconstruction(j, static_cast<double>(n)) *
                          gf.reconstruction(k, static_cast<double>(n));
            const cdouble got = g[static_cast<std::size_t>(j + 4) * dim + (k + 4)];
            CHECK(std::abs(got - cdouble{direct, 0.0}) < 1e-9);
        }
    }
    // Hermitian to machine precision
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            CHECK(std::abs(g[static_cast<std::size_t>(r) * dim + c] -
                           std::conj(g[static_cast<std::size_t>(c) * dim + r])) < 1e-12);
}

TEST_CASE("riesz bounds") {
    const SpectralGrid grid(2048);
    SamplingSequence equi = kEqui;
    equi.window = 16;
    const ReconstructionBank be = build_bank(equi, grid, 256);
    const RieszEstimate re = riesz_bounds_estimate(be, 16);
    CHECK(re.lower == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(re.upper == doctest::Approx(1.0).epsilon(1e-8));

    const ReconstructionBank b1 = build_bank(kadec_seq(0.1, 1, 16), grid, 256);
    const RieszEstimate r1 = riesz_bounds_estimate(b1, 16);
    CHECK(r1.lower > 0.1);
    CHECK(r1.upper >= r1.lower);

    const ReconstructionBank b2 = build_bank(kadec_seq(0.24, 1, 16), grid, 256);
    const RieszEstimate r2 = riesz_bounds_estimate(b2, 16);
    CHECK(r2.lower > 0.0);
    CHECK(r2.lower < r1.lower); // monotone degradation with delta
}
