#include <doctest.h>

#include <cstring>
#include <vector>

#include "pwapprox/diagnostics.hpp"
#include "pwapprox/kernels.hpp"
#include "pwapprox/runtime.hpp"
#include "pwapprox/signals.hpp"

using namespace pw;

TEST_CASE("kernels::run produces identical slots in both lanes") {
    std::vector<double> a(5000), b(5000);
    const auto body = [](std::int64_t i) {
        double x = static_cast<double>(i) * 0.001;
        for (int r = 0; r < 50; ++r) x = std::sin(x) + 1.0 / (x + 2.0);
        return x;
    };
    kernels::run(kernels::Exec::parallel, 5000, [&](std::int64_t i) { a[i] = body(i); });
    kernels::run(kernels::Exec::serial, 5000, [&](std::int64_t i) { b[i] = body(i); });
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("results do not depend on the worker count") {
    const SpectralGrid grid(2048);
    const SamplingSequence seq{SamplingRule::kadec, 0.1, 7, 24};

    const auto compute = [&] {
        struct Out {
            std::vector<cdouble> row;
            double kernel;
            double dirichlet;
            double walsh_kernel;
            std::vector<double> eig;
            double gen;
        } out;
        const ReconstructionBank bank = build_bank(seq, grid, 128);
        out.row = bank.row(-3).values;
        out.kernel = kernel_l1(bank, 0.5, 16);
        out.dirichlet = dirichlet_lebesgue(129);
        const WalshSystem sys(grid, 255);
        out.walsh_kernel = walsh_dyadic_kernel_l1(sys, 0.3, 8);
        out.eig = riesz_bounds_estimate(bank, 8).eigenvalues;
        const GeneratingFunction gf(seq);
        out.gen = gf.value(7.25);
        return out;
    };

    pw::runtime::set_threads(1);
    const auto serial = compute();
    pw::runtime::set_threads(4);
    const auto parallel = compute();
    pw::runtime::set_threads(4);

    CHECK(serial.kernel == parallel.kernel);
    CHECK(serial.dirichlet == parallel.dirichlet);
    CHECK(serial.walsh_kernel == parallel.walsh_kernel);
    CHECK(serial.gen == parallel.gen);
    REQUIRE(serial.row.size() == parallel.row.size());
    CHECK(std::memcmp(serial.row.data(), parallel.row.data(),
                      serial.row.size() * sizeof(cdouble)) == 0);
    REQUIRE(serial.eig.size() == parallel.eig.size());
    CHECK(std::memcmp(serial.eig.data(), parallel.eig.data(),
                      serial.eig.size() * sizeof(double)) == 0);
}
