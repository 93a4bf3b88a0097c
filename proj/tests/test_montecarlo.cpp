// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo oracle tests: determinism, model collapses, KS machinery and
// sample persistence.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>

#include "irsop/montecarlo.hpp"

using namespace irsop;

namespace {

Scenario unit_scenario(int n, QuantBits b, bool with_sd) {
    return Scenario{n,
                    b,
                    1.0,
                    1.0,
                    with_sd ? std::optional<KappaMuParams>({0.5, 0.8, 1.0}) : std::nullopt,
                    {1.41, 2.0, 1.0},
                    {1.52, 2.5, 1.0}};
}

}  // namespace

TEST_CASE("same seed gives bit-identical empirical CDFs, any thread count") {
    const Scenario sc = unit_scenario(4, QuantBits::finite(3), true);
    const McConfig mc{200'000, 42, 1u << 12};
    const auto a = simulate_snr(sc, mc, 1);
    const auto b = simulate_snr(sc, mc, 2);
    const auto c = simulate_snr(sc, mc, 7);
    CHECK(a.values() == b.values());
    CHECK(a.values() == c.values());
}

TEST_CASE("N=0 degenerate collapses to the SD-only model") {
    const Scenario sc = unit_scenario(0, QuantBits::finite(5), true);
    const auto sim = simulate_snr(sc, {1'000'000, 7, 1u << 16});
    // gamma = gamma_s |h_sd|^2: CDF at x is km_cdf(sqrt(x/gamma_s))
    const auto ks = ks_statistic(
        [&](double x) {
            return x <= 0.0 ? 0.0 : km_cdf(std::sqrt(x / sc.gamma_s), *sc.sd);
        },
        sim);
    CHECK(ks.d_ks < ks.d_max);
}

TEST_CASE("infinite bits collapse to a real-axis sum") {
    const Scenario sc = unit_scenario(6, QuantBits::infinite(), false);
    const McConfig mc{50'000, 99, 1u << 12};
    const auto sim = simulate_snr(sc, mc);

    // direct real-sum implementation with the same draw order
    KmSampler sr(sc.sr), rd(sc.rd);
    std::vector<double> direct(mc.samples);
    const std::uint64_t nchunks = (mc.samples + mc.batch - 1) / mc.batch;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        Xoshiro256pp gen(mc.seed, c);
        const std::uint64_t lo = c * mc.batch;
        const std::uint64_t hi = std::min<std::uint64_t>(mc.samples, lo + mc.batch);
        for (std::uint64_t i = lo; i < hi; ++i) {
            double acc = 0.0;
            for (int k = 0; k < sc.n_elements; ++k)
                acc += sc.alpha * sr.draw(gen) * rd.draw(gen);
            direct[i] = sc.gamma_s * acc * acc;
        }
    }
    std::sort(direct.begin(), direct.end());
    CHECK(sim.values() == direct);
}

TEST_CASE("empirical_op order statistics") {
    EmpiricalCdf cdf(std::vector<double>{1.0, 2.0, 3.0, 4.0});
    CHECK(empirical_op(cdf, {0.5}) == 0.0);
    CHECK(empirical_op(cdf, {9.0}) == 1.0);
    CHECK(empirical_op(cdf, {2.5}) == 0.5);
    CHECK(empirical_op(cdf, {2.0}) == 0.25);  // strictly below
}

TEST_CASE("empirical CDF evaluation is right-continuous") {
    EmpiricalCdf cdf(std::vector<double>{1.0, 1.0, 2.0});
    CHECK(cdf(0.99) == 0.0);
    CHECK(cdf(1.0) == Catch::Approx(2.0 / 3.0));
    CHECK(cdf(1.5) == Catch::Approx(2.0 / 3.0));
    CHECK(cdf(2.0) == 1.0);
}

TEST_CASE("ks_statistic basics") {
    std::vector<double> v;
    for (int i = 1; i <= 1000; ++i) v.push_back(i);
    EmpiricalCdf cdf(std::move(v));
    // the empirical CDF itself deviates by at most 1/nu
    const auto self = ks_statistic([&](double x) { return cdf(x); }, cdf);
    CHECK(self.d_ks <= 1.0 / 1000 + 1e-12);
    CHECK(std::fabs(ks_threshold(1'000'000, 0.05) - 0.0014) < 5e-5);
    CHECK_THROWS_AS(ks_threshold(0, 0.05), DomainError);
}

TEST_CASE("gridded CDF interpolation") {
    GriddedCdf g({0.0, 1.0, 2.0}, {0.0, 0.5, 1.0});
    CHECK(g(-1.0) == 0.0);
    CHECK(g(0.5) == Catch::Approx(0.25));
    CHECK(g(3.0) == 1.0);
    CHECK_THROWS_AS(GriddedCdf({0.0}, {0.0}), DomainError);
}

TEST_CASE("sample persistence round trip") {
    const std::string path = "irsop_test_samples.bin";
    const std::vector<double> v{0.0, 1.5, -2.25, 1e300, 5e-324};
    write_samples(path, v);
    const auto back = read_samples(path);
    CHECK(back == v);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_samples("definitely_missing_irsop.bin"), NumericError);
}

TEST_CASE("config validation") {
    McConfig bad{100, 1, 200};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    McConfig good{100, 1, 100};
    CHECK_NOTHROW(good.validate());
}
