// SPDX-License-Identifier: Apache-2.0
//
// kappa-mu distribution tests: closed forms, Monte Carlo sampling oracles and
// the double (product) kappa-mu density series.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "irsop/fading.hpp"
#include "irsop/montecarlo.hpp"

using namespace irsop;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082;

double sample_mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v, double mean) {
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace

TEST_CASE("km_cdf closed forms") {
    const KappaMuParams rayleigh{0.0, 1.0, 1.0};
    CHECK(km_cdf(0.0, rayleigh) == 0.0);
    for (double r = 0.1; r < 3.0; r += 0.3)
        CHECK(std::fabs(km_cdf(r, rayleigh) + std::expm1(-r * r)) < 1e-12);
    CHECK_THROWS_AS(km_cdf(-0.1, rayleigh), DomainError);
}

TEST_CASE("km_cdf against a sampling oracle") {
    const KappaMuParams p{1.41, 2.0, 1.0};
    const std::size_t n = 10'000'000;
    const auto draws = km_sample(p, n, 111);
    std::size_t below = 0;
    for (double d : draws) below += (d < 1.0);
    const double emp = static_cast<double>(below) / n;
    const double model = km_cdf(1.0, p);
    const double sigma = std::sqrt(model * (1.0 - model) / n);
    CHECK(std::fabs(emp - model) < 3.0 * sigma);
}

TEST_CASE("km_moment special values") {
    const KappaMuParams any{2.3, 1.7, 0.42};
    CHECK(km_moment(2.0, any) == 0.42);  // algebraic normalization
    const KappaMuParams rayleigh{0.0, 1.0, 1.0};
    CHECK(std::fabs(km_moment(1.0, rayleigh) - std::sqrt(kPi) / 2.0) < 1e-13);
    CHECK_THROWS_AS(km_moment(0.0, rayleigh), DomainError);
}

TEST_CASE("km_moment third moment against Monte Carlo") {
    const KappaMuParams p{1.52, 2.5, 1.0};
    const std::size_t n = 10'000'000;
    const auto draws = km_sample(p, n, 222);
    double acc = 0.0;
    for (double d : draws) acc += d * d * d;
    const double emp = acc / n;
    const double model = km_moment(3.0, p);
    CHECK(std::fabs(emp - model) / model < 1e-3);
}

TEST_CASE("km_sample determinism and distributional identities") {
    const KappaMuParams p{0.9, 1.3, 2.0};
    const auto a = km_sample(p, 1000, 77);
    const auto b = km_sample(p, 1000, 77);
    CHECK(a == b);

    // kappa=0, mu=1: squared draws are exponential with mean = power
    const KappaMuParams ray{0.0, 1.0, 1.7};
    auto draws = km_sample(ray, 1'000'000, 5);
    for (auto& d : draws) d *= d;
    EmpiricalCdf cdf(std::move(draws));
    const auto ks = ks_statistic(
        [&](double x) { return x <= 0 ? 0.0 : -std::expm1(-x / 1.7); }, cdf);
    CHECK(ks.d_ks < ks.d_max);
}

TEST_CASE("km_sample mean matches km_moment within 3 standard errors") {
    const KappaMuParams p{0.5, 0.8, 1.0};  // non-integer 2mu: inverse-CDF route
    CHECK_FALSE(KmSampler(p).gaussian_route());
    const std::size_t n = 10'000'000;
    const auto draws = km_sample(p, n, 333);
    const double mean = sample_mean(draws);
    const double sd = sample_sd(draws, mean);
    const double model = km_moment(1.0, p);
    CHECK(std::fabs(mean - model) < 3.0 * sd / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("km_sample KS gate for all table fading laws") {
    for (const KappaMuParams p : {KappaMuParams{0.5, 0.8, 1.0},
                                  KappaMuParams{1.41, 2.0, 0.3},
                                  KappaMuParams{1.52, 2.5, 2.0}}) {
        EmpiricalCdf cdf(km_sample(p, 1'000'000, 4242));
        const auto ks =
            ks_statistic([&](double r) { return r <= 0 ? 0.0 : km_cdf(r, p); }, cdf);
        CHECK(ks.d_ks < 0.0014);
    }
}

TEST_CASE("double_km_pdf collapses to the double-Rayleigh closed form") {
    // f(x) = 4 x K_0(2x): the unique K_0 kernel with unit mass
    // (int_0^inf u K_0(u) du = 1).
    const DoubleKmParams p{{0.0, 1.0, 1.0}, {0.0, 1.0, 1.0}, 1.0};
    for (double x : {0.1, 0.5, 1.0, 2.0}) {
        const double ref = 4.0 * x * bessel_k(0.0, 2.0 * x);
        const auto v = double_km_pdf(x, p);
        CHECK(v.terms_used == 1);
        CHECK(std::fabs(v.density - ref) < 1e-12 * std::max(1.0, ref));
    }
}

TEST_CASE("double_km_pdf normalizes to one") {
    // table fading laws with both unit and geometry powers
    for (const DoubleKmParams p :
         {DoubleKmParams{{1.41, 2.0, 1.0}, {1.52, 2.5, 1.0}, 1.0},
          DoubleKmParams{{1.41, 2.0, 1e-6}, {1.52, 2.5, 7.3e-8}, 4466.8},
          DoubleKmParams{{0.0, 2.0, 1.0}, {0.0, 1.2, 1.0}, 1.0}}) {
        const DoubleKmSeries series(p);
        const double hi = series.x_cutoff();
        const auto r = integrate([&](double x) { return series.pdf(x); }, 0.0, hi,
                                 {1e-12, 1e-9, 4000});
        CHECK(std::fabs(r.value - 1.0) < 1e-6);
    }
}

TEST_CASE("double_km_pdf against a histogram oracle") {
    const DoubleKmParams p{{1.41, 2.0, 1.0}, {1.52, 2.5, 1.0}, 1.0};
    const std::size_t n = 10'000'000;
    KmSampler s1(p.sr), s2(p.rd);
    Xoshiro256pp gen(99);
    const double x0 = 0.5, half = 0.01;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = s1.draw(gen) * s2.draw(gen);
        hits += (v >= x0 - half && v < x0 + half);
    }
    const double hist = static_cast<double>(hits) / (n * 2.0 * half);
    const double model = double_km_pdf(x0, p).density;
    CHECK(std::fabs(hist - model) / model < 0.02);
}

TEST_CASE("double_km_mean identities") {
    // Rayleigh x Rayleigh with unit powers: (sqrt(pi)/2)^2 = pi/4
    const DoubleKmParams ray{{0.0, 1.0, 1.0}, {0.0, 1.0, 1.0}, 1.0};
    CHECK(std::fabs(double_km_mean(ray) - kPi / 4.0) < 1e-13);

    // independence factorization against km_moment to 1e-10
    const DoubleKmParams p{{1.41, 2.0, 1e-6}, {1.52, 2.5, 7.3e-8}, 4466.8};
    const double prod = p.snr_scale * km_moment(1.0, p.sr) * km_moment(1.0, p.rd);
    CHECK(std::fabs(double_km_mean(p) - prod) < 1e-10 * prod);
}

TEST_CASE("double_km_mean against Monte Carlo") {
    const DoubleKmParams p{{1.41, 2.0, 1.0}, {1.52, 2.5, 1.0}, 1.0};
    KmSampler s1(p.sr), s2(p.rd);
    Xoshiro256pp gen(1234);
    const std::size_t n = 10'000'000;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += s1.draw(gen) * s2.draw(gen);
    const double emp = acc / n;
    CHECK(std::fabs(emp - double_km_mean(p)) / double_km_mean(p) < 1e-3);
}

TEST_CASE("double_km_log_mean closed form") {
    // log of a double-Rayleigh product has mean -euler_gamma
    const DoubleKmParams ray{{0.0, 1.0, 1.0}, {0.0, 1.0, 1.0}, 1.0};
    CHECK(std::fabs(double_km_log_mean(ray) + kEulerGamma) < 1e-12);

    // additivity across the two links
    const DoubleKmParams p{{1.41, 2.0, 0.25}, {1.52, 2.5, 4.0}, 1.0};
    const double sum = km_log_moment(p.sr) + km_log_moment(p.rd);
    CHECK(std::fabs(double_km_log_mean(p) - sum) < 1e-13);
}

TEST_CASE("double_km_log_mean against Monte Carlo") {
    const DoubleKmParams p{{1.41, 2.0, 1.0}, {1.52, 2.5, 1.0}, 1.0};
    KmSampler s1(p.sr), s2(p.rd);
    Xoshiro256pp gen(4321);
    const std::size_t n = 10'000'000;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::log(s1.draw(gen) * s2.draw(gen));
    CHECK(std::fabs(acc / n - double_km_log_mean(p)) < 1e-3);
}

TEST_CASE("km_cdf is a CDF on a parameter grid") {
    for (double kappa : {0.0, 0.7, 2.4})
        for (double mu : {0.8, 1.0, 2.5}) {
            const KappaMuParams p{kappa, mu, 1.3};
            double prev = 0.0;
            CHECK(km_cdf(0.0, p) == 0.0);
            for (double r = 0.05; r < 6.0; r += 0.05) {
                const double v = km_cdf(r, p);
                CHECK(v >= prev - 1e-14);
                prev = v;
            }
            CHECK(std::fabs(km_cdf(8.0, p) - 1.0) < 1e-9);
        }
}
