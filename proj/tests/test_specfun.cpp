// SPDX-License-Identifier: Apache-2.0
//
// Special function tests against independent oracles: quadrature of integral
// representations, high-precision direct series and closed forms.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "irsop/quadrature.hpp"
#include "irsop/specfun.hpp"

using namespace irsop;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082;

// Test-side modified Bessel I_nu by direct power series (independent of the
// implementation under test, which never computes I).
double bessel_i_series(double nu, double z) {
    double sum = 0.0;
    const double lz = std::log(0.5 * z);
    for (int k = 0; k < 400; ++k) {
        const double lt = (2 * k + nu) * lz - std::lgamma(k + 1.0) -
                          std::lgamma(k + nu + 1.0);
        const double t = std::exp(lt);
        sum += t;
        if (t < sum * 1e-18 && k > z) break;
    }
    return sum;
}

// Oracle: K_nu(x) = \int_0^inf exp(-x cosh t) cosh(nu t) dt.
double bessel_k_oracle(double nu, double x) {
    nu = std::fabs(nu);
    double tmax = 1.0;
    while (x * std::cosh(tmax) - nu * tmax < 80.0) tmax += 0.5;
    const auto r = integrate(
        [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); }, 0.0,
        tmax, {1e-15, 1e-13, 4000});
    return r.value;
}

// Oracle: Q_nu(a, b) by quadrature of the noncentral chi density from b.
double marcum_oracle(double nu, double a, double b) {
    auto dens = [&](double x) {
        return std::pow(x, nu) / std::pow(a, nu - 1.0) *
               std::exp(-0.5 * (x * x + a * a)) * bessel_i_series(nu - 1.0, a * x);
    };
    double xmax = b + 1.0;
    while (0.5 * (xmax - a) * (xmax - a) < 80.0) xmax += 0.5;
    const auto r = integrate(dens, b, xmax, {1e-15, 1e-13, 4000});
    return r.value;
}

// 200-term direct series in extended precision.
long double kummer_series_oracle(long double a, long double b, long double z) {
    long double term = 1.0L, sum = 1.0L;
    for (int j = 0; j < 200; ++j) {
        term *= (a + j) / (b + j) * z / (j + 1);
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_CASE("marcum_q central and edge cases") {
    for (double b = 0.0; b <= 10.0; b += 0.25)
        CHECK(std::fabs(marcum_q(1.0, 0.0, b) - std::exp(-0.5 * b * b)) < 1e-12);
    CHECK(marcum_q(0.8, 1.3, 0.0) == 1.0);
    CHECK(marcum_q(3.7, 0.0, 0.0) == 1.0);
}

TEST_CASE("marcum_q against noncentral chi quadrature oracle") {
    CHECK(std::fabs(marcum_q(1.0, 1.0, 2.0) - marcum_oracle(1.0, 1.0, 2.0)) < 1e-10);
    CHECK(std::fabs(marcum_q(0.8, 0.9, 1.7) - marcum_oracle(0.8, 0.9, 1.7)) < 1e-10);
    CHECK(std::fabs(marcum_q(2.5, 1.9, 3.1) - marcum_oracle(2.5, 1.9, 3.1)) < 1e-10);
}

TEST_CASE("marcum_q monotone nonincreasing in b") {
    double prev = 1.0;
    for (double b = 0.0; b < 8.0; b += 0.1) {
        const double v = marcum_q(1.7, 1.2, b);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("marcum_q domain errors") {
    CHECK_THROWS_AS(marcum_q(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(marcum_q(1.0, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(marcum_q(1.0, 1.0, std::nan("")), DomainError);
}

TEST_CASE("bessel_k half-integer closed form") {
    const double ref = std::sqrt(kPi / 2.0) * std::exp(-1.0);
    CHECK(std::fabs(bessel_k(0.5, 1.0) - ref) < 1e-14);
    // K_{3/2}(x) = sqrt(pi/(2x)) e^-x (1 + 1/x)
    for (double x : {0.3, 1.0, 2.5, 7.0}) {
        const double r32 = std::sqrt(kPi / (2 * x)) * std::exp(-x) * (1.0 + 1.0 / x);
        CHECK(std::fabs(bessel_k(1.5, x) - r32) < 1e-13 * r32 + 1e-300);
    }
}

TEST_CASE("bessel_k order symmetry is exact") {
    for (double nu = -5.0; nu <= 5.0; nu += 0.37)
        for (double x : {0.05, 0.7, 2.0, 6.0, 20.0})
            CHECK(bessel_k(nu, x) == bessel_k(-nu, x));
}

TEST_CASE("bessel_k against the integral representation") {
    CHECK(std::fabs(bessel_k(0.0, 1.0) - bessel_k_oracle(0.0, 1.0)) < 1e-10);
    for (double nu : {0.3, 0.8, 1.0, 1.5, 2.7, 4.5})
        for (double x : {0.5, 1.0, 1.9, 2.1, 3.0, 8.0, 20.0}) {
            const double ref = bessel_k_oracle(nu, x);
            CHECK(std::fabs(bessel_k(nu, x) - ref) < 1e-9 * ref);
        }
}

TEST_CASE("bessel_k domain errors") {
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(1.0, -2.0), DomainError);
}

TEST_CASE("kummer_1f1 trivial collapses") {
    for (double z : {-3.0, -0.5, 0.0, 1.2, 10.0}) {
        CHECK(std::fabs(kummer_1f1(2.2, 2.2, z) - std::exp(z)) < 1e-12 * std::exp(z));
        CHECK(kummer_1f1(0.0, 1.5, z) == 1.0);
    }
}

TEST_CASE("kummer_1f1 against high-precision series") {
    const double ref = static_cast<double>(kummer_series_oracle(-0.5L, 2.0L, -2.82L));
    CHECK(std::fabs(kummer_1f1(-0.5, 2.0, -2.82) - ref) < 1e-12);
}

TEST_CASE("kummer transform residual on a grid") {
    for (double a = -2.0; a <= 5.0; a += 1.4)
        for (double b = 0.5; b <= 10.0; b += 1.9)
            for (double z = -10.0; z <= 10.0; z += 4.0) {
                const double lhs = kummer_1f1(a, b, z);
                const double rhs = std::exp(z) * kummer_1f1(b - a, b, -z);
                CHECK(std::fabs(lhs - rhs) < 1e-9 * std::max(1.0, std::fabs(lhs)));
            }
}

TEST_CASE("kummer_1f1 pole rejection") {
    CHECK_THROWS_AS(kummer_1f1(1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(kummer_1f1(1.0, -2.0, 1.0), DomainError);
    CHECK_NOTHROW(kummer_1f1(1.0, -2.5, 1.0));
}

TEST_CASE("kummer_1f1_da at z=0 and against finite differences") {
    CHECK(kummer_1f1_da(0.0, 2.0, 0.0) == 0.0);
    const double h = 1e-6;
    for (auto [a, b, z] : {std::array<double, 3>{0.0, 1.0, 1.0},
                           std::array<double, 3>{1.0, 2.0, 0.5},
                           std::array<double, 3>{0.0, 2.0, -2.82}}) {
        const double fd = (kummer_1f1(a + h, b, z) - kummer_1f1(a - h, b, z)) / (2 * h);
        CHECK(std::fabs(kummer_1f1_da(a, b, z) - fd) < 1e-6);
    }
}

TEST_CASE("digamma closed forms and recurrence") {
    CHECK(std::fabs(digamma(1.0) + kEulerGamma) < 1e-13);
    CHECK(std::fabs(digamma(0.5) + kEulerGamma + 2.0 * std::log(2.0)) < 1e-13);
    const double psi5 = digamma(1.0) + 1.0 + 0.5 + 1.0 / 3.0 + 0.25;
    CHECK(std::fabs(digamma(5.0) - psi5) < 1e-13);
    for (double x = 0.1; x < 25.0; x += 0.63)
        CHECK(std::fabs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12);
    CHECK_THROWS_AS(digamma(0.0), DomainError);
    CHECK_THROWS_AS(digamma(-1.5), DomainError);
}

TEST_CASE("reg_lower_gamma exponential case and limits") {
    for (double x : {0.0, 0.3, 1.0, 4.0, 20.0})
        CHECK(std::fabs(reg_lower_gamma(1.0, x) + std::expm1(-x)) < 1e-13);
    CHECK(reg_lower_gamma(3.3, 0.0) == 0.0);
    CHECK(std::fabs(reg_lower_gamma(2.0, 500.0) - 1.0) < 1e-14);
}

TEST_CASE("reg_lower_gamma equals the 1F1 form") {
    auto kummer_form = [](double k, double x) {
        if (x == 0.0) return 0.0;
        return std::exp(k * std::log(x) - std::lgamma(k + 1.0)) *
               kummer_1f1(k, k + 1.0, -x);
    };
    CHECK(std::fabs(reg_lower_gamma(2.3, 1.7) - kummer_form(2.3, 1.7)) < 1e-10);
    for (double k : {0.1, 0.8, 2.3, 7.0, 21.0, 50.0})
        for (double x : {0.0, 0.4, 1.7, 9.0, 33.0, 100.0})
            CHECK(std::fabs(reg_lower_gamma(k, x) - kummer_form(k, x)) < 1e-10);
}

TEST_CASE("pochhammer ratios") {
    CHECK(std::fabs(pochhammer(1.0, 0.5) - std::sqrt(kPi) / 2.0) < 1e-14);
    CHECK(pochhammer(3.7, 0.0) == 1.0);
    const double ref = std::tgamma(3.0) / std::tgamma(2.5);
    CHECK(std::fabs(pochhammer(2.5, 0.5) - ref) < 1e-13);
    CHECK_THROWS_AS(pochhammer(-1.0, 0.5), DomainError);
    CHECK_THROWS_AS(pochhammer(0.5, -1.0), DomainError);
}

TEST_CASE("series control validation") {
    SeriesControl bad1{0.0, 1000};
    CHECK_THROWS_AS(bad1.validate(), std::invalid_argument);
    SeriesControl bad2{1e-10, 10};
    CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
    SeriesControl ok{1e-10, 50};
    CHECK_NOTHROW(ok.validate());
}
