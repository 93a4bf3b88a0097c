// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Real-valued special functions: Marcum-Q, modified Bessel K of real order,
// the confluent hypergeometric 1F1 and its parameter derivative, digamma,
// regularized incomplete gamma and Pochhammer ratios.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace irsop {

/// Truncation control for the infinite series used throughout the library.
struct SeriesControl {
    double rel_tol = 1e-10;
    int max_terms = 10000;

    void validate() const {
        if (!(rel_tol > 0.0) || rel_tol > 1e-3)
            throw std::invalid_argument("SeriesControl: rel_tol must lie in (0, 1e-3]");
        if (max_terms < 50)
            throw std::invalid_argument("SeriesControl: max_terms must be >= 50");
    }
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A series or quadrature failed to converge within its budget.
class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Taylor coefficients of 1/Gamma(1+x) around x = 0 (Abramowitz & Stegun 6.1.34,
// shifted by one index). Valid for |x| <= 0.5 to full double precision.
inline constexpr double kInvGamma1p[] = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.04200263503409523553,
    0.16653861138229148950,
    -0.04219773455554433675,
    -0.00962197152787697356,
    0.00721894324666309954,
    -0.00116516759185906511,
    -0.00021524167411495097,
    0.00012805028238811619,
    -0.00002013485478078824,
    -0.00000125049348214267,
    0.00000113302723198170,
    -0.00000020563384169776,
    0.00000000611609510448,
    0.00000000500200764447,
    -0.00000000118127457049,
    0.00000000010434267117,
    0.00000000000778226344,
    -0.00000000000369680562,
    0.00000000000051003703,
    -0.00000000000002058326,
    -0.00000000000000534812,
    0.00000000000000122678,
    -0.00000000000000011813,
    0.00000000000000000119,
};

/// 1/Gamma(1+x) for |x| <= 0.5 by Taylor series (no cancellation).
inline double inv_gamma_1p(double x) {
    double p = 1.0, sum = 0.0;
    for (double c : kInvGamma1p) {
        sum += c * p;
        p *= x;
    }
    return sum;
}

// gam1(mu) = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu): the odd part of
// 1/Gamma(1+x), with the removable singularity at mu = 0 handled by the series.
inline double temme_gam1(double mu) {
    const double m2 = mu * mu;
    double p = 1.0, sum = 0.0;
    for (std::size_t j = 1; j < sizeof(kInvGamma1p) / sizeof(double); j += 2) {
        sum += kInvGamma1p[j] * p;
        p *= m2;
    }
    return -sum;
}

// gam2(mu) = [1/Gamma(1-mu) + 1/Gamma(1+mu)] / 2: the even part.
inline double temme_gam2(double mu) {
    const double m2 = mu * mu;
    double p = 1.0, sum = 0.0;
    for (std::size_t j = 0; j < sizeof(kInvGamma1p) / sizeof(double); j += 2) {
        sum += kInvGamma1p[j] * p;
        p *= m2;
    }
    return sum;
}

// Temme series for K_mu(x), K_{mu+1}(x) with |mu| <= 0.5 and 0 < x <= 2.
inline void bessel_k_temme(double mu, double x, double& kmu, double& kmu1) {
    constexpr double pi = 3.141592653589793238462643383279502884;
    const double x2 = 0.5 * x;
    const double pimu = pi * mu;
    const double fact = (std::fabs(pimu) < 1e-290) ? 1.0 : pimu / std::sin(pimu);
    const double d = -std::log(x2);
    const double e = mu * d;
    const double fact2 = (std::fabs(e) < 1e-10) ? 1.0 + e * e / 6.0 : std::sinh(e) / e;
    const double gam1 = temme_gam1(mu);
    const double gam2 = temme_gam2(mu);
    const double gampl = gam2 - mu * gam1;  // 1/Gamma(1+mu)
    const double gammi = gam2 + mu * gam1;  // 1/Gamma(1-mu)
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    const double e1 = std::exp(e);
    double p = 0.5 * e1 / gampl;
    double q = 0.5 / (e1 * gammi);
    double c = 1.0;
    const double d2 = x2 * x2;
    double sum1 = p;
    for (int i = 1; i <= 500; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= d2 / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::fabs(del) < std::fabs(sum) * kEps) {
            kmu = sum;
            kmu1 = sum1 * 2.0 / x;
            return;
        }
    }
    throw NumericError("bessel_k: Temme series failed to converge");
}

// Steed's continued fraction CF2 for e^x K_mu(x), e^x K_{mu+1}(x),
// |mu| <= 0.5 and x > 2.
inline void bessel_k_cf2_scaled(double mu, double x, double& kmu, double& kmu1) {
    constexpr double pi = 3.141592653589793238462643383279502884;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= 10000; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < kEps) {
            h = a1 * h;
            kmu = std::sqrt(pi / (2.0 * x)) / s;
            kmu1 = kmu * (mu + x + 0.5 - h) / x;
            return;
        }
    }
    throw NumericError("bessel_k: continued fraction failed to converge");
}

// Base pair (e^x K_mu, e^x K_{mu+1}) for |mu| <= 0.5, any x > 0.
inline void bessel_k_scaled_pair(double mu, double x, double& kmu, double& kmu1) {
    if (x <= 2.0) {
        bessel_k_temme(mu, x, kmu, kmu1);
        const double ex = std::exp(x);
        kmu *= ex;
        kmu1 *= ex;
    } else {
        bessel_k_cf2_scaled(mu, x, kmu, kmu1);
    }
}

}  // namespace detail

/// Digamma function psi(x) for x > 0.
inline double digamma(double x) {
    detail::require_finite(x, "digamma");
    if (!(x > 0.0)) throw DomainError("digamma: requires x > 0");
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    // asymptotic series with Bernoulli numbers B2..B14
    const double tail =
        inv2 * (1.0 / 12 -
        inv2 * (1.0 / 120 -
        inv2 * (1.0 / 252 -
        inv2 * (1.0 / 240 -
        inv2 * (1.0 / 132 -
        inv2 * (691.0 / 32760 -
        inv2 * (1.0 / 12)))))));
    return acc + std::log(x) - 0.5 * inv - tail;
}

/// Pochhammer ratio Gamma(x+s)/Gamma(x); requires both Gamma arguments positive.
inline double pochhammer(double x, double s) {
    detail::require_finite(x, "pochhammer");
    detail::require_finite(s, "pochhammer");
    if (!(x > 0.0) || !(x + s > 0.0))
        throw DomainError("pochhammer: Gamma arguments must be positive");
    if (s == 0.0) return 1.0;
    return std::exp(std::lgamma(x + s) - std::lgamma(x));
}

/// Regularized lower incomplete gamma P(k, x) for k > 0, x >= 0.
inline double reg_lower_gamma(double k, double x, const SeriesControl& ctl = {}) {
    detail::require_finite(k, "reg_lower_gamma");
    detail::require_finite(x, "reg_lower_gamma");
    ctl.validate();
    if (!(k > 0.0)) throw DomainError("reg_lower_gamma: requires k > 0");
    if (x < 0.0) throw DomainError("reg_lower_gamma: requires x >= 0");
    if (x == 0.0) return 0.0;
    const double lpre = k * std::log(x) - x - std::lgamma(k);
    if (x < k + 1.0) {
        // lower series
        double ap = k, del = 1.0 / k, sum = del;
        for (int n = 0; n < ctl.max_terms; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * detail::kEps)
                return std::min(1.0, sum * std::exp(lpre));
        }
        throw NumericError("reg_lower_gamma: series did not converge");
    }
    // Lentz continued fraction for Q
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - k, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= ctl.max_terms; ++i) {
        const double an = -i * (i - k);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < detail::kEps) {
            const double q = std::exp(lpre) * h;
            return std::max(0.0, 1.0 - q);
        }
    }
    throw NumericError("reg_lower_gamma: continued fraction did not converge");
}

/// Regularized upper incomplete gamma Q(k, x) = 1 - P(k, x).
inline double reg_upper_gamma(double k, double x, const SeriesControl& ctl = {}) {
    detail::require_finite(k, "reg_upper_gamma");
    detail::require_finite(x, "reg_upper_gamma");
    ctl.validate();
    if (!(k > 0.0)) throw DomainError("reg_upper_gamma: requires k > 0");
    if (x < 0.0) throw DomainError("reg_upper_gamma: requires x >= 0");
    if (x == 0.0) return 1.0;
    const double lpre = k * std::log(x) - x - std::lgamma(k);
    if (x < k + 1.0) {
        double ap = k, del = 1.0 / k, sum = del;
        for (int n = 0; n < ctl.max_terms; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * detail::kEps)
                return std::max(0.0, 1.0 - sum * std::exp(lpre));
        }
        throw NumericError("reg_upper_gamma: series did not converge");
    }
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - k, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= ctl.max_terms; ++i) {
        const double an = -i * (i - k);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < detail::kEps) return std::exp(lpre) * h;
    }
    throw NumericError("reg_upper_gamma: continued fraction did not converge");
}

/// Generalized Marcum-Q function Q_nu(a, b) of real order nu > 0.
///
/// Canonical series of regularized upper incomplete gamma terms weighted by
/// Poisson masses in the noncentrality a^2/2; all terms are positive, so the
/// truncation error is bounded by the remaining Poisson tail mass.
inline double marcum_q(double nu, double a, double b, const SeriesControl& ctl = {}) {
    detail::require_finite(nu, "marcum_q");
    detail::require_finite(a, "marcum_q");
    detail::require_finite(b, "marcum_q");
    ctl.validate();
    if (!(nu > 0.0)) throw DomainError("marcum_q: requires nu > 0");
    if (a < 0.0 || b < 0.0) throw DomainError("marcum_q: requires a, b >= 0");
    const double lam = 0.5 * a * a;
    const double y = 0.5 * b * b;
    if (y == 0.0) return 1.0;

    double qk = reg_upper_gamma(nu, y, ctl);       // Q(nu, y)
    double tk = std::exp(nu * std::log(y) - y - std::lgamma(nu + 1.0));
    double pk = std::exp(-lam);
    double cum = pk;
    double sum = pk * qk;
    for (int k = 1; k <= ctl.max_terms; ++k) {
        const double tail = 1.0 - cum;
        // all terms are positive and bounded by 1, so the remaining Poisson
        // mass bounds the truncation error; 4 eps is the floor reachable in
        // double once the cumulative saturates
        if (tail <= std::max(ctl.rel_tol * sum, 4.0 * detail::kEps) && k > lam) break;
        if (k == ctl.max_terms)
            throw NumericError("marcum_q: series did not converge within max_terms");
        qk += tk;                    // Q(nu+k, y) from Q(nu+k-1, y)
        tk *= y / (nu + k);
        pk *= lam / k;
        cum += pk;
        sum += pk * std::min(qk, 1.0);
    }
    return std::min(1.0, std::max(0.0, sum));
}

/// Scaled modified Bessel function of the second kind, e^x K_nu(x), x > 0.
/// The order may be any real number; K_{-nu} = K_nu is used.
inline double bessel_k_scaled(double nu, double x) {
    detail::require_finite(nu, "bessel_k");
    detail::require_finite(x, "bessel_k");
    if (!(x > 0.0)) throw DomainError("bessel_k: requires x > 0");
    nu = std::fabs(nu);
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;  // in [-0.5, 0.5]
    double kmu, kmu1;
    detail::bessel_k_scaled_pair(mu, x, kmu, kmu1);
    double km = kmu, kp = kmu1;
    for (int i = 1; i <= nl; ++i) {
        const double knext = km + 2.0 * (mu + i) / x * kp;
        km = kp;
        kp = knext;
    }
    return km;
}

/// Modified Bessel function of the second kind K_nu(x), x > 0, real order.
inline double bessel_k(double nu, double x) {
    return bessel_k_scaled(nu, x) * std::exp(-x);
}

namespace detail {

inline void check_1f1_domain(double a, double b, double z) {
    require_finite(a, "kummer_1f1");
    require_finite(b, "kummer_1f1");
    require_finite(z, "kummer_1f1");
    if (b <= 0.0 && b == std::floor(b))
        throw DomainError("kummer_1f1: b must not be a nonpositive integer");
}

// Direct Taylor series with compensated summation; caller has arranged z >= 0
// when cancellation matters.
inline double kummer_series(double a, double b, double z, const SeriesControl& ctl) {
    double term = 1.0, sum = 1.0, comp = 0.0;
    int quiet = 0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        term *= (a + j) / (b + j) * z / (j + 1);
        const double yk = term - comp;
        const double t = sum + yk;
        comp = (t - sum) - yk;
        sum = t;
        if (std::fabs(term) <= std::fabs(sum) * kEps) {
            if (++quiet >= 2 && j >= std::fabs(z)) return sum;
        } else {
            quiet = 0;
        }
        if (term == 0.0) return sum;  // terminating polynomial case
    }
    throw NumericError("kummer_1f1: series did not converge within max_terms");
}

// Series for d/da 1F1(a; b; z); u tracks the function terms, w their
// a-derivatives through the product rule on the Pochhammer factors.
inline double kummer_series_da(double a, double b, double z, const SeriesControl& ctl) {
    double u = 1.0, w = 0.0, sum_w = 0.0, sum_u = 1.0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        const double r = z / ((b + j) * (j + 1));
        w = w * (a + j) * r + u * r;
        u = u * (a + j) * r;
        sum_w += w;
        sum_u += u;
        const double scale = std::fabs(sum_w) + std::fabs(sum_u) + 1.0;
        if (std::fabs(w) <= scale * kEps && std::fabs(u) <= scale * kEps &&
            j >= std::fabs(z))
            return sum_w;
    }
    throw NumericError("kummer_1f1_da: series did not converge within max_terms");
}

}  // namespace detail

/// Confluent hypergeometric function of the first kind 1F1(a; b; z).
/// Negative z is routed through the Kummer transform to avoid cancellation.
inline double kummer_1f1(double a, double b, double z, const SeriesControl& ctl = {}) {
    detail::check_1f1_domain(a, b, z);
    ctl.validate();
    if (z == 0.0 || a == 0.0) return 1.0;
    if (a == b) return std::exp(z);
    if (z < 0.0) return std::exp(z) * detail::kummer_series(b - a, b, -z, ctl);
    return detail::kummer_series(a, b, z, ctl);
}

/// Derivative of 1F1 with respect to the first parameter, d/da 1F1(a; b; z).
inline double kummer_1f1_da(double a, double b, double z, const SeriesControl& ctl = {}) {
    detail::check_1f1_domain(a, b, z);
    ctl.validate();
    if (z == 0.0) return 0.0;
    if (z < 0.0) return -std::exp(z) * detail::kummer_series_da(b - a, b, -z, ctl);
    return detail::kummer_series_da(a, b, z, ctl);
}

}  // namespace irsop
