// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Outage probability solvers: exact small-N quadrature, univariate dimension
// reduction (general, no-phase, Rayleigh and Nakagami fast paths) and the two
// Gamma fits (moment matching, KL divergence minimization).

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "irsop/moments.hpp"
#include "irsop/quadrature.hpp"

namespace irsop {

struct OutageQuery {
    double threshold;  // linear SNR

    void validate() const {
        detail::require_finite(threshold, "OutageQuery.threshold");
        if (!(threshold > 0.0)) throw DomainError("OutageQuery: threshold must be > 0");
    }
    static OutageQuery from_db(double db) { return {std::pow(10.0, db / 10.0)}; }
};

struct OutageDiagnostics {
    double pre_clamp = std::numeric_limits<double>::quiet_NaN();
    double quad_error = 0.0;
    int quad_subdivisions = 0;
    int series_terms = 0;
};

struct OutageValue {
    double probability;
    OutageDiagnostics diag;
};

/// Gamma(k, theta) fit of the SNR distribution.
struct GammaFit {
    enum class Method { moment_match, kl };
    double shape;
    double scale;
    Method method;
};

namespace detail {

// Conditional SD-link CDF factor 1 - Q_mu(...) gated by its unit step.
// t is in sqrt(linear SNR) units; the SD envelope threshold is t / sqrt(gs).
struct SdCdf {
    const KappaMuParams* sd;
    double inv_sqrt_gs;
    const SeriesControl* ctl;

    double operator()(double t) const {
        if (t <= 0.0) return 0.0;
        return km_cdf(t * inv_sqrt_gs, *sd, *ctl);
    }
};

// Shared assembly of the three dimension-reduction parts. fsd must be the
// gated conditional CDF, kernel the double kappa-mu density, mu_c its mean.
template <class Fsd, class Kernel>
OutageValue univariate_core(int n, QuantBits bits, double alpha, double gamma,
                            double mu_c, double x_cutoff, Fsd&& fsd, Kernel&& kernel,
                            const QuadratureControl& qctl, int series_terms) {
    const double sq = std::sqrt(gamma);
    const double shift = (n - 1) * alpha * mu_c;
    const double t1 = sq - shift;
    OutageDiagnostics diag;
    diag.series_terms = series_terms;

    double part1 = 0.0;
    if (t1 > 0.0) {
        const double xup = std::min(t1, x_cutoff);
        const auto r = integrate(
            [&](double x) { return fsd(sq - x - shift) * kernel(x); }, 0.0, xup, qctl);
        part1 = n * r.value;
        diag.quad_error += n * r.error;
        diag.quad_subdivisions += r.subdivisions;
    }

    const double c_arg = sq - n * alpha * mu_c;
    const double cterm = fsd(c_arg);

    double part2;
    const double w = bits.phase_half_width();
    if (bits.is_infinite() || w == 0.0) {
        part2 = n * cterm;  // collapses to the no-phase corollary
    } else {
        const auto r2 = integrate(
            [&](double phi) {
                const double u = alpha * std::sin(phi) * mu_c;
                const double t2 = gamma - u * u;
                if (t2 < 0.0) return 0.0;
                return fsd(std::sqrt(t2) - alpha * std::cos(phi) * mu_c - shift);
            },
            0.0, w, qctl);  // integrand even in phi
        part2 = n * r2.value / w;
        diag.quad_error += n * r2.error / w;
        diag.quad_subdivisions += r2.subdivisions;
    }

    const double pre = part1 + part2 - (2.0 * n - 1.0) * cterm;
    diag.pre_clamp = pre;
    return {std::clamp(pre, 0.0, 1.0), diag};
}

}  // namespace detail

/// Univariate dimension-reduction approximation of the OP (general kappa-mu,
/// finite or infinite quantization bits). Requires the SD link.
inline OutageValue op_univariate(const Scenario& sc, const OutageQuery& q,
                                 const QuadratureControl& qctl = {},
                                 const SeriesControl& sctl = {}) {
    sc.validate();
    q.validate();
    if (!sc.sd) throw DomainError("op_univariate: SD link required");
    if (sc.n_elements < 1) throw DomainError("op_univariate: requires N >= 1");
    const DoubleKmParams dk{sc.sr, sc.rd, std::sqrt(sc.gamma_s)};
    const DoubleKmSeries series(dk, sctl);
    const double mu_c = double_km_mean(dk, sctl);
    const detail::SdCdf fsd{&*sc.sd, 1.0 / std::sqrt(sc.gamma_s), &sctl};
    return detail::univariate_core(
        sc.n_elements, sc.bits, sc.alpha, q.threshold, mu_c, series.x_cutoff(), fsd,
        [&](double x) { return series.pdf(x); }, qctl, series.terms_used());
}

/// Perfect-phase-alignment corollary of the univariate approximation.
inline OutageValue op_univariate_no_phase(const Scenario& sc, const OutageQuery& q,
                                          const QuadratureControl& qctl = {},
                                          const SeriesControl& sctl = {}) {
    Scenario s = sc;
    s.bits = QuantBits::infinite();
    return op_univariate(s, q, qctl, sctl);
}

/// Rayleigh fast path (all links kappa = 0, mu = 1): exponential conditional
/// CDF and a single x K_0 kernel term.
inline OutageValue op_univariate_rayleigh(const Scenario& sc, const OutageQuery& q,
                                          const QuadratureControl& qctl = {},
                                          const SeriesControl& sctl = {}) {
    sc.validate();
    q.validate();
    if (!sc.sd) throw DomainError("op_univariate_rayleigh: SD link required");
    if (sc.n_elements < 1) throw DomainError("op_univariate_rayleigh: requires N >= 1");
    auto rayleigh = [](const KappaMuParams& p) {
        return p.kappa == 0.0 && p.mu == 1.0;
    };
    if (!rayleigh(*sc.sd) || !rayleigh(sc.sr) || !rayleigh(sc.rd))
        throw DomainError("op_univariate_rayleigh: all links must have kappa=0, mu=1");
    (void)sctl;
    constexpr double pi = 3.141592653589793238462643383279502884;
    const double sqgs = std::sqrt(sc.gamma_s);
    const double c = 1.0 / (sqgs * std::sqrt(sc.sr.power * sc.rd.power));
    const double mu_c = pi * sqgs * std::sqrt(sc.sr.power * sc.rd.power) / 4.0;
    const double inv_omega_sd = 1.0 / (sc.gamma_s * sc.sd->power);
    auto fsd = [&](double t) {
        return t <= 0.0 ? 0.0 : -std::expm1(-t * t * inv_omega_sd);
    };
    auto kernel = [&](double x) {
        const double y = c * x;
        return 4.0 * c * y * bessel_k_scaled(0.0, 2.0 * y) * std::exp(-2.0 * y);
    };
    const double x_cut = 40.0 / c;
    return detail::univariate_core(sc.n_elements, sc.bits, sc.alpha, q.threshold, mu_c,
                                   x_cut, fsd, kernel, qctl, 1);
}

/// Nakagami-m fast path (all links kappa = 0, mu = m): regularized-Gamma
/// conditional CDF and a single-term Bessel kernel.
inline OutageValue op_univariate_nakagami(const Scenario& sc, const OutageQuery& q,
                                          const QuadratureControl& qctl = {},
                                          const SeriesControl& sctl = {}) {
    sc.validate();
    q.validate();
    if (!sc.sd) throw DomainError("op_univariate_nakagami: SD link required");
    if (sc.n_elements < 1) throw DomainError("op_univariate_nakagami: requires N >= 1");
    if (sc.sd->kappa != 0.0 || sc.sr.kappa != 0.0 || sc.rd.kappa != 0.0)
        throw DomainError("op_univariate_nakagami: all links must have kappa=0");
    const double m_sd = sc.sd->mu, m_sr = sc.sr.mu, m_rd = sc.rd.mu;
    const double a_sr = m_sr / sc.sr.power, a_rd = m_rd / sc.rd.power;
    const double c = std::sqrt(a_sr * a_rd / sc.gamma_s);
    const double mu_c =
        std::sqrt(sc.gamma_s) * pochhammer(m_sr, 0.5) * pochhammer(m_rd, 0.5) /
        std::sqrt(a_sr * a_rd);
    const double sd_scale = m_sd / (sc.gamma_s * sc.sd->power);
    auto fsd = [&](double t) {
        return t <= 0.0 ? 0.0 : reg_lower_gamma(m_sd, sd_scale * t * t, sctl);
    };
    const double log_norm = -std::lgamma(m_sr) - std::lgamma(m_rd);
    const double pexp = m_sr + m_rd - 1.0;
    auto kernel = [&](double x) {
        const double y = c * x;
        const double e = log_norm + pexp * std::log(y) - 2.0 * y;
        if (e < -745.0) return 0.0;
        return 4.0 * c * std::exp(e) * bessel_k_scaled(m_sr - m_rd, 2.0 * y);
    };
    double ycut = 60.0;
    for (int i = 0; i < 80; ++i) ycut = 0.5 * (130.0 + pexp * std::log(ycut));
    return detail::univariate_core(sc.n_elements, sc.bits, sc.alpha, q.threshold, mu_c,
                                   ycut / c, fsd, kernel, qctl, 1);
}

/// Exact OP by nested adaptive quadrature of the density-product integrand.
/// Practical for N <= 2 (up to 2N-fold integration).
inline OutageValue op_exact_small_n(const Scenario& sc, const OutageQuery& q,
                                    const QuadratureControl& qctl = {1e-8, 1e-6, 400},
                                    const SeriesControl& sctl = {}) {
    sc.validate();
    q.validate();
    if (!sc.sd) throw DomainError("op_exact_small_n: SD link required");
    if (sc.n_elements < 1 || sc.n_elements > 2)
        throw DomainError("op_exact_small_n: requires N in {1, 2}");
    const double gamma = q.threshold;
    const double sq = std::sqrt(gamma);
    const double alpha = sc.alpha;
    const DoubleKmParams dk{sc.sr, sc.rd, std::sqrt(sc.gamma_s)};
    const DoubleKmSeries series(dk, sctl);
    const detail::SdCdf fsd{&*sc.sd, 1.0 / std::sqrt(sc.gamma_s), &sctl};
    const double xcut = series.x_cutoff();
    const double w = sc.bits.phase_half_width();

    // per-level controls derived from the caller's: inner levels tighter, with
    // a light pre-split (the nesting multiplies evaluation counts)
    auto level = [&](double f) {
        QuadratureControl c = qctl;
        c.rel_tol *= f;
        c.abs_tol *= f;
        c.initial_segments = 2;
        return c;
    };

    OutageDiagnostics diag;
    diag.series_terms = series.terms_used();

    if (sc.n_elements == 1) {
        auto body = [&](double x, double phi) {
            const double u = alpha * std::sin(phi) * x;
            const double t2 = gamma - u * u;
            if (t2 <= 0.0) return 0.0;
            return fsd(std::sqrt(t2) - alpha * std::cos(phi) * x);
        };
        QuadratureResult r;
        if (w == 0.0) {
            const double xlim = std::min(xcut, sq / alpha);
            r = integrate([&](double x) { return fsd(sq - alpha * x) * series.pdf(x); },
                          0.0, xlim, qctl);
        } else {
            r = integrate(
                [&](double x) {
                    const double px = series.pdf(x);
                    if (px == 0.0) return 0.0;
                    const auto inner = integrate([&](double phi) { return body(x, phi); },
                                                 0.0, w, level(0.1));
                    return px * inner.value / w;  // even in phi
                },
                0.0, xcut, qctl);
        }
        diag.quad_error = r.error;
        diag.quad_subdivisions = r.subdivisions;
        diag.pre_clamp = r.value;
        return {std::clamp(r.value, 0.0, 1.0), diag};
    }

    // N = 2: integrate x1, phi1, x2, phi2 with the phi pair restricted to the
    // half-domain phi1 >= 0 by the joint sign symmetry.
    auto body2 = [&](double x1, double phi1, double x2, double phi2) {
        const double u = alpha * (std::sin(phi1) * x1 + std::sin(phi2) * x2);
        const double t2 = gamma - u * u;
        if (t2 <= 0.0) return 0.0;
        const double v = alpha * (std::cos(phi1) * x1 + std::cos(phi2) * x2);
        return fsd(std::sqrt(t2) - v);
    };
    QuadratureResult r;
    if (w == 0.0) {
        r = integrate(
            [&](double x1) {
                const double p1 = series.pdf(x1);
                if (p1 == 0.0) return 0.0;
                const auto inner = integrate(
                    [&](double x2) {
                        return series.pdf(x2) * fsd(sq - alpha * (x1 + x2));
                    },
                    0.0, std::min(xcut, std::max(0.0, sq / alpha - x1)), level(0.3));
                return p1 * inner.value;
            },
            0.0, std::min(xcut, sq / alpha), qctl);
    } else {
        r = integrate(
            [&](double x1) {
                const double p1 = series.pdf(x1);
                if (p1 == 0.0) return 0.0;
                const auto lev1 = integrate(
                    [&](double phi1) {
                        const auto lev2 = integrate(
                            [&](double x2) {
                                const double p2 = series.pdf(x2);
                                if (p2 == 0.0) return 0.0;
                                const auto lev3 = integrate(
                                    [&](double phi2) {
                                        return body2(x1, phi1, x2, phi2);
                                    },
                                    -w, w, level(0.03));
                                return p2 * lev3.value / (2.0 * w);
                            },
                            0.0, xcut, level(0.1));
                        return lev2.value;
                    },
                    0.0, w, level(0.3));
                return p1 * lev1.value / w;  // half-domain doubled
            },
            0.0, xcut, qctl);
    }
    diag.quad_error = r.error;
    diag.quad_subdivisions = r.subdivisions;
    diag.pre_clamp = r.value;
    return {std::clamp(r.value, 0.0, 1.0), diag};
}

/// Gamma fit by matching the first two SNR moments.
inline GammaFit gamma_fit_moments(const SnrMoments& m) {
    detail::require_finite(m.m1, "gamma_fit_moments");
    detail::require_finite(m.m2, "gamma_fit_moments");
    if (!(m.m1 > 0.0) || !(m.m2 > m.m1 * m.m1))
        throw DomainError("gamma_fit_moments: requires m1 > 0 and m2 > m1^2");
    const double theta = (m.m2 - m.m1 * m.m1) / m.m1;
    return {m.m1 / theta, theta, GammaFit::Method::moment_match};
}

/// OP of a Gamma-fitted SNR: regularized lower incomplete gamma at gamma/theta.
inline double gamma_cdf_op(const GammaFit& f, const OutageQuery& q,
                           const SeriesControl& ctl = {}) {
    q.validate();
    if (!(f.shape > 0.0) || !(f.scale > 0.0))
        throw DomainError("gamma_cdf_op: shape and scale must be positive");
    return reg_lower_gamma(f.shape, q.threshold / f.scale, ctl);
}

/// The same CDF through the 1F1 route; the two forms cross-check each other.
inline double gamma_cdf_op_kummer(const GammaFit& f, const OutageQuery& q,
                                  const SeriesControl& ctl = {}) {
    q.validate();
    if (!(f.shape > 0.0) || !(f.scale > 0.0))
        throw DomainError("gamma_cdf_op_kummer: shape and scale must be positive");
    const double z = q.threshold / f.scale;
    const double lpre = f.shape * std::log(z) - std::lgamma(f.shape + 1.0);
    return std::exp(lpre) * kummer_1f1(f.shape, f.shape + 1.0, -z, ctl);
}

namespace detail {

// Solve psi(k) - log k = rhs (rhs < 0) on the bracket [1e-6, 1e9]; the left
// side is strictly increasing, so plain bisection is guaranteed.
inline double kl_shape_from_log_gap(double rhs) {
    if (!(rhs < 0.0))
        throw NumericError("gamma_fit_kl: log-moment gap must be negative");
    double lo = 1e-6, hi = 1e9;
    if (digamma(lo) - std::log(lo) > rhs) lo = 1e-12;  // extremely small shapes
    for (int i = 0; i < 400 && (hi - lo) > 1e-12 * std::max(1.0, lo); ++i) {
        const double mid = 0.5 * (lo + hi);
        (digamma(mid) - std::log(mid) < rhs ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Gamma fit by KL divergence minimization: matches E[SNR] and E[log SNR],
/// the latter from the second-order log expansion in the SNR moments.
inline GammaFit gamma_fit_kl(const SnrMoments& m) {
    detail::require_finite(m.m1, "gamma_fit_kl");
    detail::require_finite(m.m2, "gamma_fit_kl");
    if (!(m.m1 > 0.0) || !(m.m2 > m.m1 * m.m1))
        throw DomainError("gamma_fit_kl: requires m1 > 0 and m2 > m1^2");
    const double rhs = -0.5 * (m.m2 - m.m1 * m.m1) / (m.m1 * m.m1);
    const double k = detail::kl_shape_from_log_gap(rhs);
    return {k, m.m1 / k, GammaFit::Method::kl};
}

/// Gamma fit from exact mean and log-mean (no second-order approximation).
inline GammaFit gamma_fit_kl_exact(double mean, double log_mean) {
    detail::require_finite(mean, "gamma_fit_kl_exact");
    detail::require_finite(log_mean, "gamma_fit_kl_exact");
    if (!(mean > 0.0)) throw DomainError("gamma_fit_kl_exact: mean must be > 0");
    const double k = detail::kl_shape_from_log_gap(log_mean - std::log(mean));
    return {k, mean / k, GammaFit::Method::kl};
}

/// KL-fit OP for the no-SD-link, no-phase-error case: each per-element product
/// envelope is fitted as a Gamma variable from its exact mean and log-mean, so
/// the N-element sum is Gamma(N k, theta) and the OP is a single regularized
/// incomplete gamma evaluation.
inline OutageValue op_kl_no_sd_no_phase(const Scenario& sc, const OutageQuery& q,
                                        const SeriesControl& sctl = {}) {
    sc.validate();
    q.validate();
    if (sc.sd) throw DomainError("op_kl_no_sd_no_phase: SD link must be absent");
    if (!sc.bits.is_infinite())
        throw DomainError("op_kl_no_sd_no_phase: requires infinite quantization bits");
    if (sc.n_elements < 1) throw DomainError("op_kl_no_sd_no_phase: requires N >= 1");
    const DoubleKmParams dk{sc.sr, sc.rd, 1.0};
    const GammaFit per_elem =
        gamma_fit_kl_exact(double_km_mean(dk, sctl), double_km_log_mean(dk, sctl));
    const double env = std::sqrt(q.threshold / (sc.gamma_s * sc.alpha * sc.alpha));
    const double p = reg_lower_gamma(sc.n_elements * per_elem.shape,
                                     env / per_elem.scale, sctl);
    OutageDiagnostics diag;
    diag.pre_clamp = p;
    return {p, diag};
}

}  // namespace irsop
