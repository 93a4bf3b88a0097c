// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// kappa-mu and double (product) kappa-mu distributions: CDF, raw moments,
// log-moments, density series and seeded samplers.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "irsop/quadrature.hpp"
#include "irsop/rng.hpp"
#include "irsop/specfun.hpp"

namespace irsop {

/// One link's fading law. power is the mean squared envelope E[R^2].
struct KappaMuParams {
    double kappa;  // dominant-to-scattered power ratio, >= 0
    double mu;     // number of clusters, > 0, possibly non-integer
    double power;  // mean squared envelope, > 0

    void validate() const {
        detail::require_finite(kappa, "KappaMuParams.kappa");
        detail::require_finite(mu, "KappaMuParams.mu");
        detail::require_finite(power, "KappaMuParams.power");
        if (kappa < 0.0) throw DomainError("KappaMuParams: kappa must be >= 0");
        if (!(mu > 0.0)) throw DomainError("KappaMuParams: mu must be > 0");
        if (!(power > 0.0)) throw DomainError("KappaMuParams: power must be > 0");
    }
};

/// CDF of the kappa-mu envelope, 1 - Q_mu(sqrt(2 mu kappa), sqrt(2 mu (1+kappa)/power) r).
inline double km_cdf(double r, const KappaMuParams& p, const SeriesControl& ctl = {}) {
    p.validate();
    detail::require_finite(r, "km_cdf");
    if (r < 0.0) throw DomainError("km_cdf: envelope must be >= 0");
    if (r == 0.0) return 0.0;
    const double a = std::sqrt(2.0 * p.mu * p.kappa);
    const double b = std::sqrt(2.0 * p.mu * (1.0 + p.kappa) / p.power) * r;
    return 1.0 - marcum_q(p.mu, a, b, ctl);
}

/// Raw moment E[R^p] of the kappa-mu envelope.
/// The second moment is the power by construction and is returned exactly.
inline double km_moment(double p_order, const KappaMuParams& p, const SeriesControl& ctl = {}) {
    p.validate();
    detail::require_finite(p_order, "km_moment");
    if (!(p_order > 0.0)) throw DomainError("km_moment: order must be > 0");
    if (p_order == 2.0) return p.power;
    const double h = 0.5 * p_order;
    const double lg = h * std::log(p.power) + std::lgamma(p.mu + h) - std::lgamma(p.mu) -
                      h * std::log(p.mu * (1.0 + p.kappa)) - p.kappa * p.mu;
    if (lg > 700.0) throw NumericError("km_moment: Gamma overflow");
    return std::exp(lg) * kummer_1f1(p.mu + h, p.mu, p.kappa * p.mu, ctl);
}

/// E[log R] of the kappa-mu envelope in closed form (digamma plus the
/// parameter derivative of 1F1 at a = 0).
inline double km_log_moment(const KappaMuParams& p, const SeriesControl& ctl = {}) {
    p.validate();
    const double d1f1 =
        p.kappa == 0.0 ? 0.0 : kummer_1f1_da(0.0, p.mu, -p.kappa * p.mu, ctl);
    return -0.5 * (std::log(p.mu * (1.0 + p.kappa) / p.power) - digamma(p.mu) + d1f1);
}

/// Seeded kappa-mu envelope sampler.
///
/// When 2*mu is a positive integer the draw is the norm of 2*mu Gaussians
/// carrying the dominant power (exact construction). Otherwise an inverse-CDF
/// table on a uniform envelope grid is built once and interpolated per draw,
/// with a direct root-finding fallback beyond the table's 1 - 1e-13 quantile.
class KmSampler {
  public:
    explicit KmSampler(const KappaMuParams& p, const SeriesControl& ctl = {}) : p_(p) {
        p.validate();
        const double two_mu = 2.0 * p.mu;
        const double rounded = std::round(two_mu);
        if (rounded >= 1.0 && std::fabs(two_mu - rounded) < 1e-9) {
            ncomp_ = static_cast<int>(rounded);
            sigma_ = std::sqrt(p.power / (two_mu * (1.0 + p.kappa)));
            cmean_ = std::sqrt(p.power * p.kappa / (1.0 + p.kappa) / ncomp_);
        } else {
            ncomp_ = 0;
            build_table(ctl);
        }
    }

    bool gaussian_route() const { return ncomp_ > 0; }

    double draw(Xoshiro256pp& gen) const {
        if (ncomp_ > 0) {
            double s = 0.0;
            for (int i = 0; i < ncomp_; ++i) {
                const double z = sigma_ * gen.normal() + cmean_;
                s += z * z;
            }
            return std::sqrt(s);
        }
        return quantile(gen.uniform01());
    }

    /// Inverse CDF used by the non-integer-2mu route.
    double quantile(double u) const {
        if (u <= 0.0) return 0.0;
        if (u >= cdf_.back()) return solve_tail(u);
        const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        const std::size_t i = static_cast<std::size_t>(it - cdf_.begin()) - 1;
        const double f0 = cdf_[i], f1 = cdf_[i + 1];
        if (f1 <= f0) return rgrid_[i];
        const double t = (u - f0) / (f1 - f0);
        return rgrid_[i] + t * (rgrid_[i + 1] - rgrid_[i]);
    }

  private:
    void build_table(const SeriesControl& ctl) {
        double rmax = 3.0 * std::sqrt(p_.power * (1.0 + p_.kappa));
        for (int i = 0; i < 240 && km_cdf(rmax, p_, ctl) < 1.0 - 1e-13; ++i) rmax *= 1.5;
        constexpr std::size_t n = 4096;
        rgrid_.resize(n + 1);
        cdf_.resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            rgrid_[i] = rmax * static_cast<double>(i) / n;
            cdf_[i] = km_cdf(rgrid_[i], p_, ctl);
        }
        cdf_.front() = 0.0;
    }

    double solve_tail(double u) const {
        double lo = rgrid_.back(), hi = lo;
        double step = lo * 0.5 + 1.0;
        while (km_cdf(hi, p_) < u && step < 1e30) {
            hi += step;
            step *= 2.0;
        }
        for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (km_cdf(mid, p_) < u ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    KappaMuParams p_;
    int ncomp_ = 0;
    double sigma_ = 0.0, cmean_ = 0.0;
    std::vector<double> rgrid_, cdf_;
};

/// n i.i.d. kappa-mu envelope draws, deterministic for a fixed seed.
inline std::vector<double> km_sample(const KappaMuParams& p, std::size_t n,
                                     std::uint64_t seed, const SeriesControl& ctl = {}) {
    if (n < 1) throw DomainError("km_sample: n must be >= 1");
    KmSampler sampler(p, ctl);
    Xoshiro256pp gen(seed);
    std::vector<double> out(n);
    for (auto& v : out) v = sampler.draw(gen);
    return out;
}

/// Product kappa-mu channel: X = snr_scale * R_sr * R_rd.
struct DoubleKmParams {
    KappaMuParams sr;
    KappaMuParams rd;
    double snr_scale;  // deterministic scale folded into the product (> 0)

    void validate() const {
        sr.validate();
        rd.validate();
        detail::require_finite(snr_scale, "DoubleKmParams.snr_scale");
        if (!(snr_scale > 0.0)) throw DomainError("DoubleKmParams: snr_scale must be > 0");
    }
};

/// Bessel-series representation of the double kappa-mu density.
///
/// The (m, n) term set is truncated once at construction by the joint Poisson
/// masses pois_m(mu_sr kappa_sr) * pois_n(mu_rd kappa_rd); each term's integral
/// over the support equals exactly that mass, so the discarded tail bounds the
/// truncation error of any bounded-integrand quadrature against the density.
class DoubleKmSeries {
  public:
    DoubleKmSeries(const DoubleKmParams& p, const SeriesControl& ctl = {}) {
        p.validate();
        ctl.validate();
        const double a_sr = p.sr.mu * (1.0 + p.sr.kappa) / p.sr.power;
        const double a_rd = p.rd.mu * (1.0 + p.rd.kappa) / p.rd.power;
        c_ = std::sqrt(a_sr * a_rd) / p.snr_scale;
        musum_ = p.sr.mu + p.rd.mu;
        nu0_ = p.sr.mu - p.rd.mu;
        const double tail = 0.01 * ctl.rel_tol;
        const auto lm = poisson_log_masses(p.sr.mu * p.sr.kappa, tail, ctl.max_terms);
        const auto ln = poisson_log_masses(p.rd.mu * p.rd.kappa, tail, ctl.max_terms);
        mmax_ = static_cast<int>(lm.size()) - 1;
        nmax_ = static_cast<int>(ln.size()) - 1;
        const double pair_cut = std::log(tail) - 6.0;
        retained_mass_ = 0.0;
        double mass = 0.0;
        for (int m = 0; m <= mmax_; ++m) {
            for (int n = 0; n <= nmax_; ++n) {
                if (lm[m] + ln[n] < pair_cut) continue;
                Term t;
                t.log_coef = lm[m] + ln[n] - std::lgamma(p.sr.mu + m) -
                             std::lgamma(p.rd.mu + n);
                t.mn = m + n;
                t.j = m - n;
                terms_.push_back(t);
                mass += std::exp(lm[m] + ln[n]);
            }
        }
        retained_mass_ = mass;
        jlo_ = -nmax_;
        jhi_ = mmax_;
    }

    /// Density of X at x > 0.
    double pdf(double x) const {
        if (!(x > 0.0)) throw DomainError("double_km_pdf: requires x > 0");
        const double y = c_ * x;
        const double ly = std::log(y);
        std::vector<double> kv(static_cast<std::size_t>(jhi_ - jlo_ + 1));
        fill_bessel_lattice(y, kv);
        const double base = (musum_ - 1.0) * ly - 2.0 * y;
        double sum = 0.0;
        for (const Term& t : terms_) {
            const double e = t.log_coef + t.mn * ly + base;
            if (e < -745.0) continue;
            sum += std::exp(e) * kv[static_cast<std::size_t>(t.j - jlo_)];
        }
        return 4.0 * c_ * sum;
    }

    /// Envelope scale of the series argument (y = c x).
    double y_scale() const { return c_; }

    /// x beyond which the kernel is below exp(-60) of working scale.
    double x_cutoff() const {
        const double pmax = musum_ + mmax_ + nmax_ - 1.0;
        double y = 60.0;
        for (int i = 0; i < 80; ++i) y = 0.5 * (130.0 + pmax * std::log(y));
        return y / c_;
    }

    int terms_used() const { return static_cast<int>(terms_.size()); }
    double retained_mass() const { return retained_mass_; }

  private:
    struct Term {
        double log_coef;
        double mn;  // m + n
        int j;      // m - n
    };

    static std::vector<double> poisson_log_masses(double lam, double tail, int max_terms) {
        std::vector<double> out;
        if (lam == 0.0) {
            out.push_back(0.0);
            return out;
        }
        double lp = -lam, cum = 0.0;
        const double llam = std::log(lam);
        for (int m = 0; m < max_terms; ++m) {
            out.push_back(lp);
            cum += std::exp(lp);
            if (1.0 - cum < tail && m > lam) return out;
            lp += llam - std::log(m + 1.0);
        }
        throw NumericError("double_km_pdf: Poisson weight tail not reached after " +
                           std::to_string(max_terms) + " terms");
    }

    // Scaled K_{nu0 + j}(2y) for j in [jlo, jhi]. Orders are reduced by
    // K_{-nu} = K_nu to two interleaved ladders with fractional parts |f| and
    // 1 - |f|, each walked by the stable upward recurrence
    // K_{v+1} = K_{v-1} + (2v/z) K_v off a Temme/CF2 base pair.
    void fill_bessel_lattice(double y, std::vector<double>& kv) const {
        const double z = 2.0 * y;
        const int m0 = static_cast<int>(std::floor(nu0_ + 0.5));
        const double f = nu0_ - m0;  // in [-0.5, 0.5]
        const double af = std::fabs(f);
        const int qlo = m0 + jlo_, qhi = m0 + jhi_;
        // With qq = q for f >= 0 (qq = -q otherwise): |f + q| = af + qq when
        // qq >= 0, and (1 - af) + (-qq - 1) when qq <= -1.
        const int need_a = std::max(0, (f >= 0.0 ? qhi : -qlo));
        const int need_b = std::max(0, (f >= 0.0 ? -qlo : qhi));
        double ka0, ka1;
        detail::bessel_k_scaled_pair(af, z, ka0, ka1);  // (K_af, K_{af+1})
        std::vector<double> A(static_cast<std::size_t>(need_a) + 1);
        A[0] = ka0;
        if (need_a >= 1) {
            A[1] = ka1;
            double km = ka0, kp = ka1;
            for (int i = 2; i <= need_a; ++i) {
                const double kn = km + 2.0 * (af + i - 1) / z * kp;
                km = kp;
                kp = kn;
                A[static_cast<std::size_t>(i)] = kn;
            }
        }
        std::vector<double> B;
        if (need_b >= 1) {
            double kb0, kb1;
            detail::bessel_k_scaled_pair(-af, z, kb0, kb1);  // (K_af, K_{1-af})
            B.resize(static_cast<std::size_t>(need_b));
            B[0] = kb1;
            double km = kb0, kp = kb1;
            for (int i = 1; i < need_b; ++i) {
                const double kn = km + 2.0 * ((1.0 - af) + i - 1) / z * kp;
                km = kp;
                kp = kn;
                B[static_cast<std::size_t>(i)] = kn;
            }
        }
        for (int j = jlo_; j <= jhi_; ++j) {
            const int qq = (f >= 0.0 ? m0 + j : -(m0 + j));
            kv[static_cast<std::size_t>(j - jlo_)] =
                qq >= 0 ? A[static_cast<std::size_t>(qq)]
                        : B[static_cast<std::size_t>(-qq - 1)];
        }
    }

    std::vector<Term> terms_;
    double c_ = 0.0, musum_ = 0.0, nu0_ = 0.0;
    double retained_mass_ = 0.0;
    int mmax_ = 0, nmax_ = 0, jlo_ = 0, jhi_ = 0;
};

struct DoubleKmPdfValue {
    double density;
    int terms_used;
};

/// Density of the double kappa-mu variable at x, with the series size used.
inline DoubleKmPdfValue double_km_pdf(double x, const DoubleKmParams& p,
                                      const SeriesControl& ctl = {}) {
    DoubleKmSeries series(p, ctl);
    return {series.pdf(x), series.terms_used()};
}

/// Mean of the product variable: the dimension-reduction constant of the
/// univariate method, built from Pochhammer and 1F1 factors per link.
inline double double_km_mean(const DoubleKmParams& p, const SeriesControl& ctl = {}) {
    p.validate();
    auto factor = [&](const KappaMuParams& l) {
        const double a = l.mu * (1.0 + l.kappa) / l.power;
        return pochhammer(l.mu, 0.5) / std::sqrt(a) *
               kummer_1f1(-0.5, l.mu, -l.kappa * l.mu, ctl);
    };
    return p.snr_scale * factor(p.sr) * factor(p.rd);
}

/// E[log X] of the product variable (exact closed form).
inline double double_km_log_mean(const DoubleKmParams& p, const SeriesControl& ctl = {}) {
    p.validate();
    return std::log(p.snr_scale) + km_log_moment(p.sr, ctl) + km_log_moment(p.rd, ctl);
}

}  // namespace irsop
