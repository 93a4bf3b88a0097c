// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Comparison baselines: decode-and-forward relay and MISO maximal ratio
// transmission, both in kappa-mu fading.

#pragma once

#include "irsop/montecarlo.hpp"

namespace irsop {

/// DF relay system: S -> relay -> D links plus the direct SD link.
///
/// rate_matched selects the half-duplex threshold 2^{2R} - 1 at the rate
/// R = log2(1 + gamma), i.e. gamma (gamma + 2); this is the accounting under
/// which the relay runs at the same end-to-end rate as the one-shot systems
/// it is compared against. power_split scales the per-hop transmit SNR.
struct DfRelayScenario {
    KappaMuParams sd;
    KappaMuParams sr;
    KappaMuParams rd;
    double gamma_s;
    double power_split = 1.0;
    bool rate_matched = true;

    void validate() const {
        sd.validate();
        sr.validate();
        rd.validate();
        detail::require_finite(gamma_s, "DfRelayScenario.gamma_s");
        if (!(gamma_s > 0.0)) throw DomainError("DfRelayScenario: gamma_s must be > 0");
        if (!(power_split > 0.0))
            throw DomainError("DfRelayScenario: power_split must be > 0");
    }
};

/// Squared-envelope threshold the min{...} event is tested against.
inline double df_relay_threshold(const DfRelayScenario& s, const OutageQuery& q) {
    const double g = q.threshold;
    const double t = s.rate_matched ? g * (g + 2.0) : g;
    return t / (s.gamma_s * s.power_split);
}

/// Monte Carlo DF relay outage: P[min{|h_sr|^2, |h_sd|^2 + |h_rd|^2} < t].
inline double df_relay_op(const DfRelayScenario& s, const OutageQuery& q,
                          const McConfig& mc, unsigned threads = 0) {
    s.validate();
    q.validate();
    mc.validate();
    const double t = df_relay_threshold(s, q);
    KmSampler sd(s.sd), sr(s.sr), rd(s.rd);
    const std::uint64_t nchunks = (mc.samples + mc.batch - 1) / mc.batch;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> below{0};
    auto worker = [&]() {
        std::uint64_t local = 0;
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            Xoshiro256pp gen(mc.seed, c);
            const std::uint64_t lo = c * mc.batch;
            const std::uint64_t hi = std::min(mc.samples, lo + mc.batch);
            for (std::uint64_t i = lo; i < hi; ++i) {
                const double gsr = sr.draw(gen), gsd = sd.draw(gen), grd = rd.draw(gen);
                const double m = std::min(gsr * gsr, gsd * gsd + grd * grd);
                if (m < t) ++local;
            }
        }
        below.fetch_add(local);
    };
    unsigned nt = threads ? threads : std::thread::hardware_concurrency();
    nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(nchunks)));
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return static_cast<double>(below.load()) / static_cast<double>(mc.samples);
}

/// Sampled min{|h_sr|^2, |h_sd|^2 + |h_rd|^2} statistic, for evaluating many
/// thresholds against one simulation run.
inline EmpiricalCdf df_relay_min_samples(const DfRelayScenario& s, const McConfig& mc,
                                         unsigned threads = 0) {
    s.validate();
    mc.validate();
    KmSampler sd(s.sd), sr(s.sr), rd(s.rd);
    std::vector<double> out(mc.samples);
    const std::uint64_t nchunks = (mc.samples + mc.batch - 1) / mc.batch;
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            Xoshiro256pp gen(mc.seed, c);
            const std::uint64_t lo = c * mc.batch;
            const std::uint64_t hi = std::min(mc.samples, lo + mc.batch);
            for (std::uint64_t i = lo; i < hi; ++i) {
                const double gsr = sr.draw(gen), gsd = sd.draw(gen), grd = rd.draw(gen);
                out[i] = std::min(gsr * gsr, gsd * gsd + grd * grd);
            }
        }
    };
    unsigned nt = threads ? threads : std::thread::hardware_concurrency();
    nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(nchunks)));
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return EmpiricalCdf(std::move(out));
}

namespace detail {

// Density of the squared kappa-mu envelope as a Poisson mixture of Gamma
// densities (no Bessel evaluation needed).
inline double km_sq_pdf(double v, const KappaMuParams& p, const SeriesControl& ctl) {
    if (v <= 0.0) return 0.0;
    const double lam = p.mu * p.kappa;
    const double theta = p.power / (p.mu * (1.0 + p.kappa));
    const double lv = std::log(v), lth = std::log(theta);
    double lp = -lam, cum = 0.0, sum = 0.0;
    const double llam = lam > 0.0 ? std::log(lam) : 0.0;
    for (int k = 0; k < ctl.max_terms; ++k) {
        const double sh = p.mu + k;
        const double e = lp + (sh - 1.0) * lv - v / theta - std::lgamma(sh) - sh * lth;
        if (e > -745.0) sum += std::exp(e);
        cum += std::exp(lp);
        if (1.0 - cum < 0.01 * ctl.rel_tol && k > lam) return sum;
        if (lam == 0.0) return sum;
        lp += llam - std::log(k + 1.0);
    }
    throw NumericError("km_sq_pdf: Poisson mixture did not converge");
}

}  // namespace detail

/// Semi-analytic DF relay outage: 1 - (1 - F_sr(t)) (1 - F_sum(t)), where
/// F_sum is the CDF of |h_sd|^2 + |h_rd|^2 by one-dimensional convolution
/// quadrature (the endpoint singularity of the SD factor is flattened by a
/// power substitution).
inline double df_relay_op_analytic(const DfRelayScenario& s, const OutageQuery& q,
                                   const QuadratureControl& qctl = {},
                                   const SeriesControl& sctl = {}) {
    s.validate();
    q.validate();
    const double t = df_relay_threshold(s, q);
    const double f_sr = km_cdf(std::sqrt(t), s.sr, sctl);
    // F_sum(t) = ∫_0^t f_{sd^2}(u) F_{rd^2}(t-u) du with u = t z^pw
    const double pw = std::max(1.0, 2.0 / s.sd.mu);
    const auto r = integrate(
        [&](double z) {
            const double u = t * std::pow(z, pw);
            const double du = t * pw * std::pow(z, pw - 1.0);
            const double frd = km_cdf(std::sqrt(std::max(0.0, t - u)), s.rd, sctl);
            return detail::km_sq_pdf(u, s.sd, sctl) * frd * du;
        },
        0.0, 1.0, qctl);
    const double f_sum = std::clamp(r.value, 0.0, 1.0);
    return 1.0 - (1.0 - f_sr) * (1.0 - f_sum);
}

/// MISO MRT outage by the kappa-mu sum property: the squared norm of M i.i.d.
/// kappa-mu antennas is squared kappa-mu with (kappa, M mu) and power M t^2.
inline double miso_mrt_op(int m_antennas, const KappaMuParams& sd, double gamma_s,
                          const OutageQuery& q, const SeriesControl& ctl = {}) {
    if (m_antennas < 1) throw DomainError("miso_mrt_op: M must be >= 1");
    sd.validate();
    q.validate();
    if (!(gamma_s > 0.0)) throw DomainError("miso_mrt_op: gamma_s must be > 0");
    const KappaMuParams sum{sd.kappa, m_antennas * sd.mu, m_antennas * sd.power};
    return km_cdf(std::sqrt(q.threshold / gamma_s), sum, ctl);
}

/// Monte Carlo oracle for the MISO MRT outage (validates the sum property).
inline double miso_mrt_op_mc(int m_antennas, const KappaMuParams& sd, double gamma_s,
                             const OutageQuery& q, const McConfig& mc,
                             unsigned threads = 0) {
    if (m_antennas < 1) throw DomainError("miso_mrt_op_mc: M must be >= 1");
    sd.validate();
    q.validate();
    mc.validate();
    const double t = q.threshold / gamma_s;
    KmSampler ant(sd);
    const std::uint64_t nchunks = (mc.samples + mc.batch - 1) / mc.batch;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> below{0};
    auto worker = [&]() {
        std::uint64_t local = 0;
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            Xoshiro256pp gen(mc.seed, c);
            const std::uint64_t lo = c * mc.batch;
            const std::uint64_t hi = std::min(mc.samples, lo + mc.batch);
            for (std::uint64_t i = lo; i < hi; ++i) {
                double norm2 = 0.0;
                for (int a = 0; a < m_antennas; ++a) {
                    const double g = ant.draw(gen);
                    norm2 += g * g;
                }
                if (norm2 < t) ++local;
            }
        }
        below.fetch_add(local);
    };
    unsigned nt = threads ? threads : std::thread::hardware_concurrency();
    nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(nchunks)));
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return static_cast<double>(below.load()) / static_cast<double>(mc.samples);
}

}  // namespace irsop
