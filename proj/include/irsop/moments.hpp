// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Closed-form first and second moments of the received SNR for the general,
// no-phase-error, no-SD-link and combined variants, plus the quantization
// factors of the b-bit phase error.

#pragma once

#include <cmath>
#include <optional>

#include "irsop/fading.hpp"

namespace irsop {

/// Number of phase quantization bits; perfect alignment is a dedicated state
/// rather than a large bit count.
class QuantBits {
  public:
    static QuantBits finite(int b) {
        if (b < 1) throw DomainError("QuantBits: bits must be >= 1");
        return QuantBits(b, false);
    }
    static QuantBits infinite() { return QuantBits(0, true); }

    bool is_infinite() const { return inf_; }
    int bits() const {
        if (inf_) throw DomainError("QuantBits: infinite state has no bit count");
        return bits_;
    }
    /// Half-width of the residual phase error support, pi / 2^b (0 when infinite).
    double phase_half_width() const {
        constexpr double pi = 3.141592653589793238462643383279502884;
        return inf_ ? 0.0 : pi * std::exp2(static_cast<double>(-bits_));
    }
    bool operator==(const QuantBits& o) const {
        return inf_ == o.inf_ && (inf_ || bits_ == o.bits_);
    }

  private:
    QuantBits(int b, bool inf) : bits_(b), inf_(inf) {}
    int bits_;
    bool inf_;
};

/// Quantization moments s = E[cos Phi] and p with E[cos^2 Phi] = (1+p)/2.
struct PhaseFactors {
    double s;
    double p;
    QuantBits bits;
};

inline PhaseFactors phase_factors(QuantBits bits) {
    if (bits.is_infinite()) return {1.0, 1.0, bits};
    const double w = bits.phase_half_width();  // pi / 2^b
    if (w == 0.0) return {1.0, 1.0, bits};     // 2^-b underflowed; exact limit
    const double s = std::sin(w) / w;
    const double p = bits.bits() == 1 ? 0.0 : std::sin(2.0 * w) / (2.0 * w);
    return {s, p, bits};
}

/// Full system instance: geometry-derived link laws plus the IRS/system knobs.
struct Scenario {
    int n_elements;                    // N >= 0 (0 only as an SD-only degenerate)
    QuantBits bits = QuantBits::infinite();
    double alpha = 1.0;                // IRS amplitude, (0, 1]
    double gamma_s = 1.0;              // transmit SNR, linear
    std::optional<KappaMuParams> sd;   // absent = SD link in permanent outage
    KappaMuParams sr;
    KappaMuParams rd;

    void validate() const {
        if (n_elements < 0) throw DomainError("Scenario: n_elements must be >= 0");
        detail::require_finite(alpha, "Scenario.alpha");
        detail::require_finite(gamma_s, "Scenario.gamma_s");
        if (!(alpha > 0.0) || alpha > 1.0)
            throw DomainError("Scenario: alpha must lie in (0, 1]");
        if (!(gamma_s > 0.0)) throw DomainError("Scenario: gamma_s must be > 0");
        if (sd) sd->validate();
        sr.validate();
        rd.validate();
    }
};

/// First two moments of the received SNR (linear units).
struct SnrMoments {
    double m1;
    double m2;
};

namespace detail {

struct LinkMoments {
    double m1, m2, m3, m4;
};

inline LinkMoments link_moments(const KappaMuParams& p, const SeriesControl& ctl) {
    return {km_moment(1.0, p, ctl), km_moment(2.0, p, ctl), km_moment(3.0, p, ctl),
            km_moment(4.0, p, ctl)};
}

// Moment assembly from the A/B/C decomposition of the SNR. The E[B^2] slot
// carries (m1_sr m1_rd)^2, the form the term-by-term derivation yields and the
// one consistent with the N = 1 collapse and the Monte Carlo oracle.
inline SnrMoments assemble_moments(double n_d, double alpha, double gamma_s,
                                   const LinkMoments& sd, const LinkMoments& sr,
                                   const LinkMoments& rd, double s, double p) {
    const double N = n_d;
    const double a2 = alpha * alpha, a3 = a2 * alpha, a4 = a2 * a2;
    const double m1r = sr.m1, m2r = sr.m2, m3r = sr.m3, m4r = sr.m4;
    const double m1d = rd.m1, m2d = rd.m2, m3d = rd.m3, m4d = rd.m4;
    const double prod1 = m1r * m1d, prod2 = m2r * m2d, prod3 = m3r * m3d;
    const double ea = sd.m2 + N * a2 * prod2;
    const double eb = 2.0 * N * alpha * s * sd.m1 * prod1;
    const double ec = N * (N - 1) * a2 * s * s * prod1 * prod1;
    const double m1 = gamma_s * (ea + eb + ec);

    const double ea2 = sd.m4 + 2.0 * a2 * N * prod2 * sd.m2 + N * a4 * m4r * m4d +
                       N * (N - 1) * a4 * prod2 * prod2;
    const double eb2 = 4.0 * a2 * sd.m2 *
                       (N * prod2 * 0.5 * (1.0 + p) + N * (N - 1) * s * s * prod1 * prod1);
    const double ec2 =
        N * (N - 1) * a4 *
        (2.0 * (N - 2) * prod2 * s * s * (1.0 + p) * prod1 * prod1 +
         prod2 * prod2 * (1.0 + p * p) +
         s * s * s * s * (N - 2) * (N - 3) * prod1 * prod1 * prod1 * prod1);
    const double eab = 2.0 * N * alpha * s * sd.m3 * prod1 +
                       2.0 * a3 * N * s * sd.m1 * prod3 +
                       2.0 * a3 * s * sd.m1 * prod1 * prod2 * N * (N - 1);
    const double ebc =
        2.0 * a3 * sd.m1 * prod1 * prod1 * prod1 * N * (N - 1) * (N - 2) * s * s * s +
        2.0 * a3 * s * sd.m1 * prod2 * prod1 * N * (N - 1) * (1.0 + p);
    const double eac = sd.m2 * a2 * prod1 * prod1 * N * (N - 1) * s * s +
                       2.0 * a4 * prod3 * prod1 * N * (N - 1) * s * s +
                       a4 * prod1 * prod1 * prod2 * N * (N - 1) * (N - 2) * s * s;
    const double m2 =
        gamma_s * gamma_s * (ea2 + eb2 + ec2 + 2.0 * (eab + ebc + eac));
    return {m1, m2};
}

}  // namespace detail

/// Moments of the SNR with SD link and b-bit quantized phases.
inline SnrMoments snr_moments_general(const Scenario& sc, const SeriesControl& ctl = {}) {
    sc.validate();
    if (!sc.sd) throw DomainError("snr_moments_general: SD link required");
    if (sc.n_elements < 1) throw DomainError("snr_moments_general: requires N >= 1");
    const PhaseFactors pf = phase_factors(sc.bits);
    return detail::assemble_moments(sc.n_elements, sc.alpha, sc.gamma_s,
                                    detail::link_moments(*sc.sd, ctl),
                                    detail::link_moments(sc.sr, ctl),
                                    detail::link_moments(sc.rd, ctl), pf.s, pf.p);
}

/// Moments with SD link and perfect phase alignment (s = p = 1).
inline SnrMoments snr_moments_no_phase(const Scenario& sc, const SeriesControl& ctl = {}) {
    sc.validate();
    if (!sc.sd) throw DomainError("snr_moments_no_phase: SD link required");
    if (sc.n_elements < 1) throw DomainError("snr_moments_no_phase: requires N >= 1");
    return detail::assemble_moments(sc.n_elements, sc.alpha, sc.gamma_s,
                                    detail::link_moments(*sc.sd, ctl),
                                    detail::link_moments(sc.sr, ctl),
                                    detail::link_moments(sc.rd, ctl), 1.0, 1.0);
}

/// Moments when the SD link is in permanent outage (quantized phases).
inline SnrMoments snr_moments_no_sd(const Scenario& sc, const SeriesControl& ctl = {}) {
    sc.validate();
    if (sc.sd) throw DomainError("snr_moments_no_sd: SD link must be absent");
    if (sc.n_elements < 1) throw DomainError("snr_moments_no_sd: requires N >= 1");
    const PhaseFactors pf = phase_factors(sc.bits);
    const auto sr = detail::link_moments(sc.sr, ctl);
    const auto rd = detail::link_moments(sc.rd, ctl);
    const double N = sc.n_elements;
    const double a2 = sc.alpha * sc.alpha, a4 = a2 * a2;
    const double s = pf.s, p = pf.p;
    const double prod1 = sr.m1 * rd.m1, prod2 = sr.m2 * rd.m2, prod3 = sr.m3 * rd.m3;
    const double m1 = sc.gamma_s * N * a2 * (prod2 + (N - 1) * prod1 * prod1 * s * s);
    const double m2 =
        sc.gamma_s * sc.gamma_s * N * a4 *
        (sr.m4 * rd.m4 + (N - 1) * prod2 * prod2 +
         (N - 1) * (2.0 * (N - 2) * prod2 * s * s * (1.0 + p) * prod1 * prod1 +
                    prod2 * prod2 * (1.0 + p * p) +
                    s * s * s * s * (N - 2) * (N - 3) * prod1 * prod1 * prod1 * prod1) +
         4.0 * (N - 1) * prod3 * prod1 * s * s +
         2.0 * (N - 1) * (N - 2) * prod1 * prod1 * prod2 * s * s);
    return {m1, m2};
}

/// Moments without SD link and with perfect phase alignment.
inline SnrMoments snr_moments_no_sd_no_phase(const Scenario& sc,
                                             const SeriesControl& ctl = {}) {
    sc.validate();
    if (sc.sd) throw DomainError("snr_moments_no_sd_no_phase: SD link must be absent");
    if (sc.n_elements < 1)
        throw DomainError("snr_moments_no_sd_no_phase: requires N >= 1");
    const auto sr = detail::link_moments(sc.sr, ctl);
    const auto rd = detail::link_moments(sc.rd, ctl);
    const double N = sc.n_elements;
    const double a2 = sc.alpha * sc.alpha, a4 = a2 * a2;
    const double prod1 = sr.m1 * rd.m1, prod2 = sr.m2 * rd.m2, prod3 = sr.m3 * rd.m3;
    const double m1 = sc.gamma_s * N * a2 * (prod2 + (N - 1) * prod1 * prod1);
    const double m2 =
        sc.gamma_s * sc.gamma_s * N * a4 *
        (sr.m4 * rd.m4 + (N - 1) * prod2 * prod2 +
         (N - 1) * (4.0 * (N - 2) * prod2 * prod1 * prod1 + 2.0 * prod2 * prod2 +
                    (N - 2) * (N - 3) * prod1 * prod1 * prod1 * prod1) +
         4.0 * (N - 1) * prod3 * prod1 +
         2.0 * (N - 1) * (N - 2) * prod1 * prod1 * prod2);
    return {m1, m2};
}

/// Dispatch on the scenario's SD/bits state.
inline SnrMoments snr_moments(const Scenario& sc, const SeriesControl& ctl = {}) {
    if (sc.sd)
        return sc.bits.is_infinite() ? snr_moments_no_phase(sc, ctl)
                                     : snr_moments_general(sc, ctl);
    return sc.bits.is_infinite() ? snr_moments_no_sd_no_phase(sc, ctl)
                                 : snr_moments_no_sd(sc, ctl);
}

}  // namespace irsop
