// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Node geometry and path-loss derivation of the per-link mean powers.

#pragma once

#include "irsop/fading.hpp"

namespace irsop {

/// S at (0,0), D at (sd_distance,0), IRS (or relay) at (irs_d, irs_h).
struct GeometryConfig {
    double sd_distance = 90.0;
    double irs_d = 30.0;
    double irs_h = 10.0;
    double beta = 4.0;  // path-loss exponent

    void validate() const {
        detail::require_finite(sd_distance, "GeometryConfig.sd_distance");
        detail::require_finite(irs_d, "GeometryConfig.irs_d");
        detail::require_finite(irs_h, "GeometryConfig.irs_h");
        detail::require_finite(beta, "GeometryConfig.beta");
        if (!(sd_distance > 0.0))
            throw DomainError("GeometryConfig: sd_distance must be > 0");
        if (irs_d < 0.0 || irs_d > sd_distance)
            throw DomainError("GeometryConfig: irs_d must lie in [0, sd_distance]");
        if (!(irs_h > 0.0)) throw DomainError("GeometryConfig: irs_h must be > 0");
        if (!(beta > 0.0)) throw DomainError("GeometryConfig: beta must be > 0");
    }
};

/// Fading law of a link without its power (power comes from the geometry).
struct LinkFadingShape {
    double kappa;
    double mu;
};

struct DerivedLinks {
    KappaMuParams sd;
    KappaMuParams sr;
    KappaMuParams rd;
    double d_sd, d_sr, d_rd;
};

/// Mean powers d^-beta from node distances; d_sr = sqrt(d^2 + h^2),
/// d_rd = sqrt((sd_distance - d)^2 + h^2), d_sd = sd_distance.
inline DerivedLinks derive_links(const GeometryConfig& g, const LinkFadingShape& sd,
                                 const LinkFadingShape& sr, const LinkFadingShape& rd) {
    g.validate();
    DerivedLinks out;
    out.d_sd = g.sd_distance;
    out.d_sr = std::hypot(g.irs_d, g.irs_h);
    out.d_rd = std::hypot(g.sd_distance - g.irs_d, g.irs_h);
    out.sd = {sd.kappa, sd.mu, std::pow(out.d_sd, -g.beta)};
    out.sr = {sr.kappa, sr.mu, std::pow(out.d_sr, -g.beta)};
    out.rd = {rd.kappa, rd.mu, std::pow(out.d_rd, -g.beta)};
    out.sd.validate();
    out.sr.validate();
    out.rd.validate();
    return out;
}

}  // namespace irsop
