// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Monte Carlo oracle for the SNR model, empirical CDFs, the KS statistic and
// raw-sample persistence.

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstring>
#include <thread>
#include <vector>

#include "irsop/moments.hpp"
#include "irsop/outage.hpp"

namespace irsop {

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    std::uint64_t batch = 1u << 16;  // substream chunk size

    void validate() const {
        if (samples < 1) throw DomainError("McConfig: samples must be >= 1");
        if (batch < 1 || batch > samples)
            throw DomainError("McConfig: batch must lie in [1, samples]");
    }
};

/// Sorted sample set with right-continuous step-function evaluation.
class EmpiricalCdf {
  public:
    explicit EmpiricalCdf(std::vector<double> samples) : v_(std::move(samples)) {
        if (v_.empty()) throw DomainError("EmpiricalCdf: empty sample set");
        std::sort(v_.begin(), v_.end());
    }

    std::size_t size() const { return v_.size(); }
    const std::vector<double>& values() const { return v_; }

    /// F_obs(x) = P[X <= x].
    double operator()(double x) const {
        const auto it = std::upper_bound(v_.begin(), v_.end(), x);
        return static_cast<double>(it - v_.begin()) / static_cast<double>(v_.size());
    }

    /// Fraction of samples strictly below x.
    double fraction_below(double x) const {
        const auto it = std::lower_bound(v_.begin(), v_.end(), x);
        return static_cast<double>(it - v_.begin()) / static_cast<double>(v_.size());
    }

  private:
    std::vector<double> v_;
};

/// Simulate the received SNR per the quantized-phase model. Draw order per
/// sample: SD envelope (if present), then per element SR, RD, phase. The
/// sample vector is chunked into fixed substreams (seed, chunk index), so the
/// result is bit-identical regardless of thread count.
inline EmpiricalCdf simulate_snr(const Scenario& sc, const McConfig& mc,
                                 unsigned threads = 0) {
    sc.validate();
    mc.validate();
    const KmSampler* sd_sampler = nullptr;
    KmSampler sr_sampler(sc.sr), rd_sampler(sc.rd);
    std::optional<KmSampler> sd_storage;
    if (sc.sd) {
        sd_storage.emplace(*sc.sd);
        sd_sampler = &*sd_storage;
    }
    const double w = sc.bits.phase_half_width();
    const bool finite_bits = !sc.bits.is_infinite();
    const int n = sc.n_elements;
    const double alpha = sc.alpha;
    const double gs = sc.gamma_s;

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
                double re = sd_sampler ? sd_sampler->draw(gen) : 0.0;
                double im = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double pr =
                        alpha * sr_sampler.draw(gen) * rd_sampler.draw(gen);
                    if (finite_bits) {
                        const double phi = gen.uniform(-w, w);
                        re += pr * std::cos(phi);
                        im += pr * std::sin(phi);
                    } else {
                        re += pr;
                    }
                }
                out[i] = gs * (re * re + im * im);
            }
        }
    };
    unsigned nt = threads ? threads : std::thread::hardware_concurrency();
    nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(nchunks)));
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return EmpiricalCdf(std::move(out));
}

/// Empirical outage probability: fraction of samples strictly below the threshold.
inline double empirical_op(const EmpiricalCdf& cdf, const OutageQuery& q) {
    q.validate();
    return cdf.fraction_below(q.threshold);
}

/// KS acceptance threshold D_max = sqrt(-ln(tau/2) / (2 nu)).
inline double ks_threshold(std::uint64_t nu, double tau) {
    if (nu < 1) throw DomainError("ks_threshold: nu must be >= 1");
    if (!(tau > 0.0) || !(tau < 1.0)) throw DomainError("ks_threshold: tau in (0,1)");
    return std::sqrt(-std::log(tau / 2.0) / (2.0 * static_cast<double>(nu)));
}

struct KsResult {
    double d_ks;
    double d_max;
};

/// Supremum distance between a model CDF and the empirical CDF, evaluated with
/// both one-sided steps at every sample point.
template <class ModelCdf>
KsResult ks_statistic(ModelCdf&& model, const EmpiricalCdf& cdf, double tau = 0.05) {
    const auto& xs = cdf.values();
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = model(xs[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::fabs(f - lo), std::fabs(f - hi)));
    }
    return {d, ks_threshold(xs.size(), tau)};
}

/// Monotone model CDF sampled on a grid, evaluated by linear interpolation.
/// Lets the KS statistic run against expensive model CDFs.
class GriddedCdf {
  public:
    GriddedCdf(std::vector<double> xs, std::vector<double> fs)
        : xs_(std::move(xs)), fs_(std::move(fs)) {
        if (xs_.size() != fs_.size() || xs_.size() < 2)
            throw DomainError("GriddedCdf: need matching grids with >= 2 points");
    }

    double operator()(double x) const {
        if (x <= xs_.front()) return fs_.front();
        if (x >= xs_.back()) return fs_.back();
        const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
        const double t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
        return fs_[i] + t * (fs_[i + 1] - fs_[i]);
    }

  private:
    std::vector<double> xs_, fs_;
};

// ---------------------------------------------------------------------------
// Raw-sample persistence: little-endian binary column file.
// Layout: 8-byte magic "IRSOPF64", u64 count, then count f64 values, all LE.
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t to_le(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::little) return v;
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r = (r << 8) | ((v >> (8 * i)) & 0xFF);
    return r;
}

}  // namespace detail

inline void write_samples(const std::string& path, const std::vector<double>& samples) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw NumericError("write_samples: cannot open " + path);
    const char magic[8] = {'I', 'R', 'S', 'O', 'P', 'F', '6', '4'};
    std::fwrite(magic, 1, 8, f);
    std::uint64_t count = detail::to_le(samples.size());
    std::fwrite(&count, 8, 1, f);
    for (double v : samples) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, 8);
        bits = detail::to_le(bits);
        std::fwrite(&bits, 8, 1, f);
    }
    std::fclose(f);
}

inline std::vector<double> read_samples(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw NumericError("read_samples: cannot open " + path);
    char magic[8];
    if (std::fread(magic, 1, 8, f) != 8 || std::memcmp(magic, "IRSOPF64", 8) != 0) {
        std::fclose(f);
        throw NumericError("read_samples: bad magic in " + path);
    }
    std::uint64_t count = 0;
    if (std::fread(&count, 8, 1, f) != 1) {
        std::fclose(f);
        throw NumericError("read_samples: truncated header in " + path);
    }
    count = detail::to_le(count);
    std::vector<double> out(count);
    for (auto& v : out) {
        std::uint64_t bits;
        if (std::fread(&bits, 8, 1, f) != 1) {
            std::fclose(f);
            throw NumericError("read_samples: truncated payload in " + path);
        }
        bits = detail::to_le(bits);
        std::memcpy(&v, &bits, 8);
    }
    std::fclose(f);
    return out;
}

}  // namespace irsop
