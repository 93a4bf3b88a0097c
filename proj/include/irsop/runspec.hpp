// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Batch execution: INI-style run configurations, bundled table presets,
// grid execution and CSV/JSON emission.

#pragma once

#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "irsop/baselines.hpp"
#include "irsop/geometry.hpp"

namespace irsop {

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Minimal INI reader: [section] headers, key = value lines, # or ; comments.
// ---------------------------------------------------------------------------

namespace detail {

struct IniDoc {
    // section -> key -> (value, line)
    std::map<std::string, std::map<std::string, std::pair<std::string, int>>> data;
    std::string name;

    const std::string* find(const std::string& sec, const std::string& key) const {
        const auto s = data.find(sec);
        if (s == data.end()) return nullptr;
        const auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        return &k->second.first;
    }
};

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline IniDoc parse_ini(const std::string& text, const std::string& name) {
    IniDoc doc;
    doc.name = name;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(name + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(name + ":" + std::to_string(lineno) +
                                  ": empty section name");
            doc.data[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(name + ":" + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(name + ":" + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError(name + ":" + std::to_string(lineno) +
                              ": key outside any [section]");
        doc.data[section][key] = {val, lineno};
    }
    return doc;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cur = trim(cur);
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Run specification
// ---------------------------------------------------------------------------

struct RunSpec {
    // geometry
    double sd_distance = 90.0;
    double irs_h = 10.0;
    double beta = 4.0;
    std::vector<double> d_list{30.0};
    // fading
    bool sd_present = true;
    LinkFadingShape sd_shape{0.5, 0.8};
    LinkFadingShape sr_shape{1.41, 2.0};
    LinkFadingShape rd_shape{1.52, 2.5};
    // system grid
    std::vector<int> n_list{5};
    std::vector<QuantBits> b_list{QuantBits::finite(5)};
    double alpha = 1.0;
    double gamma_s_db = 73.0;
    // evaluation
    std::vector<double> thresholds_db{-12, -7, -5, -2, 0, 2, 5};
    std::vector<std::string> methods{"univariate"};
    McConfig mc{};
    // baselines
    int miso_m = 4;
    double relay_power_split = 1.0;
    bool relay_rate_matched = true;
    // sweep
    std::string sweep_axis = "d";
    // output
    std::string out_csv;
    std::string out_json;

    void validate() const;
};

namespace detail {

inline const std::set<std::string>& known_methods() {
    static const std::set<std::string> m{
        "exact",         "univariate",          "univariate_no_phase",
        "univariate_rayleigh", "univariate_nakagami", "gamma_mom",
        "gamma_kl",      "gamma_kl_elem",       "mc",
        "df_relay",      "miso_mrt"};
    return m;
}

}  // namespace detail

inline void RunSpec::validate() const {
    GeometryConfig g{sd_distance, d_list.empty() ? 0.0 : d_list.front(), irs_h, beta};
    for (double d : d_list) {
        g.irs_d = d;
        g.validate();
    }
    if (d_list.empty()) throw ConfigError("RunSpec: empty irs_d grid");
    if (n_list.empty()) throw ConfigError("RunSpec: empty n grid");
    if (b_list.empty()) throw ConfigError("RunSpec: empty bits grid");
    if (thresholds_db.empty()) throw ConfigError("RunSpec: empty threshold grid");
    if (methods.empty()) throw ConfigError("RunSpec: empty method list");
    for (const auto& m : methods)
        if (!detail::known_methods().count(m))
            throw ConfigError("RunSpec: unknown method '" + m + "'");
    for (int n : n_list)
        if (n < 0) throw ConfigError("RunSpec: n must be >= 0");
    if (!(alpha > 0.0) || alpha > 1.0) throw ConfigError("RunSpec: alpha in (0, 1]");
    if (sweep_axis != "d" && sweep_axis != "n")
        throw ConfigError("RunSpec: sweep axis must be 'd' or 'n'");
    mc.validate();
    if (miso_m < 1) throw ConfigError("RunSpec: miso_m must be >= 1");
    if (!(relay_power_split > 0.0))
        throw ConfigError("RunSpec: relay_power_split must be > 0");
    const bool needs_sd = [&] {
        for (const auto& m : methods)
            if (m == "exact" || m.rfind("univariate", 0) == 0) return true;
        return false;
    }();
    if (needs_sd && !sd_present)
        throw ConfigError("RunSpec: selected methods require sd_present = true");
    for (const auto& m : methods)
        if (m == "gamma_kl_elem" && sd_present)
            throw ConfigError("RunSpec: gamma_kl_elem requires sd_present = false");
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

class IniReader {
  public:
    IniReader(const std::string& text, const std::string& name)
        : doc_(parse_ini(text, name)) {}

    double number(const std::string& sec, const std::string& key, double fallback) {
        const std::string* v = fetch(sec, key);
        if (!v) return fallback;
        return to_double(sec, key, *v);
    }

    bool boolean(const std::string& sec, const std::string& key, bool fallback) {
        const std::string* v = fetch(sec, key);
        if (!v) return fallback;
        if (*v == "true" || *v == "1" || *v == "yes") return true;
        if (*v == "false" || *v == "0" || *v == "no") return false;
        fail(sec, key, "expected boolean");
        return false;
    }

    std::string text(const std::string& sec, const std::string& key,
                     const std::string& fallback) {
        const std::string* v = fetch(sec, key);
        return v ? *v : fallback;
    }

    std::vector<double> numbers(const std::string& sec, const std::string& key,
                                std::vector<double> fallback) {
        const std::string* v = fetch(sec, key);
        if (!v) return fallback;
        std::vector<double> out;
        for (const auto& tok : split_list(*v)) out.push_back(to_double(sec, key, tok));
        if (out.empty()) fail(sec, key, "empty list");
        return out;
    }

    std::vector<int> ints(const std::string& sec, const std::string& key,
                          std::vector<int> fallback) {
        const std::string* v = fetch(sec, key);
        if (!v) return fallback;
        std::vector<int> out;
        for (const auto& tok : split_list(*v)) {
            const double d = to_double(sec, key, tok);
            if (d != std::floor(d)) fail(sec, key, "expected integer");
            out.push_back(static_cast<int>(d));
        }
        if (out.empty()) fail(sec, key, "empty list");
        return out;
    }

    std::vector<QuantBits> bits(const std::string& sec, const std::string& key,
                                std::vector<QuantBits> fallback) {
        const std::string* v = fetch(sec, key);
        if (!v) return fallback;
        std::vector<QuantBits> out;
        for (const auto& tok : split_list(*v)) {
            if (tok == "inf" || tok == "infinite") {
                out.push_back(QuantBits::infinite());
            } else {
                const double d = to_double(sec, key, tok);
                if (d != std::floor(d) || d < 1) fail(sec, key, "bits must be >= 1 or inf");
                out.push_back(QuantBits::finite(static_cast<int>(d)));
            }
        }
        if (out.empty()) fail(sec, key, "empty list");
        return out;
    }

    std::vector<std::string> strings(const std::string& sec, const std::string& key,
                                     std::vector<std::string> fallback) {
        const std::string* v = fetch(sec, key);
        if (!v) return fallback;
        auto out = split_list(*v);
        out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
        return out;
    }

    void check_all_consumed() const {
        for (const auto& [sec, keys] : doc_.data)
            for (const auto& [key, val] : keys)
                if (!used_.count(sec + "." + key))
                    throw ConfigError(doc_.name + ":" + std::to_string(val.second) +
                                      ": unknown key '" + key + "' in [" + sec + "]");
    }

  private:
    const std::string* fetch(const std::string& sec, const std::string& key) {
        used_.insert(sec + "." + key);
        return doc_.find(sec, key);
    }

    double to_double(const std::string& sec, const std::string& key,
                     const std::string& tok) {
        try {
            std::size_t pos = 0;
            const double d = std::stod(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("trailing");
            return d;
        } catch (const std::exception&) {
            fail(sec, key, "cannot parse number '" + tok + "'");
            return 0.0;
        }
    }

    [[noreturn]] void fail(const std::string& sec, const std::string& key,
                           const std::string& msg) {
        int line = 0;
        const auto s = doc_.data.find(sec);
        if (s != doc_.data.end()) {
            const auto k = s->second.find(key);
            if (k != s->second.end()) line = k->second.second;
        }
        throw ConfigError(doc_.name + ":" + std::to_string(line) + ": [" + sec + "] " +
                          key + ": " + msg);
    }

    IniDoc doc_;
    std::set<std::string> used_;
};

}  // namespace detail

inline RunSpec parse_runspec(const std::string& text, const std::string& name) {
    detail::IniReader r(text, name);
    RunSpec s;
    s.sd_distance = r.number("geometry", "sd_distance", s.sd_distance);
    s.irs_h = r.number("geometry", "irs_h", s.irs_h);
    s.beta = r.number("geometry", "beta", s.beta);
    s.d_list = r.numbers("geometry", "irs_d", s.d_list);
    s.sd_present = r.boolean("fading", "sd_present", s.sd_present);
    s.sd_shape.kappa = r.number("fading", "sd_kappa", s.sd_shape.kappa);
    s.sd_shape.mu = r.number("fading", "sd_mu", s.sd_shape.mu);
    s.sr_shape.kappa = r.number("fading", "sr_kappa", s.sr_shape.kappa);
    s.sr_shape.mu = r.number("fading", "sr_mu", s.sr_shape.mu);
    s.rd_shape.kappa = r.number("fading", "rd_kappa", s.rd_shape.kappa);
    s.rd_shape.mu = r.number("fading", "rd_mu", s.rd_shape.mu);
    {
        auto ns = r.ints("system", "n", s.n_list);
        s.n_list = ns;
    }
    s.b_list = r.bits("system", "bits", s.b_list);
    s.alpha = r.number("system", "alpha", s.alpha);
    s.gamma_s_db = r.number("system", "gamma_s_db", s.gamma_s_db);
    s.thresholds_db = r.numbers("thresholds", "db", s.thresholds_db);
    s.methods = r.strings("methods", "list", s.methods);
    s.mc.samples = static_cast<std::uint64_t>(r.number("mc", "samples",
                                                       static_cast<double>(s.mc.samples)));
    s.mc.seed = static_cast<std::uint64_t>(r.number("mc", "seed",
                                                    static_cast<double>(s.mc.seed)));
    s.mc.batch = static_cast<std::uint64_t>(r.number("mc", "batch",
                                                     static_cast<double>(s.mc.batch)));
    if (s.mc.batch > s.mc.samples) s.mc.batch = s.mc.samples;
    s.miso_m = static_cast<int>(r.number("baseline", "miso_m", s.miso_m));
    s.relay_power_split = r.number("baseline", "relay_power_split", s.relay_power_split);
    s.relay_rate_matched = r.boolean("baseline", "relay_rate_matched", s.relay_rate_matched);
    s.sweep_axis = r.text("sweep", "axis", s.sweep_axis);
    s.out_csv = r.text("output", "csv", s.out_csv);
    s.out_json = r.text("output", "json", s.out_json);
    r.check_all_consumed();
    s.validate();
    return s;
}

inline RunSpec parse_runspec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_runspec(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

/// One emitted result row.
struct OutageResult {
    double irs_d;
    int n;
    QuantBits bits = QuantBits::infinite();
    std::string method;
    double threshold_db;
    double probability = std::numeric_limits<double>::quiet_NaN();
    OutageDiagnostics diag;
    bool ok = true;
    std::string error;
};

struct RunOutput {
    std::vector<OutageResult> rows;
    bool any_numeric_failure = false;
    std::uint64_t seed;
    std::uint64_t samples;
};

namespace detail {

inline std::string bits_label(QuantBits b) {
    return b.is_infinite() ? "inf" : std::to_string(b.bits());
}

inline Scenario make_scenario(const RunSpec& s, double d, int n, QuantBits b) {
    GeometryConfig g{s.sd_distance, d, s.irs_h, s.beta};
    const DerivedLinks links = derive_links(g, s.sd_shape, s.sr_shape, s.rd_shape);
    Scenario sc{n, b, s.alpha, std::pow(10.0, s.gamma_s_db / 10.0),
                s.sd_present ? std::optional<KappaMuParams>(links.sd) : std::nullopt,
                links.sr, links.rd};
    return sc;
}

// All rows for one (d, n, bits) grid point.
inline void run_grid_point(const RunSpec& s, double d, int n, QuantBits b,
                           unsigned mc_threads, std::vector<OutageResult>& rows,
                           bool& failure) {
    const Scenario sc = make_scenario(s, d, n, b);
    std::optional<EmpiricalCdf> sim;        // shared across thresholds
    std::optional<EmpiricalCdf> relay_min;  // ditto for the relay baseline
    for (const auto& method : s.methods) {
        for (double gdb : s.thresholds_db) {
            OutageResult row;
            row.irs_d = d;
            row.n = n;
            row.bits = b;
            row.method = method;
            row.threshold_db = gdb;
            const OutageQuery q = OutageQuery::from_db(gdb);
            try {
                if (method == "exact") {
                    const auto v = op_exact_small_n(sc, q);
                    row.probability = v.probability;
                    row.diag = v.diag;
                } else if (method == "univariate") {
                    const auto v = op_univariate(sc, q);
                    row.probability = v.probability;
                    row.diag = v.diag;
                } else if (method == "univariate_no_phase") {
                    const auto v = op_univariate_no_phase(sc, q);
                    row.probability = v.probability;
                    row.diag = v.diag;
                } else if (method == "univariate_rayleigh") {
                    const auto v = op_univariate_rayleigh(sc, q);
                    row.probability = v.probability;
                    row.diag = v.diag;
                } else if (method == "univariate_nakagami") {
                    const auto v = op_univariate_nakagami(sc, q);
                    row.probability = v.probability;
                    row.diag = v.diag;
                } else if (method == "gamma_mom") {
                    row.probability = gamma_cdf_op(gamma_fit_moments(snr_moments(sc)), q);
                } else if (method == "gamma_kl") {
                    row.probability = gamma_cdf_op(gamma_fit_kl(snr_moments(sc)), q);
                } else if (method == "gamma_kl_elem") {
                    const auto v = op_kl_no_sd_no_phase(sc, q);
                    row.probability = v.probability;
                    row.diag = v.diag;
                } else if (method == "mc") {
                    if (!sim) sim.emplace(simulate_snr(sc, s.mc, mc_threads));
                    row.probability = empirical_op(*sim, q);
                } else if (method == "df_relay") {
                    const DerivedLinks links =
                        derive_links({s.sd_distance, d, s.irs_h, s.beta}, s.sd_shape,
                                     s.sr_shape, s.rd_shape);
                    DfRelayScenario rs{links.sd, links.sr, links.rd,
                                       std::pow(10.0, s.gamma_s_db / 10.0),
                                       s.relay_power_split, s.relay_rate_matched};
                    if (!relay_min)
                        relay_min.emplace(df_relay_min_samples(rs, s.mc, mc_threads));
                    row.probability =
                        relay_min->fraction_below(df_relay_threshold(rs, q));
                } else if (method == "miso_mrt") {
                    const DerivedLinks links =
                        derive_links({s.sd_distance, d, s.irs_h, s.beta}, s.sd_shape,
                                     s.sr_shape, s.rd_shape);
                    row.probability = miso_mrt_op(s.miso_m, links.sd,
                                                  std::pow(10.0, s.gamma_s_db / 10.0), q);
                }
            } catch (const NumericError& e) {
                row.ok = false;
                row.error = e.what();
                failure = true;
            }
            rows.push_back(std::move(row));
        }
    }
}

}  // namespace detail

/// Execute the full grid. Grid points run concurrently; rows are emitted in
/// deterministic grid order (d, then n, then bits; methods and thresholds in
/// configured order within a point).
inline RunOutput run_spec(const RunSpec& s) {
    s.validate();
    struct Point {
        double d;
        int n;
        QuantBits b;
    };
    std::vector<Point> grid;
    for (double d : s.d_list)
        for (int n : s.n_list)
            for (QuantBits b : s.b_list) grid.push_back({d, n, b});

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned mc_threads = grid.size() > 1 ? 1 : hw;

    std::vector<std::vector<OutageResult>> per_point(grid.size());
    std::vector<char> failures(grid.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            bool f = false;
            detail::run_grid_point(s, grid[i].d, grid[i].n, grid[i].b, mc_threads,
                                   per_point[i], f);
            failures[i] = f ? 1 : 0;
        }
    };
    const unsigned nt = std::max(1u, std::min<unsigned>(hw, static_cast<unsigned>(grid.size())));
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    RunOutput out;
    out.seed = s.mc.seed;
    out.samples = s.mc.samples;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out.any_numeric_failure |= (failures[i] != 0);
        for (auto& r : per_point[i]) out.rows.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

inline std::string to_csv(const RunOutput& out, const std::string& title = "run") {
    std::ostringstream os;
    os << "# irsop " << title << "\n";
    os << "# generator=" << Xoshiro256pp::name() << " seed=" << out.seed
       << " samples=" << out.samples << "\n";
    os << "irs_d,n,bits,method,threshold_db,outage,pre_clamp,quad_error,series_terms\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.10g", v);
        return std::string(buf);
    };
    for (const auto& r : out.rows) {
        os << num(r.irs_d) << ',' << r.n << ',' << detail::bits_label(r.bits) << ','
           << r.method << ',' << num(r.threshold_db) << ','
           << (r.ok ? num(r.probability) : "error") << ',' << num(r.diag.pre_clamp)
           << ',' << num(r.diag.quad_error) << ',' << r.diag.series_terms << "\n";
    }
    return os.str();
}

inline std::string to_json(const RunOutput& out, const std::string& title = "run") {
    nlohmann::json j;
    j["title"] = title;
    j["generator"] = Xoshiro256pp::name();
    j["seed"] = out.seed;
    j["samples"] = out.samples;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : out.rows) {
        nlohmann::json row;
        row["irs_d"] = r.irs_d;
        row["n"] = r.n;
        row["bits"] = detail::bits_label(r.bits);
        row["method"] = r.method;
        row["threshold_db"] = r.threshold_db;
        if (r.ok) {
            row["outage"] = r.probability;
        } else {
            row["error"] = r.error;
        }
        nlohmann::json diag;
        if (std::isfinite(r.diag.pre_clamp)) diag["pre_clamp"] = r.diag.pre_clamp;
        diag["quad_error"] = r.diag.quad_error;
        diag["quad_subdivisions"] = r.diag.quad_subdivisions;
        diag["series_terms"] = r.diag.series_terms;
        row["diagnostics"] = diag;
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

/// Parse the (irs_d, n, bits, threshold_db) grid back out of an emitted CSV.
struct CsvGridEntry {
    double irs_d;
    int n;
    std::string bits;
    double threshold_db;
    auto operator<=>(const CsvGridEntry&) const = default;
};

inline std::set<CsvGridEntry> parse_csv_grid(const std::string& csv) {
    std::set<CsvGridEntry> grid;
    std::istringstream in(csv);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {  // column header
            header_seen = true;
            continue;
        }
        std::vector<std::string> f;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                f.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        f.push_back(cur);
        if (f.size() < 6) throw ConfigError("parse_csv_grid: malformed row: " + line);
        grid.insert({std::stod(f[0]), std::stoi(f[1]), f[2], std::stod(f[4])});
    }
    return grid;
}

// ---------------------------------------------------------------------------
// Bundled presets reproducing the published tables.
// ---------------------------------------------------------------------------

inline const std::map<std::string, std::string>& table_presets() {
    static const std::map<std::string, std::string> presets{
        {"with-sd-vary-n", R"(# OP with SD link, varying N (d=30, b=5)
[geometry]
irs_d = 30
[system]
n = 5, 50, 100
bits = 5
[thresholds]
db = -12, -7, -5, -2, 0, 2, 5
[methods]
list = univariate, gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
        {"with-sd-vary-b", R"(# OP with SD link, varying b (d=30, N=100)
[geometry]
irs_d = 30
[system]
n = 100
bits = 1, 2, 10, inf
[thresholds]
db = -12, -7, -5, -2, 0, 2, 5
[methods]
list = univariate, gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
        {"no-sd-vary-b", R"(# OP without SD link, varying b (d=30, N=61)
[geometry]
irs_d = 30
[fading]
sd_present = false
[system]
n = 61
bits = inf, 5, 2
[thresholds]
db = -25, -24, -23, -22, -21, -20
[methods]
list = gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
        {"no-sd-n99-b1", R"(# OP without SD link, N=99, b=1 (d=30)
[geometry]
irs_d = 30
[fading]
sd_present = false
[system]
n = 99
bits = 1
[thresholds]
db = -25, -24, -23, -22, -21, -20
[methods]
list = gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
        {"relay-baseline", R"(# DF relay at (d, h), rate-matched threshold
[geometry]
irs_d = 0, 45
[thresholds]
db = -15, -10, -7, -5, -2, 0, 2, 5
[methods]
list = df_relay
[mc]
samples = 10000000
seed = 20260809
)"},
        {"miso-baseline", R"(# MISO MRT with M=4 antennas
[geometry]
irs_d = 0
[thresholds]
db = -5, -2, 0, 2, 3, 4, 5
[methods]
list = miso_mrt
[baseline]
miso_m = 4
)"},
        {"irs-at-d0", R"(# IRS rows of the relay/MISO comparison tables (d=0, b=5)
[geometry]
irs_d = 0
[system]
n = 25, 50, 100, 120
bits = 5
[thresholds]
db = -15, -10, -7, -5, -2, 0, 2, 3, 4, 5
[methods]
list = univariate, gamma_mom
)"},
        {"rayleigh-vary-n", R"(# Rayleigh supplementary table (all links kappa=0, mu=1)
[geometry]
irs_d = 30
[fading]
sd_kappa = 0
sd_mu = 1
sr_kappa = 0
sr_mu = 1
rd_kappa = 0
rd_mu = 1
[system]
n = 5, 50
bits = 5
[thresholds]
db = -15, -10, -5, -2, 0, 2, 5
[methods]
list = univariate_rayleigh, univariate, gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
        {"nakagami-vary-n", R"(# Nakagami supplementary table (kappa=0; mu = m)
[geometry]
irs_d = 30
[fading]
sd_kappa = 0
sd_mu = 1
sr_kappa = 0
sr_mu = 2
rd_kappa = 0
rd_mu = 1.2
[system]
n = 5, 50
bits = 5
[thresholds]
db = -15, -10, -5, -2, 0, 2, 5
[methods]
list = univariate_nakagami, univariate, gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
        {"rician-vary-n", R"(# Rician supplementary table (mu=1; kappa = K)
[geometry]
irs_d = 30
[fading]
sd_kappa = 0
sd_mu = 1
sr_kappa = 2
sr_mu = 1
rd_kappa = 2.5
rd_mu = 1
[system]
n = 5, 50
bits = 5
[thresholds]
db = -15, -10, -5, -2, 0, 2, 5
[methods]
list = univariate, gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
        {"kappamu-vary-n", R"(# General kappa-mu supplementary table
[geometry]
irs_d = 30
[fading]
sd_kappa = 0.7
sd_mu = 1
sr_kappa = 2.4
sr_mu = 5
rd_kappa = 1.8
rd_mu = 3
[system]
n = 5, 50
bits = 5
[thresholds]
db = -15, -10, -5, -2, 0, 2, 5
[methods]
list = univariate, gamma_mom, gamma_kl, mc
[mc]
samples = 1000000
seed = 20260809
)"},
    };
    return presets;
}

}  // namespace irsop
