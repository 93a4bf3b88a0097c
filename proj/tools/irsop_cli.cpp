// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Command line front end: run configs, replay bundled table presets, emit
// sweep curve data and validate configuration files.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "irsop/irsop.hpp"

namespace {

struct Overrides {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::string methods;
    std::string out;
    std::string format = "csv";
};

void apply_overrides(irsop::RunSpec& spec, const Overrides& ov) {
    if (ov.samples) {
        spec.mc.samples = ov.samples;
        if (spec.mc.batch > spec.mc.samples) spec.mc.batch = spec.mc.samples;
    }
    if (ov.seed) spec.mc.seed = ov.seed;
    if (!ov.methods.empty()) {
        spec.methods.clear();
        for (const auto& m : irsop::detail::split_list(ov.methods))
            if (!m.empty()) spec.methods.push_back(m);
    }
    if (!ov.out.empty()) {
        if (ov.format == "json") {
            spec.out_json = ov.out;
            spec.out_csv.clear();
        } else {
            spec.out_csv = ov.out;
        }
    }
    spec.validate();
}

int emit(const irsop::RunOutput& out, const irsop::RunSpec& spec,
         const std::string& title, const std::string& format) {
    const std::string csv = irsop::to_csv(out, title);
    const std::string json = irsop::to_json(out, title);
    bool wrote = false;
    if (!spec.out_csv.empty()) {
        std::ofstream f(spec.out_csv);
        if (!f) {
            std::cerr << "error: cannot write " << spec.out_csv << "\n";
            return 2;
        }
        f << csv;
        wrote = true;
    }
    if (!spec.out_json.empty()) {
        std::ofstream f(spec.out_json);
        if (!f) {
            std::cerr << "error: cannot write " << spec.out_json << "\n";
            return 2;
        }
        f << json;
        wrote = true;
    }
    if (!wrote) std::cout << (format == "json" ? json : csv);
    if (out.any_numeric_failure) {
        std::cerr << "error: numeric failures occurred; see error rows\n";
        return 1;
    }
    return 0;
}

int run_and_emit(irsop::RunSpec spec, const Overrides& ov, const std::string& title) {
    apply_overrides(spec, ov);
    const irsop::RunOutput out = irsop::run_spec(spec);
    return emit(out, spec, title, ov.format);
}

// Sweep emission: one (x, OP) pair per method and threshold, x = the swept axis.
int sweep_and_emit(irsop::RunSpec spec, const Overrides& ov) {
    apply_overrides(spec, ov);
    if (spec.sweep_axis == "d" && spec.d_list.size() < 2)
        std::cerr << "note: sweep over d with a single grid point\n";
    if (spec.sweep_axis == "n" && spec.n_list.size() < 2)
        std::cerr << "note: sweep over n with a single grid point\n";
    const irsop::RunOutput out = irsop::run_spec(spec);
    std::ostringstream os;
    os << "# irsop sweep axis=" << spec.sweep_axis << "\n";
    os << "# generator=" << irsop::Xoshiro256pp::name() << " seed=" << out.seed
       << " samples=" << out.samples << "\n";
    os << "x,method,threshold_db,outage\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.10g", v);
        return std::string(buf);
    };
    for (const auto& r : out.rows) {
        const double x = spec.sweep_axis == "d" ? r.irs_d : static_cast<double>(r.n);
        os << num(x) << ',' << r.method << ',' << num(r.threshold_db) << ','
           << (r.ok ? num(r.probability) : "error") << "\n";
    }
    if (!spec.out_csv.empty()) {
        std::ofstream f(spec.out_csv);
        if (!f) {
            std::cerr << "error: cannot write " << spec.out_csv << "\n";
            return 2;
        }
        f << os.str();
    } else {
        std::cout << os.str();
    }
    return out.any_numeric_failure ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"outage probability of IRS-assisted links in kappa-mu fading"};
    app.require_subcommand(1);

    Overrides ov;
    std::string config_path, preset_name;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--samples", ov.samples, "Monte Carlo sample count override");
        cmd->add_option("--seed", ov.seed, "Monte Carlo seed override");
        cmd->add_option("--methods", ov.methods, "comma-separated method list override");
        cmd->add_option("--out", ov.out, "output file (default: stdout)");
        cmd->add_option("--format", ov.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* run = app.add_subcommand("run", "execute a run configuration file");
    run->add_option("config", config_path, "INI run configuration")->required();
    add_common(run);

    CLI::App* table = app.add_subcommand("table", "replay a bundled table preset");
    table->add_option("preset", preset_name, "preset name (see --list)");
    bool list_presets = false;
    table->add_flag("--list", list_presets, "list preset names");
    add_common(table);

    CLI::App* sweep = app.add_subcommand("sweep", "emit (x, OP) curve data");
    sweep->add_option("config", config_path, "INI run configuration")->required();
    add_common(sweep);

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a config");
    validate->add_option("config", config_path, "INI run configuration")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_and_emit(irsop::parse_runspec_file(config_path), ov,
                                "run " + config_path);
        }
        if (table->parsed()) {
            const auto& presets = irsop::table_presets();
            if (list_presets) {
                for (const auto& [name, text] : presets) std::cout << name << "\n";
                return 0;
            }
            if (preset_name.empty()) {
                std::cerr << "error: preset name required (or --list)\n";
                return 2;
            }
            const auto it = presets.find(preset_name);
            if (it == presets.end()) {
                std::cerr << "error: unknown preset '" << preset_name << "'\n";
                return 2;
            }
            return run_and_emit(irsop::parse_runspec(it->second, preset_name), ov,
                                "table " + preset_name);
        }
        if (sweep->parsed()) {
            return sweep_and_emit(irsop::parse_runspec_file(config_path), ov);
        }
        if (validate->parsed()) {
            irsop::parse_runspec_file(config_path);
            std::cout << "OK: " << config_path << "\n";
            return 0;
        }
    } catch (const irsop::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
