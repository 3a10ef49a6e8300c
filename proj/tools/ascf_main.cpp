// Command-line front end: simulate | equilibria | classify | sweep.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ascf/config.hpp"
#include "ascf/csv.hpp"
#include "ascf/equilibria.hpp"
#include "ascf/field.hpp"
#include "ascf/format.hpp"
#include "ascf/integrate.hpp"
#include "ascf/svg.hpp"
#include "ascf/sweep_output.hpp"
#include "ascf/sweeps.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_override;
    bool svg = false;
};

ascf::RunConfig load_config(const CommonArgs& args) {
    std::ifstream in(args.config_path, std::ios::binary);
    if (!in) {
        throw ascf::ValidationError(
            {"cannot read config file " + args.config_path});
    }
    std::ostringstream text;
    text << in.rdbuf();
    ascf::RunConfig config = ascf::parse_config(text.str());
    if (!args.out_override.empty()) config.out_dir = args.out_override;
    return config;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() +
                                 " for writing");
    }
    return out;
}

std::string eig_str(const ascf::StabilityVerdict& verdict) {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        const auto& lambda = verdict.eigenvalues[i];
        if (i > 0) s += ", ";
        s += ascf::format_double(lambda.real());
        if (lambda.imag() != 0.0) {
            s += lambda.imag() > 0 ? "+" : "-";
            s += ascf::format_double(std::abs(lambda.imag())) + "i";
        }
    }
    return s + ")";
}

std::string point_str(const ascf::EquilibriumPoint& pt) {
    return "[" + ascf::format_double(pt.coords[0]) + ", " +
           ascf::format_double(pt.coords[1]) + ", " +
           ascf::format_double(pt.coords[2]) + "]";
}

void print_scenarios(std::ostream& out, const ascf::ScenarioReport& rep) {
    const std::pair<const char*, const ascf::ScenarioCondition*> rows[] = {
        {"scenario1", &rep.scenario1},
        {"scenario2", &rep.scenario2},
        {"scenario3", &rep.scenario3},
        {"scenario4", &rep.scenario4}};
    for (const auto& [name, cond] : rows) {
        out << name << ": " << (cond->holds ? "true" : "false")
            << " (op1=" << ascf::format_double(cond->op1)
            << ", op2=" << ascf::format_double(cond->op2) << ")\n";
    }
}

int run_simulate(const CommonArgs& args) {
    const ascf::RunConfig config = load_config(args);
    const auto points = ascf::enumerate_equilibria(config.params);
    std::vector<ascf::EquilibriumPoint> candidates;
    for (const auto& pt : points) {
        if (pt.valid) candidates.push_back(pt);
    }

    fs::create_directories(config.out_dir);
    for (std::size_t i = 0; i < config.initial_states.size(); ++i) {
        const ascf::Trajectory traj = ascf::integrate(
            config.params, config.initial_states[i], config.integration);
        const ascf::ConvergenceReport rep = ascf::detect_convergence(
            traj, ascf::kDefaultSpeedTolerance, candidates);

        const fs::path csv_path =
            fs::path(config.out_dir) /
            ("trajectory_" + std::to_string(i) + ".csv");
        {
            std::ofstream out = open_out(csv_path);
            ascf::write_trajectory_csv(traj, out);
        }
        if (args.svg) {
            const char* const names[] = {"x", "y", "z"};
            std::vector<ascf::Series> series(3);
            for (int c = 0; c < 3; ++c) {
                series[c].label = names[c];
                for (const auto& sample : traj.samples) {
                    const double value = c == 0   ? sample.state.x
                                         : c == 1 ? sample.state.y
                                                  : sample.state.z;
                    series[c].points.emplace_back(sample.t, value);
                }
            }
            std::ofstream out = open_out(
                fs::path(config.out_dir) /
                ("trajectory_" + std::to_string(i) + ".svg"));
            ascf::render_svg_plot(series, "t", "probability", out);
        }

        std::cout << "state " << i << ": "
                  << (rep.converged ? "converged" : "not converged")
                  << " terminal=(" << ascf::format_double(rep.terminal_state.x)
                  << ", " << ascf::format_double(rep.terminal_state.y) << ", "
                  << ascf::format_double(rep.terminal_state.z) << ")"
                  << " speed=" << ascf::format_double(rep.terminal_speed);
        if (rep.nearest) {
            std::cout << " nearest=" << rep.nearest->label << " at "
                      << ascf::format_double(rep.nearest->distance);
        }
        std::cout << " -> " << csv_path.string() << "\n";
    }
    return 0;
}

int run_equilibria(const CommonArgs& args) {
    const ascf::RunConfig config = load_config(args);
    const auto points = ascf::enumerate_equilibria(config.params);
    std::vector<std::optional<ascf::StabilityVerdict>> verdicts;
    for (const auto& pt : points) {
        if (pt.defined) {
            verdicts.emplace_back(ascf::classify(config.params, pt));
        } else {
            verdicts.emplace_back(std::nullopt);
        }
    }
    const ascf::ScenarioReport scenario =
        ascf::scenario_report(config.params);

    fs::create_directories(config.out_dir);
    const fs::path path = fs::path(config.out_dir) / "equilibria.csv";
    std::ofstream out = open_out(path);
    ascf::write_equilibria_report(points, verdicts, scenario, out);
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

int run_classify(const CommonArgs& args) {
    const ascf::RunConfig config = load_config(args);
    for (const auto& pt : ascf::enumerate_equilibria(config.params)) {
        if (!pt.defined) {
            std::cout << pt.label << " undefined\n";
            continue;
        }
        const ascf::StabilityVerdict verdict =
            ascf::classify(config.params, pt);
        std::cout << pt.label << " " << point_str(pt) << " "
                  << (pt.valid ? "valid" : "invalid") << " eigenvalues "
                  << eig_str(verdict) << " " << ascf::to_string(verdict.cls)
                  << "\n";
    }
    print_scenarios(std::cout, ascf::scenario_report(config.params));
    return 0;
}

int run_sweep_cmd(const CommonArgs& args, const std::string& name,
                  const std::string& param,
                  const std::vector<double>& values) {
    const bool custom = !param.empty();
    if (custom && values.empty()) {
        throw ascf::ValidationError(
            {"--param requires --values with at least one number"});
    }

    std::vector<ascf::SweepSpec> specs;
    if (custom) {
        const ascf::RunConfig config = load_config(args);
        ascf::SweepSpec spec;
        spec.base = config.params;
        spec.parameter = param;
        spec.values = values;
        spec.initial_states = config.initial_states;
        spec.integration = config.integration;
        specs.push_back(std::move(spec));
    } else {
        for (auto& spec : ascf::builtin_experiments()) {
            if (name == "all" || name == spec.parameter) {
                specs.push_back(std::move(spec));
            }
        }
        if (specs.empty()) {
            throw ascf::ValidationError(
                {"unknown sweep name \"" + name +
                 "\" (expected all, Cg, m, e, Cm or I)"});
        }
    }

    std::string out_dir = args.out_override;
    if (out_dir.empty()) {
        out_dir = custom || !args.config_path.empty()
                      ? load_config(args).out_dir
                      : "out";
    }

    for (const ascf::SweepSpec& spec : specs) {
        const ascf::SweepResult result = ascf::run_sweep(spec);
        const fs::path dir =
            fs::path(out_dir) / ("sweep_" + spec.parameter);
        const auto files = ascf::write_sweep_outputs(result, dir, args.svg);
        std::size_t converged = 0;
        for (const auto& cell : result.cells) {
            if (cell.convergence.converged) ++converged;
        }
        std::cout << "sweep " << spec.parameter << ": " << result.cells.size()
                  << " cells (" << converged << " converged), "
                  << files.size() << " files -> " << dir.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Evolutionary-game toolkit for the bank / core-enterprise / SME "
        "supply chain financing model"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string sweep_name = "all";
    std::string sweep_param;
    std::vector<double> sweep_values;

    auto add_common = [&args](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", args.config_path,
                                    "JSON run configuration");
        if (config_required) opt->required();
        sub->add_option("--out", args.out_override,
                        "output directory (overrides the config's out_dir)");
        sub->add_flag("--svg", args.svg, "also write SVG plots");
    };

    CLI::App* simulate = app.add_subcommand(
        "simulate", "integrate the configured initial states, write CSVs");
    add_common(simulate, true);

    CLI::App* equilibria = app.add_subcommand(
        "equilibria", "write the equilibrium/stability report CSV");
    add_common(equilibria, true);

    CLI::App* classify = app.add_subcommand(
        "classify", "print stability classes and scenario conditions");
    add_common(classify, true);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "run parameter sweeps and write their reports");
    add_common(sweep, false);
    sweep->add_option("--name", sweep_name,
                      "builtin sweep to run: all, Cg, m, e, Cm or I");
    sweep->add_option("--param", sweep_param,
                      "swept scalar for a custom sweep (needs --config)");
    sweep->add_option("--values", sweep_values,
                      "comma-separated values for a custom sweep")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (simulate->parsed()) return run_simulate(args);
        if (equilibria->parsed()) return run_equilibria(args);
        if (classify->parsed()) return run_classify(args);
        if (sweep->parsed()) {
            if (!sweep_param.empty() && args.config_path.empty()) {
                throw ascf::ValidationError(
                    {"--param needs --config for the base parameters"});
            }
            return run_sweep_cmd(args, sweep_name, sweep_param, sweep_values);
        }
    } catch (const ascf::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
