// dmuproj: projections onto polynomials in D_mu from the command line.
//
//   dmuproj project  --config run.json [--output out.json]
//   dmuproj distance --config run.json
//   dmuproj basis    --config run.json
//   dmuproj converge --config run.json [--format csv|json]
//   dmuproj verify   [--config run.json] --trials 500 --seed 1 --tol 1e-8

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dmu/cli.hpp"

namespace {

struct Options {
    std::string config_path;
    std::string output_path;
    std::string format;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<std::size_t> s_max;
    std::optional<std::size_t> n_max;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw dmu::cli::ConfigError("--config", "cannot open \"" + path + "\"");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run(const std::string& command, const Options& opts) {
    dmu::cli::RunConfig config;
    try {
        if (!opts.config_path.empty()) {
            config = dmu::cli::parse_config(read_file(opts.config_path));
        } else if (command != "verify") {
            throw dmu::cli::ConfigError("--config", "required for " + command);
        }
        if (!opts.format.empty()) {
            config.format = dmu::cli::parse_format(opts.format);
        }
        if (opts.trials) config.trials = *opts.trials;
        if (opts.seed) config.seed = *opts.seed;
        if (opts.tol) {
            if (!(*opts.tol >= 0.0)) {
                throw dmu::cli::ConfigError("--tol", "must be non-negative");
            }
            config.tol_closed_vs_oracle = *opts.tol;
        }
        if (opts.s_max) config.s_max = *opts.s_max;
        if (opts.n_max) config.n_max = *opts.n_max;
    } catch (const dmu::InvalidArgument& e) {
        std::cerr << "dmuproj: " << e.what() << "\n";
        return dmu::cli::kConfigError;
    }

    const dmu::cli::CommandOutput out = dmu::cli::run_command(command, config);
    if (!out.diagnostic.empty()) {
        std::cerr << "dmuproj " << command << ": " << out.diagnostic << "\n";
    }
    if (!out.document.empty()) {
        if (opts.output_path.empty()) {
            std::cout << out.document;
        } else {
            std::ofstream file(opts.output_path, std::ios::binary);
            if (!file) {
                std::cerr << "dmuproj: cannot write \"" << opts.output_path << "\"\n";
                return dmu::cli::kConfigError;
            }
            file << out.document;
        }
    }
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonal projections onto polynomials in local Dirichlet spaces"};
    app.require_subcommand(1);

    Options opts;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "JSON config file");
        sub->add_option("--output", opts.output_path, "Output file (default: stdout)");
        sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    for (const char* name : {"project", "distance", "basis", "converge"}) {
        add_common(app.add_subcommand(name));
    }
    app.get_subcommand("project")->description("Project f onto polynomials of degree <= n");
    app.get_subcommand("distance")->description("Distance from f to polynomials of degree <= n");
    app.get_subcommand("basis")->description("Orthonormal basis polynomials p_0..p_m");
    app.get_subcommand("converge")->description("Distance table over a degree range (CSV)");

    CLI::App* verify = app.add_subcommand("verify", "Cross-check closed forms against the Gram oracle");
    add_common(verify);
    verify->add_option("--trials", opts.trials, "Number of random trials");
    verify->add_option("--seed", opts.seed, "Random seed");
    verify->add_option("--tol", opts.tol, "Closed form vs oracle tolerance");
    verify->add_option("--s-max", opts.s_max, "Maximum number of atoms");
    verify->add_option("--n-max", opts.n_max, "Maximum projection degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dmu::cli::kConfigError;
    }
    return run(app.get_subcommands().front()->get_name(), opts);
}
