#include "dmu/cli.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "dmu/dirichlet.hpp"

namespace dmu::cli {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string& message)
    : InvalidArgument(field + ": " + message), field_(std::move(field)) {}

namespace {

Complex read_complex(const json& node, const std::string& field) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
        throw ConfigError(field, "expected a [re, im] pair of numbers");
    }
    const Complex z(node[0].get<double>(), node[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ConfigError(field, "complex value must be finite");
    }
    return z;
}

std::vector<Complex> read_complex_list(const json& node, const std::string& field) {
    if (!node.is_array()) {
        throw ConfigError(field, "expected an array of [re, im] pairs");
    }
    std::vector<Complex> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(read_complex(node[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::size_t read_index(const json& node, const std::string& field) {
    if (!node.is_number_integer() || node.get<long long>() < 0) {
        throw ConfigError(field, "expected a non-negative integer");
    }
    return node.get<std::size_t>();
}

double read_real(const json& node, const std::string& field) {
    if (!node.is_number() || !std::isfinite(node.get<double>())) {
        throw ConfigError(field, "expected a finite number");
    }
    return node.get<double>();
}

AtomicMeasure read_measure(const json& node) {
    if (!node.is_object() || !node.contains("atoms")) {
        throw ConfigError("measure", "expected an object with an \"atoms\" array");
    }
    const json& list = node["atoms"];
    if (!list.is_array() || list.empty()) {
        throw ConfigError("measure.atoms", "expected a non-empty array");
    }
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string field = "measure.atoms[" + std::to_string(i) + "]";
        const json& entry = list[i];
        if (!entry.is_object()) {
            throw ConfigError(field, "expected an object");
        }
        const bool has_angle = entry.contains("angle");
        const bool has_point = entry.contains("point");
        if (has_angle == has_point) {
            throw ConfigError(field, "exactly one of \"angle\" or \"point\" is required");
        }
        double weight = 1.0;
        if (entry.contains("weight")) {
            weight = read_real(entry["weight"], field + ".weight");
            if (!(weight > 0.0)) {
                throw ConfigError(field + ".weight", "weight must be positive");
            }
        }
        try {
            if (has_angle) {
                atoms.push_back({UnitPoint::from_angle(read_real(entry["angle"], field + ".angle")), weight});
            } else {
                atoms.push_back({UnitPoint(read_complex(entry["point"], field + ".point")), weight});
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const InvalidArgument& e) {
            throw ConfigError(field + (has_angle ? ".angle" : ".point"), e.what());
        }
    }
    try {
        return AtomicMeasure(std::move(atoms));
    } catch (const InvalidArgument& e) {
        throw ConfigError("measure.atoms", e.what());
    }
}

AnalyticFn read_function(const json& node) {
    if (!node.is_object()) {
        throw ConfigError("function", "expected an object");
    }
    if (!node.contains("polynomial") && !node.contains("geometric")) {
        throw ConfigError("function", "needs \"polynomial\" and/or \"geometric\"");
    }
    CoeffSeq poly;
    if (node.contains("polynomial")) {
        poly = CoeffSeq(read_complex_list(node["polynomial"], "function.polynomial"));
    }
    std::optional<GeometricTail> tail;
    if (node.contains("geometric")) {
        const json& g = node["geometric"];
        if (!g.is_object() || !g.contains("a") || !g.contains("rho")) {
            throw ConfigError("function.geometric", "expected {\"a\": [re, im], \"rho\": [re, im]}");
        }
        tail = GeometricTail{read_complex(g["a"], "function.geometric.a"),
                             read_complex(g["rho"], "function.geometric.rho")};
        if (!(std::abs(tail->rho) < 1.0)) {
            throw ConfigError("function.geometric.rho", "|rho| must be < 1");
        }
    }
    return AnalyticFn(std::move(poly), tail);
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_list_json(std::span<const Complex> values) {
    json out = json::array();
    for (Complex z : values) {
        out.push_back(complex_json(z));
    }
    return out;
}

json measure_json(const AtomicMeasure& mu) {
    json atoms = json::array();
    for (const Atom& atom : mu.atoms()) {
        atoms.push_back({{"point", complex_json(atom.point.value())}, {"weight", atom.weight}});
    }
    return {{"atoms", atoms}};
}

json function_json(const AnalyticFn& f) {
    json out = json::object();
    out["polynomial"] = complex_list_json(f.poly().coeffs());
    if (const auto& t = f.tail()) {
        out["geometric"] = {{"a", complex_json(t->a)}, {"rho", complex_json(t->rho)}};
    }
    return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const AtomicMeasure& need_measure(const RunConfig& c) {
    if (!c.measure) {
        throw ConfigError("measure", "required");
    }
    return *c.measure;
}

const AnalyticFn& need_function(const RunConfig& c) {
    if (!c.function) {
        throw ConfigError("function", "required");
    }
    return *c.function;
}

std::size_t need_degree(const RunConfig& c) {
    if (!c.degree) {
        throw ConfigError("degree", "required");
    }
    return *c.degree;
}

void require_json(const RunConfig& c, const char* command) {
    if (c.format.value_or(Format::kJson) != Format::kJson) {
        throw ConfigError("format", std::string(command) + " only supports json output");
    }
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") {
        return Format::kJson;
    }
    if (name == "csv") {
        return Format::kCsv;
    }
    throw ConfigError("format", "expected \"json\" or \"csv\", got \"" + std::string(name) + "\"");
}

RunConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config", "top level must be an object");
    }

    RunConfig config;
    if (root.contains("measure")) {
        config.measure = read_measure(root["measure"]);
    }
    if (root.contains("function")) {
        config.function = read_function(root["function"]);
    } else if (root.contains("monomial_coefficients")) {
        config.function =
            AnalyticFn(CoeffSeq(read_complex_list(root["monomial_coefficients"], "monomial_coefficients")));
    }
    if (root.contains("degree")) {
        config.degree = read_index(root["degree"], "degree");
    }
    if (root.contains("degree_range")) {
        const json& r = root["degree_range"];
        if (!r.is_array() || r.size() != 2) {
            throw ConfigError("degree_range", "expected [n0, n1]");
        }
        config.degree_range = {read_index(r[0], "degree_range[0]"), read_index(r[1], "degree_range[1]")};
    }
    if (root.contains("count")) {
        config.count = read_index(root["count"], "count");
    }
    if (root.contains("tolerances")) {
        const json& t = root["tolerances"];
        if (!t.is_object()) {
            throw ConfigError("tolerances", "expected an object");
        }
        if (t.contains("closed_vs_oracle")) {
            config.tol_closed_vs_oracle = read_real(t["closed_vs_oracle"], "tolerances.closed_vs_oracle");
            if (config.tol_closed_vs_oracle < 0.0) {
                throw ConfigError("tolerances.closed_vs_oracle", "must be non-negative");
            }
        }
    }
    if (root.contains("seed")) {
        if (!root["seed"].is_number_unsigned()) {
            throw ConfigError("seed", "expected a non-negative integer");
        }
        config.seed = root["seed"].get<std::uint64_t>();
    }
    if (root.contains("trials")) {
        config.trials = read_index(root["trials"], "trials");
    }
    if (root.contains("s_max")) {
        config.s_max = read_index(root["s_max"], "s_max");
    }
    if (root.contains("n_max")) {
        config.n_max = read_index(root["n_max"], "n_max");
    }
    if (root.contains("format")) {
        if (!root["format"].is_string()) {
            throw ConfigError("format", "expected a string");
        }
        config.format = parse_format(root["format"].get<std::string>());
    }
    return config;
}

std::string render_projection(const ProjectionResult& result, const AtomicMeasure& mu) {
    json doc;
    doc["degree"] = result.n;
    doc["measure"] = measure_json(mu);
    doc["monomial_coefficients"] = complex_list_json(result.monomial.padded(result.n + 1));
    doc["basis_b"] = complex_list_json(result.basis_b);
    doc["basis_c"] = complex_list_json(result.basis_c);
    doc["distance"] = result.distance;
    doc["boundary_values"] = complex_list_json(result.boundary_values);
    return dump(doc);
}

std::string render_report(const ValidationReport& report, std::uint64_t seed, std::size_t s_max,
                          std::size_t n_max) {
    json failures = json::array();
    for (const ValidationFailure& f : report.failures) {
        failures.push_back({{"trial", f.trial},
                            {"seed", f.seed},
                            {"points", complex_list_json(f.points)},
                            {"function", function_json(f.function)},
                            {"degree", f.n},
                            {"coeff_error", f.coeff_error},
                            {"distance_error", f.distance_error},
                            {"reason", f.reason}});
    }
    json doc;
    doc["seed"] = seed;
    doc["trials"] = report.trials;
    doc["s_max"] = s_max;
    doc["n_max"] = n_max;
    doc["tolerance"] = report.tolerance;
    doc["max_coeff_error"] = report.max_coeff_error;
    doc["max_distance_error"] = report.max_distance_error;
    doc["max_residual_norm_error"] = report.max_residual_norm_error;
    doc["max_fast_path_error"] = report.max_fast_path_error;
    doc["fast_path_trials"] = report.fast_path_trials;
    doc["passed"] = report.failures.empty();
    doc["failures"] = failures;
    return dump(doc);
}

CommandOutput cmd_project(const RunConfig& config) {
    require_json(config, "project");
    const AtomicMeasure& mu = need_measure(config);
    const ProjectionResult result = project(need_function(config), mu, need_degree(config));
    return {kOk, render_projection(result, mu), {}};
}

CommandOutput cmd_distance(const RunConfig& config) {
    require_json(config, "distance");
    const std::size_t n = need_degree(config);
    const double d = distance(need_function(config), need_measure(config), n);
    return {kOk, dump({{"degree", n}, {"distance", d}}), {}};
}

CommandOutput cmd_basis(const RunConfig& config) {
    require_json(config, "basis");
    const AtomicMeasure& mu = need_measure(config);
    if (!config.count) {
        throw ConfigError("count", "required");
    }
    const std::size_t m = *config.count;
    const std::vector<BasisPoly> basis = basis_polys(mu, m);

    double residual = 0.0;
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
            const Complex g = dmu_inner(AnalyticFn(basis[i].coeffs), AnalyticFn(basis[j].coeffs), mu);
            residual = std::max(residual, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    json list = json::array();
    for (const BasisPoly& p : basis) {
        list.push_back({{"index", p.index}, {"coefficients", complex_list_json(p.coeffs.coeffs())}});
    }
    return {kOk, dump({{"count", m}, {"basis", list}, {"orthonormality_residual", residual}}), {}};
}

CommandOutput cmd_converge(const RunConfig& config) {
    if (!config.degree_range) {
        throw ConfigError("degree_range", "required");
    }
    const auto [n0, n1] = *config.degree_range;
    if (n0 > n1) {
        throw ConfigError("degree_range", "n0 must not exceed n1");
    }
    const AtomicMeasure& mu = need_measure(config);
    const AnalyticFn& f = need_function(config);
    if (n0 + 1 < mu.size()) {
        throw UnsupportedDegree(static_cast<long>(n0), mu.size());
    }

    struct Row {
        std::size_t n;
        double distance;
        std::optional<double> ratio;
    };
    std::vector<Row> rows;
    for (std::size_t n = n0; n <= n1; ++n) {
        Row row{n, distance(f, mu, n), std::nullopt};
        if (!rows.empty() && rows.back().distance > 0.0) {
            row.ratio = row.distance / rows.back().distance;
        }
        rows.push_back(row);
    }

    if (config.format.value_or(Format::kCsv) == Format::kJson) {
        json list = json::array();
        for (const Row& r : rows) {
            list.push_back({{"n", r.n},
                            {"distance", r.distance},
                            {"distance_ratio", r.ratio ? json(*r.ratio) : json(nullptr)}});
        }
        return {kOk, dump({{"rows", list}}), {}};
    }
    std::string csv = "n,distance,distance_ratio\n";
    for (const Row& r : rows) {
        csv += std::to_string(r.n) + "," + format_double(r.distance) + "," +
               (r.ratio ? format_double(*r.ratio) : std::string()) + "\n";
    }
    return {kOk, std::move(csv), {}};
}

CommandOutput cmd_verify(const RunConfig& config) {
    require_json(config, "verify");
    if (config.trials < 1) {
        throw ConfigError("trials", "must be at least 1");
    }
    if (config.s_max < 1) {
        throw ConfigError("s_max", "must be at least 1");
    }
    if (config.n_max + 1 < config.s_max) {
        throw ConfigError("n_max", "must be at least s_max - 1");
    }
    const ValidationReport report = cross_validate(config.seed, config.trials, config.s_max,
                                                   config.n_max, config.tol_closed_vs_oracle);
    std::string diagnostic;
    if (!report.failures.empty()) {
        diagnostic = std::to_string(report.failures.size()) + " of " + std::to_string(report.trials) +
                     " trials failed";
    }
    return {report.failures.empty() ? kOk : kValidationFailed,
            render_report(report, config.seed, config.s_max, config.n_max), diagnostic};
}

CommandOutput run_command(std::string_view name, const RunConfig& config) {
    try {
        if (name == "project") {
            return cmd_project(config);
        }
        if (name == "distance") {
            return cmd_distance(config);
        }
        if (name == "basis") {
            return cmd_basis(config);
        }
        if (name == "converge") {
            return cmd_converge(config);
        }
        if (name == "verify") {
            return cmd_verify(config);
        }
        return {kConfigError, {}, "unknown command \"" + std::string(name) + "\""};
    } catch (const UnsupportedDegree& e) {
        return {kUnsupportedDegree, {}, e.what()};
    } catch (const InvalidArgument& e) {
        return {kConfigError, {}, e.what()};
    } catch (const Error& e) {
        return {kConsistencyFailure, {}, e.what()};
    }
}

}  // namespace dmu::cli
