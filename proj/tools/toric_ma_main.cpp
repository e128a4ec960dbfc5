#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "toric/capacity.hpp"
#include "toric/json_io.hpp"
#include "toric/mixedvol.hpp"
#include "toric/solver.hpp"

namespace {

using toric::io::json;

struct Params {
    double tol = 1e-8;
    double box_radius = 8.0;
    double grid_radius = 8.0;
    double grid_mesh = 0.5;
    double lambda = 1.0;
    double r = 1.0;
    long seed = 0;
    std::string out = "json";
    bool timing = false;
};

struct OptRefs {
    CLI::Option* tol = nullptr;
    CLI::Option* box_radius = nullptr;
    CLI::Option* grid = nullptr;
    CLI::Option* lambda = nullptr;
    CLI::Option* r = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* out = nullptr;
};

void parse_grid(const std::string& text, Params& prm) {
    std::size_t x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= text.size())
        throw toric::ValidationError("InvalidParameter", "--grid expects RADIUSxMESH, e.g. 8x0.5");
    try {
        prm.grid_radius = std::stod(text.substr(0, x));
        prm.grid_mesh = std::stod(text.substr(x + 1));
    } catch (const std::exception&) {
        throw toric::ValidationError("InvalidParameter", "--grid expects RADIUSxMESH, e.g. 8x0.5");
    }
}

// accepts one document holding {"bodies": [...]} or a bare array, or several
// documents each holding one body
std::vector<toric::ConvexBody> bodies_from(const std::vector<json>& inputs) {
    std::vector<toric::ConvexBody> bodies;
    for (const json& j : inputs) {
        const json* arr = nullptr;
        if (j.is_array()) arr = &j;
        else if (j.is_object() && j.contains("bodies")) arr = &j.at("bodies");
        if (arr) {
            for (const auto& b : *arr) bodies.push_back(toric::io::body_from_json(b));
        } else {
            bodies.push_back(toric::io::body_from_json(j));
        }
    }
    if (bodies.empty()) throw toric::ValidationError("InvalidInput", "expected at least one body");
    return bodies;
}

json run_kind(const std::string& kind, const std::vector<json>& inputs, const Params& prm) {
    auto need = [&](std::size_t n) {
        if (inputs.size() != n)
            throw toric::ValidationError("InvalidInput", kind + " expects " + std::to_string(n) +
                                                             " input document(s)");
    };
    if (kind == "mass") {
        need(1);
        toric::PLConvexFunction h = toric::io::pl_from_json(inputs[0]);
        toric::MAResult m = toric::ma(h);
        json out = toric::io::to_json(m);
        out["full_mass"] = toric::full_mass_check(h, prm.tol);
        return out;
    }
    if (kind == "solve") {
        need(2);
        toric::ConvexBody P = toric::io::body_from_json(inputs[0]);
        toric::DiscreteMeasure mu = toric::io::measure_from_json(inputs[1]);
        return toric::io::to_json(toric::solve_ma(P, mu, prm.box_radius, prm.tol));
    }
    if (kind == "aubin-yau") {
        need(2);
        toric::ConvexBody P = toric::io::body_from_json(inputs[0]);
        toric::DiscreteMeasure mu = toric::io::measure_from_json(inputs[1]);
        return toric::io::to_json(toric::solve_aubin_yau(P, mu, prm.lambda, prm.box_radius, prm.tol));
    }
    if (kind == "mixed-volume") {
        return json{{"mv", toric::mixed_volume(bodies_from(inputs))}};
    }
    if (kind == "bm-check") {
        toric::BMCheck c = toric::brunn_minkowski_check(bodies_from(inputs));
        return json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
    }
    if (kind == "log-concavity") {
        need(1);
        const json& j = inputs[0];
        toric::ConvexBody P0 = toric::io::body_from_json(j.at("P0"));
        toric::ConvexBody P1 = toric::io::body_from_json(j.at("P1"));
        std::vector<double> ts;
        if (j.contains("t_samples"))
            for (const auto& t : j.at("t_samples")) ts.push_back(t.get<double>());
        else
            for (int i = 1; i <= 9; ++i) ts.push_back(i / 10.0);
        return json{{"holds", toric::log_concavity_check(P0, P1, ts)}};
    }
    if (kind == "capacity") {
        need(1);
        const json& j = inputs[0];
        toric::CompactRegion K = toric::io::region_from_json(j.at("K"));
        toric::ConvexBody P = toric::io::body_from_json(j.at("P"));
        toric::CapacityReport rep =
            toric::capacity(K, P, toric::GridSpec{prm.grid_radius, prm.grid_mesh});
        return json{{"cap_mass", rep.cap_mass},
                    {"cap_energy", rep.cap_energy},
                    {"extremal", toric::io::to_json(rep.extremal)}};
    }
    if (kind == "envelope") {
        need(1);
        const json& j = inputs[0];
        toric::PLConvexFunction u = toric::io::pl_from_json(j.at("u"));
        toric::PLConvexFunction v = toric::io::pl_from_json(j.at("v"));
        std::string mode = j.contains("mode") ? j.at("mode").get<std::string>() : "rooftop";
        if (mode == "rooftop")
            return json{{"result", toric::io::to_json(toric::rooftop(u, v))}};
        if (mode == "singularity")
            return json{{"result", toric::io::to_json(toric::singularity_envelope(u, v, prm.tol))}};
        throw toric::ValidationError("InvalidInput", "mode must be rooftop or singularity");
    }
    if (kind == "recover-body") {
        need(1);
        toric::PLConvexFunction h = toric::io::pl_from_json(inputs[0]);
        return json{{"body", toric::io::to_json(toric::body_from_subgradients(h, prm.box_radius))}};
    }
    if (kind == "is-model") {
        need(1);
        toric::PLConvexFunction h = toric::io::pl_from_json(inputs[0]);
        toric::ModelCheck c = toric::is_model(h, prm.r);
        return json{{"model", c.model}, {"gap", c.gap}};
    }
    if (kind == "uniform-bound") {
        need(1);
        const json& j = inputs[0];
        toric::ConvexBody P = toric::io::body_from_json(j.at("P"));
        const json& d = j.at("density");
        toric::DensityBox density;
        for (const auto& c : d.at("lo")) density.lo.push_back(c.get<double>());
        for (const auto& c : d.at("hi")) density.hi.push_back(c.get<double>());
        density.total = d.at("total").get<double>();
        std::vector<int> levels;
        for (const auto& l : j.at("levels")) levels.push_back(l.get<int>());
        std::vector<double> D = toric::uniform_bound_diagnostic(P, density, levels);
        return json{{"levels", levels}, {"D", D}};
    }
    throw toric::ValidationError("InvalidInput", "unknown scenario kind: " + kind);
}

json scenario_echo(const std::string& kind, const Params& prm) {
    json params;
    params["tol"] = prm.tol;
    params["box_radius"] = prm.box_radius;
    params["grid"] = std::to_string(prm.grid_radius) + "x" + std::to_string(prm.grid_mesh);
    params["lambda"] = prm.lambda;
    params["r"] = prm.r;
    params["seed"] = prm.seed;
    return json{{"kind", kind}, {"params", params}};
}

Params params_for_batch_entry(const json& entry, Params base) {
    if (!entry.contains("params")) return base;
    const json& p = entry.at("params");
    if (p.contains("tol")) base.tol = p.at("tol").get<double>();
    if (p.contains("box_radius")) base.box_radius = p.at("box_radius").get<double>();
    if (p.contains("grid")) parse_grid(p.at("grid").get<std::string>(), base);
    if (p.contains("lambda")) base.lambda = p.at("lambda").get<double>();
    if (p.contains("r")) base.r = p.at("r").get<double>();
    return base;
}

int batch_threads() {
    if (const char* env = std::getenv("TORIC_MA_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 2;
}

// runs entries concurrently in waves; results keep input order
json run_batch(const json& doc, const Params& base, int& exit_code) {
    if (!doc.is_object() || !doc.contains("scenarios") || !doc.at("scenarios").is_array())
        throw toric::ValidationError("InvalidInput", "batch expects {\"scenarios\": [...]}");
    const json& scenarios = doc.at("scenarios");
    std::vector<json> results(scenarios.size());
    std::vector<int> codes(scenarios.size(), 0);
    auto run_one = [&](std::size_t idx) {
        const json& entry = scenarios[idx];
        try {
            std::string kind = entry.at("kind").get<std::string>();
            std::vector<json> inputs;
            if (entry.contains("input")) {
                if (entry.at("input").is_array() && kind != "mixed-volume" && kind != "bm-check")
                    for (const auto& e : entry.at("input")) inputs.push_back(e);
                else
                    inputs.push_back(entry.at("input"));
            }
            Params prm = params_for_batch_entry(entry, base);
            json out = run_kind(kind, inputs, prm);
            out["scenario"] = scenario_echo(kind, prm);
            results[idx] = std::move(out);
        } catch (const toric::ConvergenceError& e) {
            results[idx] = json{{"error", {{"code", e.code()}, {"message", e.what()}}}};
            codes[idx] = 2;
        } catch (const std::exception& e) {
            std::string code = "InvalidInput";
            if (const auto* v = dynamic_cast<const toric::Error*>(&e)) code = v->code();
            results[idx] = json{{"error", {{"code", code}, {"message", e.what()}}}};
            codes[idx] = 1;
        }
    };
    int T = batch_threads();
    for (std::size_t base_idx = 0; base_idx < scenarios.size(); base_idx += std::size_t(T)) {
        std::vector<std::future<void>> wave;
        for (std::size_t i = base_idx; i < std::min(scenarios.size(), base_idx + std::size_t(T)); ++i)
            wave.push_back(std::async(std::launch::async, run_one, i));
        for (auto& f : wave) f.get();
    }
    for (int c : codes) exit_code = std::max(exit_code, c);
    return json{{"results", results}};
}

// long-form CSV: one key,value row per scalar, arrays indexed by position
void flatten_csv(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten_csv(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten_csv(v, prefix + "." + std::to_string(i++), os);
    } else {
        os << prefix << "," << j.dump() << "\n";
    }
}

void emit(const json& result, const Params& prm) {
    if (prm.out == "csv") {
        std::cout << "key,value\n";
        flatten_csv(result, "", std::cout);
    } else {
        std::cout << result.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric-ma: discrete real Monge-Ampere measures, solvers, envelopes,\n"
                 "mixed volumes and capacities for piecewise linear convex functions.\n"
                 "Option precedence: command line > --config file > built-in defaults."};
    app.require_subcommand(1);

    Params prm;
    std::string grid_text, config_path;
    std::map<const CLI::App*, OptRefs> refs;
    std::map<const CLI::App*, std::pair<std::string, std::string>> positionals;

    const char* kinds[] = {"mass",      "solve",    "aubin-yau",    "mixed-volume",
                           "bm-check",  "log-concavity", "capacity", "envelope",
                           "recover-body", "is-model", "uniform-bound", "batch"};
    const char* descs[] = {
        "measure of a piecewise linear convex function",
        "solve MA(h) = mu with a Dirichlet frame",
        "solve MA(h) = e^(lambda h) mu",
        "mixed volume of n bodies",
        "mixed volume vs product of volume roots",
        "volume-root concavity along a Minkowski segment",
        "relative capacity of a box union",
        "rooftop or singularity envelope of two functions",
        "recover a body from subgradient data",
        "test whether a function has model-type singularity",
        "solver distance to the support function under refinement",
        "run several scenarios from one file"};
    for (std::size_t i = 0; i < 12; ++i) {
        CLI::App* sub = app.add_subcommand(kinds[i], descs[i]);
        sub->add_option("input", positionals[sub].first,
                        "input document: inline JSON or a file path");
        sub->add_option("input2", positionals[sub].second,
                        "second input document where the scenario takes two");
        OptRefs& o = refs[sub];
        o.tol = sub->add_option("--tol", prm.tol, "numeric tolerance (default 1e-8)");
        o.box_radius =
            sub->add_option("--box-radius", prm.box_radius, "node box / sample radius (default 8)");
        o.grid = sub->add_option("--grid", grid_text, "grid as RADIUSxMESH, e.g. 8x0.5");
        o.lambda = sub->add_option("--lambda", prm.lambda, "zero order coefficient (default 1)");
        o.r = sub->add_option("--r", prm.r, "reference profile scale (default 1)");
        o.seed = sub->add_option("--seed", prm.seed, "seed echoed into the scenario record");
        o.out = sub->add_option("--out", prm.out, "output format: json or csv")
                    ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--config", config_path, "JSON file with default parameters");
        sub->add_flag("--timing", prm.timing, "include wall time in the result document");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"error", {{"code", "InvalidInput"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    int exit_code = 0;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw toric::ValidationError("InvalidInput", "cannot open config: " + config_path);
            json cfg = json::parse(in, nullptr, false);
            if (cfg.is_discarded())
                throw toric::ValidationError("InvalidInput", "malformed config JSON");
            const OptRefs& o = refs[sub];
            if (!o.tol->count() && cfg.contains("tol")) prm.tol = cfg.at("tol").get<double>();
            if (!o.box_radius->count() && cfg.contains("box_radius"))
                prm.box_radius = cfg.at("box_radius").get<double>();
            if (!o.grid->count() && cfg.contains("grid"))
                grid_text = cfg.at("grid").get<std::string>();
            if (!o.lambda->count() && cfg.contains("lambda"))
                prm.lambda = cfg.at("lambda").get<double>();
            if (!o.r->count() && cfg.contains("r")) prm.r = cfg.at("r").get<double>();
            if (!o.out->count() && cfg.contains("out")) prm.out = cfg.at("out").get<std::string>();
        }
        if (!grid_text.empty()) parse_grid(grid_text, prm);
        if (!(prm.tol > 0))
            throw toric::ValidationError("InvalidParameter", "tolerance must be positive");

        auto t0 = std::chrono::steady_clock::now();
        const auto& [pos1, pos2] = positionals[sub];
        std::vector<json> inputs;
        if (!pos1.empty()) inputs.push_back(toric::io::parse_input(pos1));
        if (!pos2.empty()) inputs.push_back(toric::io::parse_input(pos2));
        json result;
        if (sub->get_name() == "batch") {
            if (inputs.size() != 1)
                throw toric::ValidationError("InvalidInput", "batch expects one input document");
            result = run_batch(inputs[0], prm, exit_code);
            result["scenario"] = scenario_echo("batch", prm);
        } else {
            result = run_kind(sub->get_name(), inputs, prm);
            result["scenario"] = scenario_echo(sub->get_name(), prm);
        }
        if (prm.timing) {
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                            .count();
            result["wall_ms"] = ms;
        }
        emit(result, prm);
    } catch (const toric::ConvergenceError& e) {
        std::cerr << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const toric::Error& e) {
        std::cerr << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return exit_code;
}
