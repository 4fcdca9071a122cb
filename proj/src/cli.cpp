#include "bgp/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bgp/json_io.hpp"
#include "bgp/rng.hpp"
#include "bgp/svg.hpp"

namespace bgp::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void print_error(int code, const std::string& message) {
    json err{{"schema_version", kSchemaVersion},
             {"error", {{"code", code}, {"message", message}}}};
    std::cout << err.dump() << "\n";
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

struct LoadedScenario {
    Scenario scenario;
    RealizedScenario realized;
};

LoadedScenario load_scenario(const RunConfig& config) {
    std::ifstream in(config.scenario_path);
    if (!in) {
        throw std::invalid_argument("scenario file not found: " + config.scenario_path);
    }
    json j = json::parse(in);  // parse_error propagates
    Scenario scenario = scenario_from_json(j);
    if (config.seed_override) scenario.seed = *config.seed_override;
    RealizedScenario realized = realize(scenario);
    return {std::move(scenario), std::move(realized)};
}

std::vector<double> resolve_times(const RunConfig& config, const Scenario& s) {
    std::vector<double> times = config.times;
    if (times.empty()) times = {s.horizon};
    std::sort(times.begin(), times.end());
    for (double t : times) {
        if (t < s.t0 - 1e-9 || t > s.horizon + 1e-9) {
            throw std::invalid_argument("requested time outside [t0, T]");
        }
    }
    return times;
}

void validate_common(const RunConfig& config) {
    if (!(config.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
    if (config.depth < 1 || config.depth > 20) {
        throw std::invalid_argument("depth must be in [1, 20]");
    }
    fs::create_directories(config.out_dir);
}

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Shared top-level error handling: input problems exit 2, exhausted
// refinement budgets exit 3.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const RefinementBudgetError& e) {
        print_error(kExitBudget, e.what());
        return kExitBudget;
    } catch (const json::exception& e) {
        print_error(kExitInputError, e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        print_error(kExitInputError, e.what());
        return kExitInputError;
    }
}

}  // namespace

int run_simulate(const RunConfig& config) {
    return guarded([&]() {
        validate_common(config);
        LoadedScenario loaded = load_scenario(config);
        std::vector<double> times = resolve_times(config, loaded.scenario);

        ThetaOptions opts;
        opts.max_depth = config.depth;
        Trajectory traj;
        json certs = json::array();
        for (double t : times) {
            ThetaResult r =
                theta(loaded.realized.births, loaded.realized.growth, t, config.tol, opts);
            traj.snapshots.push_back({t, std::move(r.region)});
            certs.push_back(certificate_to_json(r.certificate));
        }
        write_file(fs::path(config.out_dir) / "trajectory.json",
                   trajectory_to_json(traj).dump(2) + "\n");
        json cert_doc{{"schema_version", kSchemaVersion}, {"certificates", certs}};
        write_file(fs::path(config.out_dir) / "certificates.json", cert_doc.dump(2) + "\n");
        std::cout << "simulate: wrote " << traj.snapshots.size() << " snapshot(s) to "
                  << config.out_dir << "\n";
        return kExitOk;
    });
}

int run_converge(const RunConfig& config) {
    return guarded([&]() {
        validate_common(config);
        LoadedScenario loaded = load_scenario(config);
        std::vector<double> times = resolve_times(config, loaded.scenario);
        const double t = times.back();

        const BirthSchedule& births = loaded.realized.births;
        const GrowthProcess& growth = loaded.realized.growth;
        Partition pi = Partition::initial(births, growth, t);
        Region low = lower_sum(births, growth, pi);
        const double knorm = hausdorff_norm(growth.bound());

        std::string csv = "depth,mesh,gap,bound\n";
        double prev_gap = 0.0;
        bool monotone = true, bounded = true;
        for (int depth = 0; depth <= config.depth; ++depth) {
            Region up = upper_sum(births, growth, pi);
            double mesh = pi.mesh();
            double bound = mesh * (knorm + 1.0);
            double gap = region_hausdorff(low, up, std::max(bound / 200.0, 1e-12));
            csv += std::to_string(depth) + "," + csv_num(mesh) + "," + csv_num(gap) +
                   "," + csv_num(bound) + "\n";
            if (depth > 0 && gap > prev_gap + 1e-12) monotone = false;
            if (gap > bound) bounded = false;
            prev_gap = gap;
            pi = pi.refined();
        }
        write_file(fs::path(config.out_dir) / "gap.csv", csv);
        std::cout << "converge: wrote gap.csv (depths 0.." << config.depth << ")\n";
        if (!monotone || !bounded) {
            print_error(kExitCheckFailed,
                        !monotone ? "gap column is not weakly decreasing"
                                  : "gap exceeds the a-priori bound");
            return kExitCheckFailed;
        }
        return kExitOk;
    });
}

int run_validate(const RunConfig& config) {
    return guarded([&]() {
        validate_common(config);
        if (config.seeds_count < 1) {
            throw std::invalid_argument("seeds-count must be >= 1");
        }
        std::ifstream in(config.scenario_path);
        if (!in) {
            throw std::invalid_argument("scenario file not found: " + config.scenario_path);
        }
        Scenario base = scenario_from_json(json::parse(in));
        if (config.seed_override) base.seed = *config.seed_override;
        const int suite_depth = std::min(config.depth, 6);

        json results = json::array();
        bool all_pass = true;
        for (int i = 0; i < config.seeds_count; ++i) {
            Scenario s = base;
            s.seed = derive_stream(base.seed, static_cast<std::uint64_t>(i));
            RealizedScenario realized = realize(s);
            SuiteReport report = proposition_suite(realized.births, realized.growth,
                                                   s.horizon, suite_depth);
            if (!report.all_pass()) {
                all_pass = false;
                for (const SuiteCheck& c : report.checks) {
                    if (!c.pass) {
                        std::cout << "[FAIL] seed " << s.seed << " check " << c.name
                                  << " measured " << c.measured << " limit " << c.limit
                                  << (c.detail.empty() ? "" : " (" + c.detail + ")")
                                  << "\n";
                    }
                }
            }
            json r = suite_report_to_json(report);
            r["seed"] = s.seed;
            results.push_back(std::move(r));
        }
        json doc{{"schema_version", kSchemaVersion},
                 {"seeds", config.seeds_count},
                 {"all_pass", all_pass},
                 {"results", std::move(results)}};
        write_file(fs::path(config.out_dir) / "validate_report.json", doc.dump(2) + "\n");

        // summary per check name over all seeds
        if (!doc["results"].empty()) {
            for (const json& c : doc["results"][0]["checks"]) {
                std::string name = c["name"].get<std::string>();
                int failures = 0;
                for (const json& r : doc["results"]) {
                    for (const json& rc : r["checks"]) {
                        if (rc["name"] == name && !rc["pass"].get<bool>()) ++failures;
                    }
                }
                std::cout << (failures == 0 ? "[PASS] " : "[FAIL] ") << name << " ("
                          << config.seeds_count - failures << "/" << config.seeds_count
                          << " seeds)\n";
            }
        }
        std::cout << (all_pass ? "validate: all checks passed\n"
                               : "validate: FAILURES detected\n");
        return all_pass ? kExitOk : kExitCheckFailed;
    });
}

int run_export_svg(const RunConfig& config) {
    return guarded([&]() {
        validate_common(config);
        LoadedScenario loaded = load_scenario(config);
        std::vector<double> times = resolve_times(config, loaded.scenario);

        ThetaOptions opts;
        opts.max_depth = config.depth;
        for (std::size_t k = 0; k < times.size(); ++k) {
            ThetaResult r = theta(loaded.realized.births, loaded.realized.growth,
                                  times[k], config.tol, opts);
            std::vector<Vec2> markers;
            for (const BirthEvent& e : loaded.realized.births.events()) {
                if (e.time <= times[k]) markers.push_back(e.germ.vertex_centroid());
            }
            char name[32];
            std::snprintf(name, sizeof(name), "snapshot_%03zu.svg", k);
            write_file(fs::path(config.out_dir) / name,
                       render_svg(loaded.scenario.window, r.region, markers));
        }
        std::cout << "export-svg: wrote " << times.size() << " file(s) to "
                  << config.out_dir << "\n";
        return kExitOk;
    });
}

}  // namespace bgp::cli
