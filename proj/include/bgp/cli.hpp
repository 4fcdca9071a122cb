#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bgp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
    std::string scenario_path;
    double tol = 1e-3;
    int depth = 12;
    std::vector<double> times;  // defaults to {T}
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    int seeds_count = 200;  // validate only
};

/// Evolved regions at the requested times, with a convergence certificate
/// per time; writes trajectory.json and certificates.json.
int run_simulate(const RunConfig& config);

/// Gap-vs-mesh table across refinement depths 0..depth; writes gap.csv
/// (header depth,mesh,gap,bound). Nonzero exit if the gap column is not
/// weakly decreasing or exceeds the bound column.
int run_converge(const RunConfig& config);

/// Property suite over seeds_count derived seeds; writes
/// validate_report.json, prints one line per check, nonzero exit on any
/// failure.
int run_validate(const RunConfig& config);

/// One SVG per requested time (snapshot_<k>.svg in --times order).
int run_export_svg(const RunConfig& config);

}  // namespace bgp::cli
