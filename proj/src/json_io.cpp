#include "bgp/json_io.hpp"

#include <string>

namespace bgp {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

GrowthKind kind_from_string(const std::string& s) {
    if (s == "constant") return GrowthKind::kConstant;
    if (s == "piecewise_random") return GrowthKind::kPiecewiseRandom;
    if (s == "shrinking_anisotropic") return GrowthKind::kShrinkingAnisotropic;
    throw std::invalid_argument("unknown growth kind: " + s);
}

std::string kind_to_string(GrowthKind k) {
    switch (k) {
        case GrowthKind::kConstant: return "constant";
        case GrowthKind::kPiecewiseRandom: return "piecewise_random";
        case GrowthKind::kShrinkingAnisotropic: return "shrinking_anisotropic";
    }
    return "constant";
}

}  // namespace

json polygon_to_json(const ConvexBody& body) {
    json verts = json::array();
    for (const Vec2& v : body.vertices()) verts.push_back({v.x, v.y});
    return json{{"vertices", std::move(verts)}};
}

ConvexBody polygon_from_json(const json& j) {
    const json& verts = require(j, "vertices");
    if (!verts.is_array() || verts.empty()) {
        throw std::invalid_argument("polygon: \"vertices\" must be a non-empty array");
    }
    std::vector<Vec2> pts;
    pts.reserve(verts.size());
    for (const json& v : verts) {
        if (!v.is_array() || v.size() != 2) {
            throw std::invalid_argument("polygon: vertex must be [x, y]");
        }
        pts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return ConvexBody::hull_of(std::move(pts));
}

json region_to_json(const Region& region) {
    json comps = json::array();
    for (const ConvexBody& c : region.components()) comps.push_back(polygon_to_json(c));
    return json{{"components", std::move(comps)}};
}

Region region_from_json(const json& j) {
    const json& comps = require(j, "components");
    if (!comps.is_array()) {
        throw std::invalid_argument("region: \"components\" must be an array");
    }
    std::vector<ConvexBody> bodies;
    bodies.reserve(comps.size());
    for (const json& c : comps) bodies.push_back(polygon_from_json(c));
    return Region(std::move(bodies));
}

json certificate_to_json(const Certificate& cert) {
    return json{{"schema_version", kSchemaVersion},
                {"t", cert.t},
                {"mesh", cert.mesh},
                {"gap", cert.gap},
                {"bound", cert.bound},
                {"depth", cert.depth},
                {"converged", cert.converged},
                {"empty", cert.empty_region},
                {"approximate", cert.approximate}};
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.t = require(j, "t").get<double>();
    c.mesh = require(j, "mesh").get<double>();
    c.gap = require(j, "gap").get<double>();
    c.bound = require(j, "bound").get<double>();
    c.depth = require(j, "depth").get<int>();
    c.converged = require(j, "converged").get<bool>();
    c.empty_region = require(j, "empty").get<bool>();
    c.approximate = require(j, "approximate").get<bool>();
    return c;
}

json trajectory_to_json(const Trajectory& trajectory) {
    json snaps = json::array();
    for (const TrajectorySnapshot& s : trajectory.snapshots) {
        snaps.push_back(json{{"t", s.t}, {"region", region_to_json(s.region)}});
    }
    return json{{"schema_version", kSchemaVersion}, {"snapshots", std::move(snaps)}};
}

Trajectory trajectory_from_json(const json& j) {
    Trajectory traj;
    for (const json& s : require(j, "snapshots")) {
        traj.snapshots.push_back(
            {require(s, "t").get<double>(), region_from_json(require(s, "region"))});
    }
    return traj;
}

json suite_report_to_json(const SuiteReport& report) {
    json checks = json::array();
    for (const SuiteCheck& c : report.checks) {
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"measured", c.measured},
                              {"limit", c.limit},
                              {"detail", c.detail}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"all_pass", report.all_pass()},
                {"checks", std::move(checks)}};
}

Scenario scenario_from_json(const json& j) {
    const json& w = require(j, "window");
    if (!w.is_array() || w.size() != 4) {
        throw std::invalid_argument("scenario: \"window\" must be [x0, y0, x1, y1]");
    }
    Window window(w[0].get<double>(), w[1].get<double>(), w[2].get<double>(),
                  w[3].get<double>());
    double t0 = require(j, "t0").get<double>();
    double horizon = require(j, "T").get<double>();
    if (!(t0 < horizon)) throw std::invalid_argument("scenario: need t0 < T");
    std::uint64_t seed = require(j, "seed").get<std::uint64_t>();

    const json& jb = require(j, "births");
    std::string btype = require(jb, "type").get<std::string>();
    BirthsConfig births = ExplicitBirthsConfig{};
    if (btype == "poisson") {
        NucleationSpec spec{{}, {}, polygon_from_json(require(jb, "germ"))};
        if (jb.contains("rate")) {
            spec.rate_breakpoints = {t0, horizon};
            spec.rates = {require(jb, "rate").get<double>()};
        } else {
            spec.rate_breakpoints =
                require(jb, "rate_breakpoints").get<std::vector<double>>();
            spec.rates = require(jb, "rate_values").get<std::vector<double>>();
        }
        spec.validate(t0, horizon);
        births = PoissonBirthsConfig{std::move(spec)};
    } else if (btype == "explicit") {
        ExplicitBirthsConfig cfg;
        for (const json& e : require(jb, "events")) {
            cfg.events.push_back({require(e, "t").get<double>(),
                                  polygon_from_json(require(e, "germ"))});
        }
        births = std::move(cfg);
    } else {
        throw std::invalid_argument("scenario: unknown births type: " + btype);
    }

    const json& jg = require(j, "growth");
    std::string gtype = require(jg, "type").get<std::string>();
    GrowthConfig growth = PiecewiseGrowthConfig{};
    if (gtype == "piecewise") {
        PiecewiseGrowthConfig cfg;
        cfg.breakpoints = require(jg, "breakpoints").get<std::vector<double>>();
        for (const json& p : require(jg, "pieces")) {
            cfg.pieces.push_back(polygon_from_json(p));
        }
        cfg.bound = polygon_from_json(require(jg, "K"));
        growth = std::move(cfg);
    } else if (gtype == "constant") {
        PiecewiseGrowthConfig cfg;
        cfg.breakpoints = {t0, horizon};
        cfg.pieces = {polygon_from_json(require(jg, "K"))};
        cfg.bound = cfg.pieces.front();
        growth = std::move(cfg);
    } else if (gtype == "generated") {
        GeneratedGrowthConfig cfg;
        cfg.kind = kind_from_string(require(jg, "kind").get<std::string>());
        cfg.bound = polygon_from_json(require(jg, "K"));
        if (jg.contains("pieces")) cfg.pieces = jg["pieces"].get<int>();
        growth = std::move(cfg);
    } else if (gtype == "ball_approx") {
        BallApproxGrowthConfig cfg;
        cfg.radius_fn = require(jg, "radius_fn").get<std::string>();
        if (jg.contains("r0")) cfg.r0 = jg["r0"].get<double>();
        if (jg.contains("n_sides")) cfg.n_sides = jg["n_sides"].get<int>();
        if (cfg.n_sides < 3) throw std::invalid_argument("ball_approx: n_sides >= 3");
        growth = std::move(cfg);
    } else {
        throw std::invalid_argument("scenario: unknown growth type: " + gtype);
    }

    return Scenario{window, t0, horizon, seed, std::move(births), std::move(growth)};
}

json scenario_to_json(const Scenario& scenario) {
    json j{{"schema_version", kSchemaVersion},
           {"window", {scenario.window.x0, scenario.window.y0, scenario.window.x1,
                       scenario.window.y1}},
           {"t0", scenario.t0},
           {"T", scenario.horizon},
           {"seed", scenario.seed}};

    std::visit(
        [&](const auto& cfg) {
            using T = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<T, PoissonBirthsConfig>) {
                json b{{"type", "poisson"}, {"germ", polygon_to_json(cfg.spec.germ)}};
                if (cfg.spec.rates.size() == 1) {
                    b["rate"] = cfg.spec.rates.front();
                } else {
                    b["rate_breakpoints"] = cfg.spec.rate_breakpoints;
                    b["rate_values"] = cfg.spec.rates;
                }
                j["births"] = std::move(b);
            } else {
                json events = json::array();
                for (const BirthEvent& e : cfg.events) {
                    events.push_back(json{{"t", e.time}, {"germ", polygon_to_json(e.germ)}});
                }
                j["births"] = json{{"type", "explicit"}, {"events", std::move(events)}};
            }
        },
        scenario.births);

    std::visit(
        [&](const auto& cfg) {
            using T = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<T, PiecewiseGrowthConfig>) {
                json pieces = json::array();
                for (const ConvexBody& p : cfg.pieces) pieces.push_back(polygon_to_json(p));
                j["growth"] = json{{"type", "piecewise"},
                                   {"breakpoints", cfg.breakpoints},
                                   {"pieces", std::move(pieces)},
                                   {"K", polygon_to_json(cfg.bound)}};
            } else if constexpr (std::is_same_v<T, GeneratedGrowthConfig>) {
                j["growth"] = json{{"type", "generated"},
                                   {"kind", kind_to_string(cfg.kind)},
                                   {"K", polygon_to_json(cfg.bound)},
                                   {"pieces", cfg.pieces}};
            } else {
                j["growth"] = json{{"type", "ball_approx"},
                                   {"radius_fn", cfg.radius_fn},
                                   {"r0", cfg.r0},
                                   {"n_sides", cfg.n_sides}};
            }
        },
        scenario.growth);

    return j;
}

}  // namespace bgp
