#include "stmr/scenario.hpp"

#include <fstream>
#include <map>
#include <set>
#include <vector>

namespace stmr {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ConfigError("unknown key '" + path + item.key() + "'");
        }
    }
}

template <typename T>
T get_or(const json& obj, const std::string& path, const std::string& key, T fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("bad value for '" + path + key + "': " + e.what());
    }
}

}  // namespace

std::string controller_kind_name(ControllerKind kind) {
    switch (kind) {
        case ControllerKind::stmr_pure_pursuit: return "stmr_pure_pursuit";
        case ControllerKind::stmr_motion_camouflage: return "stmr_motion_camouflage";
        case ControllerKind::vicsek: return "vicsek";
        case ControllerKind::cucker_smale: return "cucker_smale";
        case ControllerKind::wfi: return "wfi";
    }
    return "unknown";
}

std::optional<ControllerKind> controller_kind_from_name(const std::string& name) {
    static const std::map<std::string, ControllerKind> table = {
        {"stmr", ControllerKind::stmr_pure_pursuit},
        {"stmr_pure_pursuit", ControllerKind::stmr_pure_pursuit},
        {"stmr_motion_camouflage", ControllerKind::stmr_motion_camouflage},
        {"vicsek", ControllerKind::vicsek},
        {"cucker_smale", ControllerKind::cucker_smale},
        {"wfi", ControllerKind::wfi},
    };
    const auto it = table.find(name);
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

void validate_scenario(const ScenarioConfig& cfg) {
    const auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };
    if (cfg.n_agents < 2) fail("n_agents must be at least 2");
    if (!(cfg.dt > 0.0)) fail("dt must be positive");
    if (!(cfg.duration >= 0.0)) fail("duration must be nonnegative");
    if (!(cfg.v > 0.0)) fail("v must be positive");
    if (!(cfg.r_min > 0.0)) fail("r_min must be positive");
    if (!(cfg.controller.gain_k > 0.0)) fail("controller.gain_k must be positive");
    if (!(cfg.controller.omega_max > 0.0)) fail("controller.omega_max must be positive");
    if (!(cfg.controller.vicsek_radius > 0.0)) fail("controller.vicsek_radius must be positive");
    if (!(cfg.controller.vicsek_noise_eta >= 0.0)) fail("controller.vicsek_noise_eta must be nonnegative");
    if (!(cfg.controller.cs_strength >= 0.0)) fail("controller.cs_strength must be nonnegative");
    if (!(cfg.controller.cs_beta >= 0.0)) fail("controller.cs_beta must be nonnegative");
    if (cfg.controller.wfi_samples < 8) fail("controller.wfi_samples must be at least 8");
    if (!(cfg.dwell.mu_k >= 1.0)) fail("dwell.mu_k must be at least 1");
    if (!(cfg.dwell.lambda > 0.0)) fail("dwell.lambda must be positive");
    if (!(cfg.dwell.epsilon > 0.0 && cfg.dwell.epsilon < cfg.dwell.lambda)) {
        fail("dwell.epsilon must lie in (0, lambda)");
    }
    if (!(cfg.dwell.n0 >= 1.0)) fail("dwell.n0 must be at least 1");
    if (cfg.dwell.min_dwell_override && !(*cfg.dwell.min_dwell_override > 0.0)) {
        fail("dwell.min_dwell_override must be positive when given");
    }
    if (cfg.init.kind == InitSpec::Kind::explicit_poses) {
        if (static_cast<int>(cfg.init.poses.size()) != cfg.n_agents) {
            fail("init.poses must list exactly n_agents poses");
        }
        for (const PoseInit& p : cfg.init.poses) {
            if (p.v && !(*p.v > 0.0)) fail("init.poses[].v must be positive when given");
        }
    } else {
        if (!(cfg.init.x_min < cfg.init.x_max)) fail("init.x_min must be below init.x_max");
        if (!(cfg.init.y_min < cfg.init.y_max)) fail("init.y_min must be below init.y_max");
    }
}

ScenarioConfig scenario_from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    require_keys(j, "", {"n_agents", "v", "dt", "duration", "seed", "r_min", "single_agent",
                         "controller", "dwell", "init"});
    ScenarioConfig cfg;
    cfg.n_agents = get_or<int>(j, "", "n_agents", cfg.n_agents);
    cfg.v = get_or<double>(j, "", "v", cfg.v);
    cfg.dt = get_or<double>(j, "", "dt", cfg.dt);
    cfg.duration = get_or<double>(j, "", "duration", cfg.duration);
    cfg.seed = get_or<std::uint64_t>(j, "", "seed", cfg.seed);
    cfg.r_min = get_or<double>(j, "", "r_min", cfg.r_min);
    cfg.single_agent = get_or<bool>(j, "", "single_agent", cfg.single_agent);

    if (j.contains("controller")) {
        const json& c = j.at("controller");
        if (!c.is_object()) {
            throw ConfigError("config: 'controller' must be an object");
        }
        require_keys(c, "controller.",
                     {"kind", "gain_k", "omega_max", "vicsek_radius", "vicsek_noise_eta",
                      "cs_strength", "cs_beta", "wfi_samples"});
        ControllerConfig& ctrl = cfg.controller;
        if (c.contains("kind")) {
            const std::string name = c.at("kind").get<std::string>();
            const auto kind = controller_kind_from_name(name);
            if (!kind) {
                throw ConfigError("config: unknown controller.kind '" + name + "'");
            }
            ctrl.kind = *kind;
        }
        ctrl.gain_k = get_or<double>(c, "controller.", "gain_k", ctrl.gain_k);
        ctrl.omega_max = get_or<double>(c, "controller.", "omega_max", ctrl.omega_max);
        ctrl.vicsek_radius = get_or<double>(c, "controller.", "vicsek_radius", ctrl.vicsek_radius);
        ctrl.vicsek_noise_eta =
            get_or<double>(c, "controller.", "vicsek_noise_eta", ctrl.vicsek_noise_eta);
        ctrl.cs_strength = get_or<double>(c, "controller.", "cs_strength", ctrl.cs_strength);
        ctrl.cs_beta = get_or<double>(c, "controller.", "cs_beta", ctrl.cs_beta);
        ctrl.wfi_samples = get_or<int>(c, "controller.", "wfi_samples", ctrl.wfi_samples);
    }

    if (j.contains("dwell")) {
        const json& d = j.at("dwell");
        if (!d.is_object()) {
            throw ConfigError("config: 'dwell' must be an object");
        }
        require_keys(d, "dwell.",
                     {"mu_k", "lambda", "epsilon", "n0", "enforce", "min_dwell_override"});
        DwellTimeConfig& dw = cfg.dwell;
        dw.mu_k = get_or<double>(d, "dwell.", "mu_k", dw.mu_k);
        dw.lambda = get_or<double>(d, "dwell.", "lambda", dw.lambda);
        dw.epsilon = get_or<double>(d, "dwell.", "epsilon", dw.epsilon);
        dw.n0 = get_or<double>(d, "dwell.", "n0", dw.n0);
        dw.enforce = get_or<bool>(d, "dwell.", "enforce", dw.enforce);
        if (d.contains("min_dwell_override")) {
            dw.min_dwell_override = d.at("min_dwell_override").get<double>();
        }
    }

    if (j.contains("init")) {
        const json& in = j.at("init");
        if (!in.is_object()) {
            throw ConfigError("config: 'init' must be an object");
        }
        const std::string type = get_or<std::string>(in, "init.", "type", "random_box");
        if (type == "random_box") {
            require_keys(in, "init.", {"type", "x_min", "x_max", "y_min", "y_max"});
            cfg.init.kind = InitSpec::Kind::random_box;
            cfg.init.x_min = get_or<double>(in, "init.", "x_min", cfg.init.x_min);
            cfg.init.x_max = get_or<double>(in, "init.", "x_max", cfg.init.x_max);
            cfg.init.y_min = get_or<double>(in, "init.", "y_min", cfg.init.y_min);
            cfg.init.y_max = get_or<double>(in, "init.", "y_max", cfg.init.y_max);
        } else if (type == "explicit") {
            require_keys(in, "init.", {"type", "poses"});
            cfg.init.kind = InitSpec::Kind::explicit_poses;
            if (!in.contains("poses") || !in.at("poses").is_array()) {
                throw ConfigError("config: init.poses must be an array");
            }
            for (const json& p : in.at("poses")) {
                if (!p.is_object()) {
                    throw ConfigError("config: init.poses entries must be objects");
                }
                require_keys(p, "init.poses[].", {"x", "y", "theta", "v"});
                PoseInit pose;
                pose.x = get_or<double>(p, "init.poses[].", "x", 0.0);
                pose.y = get_or<double>(p, "init.poses[].", "y", 0.0);
                pose.theta = get_or<double>(p, "init.poses[].", "theta", 0.0);
                if (p.contains("v")) {
                    pose.v = p.at("v").get<double>();
                }
                cfg.init.poses.push_back(pose);
            }
        } else {
            throw ConfigError("config: init.type must be 'random_box' or 'explicit'");
        }
    }

    validate_scenario(cfg);
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    return scenario_from_json(j);
}

nlohmann::json resolved_config_json(const ScenarioConfig& cfg) {
    json poses = json::array();
    for (const PoseInit& p : resolve_init(cfg)) {
        poses.push_back({{"x", p.x}, {"y", p.y}, {"theta", p.theta}, {"v", *p.v}});
    }
    json dwell = {
        {"mu_k", cfg.dwell.mu_k},       {"lambda", cfg.dwell.lambda},
        {"epsilon", cfg.dwell.epsilon}, {"n0", cfg.dwell.n0},
        {"enforce", cfg.dwell.enforce},
    };
    if (cfg.dwell.min_dwell_override) {
        dwell["min_dwell_override"] = *cfg.dwell.min_dwell_override;
    }
    return json{
        {"n_agents", cfg.n_agents},
        {"v", cfg.v},
        {"dt", cfg.dt},
        {"duration", cfg.duration},
        {"seed", cfg.seed},
        {"r_min", cfg.r_min},
        {"single_agent", cfg.single_agent},
        {"controller",
         {{"kind", controller_kind_name(cfg.controller.kind)},
          {"gain_k", cfg.controller.gain_k},
          {"omega_max", cfg.controller.omega_max},
          {"vicsek_radius", cfg.controller.vicsek_radius},
          {"vicsek_noise_eta", cfg.controller.vicsek_noise_eta},
          {"cs_strength", cfg.controller.cs_strength},
          {"cs_beta", cfg.controller.cs_beta},
          {"wfi_samples", cfg.controller.wfi_samples}}},
        {"dwell", dwell},
        {"init", {{"type", "explicit"}, {"poses", poses}}},
    };
}

std::string config_hash_hex(const nlohmann::json& j) {
    const std::string dump = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}
