#include "ncgear/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ncgear {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& message) {
    throw ConfigError(origin + ": " + path + ": " + message);
}

const json& require(const json& j, const char* key, const std::string& origin,
                    const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) {
        fail(origin, path + "/" + key, "missing required field");
    }
    return *it;
}

double require_number(const json& j, const char* key, const std::string& origin,
                      const std::string& path) {
    const json& v = require(j, key, origin, path);
    if (!v.is_number()) fail(origin, path + "/" + key, "must be a number");
    return v.get<double>();
}

int require_int(const json& j, const char* key, const std::string& origin,
                const std::string& path) {
    const json& v = require(j, key, origin, path);
    if (!v.is_number_integer()) fail(origin, path + "/" + key, "must be an integer");
    return v.get<int>();
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

using TransmissionFactory = std::function<Transmission(const json&)>;

const std::map<std::string, TransmissionFactory>& transmission_registry() {
    static const std::map<std::string, TransmissionFactory> registry = {
        {"sinusoidal", [](const json& params) {
             if (!params.contains("b") || !params["b"].is_number()) {
                 throw ConfigError("transmission 'sinusoidal' needs numeric parameter 'b'");
             }
             return Transmission::sinusoidal(params["b"].get<double>());
         }},
    };
    return registry;
}

}  // namespace

RackProfile JobConfig::rack() const {
    return {module, alpha_deg * pi / 180.0, h_a_over_m * module, h_f_over_m * module,
            rho_over_m * module};
}

const std::vector<std::string>& known_outputs() {
    static const std::vector<std::string> outputs = {"svg", "dxf", "report", "mesh-report",
                                                     "base-curves"};
    return outputs;
}

JobConfig parse_config(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                          ": " + e.what());
    }
    if (!doc.is_object()) fail(origin, "", "top level must be a JSON object");

    JobConfig cfg;
    const json& tr = require(doc, "transmission", origin, "");
    if (!tr.is_object()) fail(origin, "/transmission", "must be an object");
    const json& name = require(tr, "name", origin, "/transmission");
    if (!name.is_string()) fail(origin, "/transmission/name", "must be a string");
    cfg.transmission_name = name.get<std::string>();
    cfg.transmission_params = tr.value("parameters", json::object());
    if (transmission_registry().find(cfg.transmission_name) == transmission_registry().end()) {
        fail(origin, "/transmission/name",
             "unknown transmission '" + cfg.transmission_name + "' (built in: sinusoidal)");
    }

    cfg.module = require_number(doc, "m", origin, "");
    if (!(cfg.module > 0.0)) fail(origin, "/m", "module must be positive");
    cfg.z1 = require_int(doc, "z1", origin, "");
    if (cfg.z1 < 3) fail(origin, "/z1", "tooth count must be >= 3");
    cfg.z2 = require_int(doc, "z2", origin, "");
    if (cfg.z2 != cfg.z1) fail(origin, "/z2", "must equal z1 (shared tooth midpoints)");
    cfg.alpha_deg = require_number(doc, "alpha_deg", origin, "");
    if (!(cfg.alpha_deg > 0.0 && cfg.alpha_deg < 90.0)) {
        fail(origin, "/alpha_deg", "profile angle must lie in (0, 90) degrees");
    }
    cfg.h_a_over_m = require_number(doc, "h_a_over_m", origin, "");
    cfg.h_f_over_m = require_number(doc, "h_f_over_m", origin, "");
    cfg.rho_over_m = require_number(doc, "rho_over_m", origin, "");

    if (doc.contains("tolerances")) {
        const json& tol = doc["tolerances"];
        if (!tol.is_object()) fail(origin, "/tolerances", "must be an object");
        if (tol.contains("quad")) cfg.tolerances.quad = tol["quad"].get<double>();
        if (tol.contains("root")) cfg.tolerances.root = tol["root"].get<double>();
        if (tol.contains("geom")) cfg.tolerances.geom = tol["geom"].get<double>();
        if (tol.contains("max_iter")) cfg.tolerances.max_iter = tol["max_iter"].get<int>();
        try {
            cfg.tolerances.validate();
        } catch (const GearError& e) {
            fail(origin, "/tolerances", e.what());
        }
    }

    const json& outputs = require(doc, "outputs", origin, "");
    if (!outputs.is_array()) fail(origin, "/outputs", "must be an array of output names");
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        const json& entry = outputs[i];
        if (!entry.is_string()) {
            fail(origin, "/outputs/" + std::to_string(i), "must be a string");
        }
        const std::string value = entry.get<std::string>();
        const auto& known = known_outputs();
        if (std::find(known.begin(), known.end(), value) == known.end()) {
            fail(origin, "/outputs/" + std::to_string(i),
                 "unknown output '" + value + "' (allowed: svg, dxf, report, mesh-report, "
                 "base-curves)");
        }
        cfg.outputs.push_back(value);
    }

    // rack invariants surfaced as config diagnostics
    try {
        cfg.rack().validate();
    } catch (const GearError& e) {
        fail(origin, "/h_f_over_m", e.what());
    }
    return cfg;
}

JobConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path.string());
}

Transmission make_transmission(const std::string& name, const nlohmann::json& params) {
    const auto& registry = transmission_registry();
    auto it = registry.find(name);
    if (it == registry.end()) {
        throw ConfigError("unknown transmission '" + name + "'");
    }
    return it->second(params);
}

Context build_context(const JobConfig& cfg) {
    Transmission tr = make_transmission(cfg.transmission_name, cfg.transmission_params);
    return Context(std::move(tr), cfg.rack(), cfg.z1, cfg.z2, cfg.tolerances);
}

}  // namespace ncgear
