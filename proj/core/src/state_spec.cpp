#include "polsphere/state_spec.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "polsphere/errors.hpp"

namespace polsphere {

namespace {

using json = nlohmann::json;

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& type) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (allowed.count(it.key()) == 0)
            throw SchemaError("state spec: unknown key \"" + it.key()
                              + "\" for type \"" + type + "\"");
}

int require_int(const json& obj, const std::string& key) {
    if (!obj.contains(key))
        throw SchemaError("state spec: missing key \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw SchemaError("state spec: \"" + key + "\" must be an integer");
    return v.get<int>();
}

double require_number(const json& obj, const std::string& key) {
    if (!obj.contains(key))
        throw SchemaError("state spec: missing key \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number())
        throw SchemaError("state spec: \"" + key + "\" must be a number");
    return v.get<double>();
}

std::complex<double> require_amplitude(const json& obj, const std::string& key) {
    if (!obj.contains(key))
        throw SchemaError("state spec: missing key \"" + key + "\"");
    const json& v = obj.at(key);
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw SchemaError("state spec: \"" + key + "\" must be a number or [re, im]");
}

HalfInteger require_spin(const json& obj, const std::string& key) {
    const double s = require_number(obj, key);
    const double twice = 2.0 * s;
    const long long t = std::llround(twice);
    if (std::abs(twice - static_cast<double>(t)) > 1e-9 || t < 0)
        throw SchemaError("state spec: \"" + key
                          + "\" must be a nonnegative integer or half-integer");
    return HalfInteger::from_twice(static_cast<int>(t));
}

PolarizationState parse_object(const json& obj, std::string* note);

PolarizationState parse_mixture(const json& obj, std::string* note) {
    require_keys(obj, {"type", "components", "weights"}, "mixture");
    if (!obj.contains("components") || !obj.at("components").is_array())
        throw SchemaError("state spec: mixture needs a \"components\" array");
    if (!obj.contains("weights") || !obj.at("weights").is_array())
        throw SchemaError("state spec: mixture needs a \"weights\" array");
    const json& comps = obj.at("components");
    const json& weights = obj.at("weights");
    if (comps.size() != weights.size())
        throw SchemaError("state spec: mixture components and weights differ in length");
    if (comps.empty())
        throw SchemaError("state spec: mixture must have at least one component");
    double sum = 0.0;
    std::vector<std::pair<double, PolarizationState>> parts;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!weights[i].is_number())
            throw SchemaError("state spec: mixture weights must be numbers");
        const double w = weights[i].get<double>();
        if (w < 0.0)
            throw SchemaError("state spec: mixture weights must be nonnegative");
        sum += w;
        parts.emplace_back(w, parse_object(comps[i], note));
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw SchemaError("state spec: mixture weights sum to "
                          + std::to_string(sum) + ", expected 1");
    return mix(parts);
}

PolarizationState parse_object(const json& obj, std::string* note) {
    if (!obj.is_object())
        throw SchemaError("state spec: expected a JSON object");
    if (!obj.contains("type") || !obj.at("type").is_string())
        throw SchemaError("state spec: missing \"type\"");
    const std::string type = obj.at("type").get<std::string>();

    if (type == "fock") {
        require_keys(obj, {"type", "n_h", "n_v"}, type);
        const int n_h = require_int(obj, "n_h");
        const int n_v = require_int(obj, "n_v");
        if (n_h < 0 || n_v < 0)
            throw SchemaError("state spec: photon numbers must be nonnegative");
        return fock_state(n_h, n_v);
    }
    if (type == "coherent_su2") {
        require_keys(obj, {"type", "S", "theta", "phi"}, type);
        const HalfInteger s = require_spin(obj, "S");
        return su2_coherent_state(s, require_number(obj, "theta"),
                                  require_number(obj, "phi"));
    }
    if (type == "two_mode_coherent") {
        require_keys(obj, {"type", "alpha_h", "alpha_v", "trunc_eps"}, type);
        const auto ah = require_amplitude(obj, "alpha_h");
        const auto av = require_amplitude(obj, "alpha_v");
        double eps = 1e-12;
        if (obj.contains("trunc_eps")) {
            eps = require_number(obj, "trunc_eps");
            if (!(eps > 0.0) || eps >= 1.0)
                throw SchemaError("state spec: trunc_eps must lie in (0, 1)");
        }
        const TwoModeCoherentResult r = two_mode_coherent(ah, av, eps);
        if (note) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "two_mode_coherent truncated at N = %d, kept weight %.12g",
                          r.max_photon_number, r.renormalization);
            if (!note->empty()) *note += "\n";
            *note += buf;
        }
        return r.state;
    }
    if (type == "noon") {
        require_keys(obj, {"type", "n", "relative_phase"}, type);
        const int n = require_int(obj, "n");
        if (n < 1)
            throw SchemaError("state spec: noon needs n >= 1");
        const double phase = obj.contains("relative_phase")
                           ? require_number(obj, "relative_phase") : 0.0;
        return noon_state(n, phase);
    }
    if (type == "mixture") return parse_mixture(obj, note);

    throw SchemaError("state spec: unknown type \"" + type + "\"");
}

} // namespace

PolarizationState parse_state_spec(const std::string& json_text, std::string* note) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("state spec: invalid JSON: ") + e.what());
    }
    return parse_object(doc, note);
}

} // namespace polsphere
