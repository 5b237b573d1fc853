#include "hvloop/config.hpp"

#include <fstream>

#include <json.hpp>

namespace hvloop {

namespace {

using nlohmann::json;

/// Rational field of a config file: either a JSON integer or rational text.
Rational rational_from_json(const json& j, const std::string& key) {
    if (j.is_number_integer()) {
        Rational r(static_cast<long>(j.get<std::int64_t>()));
        return r;
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
    throw ConfigError("config key '" + key + "' must be an integer or rational text");
}

GaussianRational scalar_from_json(const json& j, const std::string& key) {
    if (j.is_number_integer()) return GaussianRational(Rational(static_cast<long>(j.get<std::int64_t>())));
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
    throw ConfigError("config key '" + key + "' must be an integer or scalar text");
}

long long_from_json(const json& j, const std::string& key) {
    if (!j.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
    return static_cast<long>(j.get<std::int64_t>());
}

void apply_window_object(const json& j, Window& w) {
    if (!j.is_object()) throw ConfigError("config key 'window' must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "degree_bound") {
            w.degree_bound = rational_from_json(it.value(), "window.degree_bound");
        } else if (key == "degree_generators") {
            if (!it.value().is_array()) throw ConfigError("config key 'window.degree_generators' must be an array");
            std::vector<Rational> gens;
            for (const json& entry : it.value()) gens.push_back(rational_from_json(entry, "window.degree_generators"));
            w.degree_generators = gens;
        } else if (key == "loop_min") {
            w.loop_min = long_from_json(it.value(), "window.loop_min");
        } else if (key == "loop_max") {
            w.loop_max = long_from_json(it.value(), "window.loop_max");
        } else {
            throw ConfigError("unknown config key 'window." + key + "'");
        }
    }
}

}  // namespace

std::string to_string(CSignMode m) {
    switch (m) {
        case CSignMode::plus: return "plus";
        case CSignMode::minus: return "minus";
        case CSignMode::automatic: return "auto";
    }
    return "auto";
}

std::string to_string(NormSignMode m) {
    switch (m) {
        case NormSignMode::printed: return "printed";
        case NormSignMode::corrected: return "corrected";
        case NormSignMode::automatic: return "auto";
    }
    return "auto";
}

std::string to_string(BracketConvention c) { return c == BracketConvention::paper ? "paper" : "reversed"; }

CSignMode parse_c_sign_mode(const std::string& text) {
    if (text == "plus") return CSignMode::plus;
    if (text == "minus") return CSignMode::minus;
    if (text == "auto") return CSignMode::automatic;
    throw ConfigError("invalid c_sign '" + text + "' (expected plus, minus or auto)");
}

NormSignMode parse_norm_sign_mode(const std::string& text) {
    if (text == "printed") return NormSignMode::printed;
    if (text == "corrected") return NormSignMode::corrected;
    if (text == "auto") return NormSignMode::automatic;
    throw ConfigError("invalid normalization_sign '" + text + "' (expected printed, corrected or auto)");
}

BracketConvention parse_convention(const std::string& text) {
    if (text == "paper") return BracketConvention::paper;
    if (text == "reversed") return BracketConvention::reversed;
    throw ConfigError("invalid convention '" + text + "' (expected paper or reversed)");
}

Config default_config() { return Config{}; }

Config load_config_file(const std::string& path, const Config& base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file root must be a JSON object");

    Config out = base;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const json& value = it.value();
        if (key == "window") {
            apply_window_object(value, out.window);
        } else if (key == "epsilon") {
            out.epsilon = scalar_from_json(value, "epsilon");
        } else if (key == "m") {
            out.m = scalar_from_json(value, "m");
        } else if (key == "c_sign") {
            if (!value.is_string()) throw ConfigError("config key 'c_sign' must be a string");
            out.c_sign = parse_c_sign_mode(value.get<std::string>());
        } else if (key == "normalization_sign") {
            if (!value.is_string()) throw ConfigError("config key 'normalization_sign' must be a string");
            out.normalization_sign = parse_norm_sign_mode(value.get<std::string>());
        } else if (key == "convention") {
            if (!value.is_string()) throw ConfigError("config key 'convention' must be a string");
            out.convention = parse_convention(value.get<std::string>());
        } else if (key == "seed") {
            if (!value.is_number_unsigned() && !value.is_number_integer())
                throw ConfigError("config key 'seed' must be a non-negative integer");
            if (value.is_number_integer() && value.get<std::int64_t>() < 0)
                throw ConfigError("config key 'seed' must be a non-negative integer");
            out.seed = value.get<std::uint64_t>();
        } else if (key == "triple_budget") {
            if (value.is_null()) {
                out.triple_budget.reset();
            } else if (value.is_number_integer()) {
                out.triple_budget = value.get<std::int64_t>();
            } else {
                throw ConfigError("config key 'triple_budget' must be an integer or null");
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return out;
}

void validate_config(const Config& c) {
    const EpsilonVerdict v = validate_epsilon(c.epsilon);
    if (!v.valid) throw ConfigError("invalid epsilon " + to_string(c.epsilon) + ": " + v.reason);
    if (c.window.degree_bound < 0) throw ConfigError("window too small: degree bound must be >= 0");
    if (c.window.loop_min > c.window.loop_max)
        throw ConfigError("window too small: loop_min exceeds loop_max");
    if (c.triple_budget && *c.triple_budget < 1) throw ConfigError("triple_budget must be >= 1");
}

}  // namespace hvloop
