#include "czeta/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>

#include "czeta/errors.hpp"

namespace czeta::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_real(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw InvalidConfig("config key " + key + ": '" + text + "' is not a number");
    }
    return v;
}

int to_int(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw InvalidConfig("config key " + key + ": '" + text + "' is not an integer");
    }
    return v;
}

bool to_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1") {
        return true;
    }
    if (text == "false" || text == "0") {
        return false;
    }
    throw InvalidConfig("config key " + key + ": '" + text + "' is not a boolean");
}

}  // namespace

void apply_config(std::istream& in, Settings& settings) {
    using Setter = std::function<void(const std::string&, const std::string&)>;
    const std::map<std::string, Setter> setters{
        {"em_terms_N", [&](auto& k, auto& v) { settings.numeric.em_terms_N = to_int(k, v); }},
        {"em_terms_J", [&](auto& k, auto& v) { settings.numeric.em_terms_J = to_int(k, v); }},
        {"target_tol", [&](auto& k, auto& v) { settings.numeric.target_tol = to_real(k, v); }},
        {"reflect_left", [&](auto& k, auto& v) { settings.numeric.reflect_left = to_bool(k, v); }},
        {"radius", [&](auto& k, auto& v) { settings.contour.radius = to_real(k, v); }},
        {"x_max", [&](auto& k, auto& v) { settings.contour.x_max = to_real(k, v); }},
        {"panels_ray", [&](auto& k, auto& v) { settings.contour.panels_ray = to_int(k, v); }},
        {"panels_arc", [&](auto& k, auto& v) { settings.contour.panels_arc = to_int(k, v); }},
        {"nodes_per_panel", [&](auto& k, auto& v) { settings.contour.nodes_per_panel = to_int(k, v); }},
        {"refine_tol", [&](auto& k, auto& v) { settings.contour.refine_tol = to_real(k, v); }},
        {"max_refinements", [&](auto& k, auto& v) { settings.contour.max_refinements = to_int(k, v); }},
    };
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw InvalidConfig("config line " + std::to_string(number) + ": expected key = value");
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw InvalidConfig("config line " + std::to_string(number) + ": unknown key '" + key + "'");
        }
        it->second(key, value);
    }
}

void apply_config_file(const std::string& path, Settings& settings) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidConfig("cannot open config file '" + path + "'");
    }
    apply_config(in, settings);
}

std::optional<std::string> config_path(const std::optional<std::string>& explicit_path) {
    if (explicit_path) {
        return explicit_path;
    }
    if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
        return std::string(env);
    }
    return std::nullopt;
}

}  // namespace czeta::cli
