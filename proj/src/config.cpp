#include "pme/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pme/diagnostics.hpp"

namespace pme {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                          "': not a number: '" + v + "'");
    }
}

int parse_int(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                          "': not an integer: '" + v + "'");
    }
}

std::vector<double> parse_real_list(const std::string& v, const std::string& key, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_real(trim(item), key, line));
    }
    if (out.empty()) {
        throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                          "': empty list");
    }
    return out;
}

[[noreturn]] void bad_enum(const std::string& key, const std::string& v, int line) {
    throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                      "': unknown value '" + v + "'");
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + " line " + std::to_string(line) + ": expected 'key = value'");
        }
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));

        if (key == "domain.xmin") cfg.xmin = parse_real(val, key, line);
        else if (key == "domain.ymin") cfg.ymin = parse_real(val, key, line);
        else if (key == "domain.xmax") cfg.xmax = parse_real(val, key, line);
        else if (key == "domain.ymax") cfg.ymax = parse_real(val, key, line);
        else if (key == "mesh.nx") cfg.nx = parse_int(val, key, line);
        else if (key == "mesh.ny") cfg.ny = parse_int(val, key, line);
        else if (key == "time.tau") cfg.tau = parse_real(val, key, line);
        else if (key == "time.n_steps") cfg.n_steps = parse_int(val, key, line);
        else if (key == "time.mass") {
            if (val == "lumped") cfg.lumped_time_mass = true;
            else if (val == "consistent") cfg.lumped_time_mass = false;
            else bad_enum(key, val, line);
        }
        else if (key == "picard.tol") cfg.picard_tol = parse_real(val, key, line);
        else if (key == "picard.iter_max") cfg.picard_iter_max = parse_int(val, key, line);
        else if (key == "picard.policy") {
            if (val == "continue") cfg.picard_policy = PicardPolicy::accept_continue;
            else if (val == "abort") cfg.picard_policy = PicardPolicy::abort;
            else bad_enum(key, val, line);
        } else if (key == "model.law") {
            if (val == "vdw") cfg.law = CoefficientTag::vdw_nonlinear;
            else if (val == "heat") cfg.law = CoefficientTag::heat_constant;
            else bad_enum(key, val, line);
        } else if (key == "model.d") cfg.params.d = parse_real(val, key, line);
        else if (key == "model.a_over_nakbt") {
            // cohesion coefficient expressed as a / (N_A k_b T)
            cfg.params.a = parse_real(val, key, line) * cfg.params.N_A * cfg.params.k_b * cfg.params.T;
        } else if (key == "model.kappa") cfg.kappa = parse_real(val, key, line);
        else if (key == "model.delta") cfg.delta = parse_real(val, key, line);
        else if (key == "model.transform") {
            if (val == "simplified") cfg.transform = Transform::simplified;
            else if (val == "general") cfg.transform = Transform::general;
            else if (val == "identity") cfg.transform = Transform::identity;
            else bad_enum(key, val, line);
        } else if (key == "model.boundary_value") cfg.boundary_value = parse_real(val, key, line);
        else if (key == "initial.selector") {
            if (val == "block") cfg.initial = InitialData::block;
            else if (val == "ring") cfg.initial = InitialData::ring;
            else if (val == "constant") cfg.initial = InitialData::constant;
            else if (val == "barenblatt") cfg.initial = InitialData::barenblatt;
            else bad_enum(key, val, line);
        } else if (key == "initial.constant") cfg.initial_constant = parse_real(val, key, line);
        else if (key == "initial.barenblatt_c") cfg.barenblatt_c = parse_real(val, key, line);
        else if (key == "initial.barenblatt_t0") cfg.barenblatt_t0 = parse_real(val, key, line);
        else if (key == "output.snapshot_every") cfg.snapshot_every = parse_int(val, key, line);
        else if (key == "output.dir") cfg.output_dir = val;
        else if (key == "solver.method") {
            if (val == "auto") cfg.solver = SolverChoice::automatic;
            else if (val == "cg") cfg.solver = SolverChoice::cg;
            else if (val == "direct") cfg.solver = SolverChoice::direct;
            else bad_enum(key, val, line);
        } else if (key == "diagnostics.theta") cfg.thetas = parse_real_list(val, key, line);
        else {
            throw ConfigError(origin + " line " + std::to_string(line) + ": unknown key '" + key +
                              "'");
        }
    }
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not found: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    RunConfig cfg = parse_config_text(ss.str(), path);
    const auto warnings = cfg.validate();  // throws on hard errors
    (void)warnings;
    return cfg;
}

std::vector<std::string> RunConfig::validate() const {
    if (!(xmax > xmin) || !(ymax > ymin)) throw std::invalid_argument("config: degenerate domain");
    if (nx < 1 || ny < 1) throw std::invalid_argument("config: mesh.nx and mesh.ny must be >= 1");
    if (!(tau > 0.0)) throw std::invalid_argument("config: time.tau must be positive");
    if (n_steps < 0) throw std::invalid_argument("config: time.n_steps must be >= 0");
    if (!(picard_tol > 0.0)) throw std::invalid_argument("config: picard.tol must be positive");
    if (picard_iter_max < 1) throw std::invalid_argument("config: picard.iter_max must be >= 1");
    if (snapshot_every < 0) throw std::invalid_argument("config: output.snapshot_every must be >= 0");
    for (double th : thetas) {
        if (!(th > 0.0)) throw std::invalid_argument("config: diagnostics.theta entries must be > 0");
    }
    if (initial == InitialData::barenblatt && !(barenblatt_t0 > 0.0)) {
        throw std::invalid_argument("config: initial.barenblatt_t0 must be positive");
    }

    std::vector<std::string> warnings;
    auto check_aligned = [&](double bx, bool is_x) {
        const double h = is_x ? (xmax - xmin) / nx : (ymax - ymin) / ny;
        const double o = is_x ? xmin : ymin;
        const double k = (bx - o) / h;
        if (std::abs(k - std::round(k)) > 1e-9) {
            warnings.push_back("initial-data breakpoint " + std::to_string(bx) +
                               " does not fall on an element edge (h misaligned)");
        }
    };
    if (initial == InitialData::block) {
        for (double b : {0.25, 0.75}) check_aligned(b, true);
        for (double b : {0.5, 1.5}) check_aligned(b, false);
    } else if (initial == InitialData::ring) {
        for (double b : {0.25, 0.4, 0.6, 0.75}) check_aligned(b, true);
        for (double b : {0.5, 0.75, 1.0, 1.5}) check_aligned(b, false);
    }
    return warnings;
}

double initial_data(const RunConfig& cfg, double x, double y) {
    switch (cfg.initial) {
        case InitialData::block:
            return (0.25 <= x && x <= 0.75 && 0.5 <= y && y <= 1.5) ? 1.0 : 0.0;
        case InitialData::ring: {
            if (0.4 <= x && x <= 0.6 && 0.75 <= y && y <= 1.0) return 1.5;
            // frame of value 1: the union of the two x-bands over the full block
            // height, plus the bands above/below the core.
            const bool in_block = (0.25 <= x && x <= 0.75 && 0.5 <= y && y <= 1.5);
            const bool in_core_col = (0.4 <= x && x <= 0.6 && 0.75 <= y && y <= 1.0);
            if (in_block && !in_core_col) return 1.0;
            return 0.0;
        }
        case InitialData::constant:
            return cfg.initial_constant;
        case InitialData::barenblatt: {
            const double cx = 0.5 * (cfg.xmin + cfg.xmax);
            const double cy = 0.5 * (cfg.ymin + cfg.ymax);
            return barenblatt(x - cx, y - cy, cfg.barenblatt_t0, cfg.barenblatt_c, cfg.kappa);
        }
    }
    return 0.0;
}

double apply_transform(const RunConfig& cfg, double c) {
    switch (cfg.transform) {
        case Transform::simplified: return to_hat(c, cfg.params, true);
        case Transform::general: return to_hat(c, cfg.params, false);
        case Transform::identity: return c;
    }
    return c;
}

double invert_transform(const RunConfig& cfg, double chat) {
    switch (cfg.transform) {
        case Transform::simplified: return from_hat(chat, cfg.params, true);
        case Transform::general: return from_hat(chat, cfg.params, false);
        case Transform::identity: return chat;
    }
    return chat;
}

double initial_data_hat(const RunConfig& cfg, double x, double y) {
    return apply_transform(cfg, initial_data(cfg, x, y));
}

}  // namespace pme
