#include "qwalk/serialize.hpp"

#include <fstream>

namespace qwalk {

using nlohmann::json;

namespace {

constexpr long long kMaxExpandedSteps = 100000;

double require_number(const json& j, const char* field, const char* where) {
    if (!j.contains(field) || !j[field].is_number()) {
        throw ConfigError(std::string(where) + ": missing numeric field '" + field + "'");
    }
    return j[field].get<double>();
}

std::string require_string(const json& j, const char* field, const char* where) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw ConfigError(std::string(where) + ": missing string field '" + field + "'");
    }
    return j[field].get<std::string>();
}

CoinState state_field(const json& j, const char* field, const char* where) {
    try {
        return parse_state(require_string(j, field, where));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(where) + ", field '" + field + "': " + e.what());
    }
}

void expand_walk_elements(const json& j, std::vector<QuantumStep>& out, int depth);

void expand_element(const json& j, std::vector<QuantumStep>& out, int depth) {
    if (depth > 16) throw ConfigError("walk nesting is too deep");
    if (!j.is_object()) throw ConfigError("walk element must be an object");
    if (j.contains("kind")) {
        out.push_back(step_from_json(j));
        return;
    }
    if (j.contains("steps")) {
        expand_walk_elements(j, out, depth);
        return;
    }
    throw ConfigError("walk element needs either a step 'kind' or a nested 'steps' block");
}

void expand_walk_elements(const json& j, std::vector<QuantumStep>& out, int depth) {
    if (!j.contains("steps") || !j["steps"].is_array() || j["steps"].empty()) {
        throw ConfigError("walk block needs a non-empty 'steps' array");
    }
    long long repeat = 1;
    if (j.contains("repeat")) {
        repeat = j["repeat"].get<long long>();
        if (repeat < 1) throw ConfigError("'repeat' must be a positive integer");
    }
    std::vector<QuantumStep> inner;
    for (const auto& el : j["steps"]) expand_element(el, inner, depth + 1);
    if (static_cast<long long>(out.size()) +
            repeat * static_cast<long long>(inner.size()) >
        kMaxExpandedSteps) {
        throw ConfigError("walk expands to too many steps");
    }
    for (long long r = 0; r < repeat; ++r) {
        out.insert(out.end(), inner.begin(), inner.end());
    }
}

}  // namespace

json step_to_json(const QuantumStep& step) {
    json j;
    if (const auto* g = std::get_if<GeneralStep>(&step)) {
        j["kind"] = "general";
        j["p"] = g->p;
        j["q"] = g->q;
        j["coin"] = format_state(g->coin_out);
        j["shift"] = format_state(g->shift_in);
    } else if (const auto* c = std::get_if<ConventionalStep>(&step)) {
        j["kind"] = "conventional";
        j["alpha"] = c->alpha;
        j["beta"] = c->beta;
        j["gamma"] = c->gamma;
    } else {
        const auto& s = std::get<SplitStep>(step);
        j["kind"] = "split";
        j["delta"] = s.delta_frac;
        j["phase"] = s.delta_phase;
        j["coin"] = format_state(s.coin);
    }
    return j;
}

QuantumStep step_from_json(const json& j) {
    const std::string kind = require_string(j, "kind", "step");
    try {
        if (kind == "general") {
            return make_general(static_cast<Position>(require_number(j, "p", "general step")),
                                static_cast<Position>(require_number(j, "q", "general step")),
                                state_field(j, "coin", "general step"),
                                state_field(j, "shift", "general step"));
        }
        if (kind == "conventional") {
            return make_conventional(require_number(j, "alpha", "conventional step"),
                                     require_number(j, "beta", "conventional step"),
                                     require_number(j, "gamma", "conventional step"));
        }
        if (kind == "split") {
            return make_split(require_number(j, "delta", "split step"),
                              require_number(j, "phase", "split step"),
                              state_field(j, "coin", "split step"));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("step: ") + e.what());
    }
    throw ConfigError("unknown step kind '" + kind + "'");
}

json walk_to_json(const Walk& w) {
    json j;
    j["steps"] = json::array();
    for (const auto& s : w.steps) j["steps"].push_back(step_to_json(s));
    j["repeat"] = w.repeat;
    return j;
}

Walk walk_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("walk must be an object");
    long long repeat = 1;
    if (j.contains("repeat")) {
        repeat = j["repeat"].get<long long>();
        if (repeat < 1) throw ConfigError("'repeat' must be a positive integer");
    }
    std::vector<QuantumStep> steps;
    if (!j.contains("steps") || !j["steps"].is_array() || j["steps"].empty()) {
        throw ConfigError("walk needs a non-empty 'steps' array");
    }
    for (const auto& el : j["steps"]) expand_element(el, steps, 0);
    return Walk(std::move(steps), repeat);
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos) throw ConfigError("grid format is <n_theta>x<n_phi>");
    try {
        const int nt = std::stoi(text.substr(0, x));
        const int np = std::stoi(text.substr(x + 1));
        if (nt < 2 || np < 2) throw ConfigError("grid must be at least 2x2");
        return {nt, np};
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("bad grid '" + text + "'");
    }
}

Observable observable_from_token(const std::string& token) {
    if (token == "mu") return mu();
    if (token == "delta") return delta();
    if (token == "zero") return zero_projector();
    if (token.rfind("spectral:", 0) == 0) {
        const std::string path = token.substr(9);
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open spectral observable file '" + path + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError("spectral file '" + path + "': " + e.what());
        }
        if (!j.is_array()) throw ConfigError("spectral file must hold an array of terms");
        std::vector<std::pair<double, CompositeState>> terms;
        for (const auto& row : j) {
            const double lambda = require_number(row, "lambda", "spectral term");
            if (!row.contains("terms") || !row["terms"].is_array()) {
                throw ConfigError("spectral term needs a 'terms' array");
            }
            CompositeState u;
            for (const auto& t : row["terms"]) {
                if (!t.is_array() || t.size() != 5) {
                    throw ConfigError(
                        "spectral state entry must be [m, re0, im0, re1, im1]");
                }
                u.add(t[0].get<Position>(),
                      {cplx(t[1].get<double>(), t[2].get<double>()),
                       cplx(t[3].get<double>(), t[4].get<double>())});
            }
            terms.emplace_back(lambda, std::move(u));
        }
        try {
            return spectral(std::move(terms));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("spectral file '") + path + "': " + e.what());
        }
    }
    throw ConfigError("unknown observable '" + token +
                      "' (expected mu, delta, zero or spectral:<file>)");
}

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    RunConfig cfg;
    if (j.contains("walk")) cfg.walk = walk_from_json(j["walk"]);
    if (j.contains("steps")) {
        if (!j["steps"].is_array() || j["steps"].empty()) {
            throw ConfigError("'steps' must be a non-empty array");
        }
        for (const auto& el : j["steps"]) cfg.steps.push_back(step_from_json(el));
    }
    if (j.contains("cycles")) {
        cfg.cycles = j["cycles"].get<long long>();
        if (cfg.cycles < 1) throw ConfigError("'cycles' must be a positive integer");
    }
    if (j.contains("observable")) {
        cfg.observable_token = require_string(j, "observable", "config");
        cfg.observable = observable_from_token(cfg.observable_token);
    }
    if (j.contains("omega")) cfg.omega = require_number(j, "omega", "config");
    if (j.contains("home")) {
        try {
            cfg.home = parse_density(require_string(j, "home", "config"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config, field 'home': ") + e.what());
        }
    }
    if (j.contains("grid")) {
        const auto [nt, np] = parse_grid(require_string(j, "grid", "config"));
        cfg.grid_theta = nt;
        cfg.grid_phi = np;
    }
    if (j.contains("n_range")) {
        const auto& r = j["n_range"];
        if (!r.is_array() || r.size() != 2) {
            throw ConfigError("'n_range' must be [first, last]");
        }
        cfg.n_from = r[0].get<long long>();
        cfg.n_to = r[1].get<long long>();
        cfg.has_n_range = true;
        if (cfg.n_from < 1 || cfg.n_to < cfg.n_from) {
            throw ConfigError("'n_range' must be a nonempty range starting at 1 or above");
        }
    }
    if (j.contains("marks")) {
        if (!j["marks"].is_array()) throw ConfigError("'marks' must be an array");
        for (const auto& m : j["marks"]) {
            if (!m.is_string()) throw ConfigError("'marks' entries must be state texts");
            try {
                cfg.marks.emplace_back(m.get<std::string>(),
                                       parse_state(m.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config, field 'marks': ") + e.what());
            }
        }
    }
    if (j.contains("svg")) cfg.svg = j["svg"].get<bool>();
    if (j.contains("design")) {
        const auto& d = j["design"];
        DesignSpec spec;
        spec.m = static_cast<int>(require_number(d, "m", "design"));
        spec.target = state_field(d, "target", "design");
        if (d.contains("intermediates")) {
            for (const auto& s : d["intermediates"]) {
                if (!s.is_string()) {
                    throw ConfigError("design intermediates must be state texts");
                }
                try {
                    spec.intermediates.push_back(parse_state(s.get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(std::string("design intermediates: ") + e.what());
                }
            }
        }
        if (!d.contains("strides") || !d["strides"].is_array()) {
            throw ConfigError("design needs a 'strides' array of [p, q] pairs");
        }
        for (const auto& s : d["strides"]) {
            if (!s.is_array() || s.size() != 2) {
                throw ConfigError("design strides must be [p, q] pairs");
            }
            spec.strides.emplace_back(s[0].get<Position>(), s[1].get<Position>());
        }
        cfg.design = std::move(spec);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

}  // namespace qwalk
