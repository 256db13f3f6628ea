#include "rfso/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "rfso/errors.hpp"

namespace rfso {

namespace {

struct RawValue {
    std::string text; // scalar token or quoted string content
    std::vector<std::string> array;
    bool is_array = false;
    bool is_string = false;
    int line = 0;
    bool consumed = false;
};

using RawTable = std::map<std::string, RawValue>;

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw ConfigError(os.str());
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

RawValue parse_value(const std::string& origin, int lineno,
                     const std::string& raw) {
    RawValue v;
    v.line = lineno;
    std::string s = trim(raw);
    if (s.empty()) fail(origin, lineno, "missing value");
    if (s.front() == '[') {
        if (s.back() != ']') fail(origin, lineno, "unterminated array");
        v.is_array = true;
        std::string inner = s.substr(1, s.size() - 2);
        std::string item;
        bool in_str = false;
        for (char c : inner) {
            if (c == '"') in_str = !in_str;
            if (c == ',' && !in_str) {
                v.array.push_back(trim(item));
                item.clear();
            } else {
                item += c;
            }
        }
        if (!trim(item).empty()) v.array.push_back(trim(item));
        for (auto& it : v.array)
            if (!it.empty() && it.front() == '"') {
                if (it.size() < 2 || it.back() != '"')
                    fail(origin, lineno, "unterminated string in array");
                it = it.substr(1, it.size() - 2);
            }
        return v;
    }
    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"')
            fail(origin, lineno, "unterminated string");
        v.is_string = true;
        v.text = s.substr(1, s.size() - 2);
        return v;
    }
    v.text = s;
    return v;
}

RawTable tokenize(const std::string& text, const std::string& origin) {
    RawTable table;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string s = trim(strip_comment(line));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(origin, lineno, "unterminated section");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) fail(origin, lineno, "empty section name");
            continue;
        }
        const size_t eq = s.find('=');
        if (eq == std::string::npos)
            fail(origin, lineno, "expected key = value");
        const std::string key = trim(s.substr(0, eq));
        if (key.empty()) fail(origin, lineno, "empty key");
        if (section.empty())
            fail(origin, lineno, "key '" + key + "' outside any section");
        const std::string full = section + "." + key;
        if (table.count(full))
            fail(origin, lineno, "duplicate key '" + full + "'");
        table[full] = parse_value(origin, lineno, s.substr(eq + 1));
    }
    return table;
}

class ConfigReader {
  public:
    ConfigReader(RawTable table, std::string origin)
        : table_(std::move(table)), origin_(std::move(origin)) {}

    bool has(const std::string& key) const { return table_.count(key) > 0; }

    double number(const std::string& key, double fallback) {
        auto* v = find(key);
        if (!v) return fallback;
        return to_number(*v);
    }

    long integer(const std::string& key, long fallback) {
        auto* v = find(key);
        if (!v) return fallback;
        const double d = to_number(*v);
        if (d != std::floor(d))
            fail(origin_, v->line, "key '" + key + "' must be an integer");
        return static_cast<long>(d);
    }

    std::string text(const std::string& key, const std::string& fallback) {
        auto* v = find(key);
        if (!v) return fallback;
        if (v->is_array) fail(origin_, v->line, "key '" + key + "' must be a scalar");
        return v->text;
    }

    std::vector<std::string> strings(const std::string& key) {
        auto* v = find(key);
        if (!v) return {};
        if (!v->is_array)
            fail(origin_, v->line, "key '" + key + "' must be an array");
        return v->array;
    }

    std::vector<double> numbers(const std::string& key) {
        auto* v = find(key);
        if (!v) return {};
        if (!v->is_array)
            fail(origin_, v->line, "key '" + key + "' must be an array");
        std::vector<double> out;
        for (const auto& s : v->array) out.push_back(to_number_str(s, v->line));
        return out;
    }

    int line_of(const std::string& key) const {
        auto it = table_.find(key);
        return it == table_.end() ? 0 : it->second.line;
    }

    void check_all_consumed() const {
        for (const auto& [key, v] : table_)
            if (!v.consumed)
                fail(origin_, v.line, "unknown key '" + key + "'");
    }

    const std::string& origin() const { return origin_; }

  private:
    RawValue* find(const std::string& key) {
        auto it = table_.find(key);
        if (it == table_.end()) return nullptr;
        it->second.consumed = true;
        return &it->second;
    }

    double to_number(const RawValue& v) {
        if (v.is_array || v.is_string)
            fail(origin_, v.line, "expected a number");
        return to_number_str(v.text, v.line);
    }

    double to_number_str(const std::string& s, int line) {
        char* end = nullptr;
        const double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            fail(origin_, line, "invalid number '" + s + "'");
        return d;
    }

    RawTable table_;
    std::string origin_;
};

Atmosphere read_atmosphere(ConfigReader& r, const std::string& suffix,
                           const Atmosphere& shared) {
    Atmosphere atm = shared;
    atm.omega = r.number("fso.omega" + suffix, shared.omega);
    atm.b0 = r.number("fso.b0" + suffix, shared.b0);
    atm.rho = r.number("fso.rho" + suffix, shared.rho);
    atm.phi_a = r.number("fso.phi_a" + suffix, shared.phi_a);
    atm.phi_b = r.number("fso.phi_b" + suffix, shared.phi_b);
    return atm;
}

} // namespace

Metric metric_from_string(const std::string& name) {
    if (name == "asc") return Metric::asc;
    if (name == "sop") return Metric::sop;
    if (name == "spsc") return Metric::spsc;
    if (name == "est") return Metric::est;
    if (name == "ip") return Metric::ip;
    throw ConfigError("unknown metric '" + name +
                      "' (expected asc, sop, spsc, est or ip)");
}

Scenario scenario_from_string(const std::string& name) {
    if (name == "I" || name == "1") return Scenario::I;
    if (name == "II" || name == "2") return Scenario::II;
    if (name == "III" || name == "3") return Scenario::III;
    throw ConfigError("unknown scenario '" + name + "' (expected I, II or III)");
}

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
    ConfigReader r(tokenize(text, origin), origin);
    RunConfig cfg;

    cfg.scenario.scenario = scenario_from_string(r.text("scenario.type", "I"));
    cfg.scenario.rs = r.number("scenario.rs", 0.1);
    if (r.has("scenario.metrics")) {
        cfg.metrics.clear();
        for (const auto& name : r.strings("scenario.metrics"))
            cfg.metrics.push_back(metric_from_string(name));
    }

    cfg.model.hop1.k = r.number("rf.k1", 2.0);
    cfg.model.hop1.omega = r.number("rf.omega1", 2.0);
    cfg.model.hop2.k = r.number("rf.k2", 2.0);
    cfg.model.hop2.omega = r.number("rf.omega2", 2.0);
    cfg.scenario.n1 = static_cast<int>(r.integer("rf.n1", 2));
    cfg.scenario.gamma1 = db_to_linear(r.number("rf.gamma1_db", 10.0));

    cfg.model.eve_hop.k = r.number("eavesdropper.k3", 2.0);
    cfg.model.eve_hop.omega = r.number("eavesdropper.omega3", 2.0);
    cfg.scenario.gammae1 =
        db_to_linear(r.number("eavesdropper.gammae1_db", 0.0));
    cfg.scenario.gammae2 =
        db_to_linear(r.number("eavesdropper.gammae2_db", 0.0));

    cfg.model.alpha_h = r.number("fso.alpha_h", 2.296);
    cfg.model.beta_h = static_cast<int>(r.integer("fso.beta_h", 2));
    cfg.model.xi_h = r.number("fso.xi_h", 1.1);
    cfg.model.alpha_g = r.number("fso.alpha_g", cfg.model.alpha_h);
    cfg.model.beta_g = static_cast<int>(r.integer("fso.beta_g", cfg.model.beta_h));
    cfg.model.xi_g = r.number("fso.xi_g", cfg.model.xi_h);
    cfg.model.alpha_ge = r.number("eavesdropper.alpha_ge", cfg.model.alpha_h);
    cfg.model.beta_ge =
        static_cast<int>(r.integer("eavesdropper.beta_ge", cfg.model.beta_h));
    cfg.model.xi_ge = r.number("eavesdropper.xi_ge", cfg.model.xi_h);
    cfg.model.detection = static_cast<int>(r.integer("fso.r", 1));
    cfg.scenario.gamma2 = db_to_linear(r.number("fso.gamma2_db", 10.0));
    cfg.scenario.hop_split = r.number("fso.hop_split", 0.5);

    Atmosphere shared;
    shared.omega = r.number("fso.omega", shared.omega);
    shared.b0 = r.number("fso.b0", shared.b0);
    shared.rho = r.number("fso.rho", shared.rho);
    shared.phi_a = r.number("fso.phi_a", shared.phi_a);
    shared.phi_b = r.number("fso.phi_b", shared.phi_b);
    cfg.model.atm_h = read_atmosphere(r, "_h", shared);
    cfg.model.atm_g = read_atmosphere(r, "_g", shared);
    cfg.model.atm_ge = read_atmosphere(r, "_ge", shared);

    cfg.mc.trials = static_cast<std::uint64_t>(r.integer("mc.trials", 100000));
    cfg.mc.seed = static_cast<std::uint64_t>(r.integer("mc.seed", 20240917));
    cfg.mc.workers = static_cast<int>(r.integer("mc.workers", 0));

    if (r.has("sweep.variable") || r.has("sweep.values") ||
        r.has("sweep.from")) {
        cfg.sweep.variable = r.text("sweep.variable", "");
        if (cfg.sweep.variable.empty())
            fail(r.origin(), r.line_of("sweep.variable"),
                 "sweep requires 'variable'");
        static const char* kVars[] = {"gamma1_db", "gamma2_db", "gammae1_db",
                                      "gammae2_db", "rs"};
        bool known = false;
        for (const char* v : kVars) known |= cfg.sweep.variable == v;
        if (!known)
            fail(r.origin(), r.line_of("sweep.variable"),
                 "unknown sweep variable '" + cfg.sweep.variable + "'");
        if (r.has("sweep.values")) {
            cfg.sweep.values = r.numbers("sweep.values");
        } else {
            const double from = r.number("sweep.from", 0.0);
            const double to = r.number("sweep.to", from);
            const long points = r.integer("sweep.points", 1);
            if (points < 1)
                fail(r.origin(), r.line_of("sweep.points"),
                     "sweep.points must be >= 1");
            for (long i = 0; i < points; ++i)
                cfg.sweep.values.push_back(
                    points == 1 ? from
                                : from + (to - from) * double(i) /
                                      double(points - 1));
        }
        if (cfg.sweep.values.empty())
            fail(r.origin(), r.line_of("sweep.variable"),
                 "sweep produced no grid points");
    }

    r.check_all_consumed();

    // surface invalid model/scenario parameters with config context
    try {
        cfg.scenario.validate();
        build_channels(cfg.model, cfg.scenario.n1);
        if (cfg.mc.trials < 1) throw ConfigError("mc.trials must be >= 1");
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str(), path);
}

} // namespace rfso
