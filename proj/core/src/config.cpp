#include "sphereflow/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace sphereflow {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("config: bad number for '" + key + "': " + v);
    return x;
}

long parse_int(const std::string& key, const std::string& v) {
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("config: bad integer for '" + key + "': " + v);
    return x;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : v) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section at line " +
                                  std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            if (section != "run" && section != "flow" && section != "checks")
                throw ConfigError("config: unknown section [" + section + "]");
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " +
                              std::to_string(lineno));
        const std::string key = section + "." + trim(line.substr(0, eq));
        kv[key] = trim(line.substr(eq + 1));
    }

    auto take = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return {};
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (std::string v = take("run.n"); !v.empty()) cfg.n = static_cast<int>(parse_int("n", v));
    if (std::string v = take("run.N"); !v.empty()) cfg.N = static_cast<int>(parse_int("N", v));
    if (std::string v = take("run.mode"); !v.empty()) {
        if (v == "axisym") cfg.mode = GridMode::Axisym;
        else if (v == "periodic1d") cfg.mode = GridMode::Periodic1D;
        else throw ConfigError("config: mode must be axisym or periodic1d");
    }
    if (std::string v = take("run.rho0.base"); !v.empty())
        cfg.rho0Base = parse_double("rho0.base", v);
    if (std::string v = take("run.rho0.cosines"); !v.empty()) {
        for (const std::string& item : split_list(v)) {
            int freq = 0;
            double amp = 0.0;
            if (std::sscanf(item.c_str(), "%d:%lf", &freq, &amp) != 2)
                throw ConfigError("config: rho0.cosines entries must be freq:amp, got '" +
                                  item + "'");
            cfg.rho0Cosines.emplace_back(freq, amp);
        }
    }
    if (std::string v = take("run.seed"); !v.empty())
        cfg.seed = static_cast<std::uint64_t>(parse_int("seed", v));

    if (std::string v = take("flow.family"); !v.empty()) {
        if (v == "contracting") cfg.family = FlowFamily::Contracting;
        else if (v == "inverse") cfg.family = FlowFamily::InverseType;
        else throw ConfigError("config: family must be contracting or inverse");
    }
    std::string fkind = take("flow.F");
    std::string fk = take("flow.k");
    {
        const int k = fk.empty() ? (fkind == "mean" || fkind.empty() ? 1 : 2)
                                 : static_cast<int>(parse_int("k", fk));
        if (fkind.empty() || fkind == "mean") cfg.F = CurvatureFunctionSpec::mean();
        else if (fkind == "powerroot") cfg.F = CurvatureFunctionSpec::power_root(k);
        else if (fkind == "quotient") cfg.F = CurvatureFunctionSpec::quotient(k);
        else throw ConfigError("config: F must be mean, powerroot or quotient");
    }
    if (std::string v = take("flow.requiredCone"); !v.empty())
        cfg.requiredCone = static_cast<int>(parse_int("requiredCone", v));
    if (std::string v = take("flow.cflFactor"); !v.empty())
        cfg.cflFactor = parse_double("cflFactor", v);
    if (std::string v = take("flow.maxDt"); !v.empty()) cfg.maxDt = parse_double("maxDt", v);
    if (std::string v = take("flow.tEnd"); !v.empty()) cfg.tEnd = parse_double("tEnd", v);
    if (std::string v = take("flow.convergenceTol"); !v.empty())
        cfg.convergenceTol = parse_double("convergenceTol", v);
    if (std::string v = take("flow.sampleEvery"); !v.empty())
        cfg.sampleEvery = static_cast<int>(parse_int("sampleEvery", v));

    if (std::string v = take("checks.suites"); !v.empty()) cfg.suites = split_list(v);

    if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "'");

    // Validation.
    if (cfg.n < 1) throw ConfigError("config: n must be >= 1");
    if (cfg.N < 16) throw ConfigError("config: N must be >= 16");
    if (cfg.mode == GridMode::Periodic1D && cfg.n != 1)
        throw ConfigError("config: periodic1d mode requires n = 1");
    for (const auto& [freq, amp] : cfg.rho0Cosines) {
        if (freq <= 0) throw ConfigError("config: cosine frequency must be positive");
        if (cfg.mode == GridMode::Axisym && freq % 2 != 0)
            throw ConfigError(
                "config: cosine frequency " + std::to_string(freq) +
                " violates the parity contract (even frequencies only in axisym mode)");
        (void)amp;
    }
    for (const std::string& s : cfg.suites)
        if (s != "monotone" && s != "inequalities" && s != "heintze_karcher" &&
            s != "conjectures" && s != "decay")
            throw ConfigError("config: unknown suite '" + s + "'");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

AxisymProfile initial_profile(const RunConfig& cfg) {
    return make_cosine_profile(cfg.n, cfg.N, cfg.mode, cfg.rho0Base, cfg.rho0Cosines);
}

FlowSpec flow_spec(const RunConfig& cfg) {
    FlowSpec spec;
    spec.family = cfg.family;
    spec.F = cfg.F;
    spec.requiredCone = cfg.requiredCone >= 0
                            ? cfg.requiredCone
                            : default_required_cone(cfg.family, cfg.F, cfg.n);
    spec.dt = {cfg.cflFactor, cfg.maxDt};
    spec.tEnd = cfg.tEnd;
    spec.convergenceTol = cfg.convergenceTol;
    spec.sampleEvery = cfg.sampleEvery;
    validate_flow_spec(spec, cfg.n);
    return spec;
}

std::string family_name(FlowFamily family) {
    return family == FlowFamily::Contracting ? "contracting" : "inverse";
}

std::string mode_name(GridMode mode) {
    return mode == GridMode::Axisym ? "axisym" : "periodic1d";
}

std::string config_to_text(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[run]\n";
    out << "n = " << cfg.n << "\n";
    out << "N = " << cfg.N << "\n";
    out << "mode = " << mode_name(cfg.mode) << "\n";
    out << "rho0.base = " << fmt17(cfg.rho0Base) << "\n";
    if (!cfg.rho0Cosines.empty()) {
        out << "rho0.cosines =";
        for (const auto& [f, a] : cfg.rho0Cosines) out << ' ' << f << ':' << fmt17(a);
        out << "\n";
    }
    out << "seed = " << cfg.seed << "\n";
    out << "[flow]\n";
    out << "family = " << family_name(cfg.family) << "\n";
    const char* fk = cfg.F.kind == CurvatureFunctionSpec::Kind::Mean ? "mean"
                     : cfg.F.kind == CurvatureFunctionSpec::Kind::PowerRoot ? "powerroot"
                                                                            : "quotient";
    out << "F = " << fk << "\n";
    out << "k = " << cfg.F.k << "\n";
    if (cfg.requiredCone >= 0) out << "requiredCone = " << cfg.requiredCone << "\n";
    out << "cflFactor = " << fmt17(cfg.cflFactor) << "\n";
    out << "maxDt = " << fmt17(cfg.maxDt) << "\n";
    out << "tEnd = " << fmt17(cfg.tEnd) << "\n";
    out << "convergenceTol = " << fmt17(cfg.convergenceTol) << "\n";
    out << "sampleEvery = " << cfg.sampleEvery << "\n";
    if (!cfg.suites.empty()) {
        out << "[checks]\n";
        out << "suites =";
        for (const std::string& s : cfg.suites) out << ' ' << s;
        out << "\n";
    }
    return out.str();
}

}  // namespace sphereflow
