#include "bsplan/scenario.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "bsplan/rng.hpp"
#include "bsplan/textio.hpp"

namespace bsplan {

double default_step_for_intensity(double lambda) {
    if (lambda <= 0.0) return 0.01;
    return 0.01 * std::sqrt(1.0 / lambda);
}

void validate(const ScenarioConfig& cfg) {
    if (!cfg.extent.valid()) throw InvalidParam("extent must have positive area");
    if (!cfg.roi.valid()) throw InvalidParam("roi must have positive area");
    if (!cfg.extent.contains(cfg.roi)) throw InvalidParam("roi must lie inside extent");
    if (cfg.lambda < 0.0) throw InvalidParam("lambda must be >= 0");
    if (cfg.alpha <= 2.0) throw InvalidParam("alpha must be > 2");
    if (cfg.beta <= 0.0) throw InvalidParam("beta must be > 0");
    if (cfg.k_new < 0) throw InvalidParam("k_new must be >= 0");
    if (cfg.grid_resolution < 2) throw InvalidParam("grid_resolution must be >= 2");
    if (cfg.descent.step_dt <= 0.0) throw InvalidParam("descent.step_dt must be > 0");
    if (cfg.descent.max_iters < 1) throw InvalidParam("descent.max_iters must be >= 1");
    if (cfg.descent.shrink_factor <= 0.0 || cfg.descent.shrink_factor >= 1.0)
        throw InvalidParam("descent.shrink_factor must be in (0,1)");
}

std::string buffer_warning(const ScenarioConfig& cfg) {
    if (cfg.lambda <= 0.0) return "";
    const double buffer = 1.0 / std::sqrt(cfg.lambda);
    const double left = cfg.roi.min_x - cfg.extent.min_x;
    const double right = cfg.extent.max_x - cfg.roi.max_x;
    const double bottom = cfg.roi.min_y - cfg.extent.min_y;
    const double top = cfg.extent.max_y - cfg.roi.max_y;
    const double min_side = std::min(std::min(left, right), std::min(bottom, top));
    if (min_side >= buffer) return "";
    std::ostringstream ss;
    ss << "warning: roi buffer " << min_side << " is below 1/sqrt(lambda) = " << buffer
       << "; edge effects may reach the roi";
    return ss.str();
}

StationSet generate_ppp(const Rect& extent, double lambda, std::uint64_t seed, double alpha) {
    if (lambda < 0.0) throw InvalidParam("lambda must be >= 0");
    Rng rng(seed);
    const long long n = rng.poisson(lambda * extent.area());
    StationSet out;
    out.alpha = alpha;
    out.positions.reserve(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        const double x = rng.uniform(extent.min_x, extent.max_x);
        const double y = rng.uniform(extent.min_y, extent.max_y);
        out.positions.emplace_back(x, y);
    }
    return out;
}

StationSet stations_in(const StationSet& stations, const Rect& rect) {
    StationSet out;
    out.alpha = stations.alpha;
    for (const Point& p : stations.positions)
        if (rect.contains(p)) out.positions.push_back(p);
    return out;
}

std::string stations_to_text(const StationSet& stations) {
    std::string out;
    for (const Point& p : stations.positions)
        out += format_double(p.x) + "," + format_double(p.y) + "\n";
    return out;
}

StationSet parse_stations(const std::string& text, double alpha) {
    StationSet out;
    out.alpha = alpha;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        const auto fields = split_csv(sv);
        if (fields.size() != 2)
            throw ParseError("station file line " + std::to_string(lineno) +
                             ": expected 'x,y'");
        out.positions.emplace_back(parse_double(fields[0]), parse_double(fields[1]));
    }
    return out;
}

void save_stations(const std::string& path, const StationSet& stations) {
    write_file(path, stations_to_text(stations));
}

StationSet load_stations(const std::string& path, double alpha) {
    return parse_stations(read_file(path), alpha);
}

namespace {

const std::set<std::string> kKnownKeys = {
    "extent.min_x", "extent.min_y", "extent.max_x", "extent.max_y",
    "roi.min_x", "roi.min_y", "roi.max_x", "roi.max_y",
    "lambda", "seed", "alpha", "beta", "k_new", "grid_resolution",
    "descent.step_dt", "descent.max_iters", "descent.grad_tol",
    "descent.move_tol", "descent.shrink_factor", "descent.multistart",
};

const std::set<std::string> kRequiredKeys = {
    "extent.min_x", "extent.min_y", "extent.max_x", "extent.max_y",
    "roi.min_x", "roi.min_y", "roi.max_x", "roi.max_y",
    "lambda", "seed",
};

bool parse_bool(std::string_view v) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw ParseError("bad boolean: '" + std::string(v) + "'");
}

} // namespace

ScenarioConfig parse_scenario_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        const size_t eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("config line " + std::to_string(lineno) +
                             ": expected 'key = value'");
        const std::string key{trim(sv.substr(0, eq))};
        const std::string value{trim(sv.substr(eq + 1))};
        if (!kKnownKeys.count(key))
            throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" +
                             key + "'");
        if (kv.count(key))
            throw ParseError("config line " + std::to_string(lineno) + ": duplicate key '" +
                             key + "'");
        kv[key] = value;
    }
    for (const std::string& req : kRequiredKeys)
        if (!kv.count(req)) throw ParseError("config is missing required key '" + req + "'");

    ScenarioConfig cfg;
    const auto num = [&](const char* key, double fallback) {
        const auto it = kv.find(key);
        return it == kv.end() ? fallback : parse_double(it->second);
    };
    cfg.extent = Rect(num("extent.min_x", 0), num("extent.min_y", 0), num("extent.max_x", 0),
                      num("extent.max_y", 0));
    cfg.roi = Rect(num("roi.min_x", 0), num("roi.min_y", 0), num("roi.max_x", 0),
                   num("roi.max_y", 0));
    cfg.lambda = num("lambda", 1.0);
    cfg.seed = static_cast<std::uint64_t>(parse_int(kv.at("seed")));
    cfg.alpha = num("alpha", 4.0);
    cfg.beta = num("beta", 1.0);
    cfg.k_new = static_cast<int>(num("k_new", 0));
    cfg.grid_resolution = static_cast<int>(num("grid_resolution", 1000));
    cfg.descent.step_dt = num("descent.step_dt", default_step_for_intensity(cfg.lambda));
    cfg.descent.max_iters = static_cast<int>(num("descent.max_iters", 10000));
    cfg.descent.grad_tol = num("descent.grad_tol", 1e-10);
    cfg.descent.move_tol = num("descent.move_tol", 1e-9);
    cfg.descent.shrink_factor = num("descent.shrink_factor", 0.5);
    if (kv.count("descent.multistart"))
        cfg.descent.multistart = parse_bool(kv.at("descent.multistart"));
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    return parse_scenario_config(read_file(path));
}

std::string scenario_config_to_text(const ScenarioConfig& cfg) {
    std::string out;
    const auto put = [&](const std::string& key, const std::string& value) {
        out += key + " = " + value + "\n";
    };
    put("extent.min_x", format_double(cfg.extent.min_x));
    put("extent.min_y", format_double(cfg.extent.min_y));
    put("extent.max_x", format_double(cfg.extent.max_x));
    put("extent.max_y", format_double(cfg.extent.max_y));
    put("roi.min_x", format_double(cfg.roi.min_x));
    put("roi.min_y", format_double(cfg.roi.min_y));
    put("roi.max_x", format_double(cfg.roi.max_x));
    put("roi.max_y", format_double(cfg.roi.max_y));
    put("lambda", format_double(cfg.lambda));
    put("seed", std::to_string(cfg.seed));
    put("alpha", format_double(cfg.alpha));
    put("beta", format_double(cfg.beta));
    put("k_new", std::to_string(cfg.k_new));
    put("grid_resolution", std::to_string(cfg.grid_resolution));
    put("descent.step_dt", format_double(cfg.descent.step_dt));
    put("descent.max_iters", std::to_string(cfg.descent.max_iters));
    put("descent.grad_tol", format_double(cfg.descent.grad_tol));
    put("descent.move_tol", format_double(cfg.descent.move_tol));
    put("descent.shrink_factor", format_double(cfg.descent.shrink_factor));
    put("descent.multistart", cfg.descent.multistart ? "true" : "false");
    return out;
}

} // namespace bsplan
