#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsplan/geom.hpp"

namespace bsplan {

// Base-station positions with the path-loss exponent they radiate under.
struct StationSet {
    std::vector<Point> positions;
    double alpha = 4.0;

    int size() const { return static_cast<int>(positions.size()); }
    bool empty() const { return positions.empty(); }
};

// Normalized-gradient descent parameters. step_dt defaults to 1% of the mean
// station spacing when built through ScenarioConfig.
struct DescentConfig {
    double step_dt = 0.01;
    int max_iters = 10000;
    double grad_tol = 1e-10;
    double move_tol = 1e-9;
    double shrink_factor = 0.5;
    bool multistart = true;
};

double default_step_for_intensity(double lambda);

struct ScenarioConfig {
    Rect extent;
    Rect roi;
    double lambda = 1.0;
    std::uint64_t seed = 0;
    double alpha = 4.0;
    double beta = 1.0;
    int k_new = 0;
    int grid_resolution = 1000;
    DescentConfig descent;
};

// Throws InvalidParam when any field violates its range or roi is not
// contained in extent.
void validate(const ScenarioConfig& cfg);

// Non-empty warning text when the roi-to-extent buffer is thinner than
// 1/sqrt(lambda) on some side (edge effects leak into the roi).
std::string buffer_warning(const ScenarioConfig& cfg);

StationSet generate_ppp(const Rect& extent, double lambda, std::uint64_t seed,
                        double alpha = 4.0);

// Stations whose position lies in rect (closed boundary).
StationSet stations_in(const StationSet& stations, const Rect& rect);

// Station list file: one "x,y" per line, '#' comments ignored.
std::string stations_to_text(const StationSet& stations);
StationSet parse_stations(const std::string& text, double alpha = 4.0);
void save_stations(const std::string& path, const StationSet& stations);
StationSet load_stations(const std::string& path, double alpha = 4.0);

// Flat "key = value" document; keys are the ScenarioConfig field paths
// (extent.min_x, roi.max_y, lambda, seed, alpha, beta, k_new,
// grid_resolution, descent.step_dt, ...). Unknown keys are an error.
ScenarioConfig parse_scenario_config(const std::string& text);
ScenarioConfig load_scenario_config(const std::string& path);
std::string scenario_config_to_text(const ScenarioConfig& cfg);

} // namespace bsplan
