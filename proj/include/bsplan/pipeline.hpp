#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bsplan/placement.hpp"
#include "bsplan/render.hpp"

namespace bsplan {

// CLI exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;  // parse/usage errors
inline constexpr int kExitParam = 3;  // invalid parameter values
inline constexpr int kExitInput = 4;  // unusable station input
inline constexpr int kExitMismatch = 5;

struct UsageError : Error {
    using Error::Error;
};

// maps an exception to its exit code and prints "error: E_<TOKEN> <what>"
int report_error(const std::exception& e, std::ostream& err);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> config_echo;
    std::vector<std::pair<std::string, double>> timings_ms;
    std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest& m);
void write_manifest(const std::string& path, const RunManifest& m);

Rect parse_rect_spec(const std::string& spec); // "x0,y0,x1,y1"

struct CommonIo {
    std::string out_dir = ".";
    std::string name = "scenario";
    int threads = 0; // 0 = hardware
};

struct GenerateOptions {
    CommonIo io;
    std::string config_path;
    std::optional<std::uint64_t> seed;
};

struct PlanOptions {
    CommonIo io;
    std::string stations_path;
    std::string config_path; // optional
    std::optional<Rect> roi;
    std::optional<int> k;
    int heuristic = 1;
    std::optional<double> alpha;
};

struct EvaluateOptions {
    CommonIo io;
    std::string stations_path;
    std::vector<std::string> plan_paths; // 0..2
    std::string config_path;             // optional
    std::optional<Rect> roi;
    std::optional<double> beta;
    std::optional<double> alpha;
    std::optional<int> resolution;
};

struct RenderOptions {
    CommonIo io;
    std::string stations_path;
    std::vector<std::string> plan_paths;
    std::string config_path; // optional
    std::optional<Rect> roi;
    std::optional<double> beta;
    std::optional<double> alpha;
    std::string layers;              // comma list, or empty when preset is used
    std::string preset;              // coverage | descent | placement
    int raster_resolution = 250;
    int canvas = 900;
};

struct ReproduceOptions {
    CommonIo io;
    std::uint64_t seed = 1;
    int resolution = 500;
    int raster_resolution = 250;
    int k = 5;
    double lambda = 0.075;
};

int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int run_plan(const PlanOptions& opt, std::ostream& out, std::ostream& err);
int run_evaluate(const EvaluateOptions& opt, std::ostream& out, std::ostream& err);
int run_render(const RenderOptions& opt, std::ostream& out, std::ostream& err);
int run_reproduce(const ReproduceOptions& opt, std::ostream& out, std::ostream& err);

} // namespace bsplan
