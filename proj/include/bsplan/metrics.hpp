#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsplan/radio.hpp"

namespace bsplan {

struct MetricsReport {
    double coverage_area = 0.0;
    double coverage_fraction = 0.0;
    double avg_capacity_density = 0.0;      // grid mean of sum_k log2(1+SINR_k), W=1
    double avg_capacity_best_server = 0.0;  // conventional single-server variant
    int station_count_roi = 0;
    int grid_resolution = 0;
    Rect roi;
    double beta = 1.0;
    double alpha = 4.0;
};

// Cell-center best-server classification of the roi grid: server[row*res+col]
// is the covering station index, or -1 where best-server SINR < beta.
struct GridClassification {
    int resolution = 0;
    std::vector<std::int32_t> server;

    long long covered_cells() const {
        long long n = 0;
        for (const std::int32_t s : server) n += s >= 0;
        return n;
    }
};

GridClassification classify_coverage_grid(const StationSet& stations, const Rect& roi,
                                          double beta, int resolution,
                                          double sinr_cap = kDefaultSinrCap, int threads = 1);

// (covered area, covered fraction of roi)
std::pair<double, double> coverage(const StationSet& stations, const Rect& roi, double beta,
                                   int resolution, double sinr_cap = kDefaultSinrCap,
                                   int threads = 1);

// Area of roi cells where station i receives with SINR >= beta.
double reception_area(int i, const StationSet& stations, const Rect& roi, double beta,
                      int resolution, double sinr_cap = kDefaultSinrCap, int threads = 1);

// sum_k log2(1 + min(SINR_k(z), cap)) — the capacity integrand
double capacity_at(const Point& z, const StationSet& stations,
                   double sinr_cap = kDefaultSinrCap);

double average_capacity(const StationSet& stations, const Rect& roi,
                        const RadioParams& params, int resolution, int threads = 1);

MetricsReport evaluate_scenario(const StationSet& stations, const Rect& roi,
                                const RadioParams& params, int resolution, int threads = 1);

struct ComparisonTable {
    MetricsReport scenario0;
    MetricsReport h1;
    MetricsReport h2;
    double pct_coverage_h1 = 0.0;
    double pct_coverage_h2 = 0.0;
    double pct_capacity_h1 = 0.0;
    double pct_capacity_h2 = 0.0;
};

// Throws MismatchedConfig unless roi, resolution, beta and alpha agree.
ComparisonTable compare_scenarios(const MetricsReport& base, const MetricsReport& h1,
                                  const MetricsReport& h2);

double percent_increase(double base, double value);

std::string report_to_text(const MetricsReport& r);
std::string comparison_to_text(const ComparisonTable& c);
std::string comparison_to_csv(const ComparisonTable& c);

} // namespace bsplan
