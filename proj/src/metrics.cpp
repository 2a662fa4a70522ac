#include "bsplan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "bsplan/parallel.hpp"
#include "bsplan/textio.hpp"

namespace bsplan {

namespace {

constexpr double kEps2 = kSingularEps * kSingularEps;

Point cell_center(const Rect& roi, int resolution, int row, int col) {
    const double w = roi.width() / resolution;
    const double h = roi.height() / resolution;
    return {roi.min_x + (col + 0.5) * w, roi.min_y + (row + 0.5) * h};
}

void require_grid_inputs(const StationSet& stations, int resolution) {
    if (stations.empty()) throw EmptySet("metrics: empty station set");
    if (resolution < 2) throw InvalidParam("metrics: resolution must be >= 2");
}

} // namespace

GridClassification classify_coverage_grid(const StationSet& stations, const Rect& roi,
                                          double beta, int resolution, double sinr_cap,
                                          int threads) {
    require_grid_inputs(stations, resolution);
    GridClassification grid;
    grid.resolution = resolution;
    grid.server.assign(static_cast<size_t>(resolution) * resolution, -1);
    const double alpha = stations.alpha;
    const int n = stations.size();

    parallel_for(resolution, threads, [&](int row) {
        std::int32_t* out = grid.server.data() + static_cast<size_t>(row) * resolution;
        for (int col = 0; col < resolution; ++col) {
            const Point z = cell_center(roi, resolution, row, col);
            int best = 0;
            double best_d2 = std::numeric_limits<double>::infinity();
            double g = 0.0;
            bool singular = false;
            for (int j = 0; j < n && !singular; ++j) {
                const double d2 = dist2(z, stations.positions[j]);
                if (d2 <= kEps2) {
                    best = j;
                    singular = true;
                    break;
                }
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = j;
                }
                g += pow_neg_alpha(d2, alpha);
            }
            if (singular) {
                out[col] = static_cast<std::int32_t>(best);
                continue;
            }
            const double f = pow_neg_alpha(best_d2, alpha);
            const double others = g - f;
            const double s = others <= 0.0 ? sinr_cap : std::min(f / others, sinr_cap);
            out[col] = s >= beta ? static_cast<std::int32_t>(best) : -1;
        }
    });
    return grid;
}

std::pair<double, double> coverage(const StationSet& stations, const Rect& roi, double beta,
                                   int resolution, double sinr_cap, int threads) {
    const GridClassification grid =
        classify_coverage_grid(stations, roi, beta, resolution, sinr_cap, threads);
    const double fraction = static_cast<double>(grid.covered_cells()) /
                            (static_cast<double>(resolution) * resolution);
    return {fraction * roi.area(), fraction};
}

double reception_area(int i, const StationSet& stations, const Rect& roi, double beta,
                      int resolution, double sinr_cap, int threads) {
    require_grid_inputs(stations, resolution);
    if (i < 0 || i >= stations.size()) throw BadIndex("reception_area: bad station index");
    const double alpha = stations.alpha;
    const int n = stations.size();
    std::vector<long long> row_hits(static_cast<size_t>(resolution), 0);

    parallel_for(resolution, threads, [&](int row) {
        long long hits = 0;
        for (int col = 0; col < resolution; ++col) {
            const Point z = cell_center(roi, resolution, row, col);
            double f = 0.0, others = 0.0;
            int singular = -1;
            for (int j = 0; j < n && singular < 0; ++j) {
                const double d2 = dist2(z, stations.positions[j]);
                if (d2 <= kEps2) {
                    singular = j;
                    break;
                }
                const double term = pow_neg_alpha(d2, alpha);
                if (j == i)
                    f = term;
                else
                    others += term;
            }
            double s;
            if (singular >= 0)
                s = singular == i ? sinr_cap : 0.0;
            else
                s = others <= 0.0 ? sinr_cap : std::min(f / others, sinr_cap);
            hits += s >= beta;
        }
        row_hits[static_cast<size_t>(row)] = hits;
    });
    long long total = 0;
    for (const long long h : row_hits) total += h;
    return roi.area() * static_cast<double>(total) /
           (static_cast<double>(resolution) * resolution);
}

double capacity_at(const Point& z, const StationSet& stations, double sinr_cap) {
    if (stations.empty()) throw EmptySet("capacity_at: empty station set");
    const double alpha = stations.alpha;
    const int n = stations.size();
    if (n == 1) return std::log2(1.0 + sinr_cap);

    thread_local std::vector<double> terms;
    terms.resize(static_cast<size_t>(n));
    double g = 0.0;
    int singular = -1;
    for (int j = 0; j < n; ++j) {
        const double d2 = dist2(z, stations.positions[j]);
        if (d2 <= kEps2) {
            singular = j;
            break;
        }
        terms[static_cast<size_t>(j)] = pow_neg_alpha(d2, alpha);
        g += terms[static_cast<size_t>(j)];
    }
    if (singular >= 0) return std::log2(1.0 + sinr_cap);
    double c = 0.0;
    for (int j = 0; j < n; ++j) {
        const double f = terms[static_cast<size_t>(j)];
        const double others = g - f;
        const double s = others <= 0.0 ? sinr_cap : std::min(f / others, sinr_cap);
        c += std::log2(1.0 + s);
    }
    return c;
}

double average_capacity(const StationSet& stations, const Rect& roi, const RadioParams& params,
                        int resolution, int threads) {
    require_grid_inputs(stations, resolution);
    std::vector<double> row_sum(static_cast<size_t>(resolution), 0.0);
    parallel_for(resolution, threads, [&](int row) {
        double sum = 0.0;
        for (int col = 0; col < resolution; ++col)
            sum += capacity_at(cell_center(roi, resolution, row, col), stations,
                               params.sinr_cap);
        row_sum[static_cast<size_t>(row)] = sum;
    });
    double total = 0.0;
    for (const double s : row_sum) total += s;
    return params.bandwidth_w * total / (static_cast<double>(resolution) * resolution);
}

namespace {

double average_capacity_best_server(const StationSet& stations, const Rect& roi,
                                    const RadioParams& params, int resolution, int threads) {
    const double alpha = stations.alpha;
    const int n = stations.size();
    std::vector<double> row_sum(static_cast<size_t>(resolution), 0.0);
    parallel_for(resolution, threads, [&](int row) {
        double sum = 0.0;
        for (int col = 0; col < resolution; ++col) {
            const Point z = cell_center(roi, resolution, row, col);
            double g = 0.0;
            double best_d2 = std::numeric_limits<double>::infinity();
            bool singular = false;
            for (int j = 0; j < n; ++j) {
                const double d2 = dist2(z, stations.positions[j]);
                if (d2 <= kEps2) {
                    singular = true;
                    break;
                }
                best_d2 = std::min(best_d2, d2);
                g += pow_neg_alpha(d2, alpha);
            }
            double s;
            if (singular || n == 1) {
                s = params.sinr_cap;
            } else {
                const double f = pow_neg_alpha(best_d2, alpha);
                const double others = g - f;
                s = others <= 0.0 ? params.sinr_cap : std::min(f / others, params.sinr_cap);
            }
            sum += std::log2(1.0 + s);
        }
        row_sum[static_cast<size_t>(row)] = sum;
    });
    double total = 0.0;
    for (const double s : row_sum) total += s;
    return params.bandwidth_w * total / (static_cast<double>(resolution) * resolution);
}

} // namespace

MetricsReport evaluate_scenario(const StationSet& stations, const Rect& roi,
                                const RadioParams& params, int resolution, int threads) {
    require_grid_inputs(stations, resolution);
    MetricsReport r;
    r.roi = roi;
    r.beta = params.beta;
    r.alpha = stations.alpha;
    r.grid_resolution = resolution;
    r.station_count_roi = stations_in(stations, roi).size();
    const auto cov = coverage(stations, roi, params.beta, resolution, params.sinr_cap, threads);
    r.coverage_area = cov.first;
    r.coverage_fraction = cov.second;
    r.avg_capacity_density = average_capacity(stations, roi, params, resolution, threads);
    r.avg_capacity_best_server =
        average_capacity_best_server(stations, roi, params, resolution, threads);
    return r;
}

double percent_increase(double base, double value) {
    if (base == 0.0) return 0.0;
    return 100.0 * (value - base) / base;
}

namespace {

bool same_rect(const Rect& a, const Rect& b) {
    const double tol = 1e-9;
    return std::abs(a.min_x - b.min_x) <= tol && std::abs(a.min_y - b.min_y) <= tol &&
           std::abs(a.max_x - b.max_x) <= tol && std::abs(a.max_y - b.max_y) <= tol;
}

void require_comparable(const MetricsReport& a, const MetricsReport& b) {
    if (!same_rect(a.roi, b.roi)) throw MismatchedConfig("reports use different roi");
    if (a.grid_resolution != b.grid_resolution)
        throw MismatchedConfig("reports use different grid resolution");
    if (a.beta != b.beta) throw MismatchedConfig("reports use different beta");
    if (a.alpha != b.alpha) throw MismatchedConfig("reports use different alpha");
}

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string pct2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%+.2f%%", v);
    return buf;
}

std::string pad(std::string s, size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

} // namespace

ComparisonTable compare_scenarios(const MetricsReport& base, const MetricsReport& h1,
                                  const MetricsReport& h2) {
    require_comparable(base, h1);
    require_comparable(base, h2);
    ComparisonTable c;
    c.scenario0 = base;
    c.h1 = h1;
    c.h2 = h2;
    c.pct_coverage_h1 = percent_increase(base.coverage_area, h1.coverage_area);
    c.pct_coverage_h2 = percent_increase(base.coverage_area, h2.coverage_area);
    c.pct_capacity_h1 = percent_increase(base.avg_capacity_density, h1.avg_capacity_density);
    c.pct_capacity_h2 = percent_increase(base.avg_capacity_density, h2.avg_capacity_density);
    return c;
}

std::string report_to_text(const MetricsReport& r) {
    std::string out;
    out += "coverage_area            " + fixed4(r.coverage_area) + "\n";
    out += "coverage_fraction        " + fixed4(r.coverage_fraction) + "\n";
    out += "avg_capacity_density     " + fixed4(r.avg_capacity_density) + "\n";
    out += "avg_capacity_best_server " + fixed4(r.avg_capacity_best_server) + "\n";
    out += "station_count_roi        " + std::to_string(r.station_count_roi) + "\n";
    out += "grid_resolution          " + std::to_string(r.grid_resolution) + "\n";
    return out;
}

std::string comparison_to_text(const ComparisonTable& c) {
    const size_t w = 26, col = 14;
    std::string out;
    out += pad("metric", w) + pad("scenario0", col) + pad("heuristic1", col) +
           pad("heuristic2", col) + "\n";
    const auto row = [&](const std::string& name, double a, double b, double d) {
        out += pad(name, w) + pad(fixed4(a), col) + pad(fixed4(b), col) + pad(fixed4(d), col) +
               "\n";
    };
    row("coverage_area", c.scenario0.coverage_area, c.h1.coverage_area, c.h2.coverage_area);
    row("coverage_fraction", c.scenario0.coverage_fraction, c.h1.coverage_fraction,
        c.h2.coverage_fraction);
    row("avg_capacity_density", c.scenario0.avg_capacity_density, c.h1.avg_capacity_density,
        c.h2.avg_capacity_density);
    row("avg_capacity_best_server", c.scenario0.avg_capacity_best_server,
        c.h1.avg_capacity_best_server, c.h2.avg_capacity_best_server);
    out += pad("station_count_roi", w) + pad(std::to_string(c.scenario0.station_count_roi), col) +
           pad(std::to_string(c.h1.station_count_roi), col) +
           pad(std::to_string(c.h2.station_count_roi), col) + "\n";
    out += pad("pct_increase_coverage", w) + pad("-", col) + pad(pct2(c.pct_coverage_h1), col) +
           pad(pct2(c.pct_coverage_h2), col) + "\n";
    out += pad("pct_increase_capacity", w) + pad("-", col) + pad(pct2(c.pct_capacity_h1), col) +
           pad(pct2(c.pct_capacity_h2), col) + "\n";
    return out;
}

std::string comparison_to_csv(const ComparisonTable& c) {
    std::string out = "metric,scenario0,heuristic1,heuristic2,pct_increase_h1,pct_increase_h2\n";
    const auto row = [&](const std::string& name, double a, double b, double d, bool pct) {
        out += name + "," + format_double(a) + "," + format_double(b) + "," + format_double(d);
        if (pct)
            out += "," + format_double(percent_increase(a, b)) + "," +
                   format_double(percent_increase(a, d));
        else
            out += ",,";
        out += "\n";
    };
    row("coverage_area", c.scenario0.coverage_area, c.h1.coverage_area, c.h2.coverage_area,
        true);
    row("coverage_fraction", c.scenario0.coverage_fraction, c.h1.coverage_fraction,
        c.h2.coverage_fraction, true);
    row("avg_capacity_density", c.scenario0.avg_capacity_density, c.h1.avg_capacity_density,
        c.h2.avg_capacity_density, true);
    row("avg_capacity_best_server", c.scenario0.avg_capacity_best_server,
        c.h1.avg_capacity_best_server, c.h2.avg_capacity_best_server, true);
    out += "station_count_roi," + std::to_string(c.scenario0.station_count_roi) + "," +
           std::to_string(c.h1.station_count_roi) + "," +
           std::to_string(c.h2.station_count_roi) + ",,\n";
    return out;
}

} // namespace bsplan
