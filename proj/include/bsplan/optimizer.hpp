#pragma once

#include <string>
#include <vector>

#include "bsplan/radio.hpp"

namespace bsplan {

// Local interference minimum found inside one triangle ∩ roi.
struct CandidateSite {
    Point position;
    double interference = 0.0;
    int triangle_id = -1;
    int iterations = 0;
    bool converged = false;
};

// Per-triangle descent record: the accepted iterate path of the winning
// start plus each start's final point (for convexity auditing).
struct DescentTrace {
    int triangle_id = -1;
    std::vector<Point> path;       // winning start: z0, z1, ...
    std::vector<double> g_values;  // g at each path point, strictly decreasing
    std::vector<Point> start_points;
    std::vector<Point> start_finals;
};

// Projected normalized-gradient descent over t ∩ roi from the centroid (and
// the three edge midpoints when cfg.multistart). Throws EmptyIntersection
// when t ∩ roi has no interior, NoDescent when no start can move.
CandidateSite minimize_in_triangle(const Triangle& t, const std::vector<Point>& points,
                                   const StationSet& stations, const Rect& roi,
                                   const DescentConfig& cfg, DescentTrace* trace = nullptr);

// One candidate per triangle whose intersection with roi has interior area;
// triangles wholly outside the roi are skipped. Failures are recorded as
// converged=false, never raised. Output order follows triangle order.
std::vector<CandidateSite> candidate_minima(const Triangulation& tri,
                                            const StationSet& stations, const Rect& roi,
                                            const DescentConfig& cfg,
                                            std::vector<DescentTrace>* traces = nullptr,
                                            int threads = 1);

// Dump lines "triangle_id,x,y,g,iterations,converged".
std::string candidates_to_text(const std::vector<CandidateSite>& sites);
void save_candidates(const std::string& path, const std::vector<CandidateSite>& sites);

} // namespace bsplan
