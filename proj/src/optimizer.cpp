#include "bsplan/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsplan/parallel.hpp"
#include "bsplan/textio.hpp"

namespace bsplan {

namespace {

constexpr double kMinStep = 1e-15;
constexpr double kInteriorAreaTol = 1e-12;

struct StartResult {
    Point z;
    double g = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
    bool no_descent = false;
    std::vector<Point> path;
    std::vector<double> g_values;
};

StartResult run_descent(const Point& start, const std::vector<Point>& feasible,
                        const StationSet& stations, const DescentConfig& cfg,
                        bool keep_path) {
    StartResult r;
    r.z = project_to_convex_polygon(start, feasible);
    r.g = interference(r.z, stations);
    if (keep_path) {
        r.path.push_back(r.z);
        r.g_values.push_back(r.g);
    }
    for (int n = 0; n < cfg.max_iters; ++n) {
        const Point grad = interference_gradient(r.z, stations);
        const double gnorm = grad.norm();
        if (gnorm < cfg.grad_tol) {
            r.converged = true;
            return r;
        }
        const Point dir{-grad.x / gnorm, -grad.y / gnorm};

        // backtrack from the full step until g strictly decreases
        Point next = r.z;
        double g_next = r.g;
        bool accepted = false;
        for (double step = cfg.step_dt; step >= kMinStep; step *= cfg.shrink_factor) {
            const Point cand = project_to_convex_polygon(
                {r.z.x + step * dir.x, r.z.y + step * dir.y}, feasible);
            const double g_cand = interference(cand, stations);
            if (g_cand < r.g) {
                next = cand;
                g_next = g_cand;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (n == 0) {
                r.no_descent = true;
                return r;
            }
            // no feasible decrease left: constrained minimum
            r.converged = true;
            return r;
        }
        const double moved = dist(next, r.z);
        r.z = next;
        r.g = g_next;
        ++r.iterations;
        if (keep_path) {
            r.path.push_back(r.z);
            r.g_values.push_back(r.g);
        }
        if (moved < cfg.move_tol) {
            r.converged = true;
            return r;
        }
    }
    r.converged = false; // iteration cap
    return r;
}

} // namespace

CandidateSite minimize_in_triangle(const Triangle& t, const std::vector<Point>& points,
                                   const StationSet& stations, const Rect& roi,
                                   const DescentConfig& cfg, DescentTrace* trace) {
    const std::vector<Point> feasible = clip_triangle_to_rect(t, points, roi);
    if (feasible.empty() || polygon_area(feasible) <= kInteriorAreaTol)
        throw EmptyIntersection("minimize_in_triangle: triangle ∩ roi has no interior");

    const Point& a = points[t.v[0]];
    const Point& b = points[t.v[1]];
    const Point& c = points[t.v[2]];
    std::vector<Point> starts{centroid(t, points)};
    if (cfg.multistart) {
        starts.push_back({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
        starts.push_back({0.5 * (b.x + c.x), 0.5 * (b.y + c.y)});
        starts.push_back({0.5 * (c.x + a.x), 0.5 * (c.y + a.y)});
    }

    std::vector<StartResult> results;
    results.reserve(starts.size());
    for (const Point& s : starts)
        results.push_back(run_descent(s, feasible, stations, cfg, trace != nullptr));

    int best = -1;
    for (int i = 0; i < static_cast<int>(results.size()); ++i) {
        if (results[i].no_descent) continue;
        if (best < 0 || results[i].g < results[best].g) best = i;
    }
    if (best < 0) throw NoDescent("minimize_in_triangle: no start point admits a descent step");

    if (trace) {
        trace->path = std::move(results[best].path);
        trace->g_values = std::move(results[best].g_values);
        trace->start_points.clear();
        trace->start_finals.clear();
        for (size_t i = 0; i < results.size(); ++i) {
            trace->start_points.push_back(
                project_to_convex_polygon(starts[i], feasible));
            trace->start_finals.push_back(results[i].z);
        }
    }

    CandidateSite site;
    site.position = results[best].z;
    site.interference = results[best].g;
    site.iterations = results[best].iterations;
    site.converged = results[best].converged;
    return site;
}

std::vector<CandidateSite> candidate_minima(const Triangulation& tri,
                                            const StationSet& stations, const Rect& roi,
                                            const DescentConfig& cfg,
                                            std::vector<DescentTrace>* traces, int threads) {
    std::vector<int> active;
    for (int ti = 0; ti < tri.num_triangles(); ++ti) {
        const std::vector<Point> clipped =
            clip_triangle_to_rect(tri.triangles[ti], tri.points, roi);
        if (!clipped.empty() && polygon_area(clipped) > kInteriorAreaTol)
            active.push_back(ti);
    }

    std::vector<CandidateSite> sites(active.size());
    std::vector<DescentTrace> local_traces(traces ? active.size() : 0);
    parallel_for(static_cast<int>(active.size()), threads, [&](int i) {
        const int ti = active[static_cast<size_t>(i)];
        DescentTrace* tr = traces ? &local_traces[static_cast<size_t>(i)] : nullptr;
        CandidateSite site;
        try {
            site = minimize_in_triangle(tri.triangles[ti], tri.points, stations, roi, cfg, tr);
        } catch (const NoDescent&) {
            // keep the centroid as an unconverged candidate
            const Point z = clamp_to_triangle_and_rect(centroid(tri.triangles[ti], tri.points),
                                                       tri.triangles[ti], tri.points, roi);
            site.position = z;
            site.interference = interference(z, stations);
            site.iterations = 0;
            site.converged = false;
        }
        site.triangle_id = ti;
        if (tr) tr->triangle_id = ti;
        sites[static_cast<size_t>(i)] = site;
    });
    if (traces) *traces = std::move(local_traces);
    return sites;
}

std::string candidates_to_text(const std::vector<CandidateSite>& sites) {
    std::string out;
    for (const CandidateSite& s : sites) {
        out += std::to_string(s.triangle_id) + "," + format_double(s.position.x) + "," +
               format_double(s.position.y) + "," + format_double(s.interference) + "," +
               std::to_string(s.iterations) + "," + (s.converged ? "1" : "0") + "\n";
    }
    return out;
}

void save_candidates(const std::string& path, const std::vector<CandidateSite>& sites) {
    write_file(path, candidates_to_text(sites));
}

} // namespace bsplan
