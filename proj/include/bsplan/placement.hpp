#pragma once

#include "bsplan/optimizer.hpp"

namespace bsplan {

struct PlacementPlan {
    std::vector<Point> added; // in order of addition
    int heuristic_id = 1;
    std::vector<double> per_addition_interference;
    Rect roi;

    int size() const { return static_cast<int>(added.size()); }
};

// Rank the candidate pool of the original network once by ascending g
// (ties by triangle id) and take the first k.
PlacementPlan heuristic1(const StationSet& stations, const Rect& roi, int k,
                         const DescentConfig& cfg, int threads = 1);

// Greedy with re-triangulation: each round adds the global-minimum candidate
// of the current (augmented) network, inserts it into the triangulation, and
// recomputes the pool.
PlacementPlan heuristic2(const StationSet& stations, const Rect& roi, int k,
                         const DescentConfig& cfg, int threads = 1);

// Plan file: "heuristic,<1|2>" header, then "order,x,y,g_at_selection" lines.
// The roi travels in a "# roi = x0,y0,x1,y1" comment.
std::string plan_to_text(const PlacementPlan& plan);
PlacementPlan parse_plan(const std::string& text);
void save_plan(const std::string& path, const PlacementPlan& plan);
PlacementPlan load_plan(const std::string& path);

} // namespace bsplan
