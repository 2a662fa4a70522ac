#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsplan/metrics.hpp"
#include "bsplan/optimizer.hpp"
#include "bsplan/placement.hpp"

namespace bsplan {

struct RenderSpec {
    int canvas_px = 900;
    int raster_resolution = 250; // reception-area shading cells per axis over roi
    bool reception_areas = true;
    bool stations = true;
    bool triangulation = false;
    bool candidates = false;
    bool descent_paths = false;
    bool roi = true;
    bool added_stations = false;
    Rect view; // world window; when invalid, roi inflated by 25%

    bool any_layer() const {
        return reception_areas || stations || triangulation || candidates || descent_paths ||
               roi || added_stations;
    }
};

// Deterministic SVG 1.1 document. Reception-area shading covers the roi with
// the same cell classification the metrics module uses; when a plan is given
// the shading and markers include the added stations. Optional layers with a
// null source are left out.
std::string render_scenario(const StationSet& stations, const Rect& roi,
                            const Triangulation* tri,
                            const std::vector<CandidateSite>* candidates,
                            const std::vector<DescentTrace>* traces,
                            const PlacementPlan* plan, const RadioParams& params,
                            const RenderSpec& spec);

} // namespace bsplan
