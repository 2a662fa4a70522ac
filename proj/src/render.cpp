#include "bsplan/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace bsplan {

namespace {

const char* kPalette[12] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc949",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Mapper {
    Rect view;
    double scale;
    double off_x, off_y;
    int canvas;

    Mapper(const Rect& v, int canvas_px) : view(v), canvas(canvas_px) {
        scale = std::min(canvas_px / v.width(), canvas_px / v.height());
        off_x = 0.5 * (canvas_px - scale * v.width());
        off_y = 0.5 * (canvas_px - scale * v.height());
    }
    double sx(double wx) const { return off_x + (wx - view.min_x) * scale; }
    double sy(double wy) const { return canvas - off_y - (wy - view.min_y) * scale; }
};

} // namespace

std::string render_scenario(const StationSet& stations, const Rect& roi,
                            const Triangulation* tri,
                            const std::vector<CandidateSite>* candidates,
                            const std::vector<DescentTrace>* traces,
                            const PlacementPlan* plan, const RadioParams& params,
                            const RenderSpec& spec) {
    if (spec.canvas_px < 100) throw InvalidSpec("render: canvas must be at least 100x100");
    if (!spec.any_layer()) throw InvalidSpec("render: no layer enabled");
    if (spec.raster_resolution < 2) throw InvalidSpec("render: raster resolution must be >= 2");

    Rect view = spec.view;
    if (!view.valid()) {
        const double pad = 0.25 * std::max(roi.width(), roi.height());
        view = Rect(roi.min_x - pad, roi.min_y - pad, roi.max_x + pad, roi.max_y + pad);
    }
    const Mapper m(view, spec.canvas_px);

    StationSet field = stations;
    if (plan)
        field.positions.insert(field.positions.end(), plan->added.begin(), plan->added.end());

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.canvas_px) + "\" height=\"" + std::to_string(spec.canvas_px) +
           "\" viewBox=\"0 0 " + std::to_string(spec.canvas_px) + " " +
           std::to_string(spec.canvas_px) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.canvas_px) + "\" height=\"" +
           std::to_string(spec.canvas_px) + "\" fill=\"#ffffff\"/>\n";

    if (spec.reception_areas && !field.empty()) {
        const int res = spec.raster_resolution;
        const GridClassification grid =
            classify_coverage_grid(field, roi, params.beta, res, params.sinr_cap, 1);
        svg += "<g id=\"reception_areas\" fill-opacity=\"0.55\" data-covered-cells=\"" +
               std::to_string(grid.covered_cells()) + "\">\n";
        const double cw = roi.width() / res;
        const double ch = roi.height() / res;
        for (int row = 0; row < res; ++row) {
            const std::int32_t* line = grid.server.data() + static_cast<size_t>(row) * res;
            int col = 0;
            while (col < res) {
                const std::int32_t s = line[col];
                if (s < 0) {
                    ++col;
                    continue;
                }
                int end = col + 1;
                while (end < res && line[end] == s) ++end; // merge horizontal runs
                const double x0 = roi.min_x + col * cw;
                const double x1 = roi.min_x + end * cw;
                const double y0 = roi.min_y + row * ch;
                const double y1 = roi.min_y + (row + 1) * ch;
                svg += "<rect x=\"" + px(m.sx(x0)) + "\" y=\"" + px(m.sy(y1)) + "\" width=\"" +
                       px((x1 - x0) * m.scale) + "\" height=\"" + px((y1 - y0) * m.scale) +
                       "\" fill=\"" + kPalette[s % 12] + "\"/>\n";
                col = end;
            }
        }
        svg += "</g>\n";
    }

    if (spec.triangulation && tri) {
        svg += "<g id=\"triangulation\" stroke=\"#999999\" stroke-width=\"0.8\">\n";
        std::set<std::pair<int, int>> edges;
        for (const Triangle& t : tri->triangles)
            for (int e = 0; e < 3; ++e)
                edges.insert(std::minmax(t.v[e], t.v[(e + 1) % 3]));
        for (const auto& [i, j] : edges) {
            const Point& a = tri->points[static_cast<size_t>(i)];
            const Point& b = tri->points[static_cast<size_t>(j)];
            svg += "<line x1=\"" + px(m.sx(a.x)) + "\" y1=\"" + px(m.sy(a.y)) + "\" x2=\"" +
                   px(m.sx(b.x)) + "\" y2=\"" + px(m.sy(b.y)) + "\"/>\n";
        }
        svg += "</g>\n";
    }

    if (spec.roi) {
        svg += "<g id=\"roi\">\n<rect x=\"" + px(m.sx(roi.min_x)) + "\" y=\"" +
               px(m.sy(roi.max_y)) + "\" width=\"" + px(roi.width() * m.scale) +
               "\" height=\"" + px(roi.height() * m.scale) +
               "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\"/>\n</g>\n";
    }

    if (spec.descent_paths && traces) {
        svg += "<g id=\"descent_paths\" stroke=\"#e15759\" stroke-width=\"1\" fill=\"none\">\n";
        for (const DescentTrace& tr : *traces) {
            if (tr.path.size() < 2) continue;
            svg += "<polyline points=\"";
            for (size_t i = 0; i < tr.path.size(); ++i) {
                if (i) svg += " ";
                svg += px(m.sx(tr.path[i].x)) + "," + px(m.sy(tr.path[i].y));
            }
            svg += "\"/>\n";
        }
        svg += "</g>\n";
    }

    if (spec.candidates && candidates) {
        svg += "<g id=\"candidates\">\n";
        for (size_t i = 0; i < candidates->size(); ++i) {
            const CandidateSite& c = (*candidates)[i];
            // 'x' at the descent start, 'o' at the located minimum
            Point start = c.position;
            if (traces && i < traces->size() && !(*traces)[i].path.empty())
                start = (*traces)[i].path.front();
            else if (tri && c.triangle_id >= 0 && c.triangle_id < tri->num_triangles())
                start = centroid(tri->triangles[static_cast<size_t>(c.triangle_id)], tri->points);
            const double xs = m.sx(start.x), ys = m.sy(start.y);
            svg += "<path d=\"M " + px(xs - 4) + " " + px(ys - 4) + " L " + px(xs + 4) + " " +
                   px(ys + 4) + " M " + px(xs - 4) + " " + px(ys + 4) + " L " + px(xs + 4) +
                   " " + px(ys - 4) + "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
            svg += "<circle cx=\"" + px(m.sx(c.position.x)) + "\" cy=\"" +
                   px(m.sy(c.position.y)) +
                   "\" r=\"4\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
        }
        svg += "</g>\n";
    }

    if (spec.stations) {
        svg += "<g id=\"stations\" fill=\"#222222\">\n";
        for (const Point& p : stations.positions) {
            if (!view.contains(p)) continue;
            svg += "<circle cx=\"" + px(m.sx(p.x)) + "\" cy=\"" + px(m.sy(p.y)) +
                   "\" r=\"3.5\"/>\n";
        }
        svg += "</g>\n";
    }

    if (spec.added_stations && plan) {
        svg += "<g id=\"added_stations\">\n";
        for (int i = 0; i < plan->size(); ++i) {
            const Point& p = plan->added[static_cast<size_t>(i)];
            svg += "<g class=\"added-station\">";
            svg += "<circle cx=\"" + px(m.sx(p.x)) + "\" cy=\"" + px(m.sy(p.y)) +
                   "\" r=\"8\" fill=\"#d62728\" stroke=\"#ffffff\" stroke-width=\"1.5\"/>";
            svg += "<text x=\"" + px(m.sx(p.x)) + "\" y=\"" + px(m.sy(p.y) + 3.5) +
                   "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\" "
                   "fill=\"#ffffff\">" +
                   std::to_string(i + 1) + "</text>";
            svg += "</g>\n";
        }
        svg += "</g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace bsplan
