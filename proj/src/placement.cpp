#include "bsplan/placement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bsplan/textio.hpp"

namespace bsplan {

namespace {

constexpr double kTieRelTol = 1e-12;

bool g_tied(double a, double b) {
    return std::abs(a - b) <= kTieRelTol * std::max(std::abs(a), std::abs(b));
}

// ascending g; ties within 1e-12 relative go to the smaller triangle id
void rank_candidates(std::vector<CandidateSite>& sites) {
    std::stable_sort(sites.begin(), sites.end(),
                     [](const CandidateSite& a, const CandidateSite& b) {
                         return a.interference != b.interference
                                    ? a.interference < b.interference
                                    : a.triangle_id < b.triangle_id;
                     });
    size_t lo = 0;
    while (lo < sites.size()) {
        size_t hi = lo + 1;
        while (hi < sites.size() && g_tied(sites[hi - 1].interference, sites[hi].interference))
            ++hi;
        if (hi - lo > 1)
            std::sort(sites.begin() + static_cast<long>(lo), sites.begin() + static_cast<long>(hi),
                      [](const CandidateSite& a, const CandidateSite& b) {
                          return a.triangle_id < b.triangle_id;
                      });
        lo = hi;
    }
}

const CandidateSite* best_candidate(const std::vector<CandidateSite>& sites) {
    const CandidateSite* best = nullptr;
    for (const CandidateSite& s : sites) {
        if (!best || s.interference < best->interference ||
            (g_tied(s.interference, best->interference) && s.triangle_id < best->triangle_id))
            best = &s;
    }
    return best;
}

void check_plan_inputs(const StationSet& stations, int k) {
    if (k < 0) throw InvalidParam("k must be >= 0");
    if (stations.size() < 3)
        throw DegenerateInput("placement needs at least 3 stations");
}

} // namespace

PlacementPlan heuristic1(const StationSet& stations, const Rect& roi, int k,
                         const DescentConfig& cfg, int threads) {
    check_plan_inputs(stations, k);
    PlacementPlan plan;
    plan.heuristic_id = 1;
    plan.roi = roi;
    if (k == 0) return plan;

    const Triangulation tri = delaunay_triangulate(stations.positions);
    std::vector<CandidateSite> pool = candidate_minima(tri, stations, roi, cfg, nullptr, threads);
    rank_candidates(pool);
    const int take = std::min<int>(k, static_cast<int>(pool.size()));
    for (int i = 0; i < take; ++i) {
        plan.added.push_back(pool[static_cast<size_t>(i)].position);
        plan.per_addition_interference.push_back(pool[static_cast<size_t>(i)].interference);
    }
    return plan;
}

PlacementPlan heuristic2(const StationSet& stations, const Rect& roi, int k,
                         const DescentConfig& cfg, int threads) {
    check_plan_inputs(stations, k);
    PlacementPlan plan;
    plan.heuristic_id = 2;
    plan.roi = roi;
    if (k == 0) return plan;

    StationSet current = stations;
    Triangulation tri = delaunay_triangulate(current.positions);
    for (int round = 0; round < k; ++round) {
        const std::vector<CandidateSite> pool =
            candidate_minima(tri, current, roi, cfg, nullptr, threads);
        const CandidateSite* pick = best_candidate(pool);
        if (!pick) break;
        plan.added.push_back(pick->position);
        plan.per_addition_interference.push_back(pick->interference);
        insert_point(tri, pick->position);
        current.positions.push_back(pick->position);
    }
    return plan;
}

std::string plan_to_text(const PlacementPlan& plan) {
    std::string out;
    out += "heuristic," + std::to_string(plan.heuristic_id) + "\n";
    out += "# roi = " + format_double(plan.roi.min_x) + "," + format_double(plan.roi.min_y) +
           "," + format_double(plan.roi.max_x) + "," + format_double(plan.roi.max_y) + "\n";
    for (int i = 0; i < plan.size(); ++i) {
        out += std::to_string(i + 1) + "," + format_double(plan.added[static_cast<size_t>(i)].x) +
               "," + format_double(plan.added[static_cast<size_t>(i)].y) + "," +
               format_double(plan.per_addition_interference[static_cast<size_t>(i)]) + "\n";
    }
    return out;
}

PlacementPlan parse_plan(const std::string& text) {
    PlacementPlan plan;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    bool have_roi = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            std::string_view body = trim(sv.substr(1));
            if (body.rfind("roi", 0) == 0) {
                const size_t eq = body.find('=');
                if (eq != std::string_view::npos) {
                    const auto f = split_csv(body.substr(eq + 1));
                    if (f.size() == 4) {
                        plan.roi = Rect(parse_double(f[0]), parse_double(f[1]),
                                        parse_double(f[2]), parse_double(f[3]));
                        have_roi = true;
                    }
                }
            }
            continue;
        }
        const auto fields = split_csv(sv);
        if (!have_header) {
            if (fields.size() != 2 || fields[0] != "heuristic")
                throw ParseError("plan file: expected 'heuristic,<1|2>' header");
            const long long h = parse_int(fields[1]);
            if (h != 1 && h != 2) throw ParseError("plan file: heuristic must be 1 or 2");
            plan.heuristic_id = static_cast<int>(h);
            have_header = true;
            continue;
        }
        if (fields.size() != 4)
            throw ParseError("plan file line " + std::to_string(lineno) +
                             ": expected 'order,x,y,g'");
        const long long order = parse_int(fields[0]);
        if (order != plan.size() + 1)
            throw ParseError("plan file line " + std::to_string(lineno) +
                             ": out-of-sequence order field");
        plan.added.emplace_back(parse_double(fields[1]), parse_double(fields[2]));
        plan.per_addition_interference.push_back(parse_double(fields[3]));
    }
    if (!have_header) throw ParseError("plan file: missing 'heuristic,<1|2>' header");
    if (!have_roi) plan.roi = Rect();
    return plan;
}

void save_plan(const std::string& path, const PlacementPlan& plan) {
    write_file(path, plan_to_text(plan));
}

PlacementPlan load_plan(const std::string& path) { return parse_plan(read_file(path)); }

} // namespace bsplan
