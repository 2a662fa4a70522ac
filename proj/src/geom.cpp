#include "bsplan/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "bsplan/textio.hpp"

namespace bsplan {

namespace {

constexpr double kPredTol = 1e-12;

double orient_normalized(const Point& a, const Point& b, const Point& c) {
    const double det = orient2d(a, b, c);
    const double m = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y),
                               std::abs(c.x - a.x), std::abs(c.y - a.y)});
    if (m == 0.0) return 0.0;
    return det / (m * m);
}

double incircle_normalized(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double ad2 = adx * adx + ady * ady;
    const double bd2 = bdx * bdx + bdy * bdy;
    const double cd2 = cdx * cdx + cdy * cdy;
    const double det = adx * (bdy * cd2 - bd2 * cdy) - ady * (bdx * cd2 - bd2 * cdx) +
                       ad2 * (bdx * cdy - bdy * cdx);
    const double m = std::max({std::abs(adx), std::abs(ady), std::abs(bdx), std::abs(bdy),
                               std::abs(cdx), std::abs(cdy)});
    if (m == 0.0) return 0.0;
    const double m2 = m * m;
    return det / (m2 * m2);
}

struct WorkTri {
    std::array<int, 3> v{-1, -1, -1};
    std::array<int, 3> n{-1, -1, -1}; // neighbor across edge opposite v[i]
    bool alive = true;
};

// Incremental Bowyer-Watson state. Triangles are CCW throughout.
struct Builder {
    std::vector<Point> pts;
    std::vector<WorkTri> tris;
    int hint = 0;

    bool in_circle(const WorkTri& t, const Point& p) const {
        return incircle_normalized(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]], p) > kPredTol;
    }

    int locate(const Point& p) const {
        int cur = hint >= 0 && hint < static_cast<int>(tris.size()) && tris[hint].alive ? hint : -1;
        if (cur < 0) {
            for (int i = 0; i < static_cast<int>(tris.size()); ++i)
                if (tris[i].alive) { cur = i; break; }
            if (cur < 0) return -1;
        }
        const int max_steps = 4 * static_cast<int>(tris.size()) + 16;
        for (int steps = 0; steps < max_steps; ++steps) {
            const WorkTri& t = tris[cur];
            int crossed = -1;
            for (int e = 0; e < 3; ++e) {
                const Point& ea = pts[t.v[(e + 1) % 3]];
                const Point& eb = pts[t.v[(e + 2) % 3]];
                if (orient_normalized(ea, eb, p) < -kPredTol) { crossed = e; break; }
            }
            if (crossed < 0) return cur;
            const int nb = t.n[crossed];
            if (nb < 0) return -1;
            cur = nb;
        }
        // walk failed to settle (near-degenerate orientation); scan instead
        for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
            if (!tris[i].alive) continue;
            const WorkTri& t = tris[i];
            bool inside = true;
            for (int e = 0; e < 3 && inside; ++e)
                inside = orient_normalized(pts[t.v[(e + 1) % 3]], pts[t.v[(e + 2) % 3]], p) >=
                         -kPredTol;
            if (inside) return i;
        }
        return -1;
    }

    void insert_index(int ip) {
        const Point& p = pts[ip];
        const int t0 = locate(p);
        if (t0 < 0) throw OutsideHull("insert_point: point outside the triangulation hull");

        std::vector<char> mark(tris.size(), 0); // 1 visited, 2 in cavity
        std::vector<int> cavity;
        std::vector<int> stack{t0};
        mark[t0] = 1;
        while (!stack.empty()) {
            const int ti = stack.back();
            stack.pop_back();
            if (!in_circle(tris[ti], p)) continue;
            mark[ti] = 2;
            cavity.push_back(ti);
            for (int e = 0; e < 3; ++e) {
                const int nb = tris[ti].n[e];
                if (nb >= 0 && !mark[nb]) {
                    mark[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }
        if (cavity.empty()) {
            // p inside t0 but the in-circle test declared a tie; carve t0 alone,
            // pulling in edge neighbors when p sits on a shared edge
            mark[t0] = 2;
            cavity.push_back(t0);
            for (int e = 0; e < 3; ++e) {
                const Point& ea = pts[tris[t0].v[(e + 1) % 3]];
                const Point& eb = pts[tris[t0].v[(e + 2) % 3]];
                const int nb = tris[t0].n[e];
                if (std::abs(orient_normalized(ea, eb, p)) <= kPredTol && nb >= 0) {
                    mark[nb] = 2;
                    cavity.push_back(nb);
                }
            }
        }

        struct BEdge {
            int a, b, outer;
        };
        std::vector<BEdge> boundary;
        for (int round = 0;; ++round) {
            boundary.clear();
            bool grew = false;
            for (size_t idx = 0; idx < cavity.size(); ++idx) {
                const int ti = cavity[idx];
                const WorkTri& t = tris[ti];
                for (int e = 0; e < 3; ++e) {
                    const int nb = t.n[e];
                    if (nb >= 0 && mark[nb] == 2) continue;
                    const int a = t.v[(e + 1) % 3];
                    const int b = t.v[(e + 2) % 3];
                    if (orient_normalized(pts[a], pts[b], p) <= kPredTol) {
                        // p collinear with a boundary edge; widen the cavity
                        if (nb < 0)
                            throw OutsideHull("insert_point: point lies on the hull boundary");
                        mark[nb] = 2;
                        cavity.push_back(nb);
                        grew = true;
                        break;
                    }
                    boundary.push_back({a, b, nb});
                }
                if (grew) break;
            }
            if (!grew) break;
            if (round > 16) throw DegenerateInput("insert_point: degenerate cavity");
        }

        for (const int ti : cavity) tris[ti].alive = false;

        std::map<std::pair<int, int>, std::pair<int, int>> open; // edge -> (tri, slot)
        int first_new = -1;
        for (const BEdge& be : boundary) {
            WorkTri nt;
            nt.v = {be.a, be.b, ip};
            nt.n = {-1, -1, be.outer};
            const int nti = static_cast<int>(tris.size());
            if (first_new < 0) first_new = nti;
            if (be.outer >= 0) {
                WorkTri& outer = tris[be.outer];
                for (int s = 0; s < 3; ++s) {
                    const int oa = outer.v[(s + 1) % 3];
                    const int ob = outer.v[(s + 2) % 3];
                    if ((oa == be.a && ob == be.b) || (oa == be.b && ob == be.a)) {
                        outer.n[s] = nti;
                        break;
                    }
                }
            }
            // inner edges: (b,ip) opposite slot 0, (ip,a) opposite slot 1
            const auto link = [&](int u, int w, int slot) {
                const auto key = std::minmax(u, w);
                const auto it = open.find(key);
                if (it == open.end()) {
                    open.emplace(key, std::make_pair(nti, slot));
                } else {
                    nt.n[slot] = it->second.first;
                    // the partner triangle is already stored
                    tris[it->second.first].n[it->second.second] = nti;
                    open.erase(it);
                }
            };
            link(be.b, ip, 0);
            link(ip, be.a, 1);
            tris.push_back(nt);
        }
        hint = first_new;
    }
};

void rebuild_neighbors(Triangulation& tri) {
    tri.neighbors.assign(tri.triangles.size(), {-1, -1, -1});
    std::map<std::pair<int, int>, std::pair<int, int>> open;
    for (int ti = 0; ti < tri.num_triangles(); ++ti) {
        for (int e = 0; e < 3; ++e) {
            const int a = tri.triangles[ti].v[(e + 1) % 3];
            const int b = tri.triangles[ti].v[(e + 2) % 3];
            const auto key = std::minmax(a, b);
            const auto it = open.find(key);
            if (it == open.end()) {
                open.emplace(key, std::make_pair(ti, e));
            } else {
                tri.neighbors[ti][e] = it->second.first;
                tri.neighbors[it->second.first][it->second.second] = ti;
                open.erase(it);
            }
        }
    }
}

void canonicalize(Triangulation& tri) {
    for (Triangle& t : tri.triangles) {
        int k = 0;
        if (t.v[1] < t.v[k]) k = 1;
        if (t.v[2] < t.v[k]) k = 2;
        t.v = {t.v[k], t.v[(k + 1) % 3], t.v[(k + 2) % 3]};
    }
    std::sort(tri.triangles.begin(), tri.triangles.end(),
              [](const Triangle& a, const Triangle& b) { return a.v < b.v; });
    rebuild_neighbors(tri);
}

// Breaks cocircular quads toward the diagonal containing the lowest vertex
// index, so degenerate inputs (e.g. square corners) triangulate identically
// regardless of insertion order.
void normalize_cocircular(Triangulation& tri) {
    const int cap = 3 * tri.num_triangles() + 8;
    for (int iter = 0; iter < cap; ++iter) {
        rebuild_neighbors(tri);
        bool flipped = false;
        for (int ti = 0; ti < tri.num_triangles() && !flipped; ++ti) {
            for (int e = 0; e < 3 && !flipped; ++e) {
                const int nb = tri.neighbors[ti][e];
                if (nb <= ti) continue;
                const int i = tri.triangles[ti].v[e];
                const int a = tri.triangles[ti].v[(e + 1) % 3];
                const int b = tri.triangles[ti].v[(e + 2) % 3];
                int j = -1;
                for (int s = 0; s < 3; ++s) {
                    const int w = tri.triangles[nb].v[s];
                    if (w != a && w != b) { j = w; break; }
                }
                const double det = incircle_normalized(tri.points[i], tri.points[a],
                                                       tri.points[b], tri.points[j]);
                if (std::abs(det) > kPredTol) continue;
                const int m = std::min(std::min(i, j), std::min(a, b));
                if (m == a || m == b) continue; // canonical diagonal already present
                if (orient_normalized(tri.points[i], tri.points[a], tri.points[j]) <= kPredTol)
                    continue;
                if (orient_normalized(tri.points[j], tri.points[b], tri.points[i]) <= kPredTol)
                    continue;
                tri.triangles[ti] = Triangle(i, a, j);
                tri.triangles[nb] = Triangle(j, b, i);
                flipped = true;
            }
        }
        if (!flipped) break;
    }
    canonicalize(tri);
}

Triangulation finalize(Builder& b, int real_points) {
    Triangulation out;
    out.points.assign(b.pts.begin(), b.pts.begin() + real_points);
    for (const WorkTri& t : b.tris) {
        if (!t.alive) continue;
        if (t.v[0] >= real_points || t.v[1] >= real_points || t.v[2] >= real_points) continue;
        out.triangles.emplace_back(t.v[0], t.v[1], t.v[2]);
    }
    normalize_cocircular(out);
    return out;
}

double bbox_diagonal(const std::vector<Point>& pts) {
    double lx = pts[0].x, hx = pts[0].x, ly = pts[0].y, hy = pts[0].y;
    for (const Point& p : pts) {
        lx = std::min(lx, p.x);
        hx = std::max(hx, p.x);
        ly = std::min(ly, p.y);
        hy = std::max(hy, p.y);
    }
    return std::hypot(hx - lx, hy - ly);
}

} // namespace

double triangle_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * std::abs(orient2d(a, b, c));
}

bool in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    return incircle_normalized(a, b, c, d) > kPredTol;
}

bool is_cocircular(const Point& a, const Point& b, const Point& c, const Point& d) {
    return std::abs(incircle_normalized(a, b, c, d)) <= kPredTol;
}

Triangulation delaunay_triangulate(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw TooFewPoints("delaunay_triangulate: need at least 3 points");

    {
        std::vector<int> order(points.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return points[i].x != points[j].x ? points[i].x < points[j].x
                                              : points[i].y < points[j].y;
        });
        for (size_t i = 1; i < order.size(); ++i)
            if (points[order[i]] == points[order[i - 1]])
                throw DuplicatePoint("delaunay_triangulate: duplicate input point");
    }

    bool collinear = true;
    for (int k = 2; k < n && collinear; ++k)
        collinear = std::abs(orient_normalized(points[0], points[1], points[k])) <= kPredTol;
    if (collinear) throw DegenerateInput("delaunay_triangulate: all points are collinear");

    double lx = points[0].x, hx = points[0].x, ly = points[0].y, hy = points[0].y;
    for (const Point& p : points) {
        lx = std::min(lx, p.x);
        hx = std::max(hx, p.x);
        ly = std::min(ly, p.y);
        hy = std::max(hy, p.y);
    }
    const double cx = 0.5 * (lx + hx), cy = 0.5 * (ly + hy);
    const double s = std::max(hx - lx, hy - ly);

    Builder b;
    b.pts = points;
    b.pts.emplace_back(cx - 20.0 * s, cy - 10.0 * s);
    b.pts.emplace_back(cx + 20.0 * s, cy - 10.0 * s);
    b.pts.emplace_back(cx, cy + 20.0 * s);
    WorkTri super;
    super.v = {n, n + 1, n + 2};
    b.tris.push_back(super);
    for (int i = 0; i < n; ++i) b.insert_index(i);
    return finalize(b, n);
}

void insert_point(Triangulation& tri, const Point& p) {
    if (tri.num_triangles() == 0)
        throw TooFewPoints("insert_point: empty triangulation");
    const double dup_tol = 1e-12 * std::max(1.0, bbox_diagonal(tri.points));
    for (const Point& q : tri.points)
        if (dist2(p, q) <= dup_tol * dup_tol)
            throw DuplicatePoint("insert_point: point coincides with an existing vertex");

    Builder b;
    b.pts = tri.points;
    b.pts.push_back(p);
    b.tris.reserve(tri.triangles.size() + 4);
    for (int ti = 0; ti < tri.num_triangles(); ++ti) {
        WorkTri wt;
        wt.v = tri.triangles[ti].v;
        wt.n = tri.neighbors[ti];
        b.tris.push_back(wt);
    }
    const int new_index = static_cast<int>(tri.points.size());
    b.insert_index(new_index);
    tri = finalize(b, new_index + 1);
}

std::array<double, 3> barycentric(const Triangle& t, const std::vector<Point>& points,
                                  const Point& p) {
    const Point& a = points[t.v[0]];
    const Point& b = points[t.v[1]];
    const Point& c = points[t.v[2]];
    if (std::abs(orient_normalized(a, b, c)) <= kPredTol)
        throw DegenerateTriangle("barycentric: degenerate triangle");
    const double den = orient2d(a, b, c);
    return {orient2d(p, b, c) / den, orient2d(a, p, c) / den, orient2d(a, b, p) / den};
}

Point centroid(const Triangle& t, const std::vector<Point>& points) {
    const Point& a = points[t.v[0]];
    const Point& b = points[t.v[1]];
    const Point& c = points[t.v[2]];
    return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
}

std::vector<Point> clip_triangle_to_rect(const Triangle& t, const std::vector<Point>& points,
                                         const Rect& rect) {
    std::vector<Point> poly{points[t.v[0]], points[t.v[1]], points[t.v[2]]};
    if (orient2d(poly[0], poly[1], poly[2]) < 0.0) std::swap(poly[1], poly[2]);

    // Sutherland-Hodgman against each rect half-plane; axis = 0 for x, 1 for y,
    // keep side sign * coord <= sign * bound
    const auto clip = [&](int axis, double bound, double sign) {
        if (poly.empty()) return;
        std::vector<Point> out;
        out.reserve(poly.size() + 1);
        const auto coord = [&](const Point& q) { return axis == 0 ? q.x : q.y; };
        const auto inside = [&](const Point& q) { return sign * (coord(q) - bound) <= 0.0; };
        const auto intersect = [&](const Point& s, const Point& e) {
            const double tpar = (bound - coord(s)) / (coord(e) - coord(s));
            Point r{s.x + (e.x - s.x) * tpar, s.y + (e.y - s.y) * tpar};
            if (axis == 0)
                r.x = bound;
            else
                r.y = bound;
            return r;
        };
        for (size_t i = 0; i < poly.size(); ++i) {
            const Point& s = poly[i];
            const Point& e = poly[(i + 1) % poly.size()];
            if (inside(e)) {
                if (!inside(s)) out.push_back(intersect(s, e));
                out.push_back(e);
            } else if (inside(s)) {
                out.push_back(intersect(s, e));
            }
        }
        poly = std::move(out);
    };
    clip(0, rect.min_x, -1.0);
    clip(0, rect.max_x, 1.0);
    clip(1, rect.min_y, -1.0);
    clip(1, rect.max_y, 1.0);
    return poly;
}

double polygon_area(const std::vector<Point>& poly) {
    if (poly.size() < 3) return 0.0;
    double s = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(s);
}

namespace {

Point closest_on_segment(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return a;
    double t = (p - a).dot(ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return {a.x + ab.x * t, a.y + ab.y * t};
}

} // namespace

Point project_to_convex_polygon(const Point& p, const std::vector<Point>& poly) {
    if (poly.empty()) throw EmptyIntersection("projection target is empty");
    if (poly.size() == 1) return poly[0];
    if (poly.size() >= 3) {
        bool inside = true;
        for (size_t i = 0; i < poly.size() && inside; ++i)
            inside = orient_normalized(poly[i], poly[(i + 1) % poly.size()], p) >= -kPredTol;
        if (inside) return p;
    }
    double best_d2 = std::numeric_limits<double>::infinity();
    Point best = poly[0];
    const size_t edges = poly.size() == 2 ? 1 : poly.size();
    for (size_t i = 0; i < edges; ++i) {
        const Point q = closest_on_segment(p, poly[i], poly[(i + 1) % poly.size()]);
        const double d2 = dist2(p, q);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = q;
        }
    }
    return best;
}

Point clamp_to_triangle_and_rect(const Point& p, const Triangle& t,
                                 const std::vector<Point>& points, const Rect& rect) {
    const std::vector<Point> poly = clip_triangle_to_rect(t, points, rect);
    if (poly.empty())
        throw EmptyIntersection("clamp_to_triangle_and_rect: triangle does not meet rect");
    return project_to_convex_polygon(p, poly);
}

std::string triangulation_to_text(const Triangulation& tri) {
    std::string out;
    out += "points " + std::to_string(tri.num_points()) + "\n";
    for (const Point& p : tri.points)
        out += format_double(p.x) + "," + format_double(p.y) + "\n";
    out += "triangles " + std::to_string(tri.num_triangles()) + "\n";
    for (const Triangle& t : tri.triangles)
        out += std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
               std::to_string(t.v[2]) + "\n";
    return out;
}

} // namespace bsplan
