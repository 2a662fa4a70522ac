#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "bsplan/errors.hpp"

namespace bsplan {

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }

    double dot(const Point& o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

// Axis-aligned rectangle, closed on all sides.
struct Rect {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    Rect() = default;
    Rect(double x0, double y0, double x1, double y1)
        : min_x(x0), min_y(y0), max_x(x1), max_y(y1) {}

    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    double area() const { return width() * height(); }
    bool valid() const { return max_x > min_x && max_y > min_y; }
    bool contains(const Point& p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    bool contains(const Rect& r) const {
        return r.min_x >= min_x && r.min_y >= min_y && r.max_x <= max_x && r.max_y <= max_y;
    }
};

struct Triangle {
    std::array<int, 3> v{-1, -1, -1};

    Triangle() = default;
    Triangle(int a, int b, int c) : v{a, b, c} {}
    bool operator==(const Triangle& o) const { return v == o.v; }
};

// Delaunay triangulation of a planar point set. Triangles are stored CCW
// with the lowest vertex index first; the triangle list is sorted
// lexicographically so identical point sets give identical structures.
// neighbors[t][e] is the triangle across the edge opposite vertex e, or -1.
struct Triangulation {
    std::vector<Point> points;
    std::vector<Triangle> triangles;
    std::vector<std::array<int, 3>> neighbors;

    int num_points() const { return static_cast<int>(points.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }
};

// Twice the signed area of (a,b,c); positive when CCW.
inline double orient2d(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double triangle_area(const Point& a, const Point& b, const Point& c);

// Strict in-circumcircle test for CCW triangle (a,b,c). Near-cocircular
// configurations (normalized determinant within 1e-12) report false;
// is_cocircular identifies them so ties can be broken deterministically.
bool in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& d);
bool is_cocircular(const Point& a, const Point& b, const Point& c, const Point& d);

Triangulation delaunay_triangulate(const std::vector<Point>& points);

// Bowyer-Watson insertion of one interior point; the result equals a
// from-scratch triangulation of the augmented set.
void insert_point(Triangulation& tri, const Point& p);

std::array<double, 3> barycentric(const Triangle& t, const std::vector<Point>& points,
                                  const Point& p);

Point centroid(const Triangle& t, const std::vector<Point>& points);

// Vertices of the convex polygon t ∩ rect (possibly degenerate or empty),
// in CCW order.
std::vector<Point> clip_triangle_to_rect(const Triangle& t, const std::vector<Point>& points,
                                         const Rect& rect);

double polygon_area(const std::vector<Point>& poly);

// Euclidean projection of p onto the closed convex polygon (CCW).
Point project_to_convex_polygon(const Point& p, const std::vector<Point>& poly);

// Euclidean projection of p onto t ∩ rect.
Point clamp_to_triangle_and_rect(const Point& p, const Triangle& t,
                                 const std::vector<Point>& points, const Rect& rect);

// Plain-text export: "points N", N "x,y" lines, "triangles M", M "i,j,k" lines.
std::string triangulation_to_text(const Triangulation& tri);

} // namespace bsplan
