#pragma once

#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

namespace fracbem {

/// Thrown when a run or mesh configuration is invalid.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Rectangle {
    double x0, y0, x1, y1;
};

struct Disk {
    double cx, cy, radius;
};

/// Simple closed polygon, vertices in counterclockwise order.
struct Polygon {
    std::vector<Vec2> vertices;
};

using Domain = std::variant<Rectangle, Disk, Polygon>;

/// One straight constant element: endpoints a -> b traversed
/// counterclockwise, source point at the midpoint, unit outward normal.
struct BoundaryElement {
    Vec2 a, b;
    Vec2 midpoint;
    Vec2 normal;
    double length;
};

struct BoundaryMesh {
    std::vector<BoundaryElement> elements;

    int size() const { return static_cast<int>(elements.size()); }
    double total_length() const;
};

/// Interior collocation points P_j with quadrature weights S_j (cell areas).
struct InteriorCellSet {
    std::vector<Vec2> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
    double total_weight() const;
};

double domain_area(const Domain& domain);

/// True iff the point lies strictly inside the domain (boundary excluded).
bool contains(const Domain& domain, Vec2 p);

/// Splits the boundary into n_elements straight constant elements.
/// Rectangles require n divisible by 4; disks get a uniform angular
/// subdivision; polygon edges receive elements proportional to length.
BoundaryMesh discretize_boundary(const Domain& domain, int n_elements);

/// Builds the interior collocation layout. Rectangle: m x m cell centers.
/// Disk: m rings x 4m sectors with exact annular-sector areas. Polygon:
/// bounding-box grid keeping cells whose centers lie inside.
InteriorCellSet interior_cells(const Domain& domain, int resolution);

} // namespace fracbem
