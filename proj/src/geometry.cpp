#include "fracbem/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fracbem {

namespace {

constexpr double pi = 3.14159265358979323846;

BoundaryElement make_element(Vec2 a, Vec2 b) {
    BoundaryElement e;
    e.a = a;
    e.b = b;
    e.midpoint = {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    e.length = distance(a, b);
    // Outward normal for counterclockwise traversal: rotate tangent by -90 deg.
    e.normal = {(b.y - a.y) / e.length, -(b.x - a.x) / e.length};
    return e;
}

BoundaryMesh mesh_from_loop(const std::vector<Vec2>& loop) {
    BoundaryMesh mesh;
    mesh.elements.reserve(loop.size());
    for (std::size_t i = 0; i < loop.size(); ++i)
        mesh.elements.push_back(make_element(loop[i], loop[(i + 1) % loop.size()]));
    return mesh;
}

std::vector<Vec2> polygon_loop(const Polygon& poly, int n_elements) {
    const int n_edges = static_cast<int>(poly.vertices.size());
    if (n_elements < n_edges)
        throw config_error("discretize_boundary: polygon needs at least one element per edge (" +
                           std::to_string(n_edges) + " edges, " +
                           std::to_string(n_elements) + " elements)");

    std::vector<double> edge_len(n_edges);
    double perimeter = 0.0;
    for (int e = 0; e < n_edges; ++e) {
        edge_len[e] = distance(poly.vertices[e], poly.vertices[(e + 1) % n_edges]);
        perimeter += edge_len[e];
    }

    // Largest-remainder allocation of elements to edges, at least one each.
    std::vector<int> count(n_edges, 1);
    std::vector<double> frac(n_edges);
    int assigned = n_edges;
    for (int e = 0; e < n_edges; ++e) {
        const double ideal = n_elements * edge_len[e] / perimeter;
        const int extra = std::max(0, static_cast<int>(std::floor(ideal)) - 1);
        count[e] += extra;
        assigned += extra;
        frac[e] = ideal - std::floor(ideal);
    }
    std::vector<int> order(n_edges);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return frac[a] > frac[b]; });
    for (int i = 0; assigned < n_elements; ++i)
        ++count[order[i % n_edges]], ++assigned;
    while (assigned > n_elements) {
        // Can only happen when many edges were forced to one element each.
        auto it = std::max_element(count.begin(), count.end());
        if (*it <= 1)
            throw config_error("discretize_boundary: cannot honor element count");
        --*it;
        --assigned;
    }

    std::vector<Vec2> loop;
    loop.reserve(n_elements);
    for (int e = 0; e < n_edges; ++e) {
        const Vec2 a = poly.vertices[e];
        const Vec2 b = poly.vertices[(e + 1) % n_edges];
        for (int i = 0; i < count[e]; ++i) {
            const double t = static_cast<double>(i) / count[e];
            loop.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return loop;
}

double polygon_area(const Polygon& poly) {
    double twice = 0.0;
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % v.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return 0.5 * twice;
}

bool point_in_polygon(const Polygon& poly, Vec2 p) {
    const auto& v = poly.vertices;
    // Points on an edge count as outside.
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % v.size()];
        const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        if (std::abs(cross) < 1e-14 * (1.0 + distance(a, b)) &&
            dot(p - a, p - b) <= 0.0)
            return false;
    }
    bool inside = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if ((v[i].y > p.y) != (v[j].y > p.y)) {
            const double xi =
                v[j].x + (p.y - v[j].y) / (v[i].y - v[j].y) * (v[i].x - v[j].x);
            if (p.x < xi)
                inside = !inside;
        }
    }
    return inside;
}

void check_domain(const Domain& domain) {
    if (const auto* r = std::get_if<Rectangle>(&domain)) {
        if (!(r->x1 > r->x0) || !(r->y1 > r->y0))
            throw config_error("rectangle must have positive side lengths");
    } else if (const auto* d = std::get_if<Disk>(&domain)) {
        if (!(d->radius > 0.0))
            throw config_error("disk must have positive radius");
    } else {
        const auto& p = std::get<Polygon>(domain);
        if (p.vertices.size() < 3)
            throw config_error("polygon needs at least 3 vertices");
        if (polygon_area(p) <= 0.0)
            throw config_error("polygon must be counterclockwise and non-degenerate");
    }
}

} // namespace

double BoundaryMesh::total_length() const {
    double s = 0.0;
    for (const auto& e : elements)
        s += e.length;
    return s;
}

double InteriorCellSet::total_weight() const {
    double s = 0.0;
    for (double w : weights)
        s += w;
    return s;
}

double domain_area(const Domain& domain) {
    check_domain(domain);
    if (const auto* r = std::get_if<Rectangle>(&domain))
        return (r->x1 - r->x0) * (r->y1 - r->y0);
    if (const auto* d = std::get_if<Disk>(&domain))
        return pi * d->radius * d->radius;
    return polygon_area(std::get<Polygon>(domain));
}

bool contains(const Domain& domain, Vec2 p) {
    if (const auto* r = std::get_if<Rectangle>(&domain))
        return p.x > r->x0 && p.x < r->x1 && p.y > r->y0 && p.y < r->y1;
    if (const auto* d = std::get_if<Disk>(&domain))
        return distance(p, {d->cx, d->cy}) < d->radius;
    return point_in_polygon(std::get<Polygon>(domain), p);
}

BoundaryMesh discretize_boundary(const Domain& domain, int n_elements) {
    check_domain(domain);
    if (n_elements < 4)
        throw config_error("discretize_boundary: need at least 4 elements");

    if (const auto* r = std::get_if<Rectangle>(&domain)) {
        if (n_elements % 4 != 0)
            throw config_error("discretize_boundary: rectangle element count must be divisible by 4");
        const int per_side = n_elements / 4;
        const Vec2 corners[4] = {{r->x0, r->y0}, {r->x1, r->y0}, {r->x1, r->y1}, {r->x0, r->y1}};
        std::vector<Vec2> loop;
        loop.reserve(n_elements);
        for (int s = 0; s < 4; ++s) {
            const Vec2 a = corners[s], b = corners[(s + 1) % 4];
            for (int i = 0; i < per_side; ++i) {
                const double t = static_cast<double>(i) / per_side;
                loop.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
            }
        }
        return mesh_from_loop(loop);
    }

    if (const auto* d = std::get_if<Disk>(&domain)) {
        std::vector<Vec2> loop;
        loop.reserve(n_elements);
        for (int i = 0; i < n_elements; ++i) {
            const double th = 2.0 * pi * i / n_elements;
            loop.push_back({d->cx + d->radius * std::cos(th), d->cy + d->radius * std::sin(th)});
        }
        return mesh_from_loop(loop);
    }

    return mesh_from_loop(polygon_loop(std::get<Polygon>(domain), n_elements));
}

InteriorCellSet interior_cells(const Domain& domain, int resolution) {
    check_domain(domain);
    if (resolution < 2)
        throw config_error("interior_cells: resolution must be at least 2");

    InteriorCellSet cells;
    if (const auto* r = std::get_if<Rectangle>(&domain)) {
        const double dx = (r->x1 - r->x0) / resolution;
        const double dy = (r->y1 - r->y0) / resolution;
        for (int j = 0; j < resolution; ++j)
            for (int i = 0; i < resolution; ++i) {
                cells.points.push_back({r->x0 + (i + 0.5) * dx, r->y0 + (j + 0.5) * dy});
                cells.weights.push_back(dx * dy);
            }
        return cells;
    }

    if (const auto* d = std::get_if<Disk>(&domain)) {
        // Polar product grid: exact annular-sector areas.
        const int n_rings = resolution;
        const int n_sectors = 4 * resolution;
        const double dr = d->radius / n_rings;
        const double dth = 2.0 * pi / n_sectors;
        for (int j = 0; j < n_rings; ++j) {
            const double r_in = j * dr, r_out = (j + 1) * dr;
            const double area = 0.5 * dth * (r_out * r_out - r_in * r_in);
            const double r_mid = 0.5 * (r_in + r_out);
            for (int i = 0; i < n_sectors; ++i) {
                const double th = (i + 0.5) * dth;
                cells.points.push_back({d->cx + r_mid * std::cos(th), d->cy + r_mid * std::sin(th)});
                cells.weights.push_back(area);
            }
        }
        return cells;
    }

    const auto& poly = std::get<Polygon>(domain);
    double xmin = poly.vertices[0].x, xmax = xmin, ymin = poly.vertices[0].y, ymax = ymin;
    for (const Vec2& v : poly.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    const double dx = (xmax - xmin) / resolution;
    const double dy = (ymax - ymin) / resolution;
    for (int j = 0; j < resolution; ++j)
        for (int i = 0; i < resolution; ++i) {
            const Vec2 c = {xmin + (i + 0.5) * dx, ymin + (j + 0.5) * dy};
            if (point_in_polygon(poly, c)) {
                cells.points.push_back(c);
                cells.weights.push_back(dx * dy);
            }
        }
    if (cells.points.empty())
        throw config_error("interior_cells: no cell centers fall inside the polygon");
    return cells;
}

} // namespace fracbem
