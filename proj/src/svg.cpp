#include "tammes/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace tammes {

namespace {

using Vec2 = Eigen::Vector2d;

struct Projection {
    Vec3 pole, e1, e2;

    explicit Projection(const std::vector<UnitVector>& points) {
        Vec3 c = Vec3::Zero();
        for (const auto& p : points) c += p.vec();
        c /= static_cast<double>(points.size());
        pole = c.norm() > 1e-6 ? Vec3(-c.normalized()) : Vec3(0.267261241912424, -0.534522483824849, 0.801783725737273);
        e1 = (std::abs(pole.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY()).cross(pole).normalized();
        e2 = pole.cross(e1);
    }

    Vec2 operator()(const Vec3& x) const {
        const double denom = std::max(1.0 - x.dot(pole), 1e-9);
        return {x.dot(e1) / denom, x.dot(e2) / denom};
    }
};

Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
    const double theta = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
    if (theta < 1e-12) return a;
    return (std::sin((1.0 - t) * theta) * a + std::sin(t * theta) * b) / std::sin(theta);
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    const double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (p - (a + t * ab)).norm();
}

void subdivide(const Projection& proj, const Vec3& a, const Vec3& b, double ta, double tb, double tol, int depth,
               std::vector<Vec2>& out) {
    const Vec3 pa = slerp(a, b, ta), pb = slerp(a, b, tb);
    const double tm = 0.5 * (ta + tb);
    const Vec2 qa = proj(pa), qb = proj(pb), qm = proj(slerp(a, b, tm));
    const bool flat = point_segment_distance(qm, qa, qb) <= tol &&
                      point_segment_distance(proj(slerp(a, b, 0.5 * (ta + tm))), qa, qb) <= tol &&
                      point_segment_distance(proj(slerp(a, b, 0.5 * (tm + tb))), qa, qb) <= tol;
    if (flat || depth >= 20) {
        out.push_back(qb);
        return;
    }
    subdivide(proj, a, b, ta, tm, tol, depth + 1, out);
    subdivide(proj, a, b, tm, tb, tol, depth + 1, out);
}

}  // namespace

std::string render_svg(const std::vector<UnitVector>& points, const std::vector<std::pair<int, int>>& edges,
                       const SvgOptions& options) {
    if (points.empty()) throw std::invalid_argument("render_svg: configuration has no coordinates");
    const int n = static_cast<int>(points.size());
    const Projection proj(points);

    std::vector<std::vector<Vec2>> arcs;
    for (const auto& [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("render_svg: edge index out of range");
        std::vector<Vec2> line{proj(points[i].vec())};
        subdivide(proj, points[i].vec(), points[j].vec(), 0.0, 1.0, options.chord_error, 0, line);
        arcs.push_back(std::move(line));
    }
    std::vector<Vec2> dots;
    for (const auto& p : points) dots.push_back(proj(p.vec()));

    Vec2 lo = Vec2::Constant(std::numeric_limits<double>::infinity()), hi = -lo;
    auto grow = [&](const Vec2& q) {
        lo = lo.cwiseMin(q);
        hi = hi.cwiseMax(q);
    };
    for (const auto& q : dots) grow(q);
    for (const auto& arc : arcs)
        for (const auto& q : arc) grow(q);
    const double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-9});
    const double inner = options.size - 2.0 * options.margin;
    const double scale = inner / span;
    const Vec2 offset = Vec2::Constant(options.margin) +
                        0.5 * (Vec2::Constant(inner) - scale * (hi - lo));
    auto to_px = [&](const Vec2& q) -> Vec2 {
        const Vec2 r = offset + scale * (q - lo);
        return {r.x(), options.size - r.y()};
    };

    std::string svg;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  options.size, options.size, options.size, options.size);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (size_t k = 0; k < arcs.size(); ++k) {
        std::snprintf(buf, sizeof buf, "<polyline class=\"edge\" data-u=\"%d\" data-v=\"%d\" points=\"", edges[k].first,
                      edges[k].second);
        svg += buf;
        for (size_t s = 0; s < arcs[k].size(); ++s) {
            const Vec2 p = to_px(arcs[k][s]);
            std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", s ? " " : "", p.x(), p.y());
            svg += buf;
        }
        svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    }
    for (int v = 0; v < n; ++v) {
        const Vec2 p = to_px(dots[v]);
        std::snprintf(buf, sizeof buf, "<circle class=\"vertex\" data-id=\"%d\" cx=\"%.3f\" cy=\"%.3f\" r=\"%.1f\"/>\n", v,
                      p.x(), p.y(), options.vertex_radius);
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tammes
