#include "asnp/polygon.hpp"

#include "asnp/errors.hpp"

#include <algorithm>

namespace asnp {

SlopeMultiset::SlopeMultiset(std::vector<SlopeEntry> entries) {
    for (auto& e : entries) add(e.slope, e.mult);
}

void SlopeMultiset::add(const Rational& slope, std::int64_t mult) {
    if (mult < 0) throw InputError("negative slope multiplicity");
    if (mult == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), slope,
                               [](const SlopeEntry& e, const Rational& s) { return e.slope < s; });
    if (it != entries_.end() && it->slope == slope) {
        it->mult += mult;
    } else {
        entries_.insert(it, SlopeEntry{slope, mult});
    }
}

void SlopeMultiset::add(const SlopeMultiset& other) {
    for (const auto& e : other.entries_) add(e.slope, e.mult);
}

std::int64_t SlopeMultiset::width() const {
    std::int64_t w = 0;
    for (const auto& e : entries_) w += e.mult;
    return w;
}

std::int64_t SlopeMultiset::multiplicity(const Rational& slope) const {
    for (const auto& e : entries_) {
        if (e.slope == slope) return e.mult;
    }
    return 0;
}

NewtonPolygon NewtonPolygon::from_vertices(std::vector<Vertex> vertices) {
    if (vertices.empty() || vertices.front().x != 0 || !vertices.front().y.is_zero()) {
        throw InputError("polygon must start at (0,0)");
    }
    Rational prev_slope;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const auto dx = vertices[i].x - vertices[i - 1].x;
        if (dx <= 0) throw InputError("polygon x-coordinates must be strictly increasing");
        Rational slope = (vertices[i].y - vertices[i - 1].y) / Rational(dx);
        if (i > 1 && slope <= prev_slope) {
            throw InputError("polygon slopes must be strictly increasing (convex, canonical form)");
        }
        prev_slope = slope;
    }
    return NewtonPolygon(std::move(vertices));
}

SlopeMultiset NewtonPolygon::slopes() const {
    SlopeMultiset s;
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const auto dx = vertices_[i].x - vertices_[i - 1].x;
        s.add((vertices_[i].y - vertices_[i - 1].y) / Rational(dx), dx);
    }
    return s;
}

Rational NewtonPolygon::at(const Rational& x) const {
    if (x < Rational(0) || x > Rational(width())) throw InputError("polygon evaluated outside [0, width]");
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        const Rational x1(vertices_[i].x);
        if (x <= x1) {
            const Rational x0(vertices_[i - 1].x);
            const auto& y0 = vertices_[i - 1].y;
            return y0 + (vertices_[i].y - y0) * (x - x0) / (x1 - x0);
        }
    }
    return vertices_.back().y;
}

NewtonPolygon lower_hull(std::vector<Vertex> points) {
    if (points.empty()) throw InputError("lower hull of an empty point set");
    std::sort(points.begin(), points.end(), [](const Vertex& a, const Vertex& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].x == points[i - 1].x) {
            throw InputError("duplicate x-value " + std::to_string(points[i].x) + " in hull input");
        }
    }
    if (points.front().x != 0) throw InputError("hull input has no point with x = 0");
    if (!points.front().y.is_zero()) throw InputError("hull input point at x = 0 must have y = 0");

    std::vector<Vertex> hull;
    for (auto& pt : points) {
        // Pop b while it lies on or above the chord from a to pt.
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const Rational lhs = (b.y - a.y) * Rational(pt.x - a.x);
            const Rational rhs = (pt.y - a.y) * Rational(b.x - a.x);
            if (lhs >= rhs) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(std::move(pt));
    }
    return NewtonPolygon::from_vertices(std::move(hull));
}

NewtonPolygon from_slopes(const SlopeMultiset& slopes) {
    std::vector<Vertex> v{Vertex{0, Rational(0)}};
    for (const auto& e : slopes.entries()) {
        const auto& last = v.back();
        v.push_back(Vertex{last.x + e.mult, last.y + e.slope * Rational(e.mult)});
    }
    return NewtonPolygon::from_vertices(std::move(v));
}

namespace {

void require_comparable(const NewtonPolygon& a, const NewtonPolygon& b) {
    if (a.width() != b.width()) {
        throw InputError("incomparable polygons: widths " + std::to_string(a.width()) + " and " +
                         std::to_string(b.width()));
    }
    if (a.height() != b.height()) {
        throw InputError("incomparable polygons: endpoints (" + std::to_string(a.width()) + ", " +
                         a.height().pretty() + ") and (" + std::to_string(b.width()) + ", " +
                         b.height().pretty() + ")");
    }
}

}  // namespace

bool lies_on_or_above(const NewtonPolygon& upper, const NewtonPolygon& lower) {
    require_comparable(upper, lower);
    for (const auto& v : lower.vertices()) {
        if (upper.at(v.x) < v.y) return false;
    }
    for (const auto& v : upper.vertices()) {
        if (v.y < lower.at(v.x)) return false;
    }
    return true;
}

bool is_symmetric(const NewtonPolygon& polygon) {
    const auto s = polygon.slopes();
    for (const auto& e : s.entries()) {
        if (s.multiplicity(Rational(1) - e.slope) != e.mult) return false;
    }
    return true;
}

bool has_integral_breakpoints(const NewtonPolygon& polygon) {
    return std::all_of(polygon.vertices().begin(), polygon.vertices().end(),
                       [](const Vertex& v) { return v.y.is_integer(); });
}

NewtonPolygon scale_multiplicities(const NewtonPolygon& polygon, std::int64_t factor) {
    if (factor <= 0) throw InputError("scaling factor must be positive");
    std::vector<Vertex> v;
    v.reserve(polygon.vertices().size());
    for (const auto& pt : polygon.vertices()) v.push_back(Vertex{pt.x * factor, pt.y * Rational(factor)});
    return NewtonPolygon::from_vertices(std::move(v));
}

std::int64_t slope_zero_multiplicity(const NewtonPolygon& polygon) {
    return polygon.slopes().multiplicity(Rational(0));
}

namespace {

std::int64_t floor_of(const Rational& r) {
    BigInt q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) q -= 1;
    return static_cast<std::int64_t>(q);
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

// Depth-first search over the left half of a symmetric lattice polygon. A left chain
// (0,0)=v_0,...,v_k with slopes strictly increasing and < 1/2 determines the polygon:
// a slope-1/2 segment through the midpoint, then the mirror image v'(x) = (W-x, H-x+y).
class BetweenSearch {
public:
    BetweenSearch(const NewtonPolygon& lower, const NewtonPolygon& upper, std::size_t cap)
        : lower_(lower), upper_(upper), cap_(cap), width_(lower.width()), height_(lower.height()) {
        half_ = width_ / 2;
        for (std::int64_t x = 0; x <= half_; ++x) {
            lo_.push_back(ceil_of(lower_.at(x)));
            hi_.push_back(floor_of(upper_.at(x)));
        }
    }

    BetweenResult run() {
        BetweenResult out;
        if (cap_ == 0) {
            out.truncated = true;
            return out;
        }
        if (width_ == 0) {
            out.polygons.push_back(NewtonPolygon());
            return out;
        }
        if (!height_.is_integer()) return out;
        chain_ = {{0, 0}};
        visit(Rational(-1), out);
        if (out.polygons.size() > cap_) {
            out.polygons.resize(cap_);
            out.truncated = true;
        }
        return out;
    }

private:
    struct Point {
        std::int64_t x;
        std::int64_t y;
    };

    bool full(const BetweenResult& out) const { return out.polygons.size() > cap_; }

    // Chord from a to b stays on or below the upper bound at the upper bound's vertices in between.
    bool chord_below_upper(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) const {
        for (const auto& v : upper_.vertices()) {
            const Rational vx(v.x);
            if (vx <= ax) continue;
            if (vx >= bx) break;
            if (ay + (by - ay) * (vx - ax) / (bx - ax) > v.y) return false;
        }
        return true;
    }

    void visit(const Rational& last_slope, BetweenResult& out) {
        const Point cur = chain_.back();
        const Rational half_slope(1, 2);
        for (std::int64_t nx = cur.x + 1; nx <= half_ && !full(out); ++nx) {
            const std::int64_t dx = nx - cur.x;
            std::int64_t y_min = lo_[nx];
            std::int64_t y_max = hi_[nx];
            // slope strictly greater than last_slope and strictly below 1/2
            y_min = std::max(y_min, floor_of(Rational(cur.y) + last_slope * Rational(dx)) + 1);
            y_max = std::min(y_max, ceil_of(Rational(cur.y) + half_slope * Rational(dx)) - 1);
            for (std::int64_t ny = y_min; ny <= y_max && !full(out); ++ny) {
                if (!chord_below_upper(Rational(cur.x), Rational(cur.y), Rational(nx), Rational(ny))) continue;
                chain_.push_back({nx, ny});
                visit(Rational(ny - cur.y, dx), out);
                chain_.pop_back();
            }
        }
        if (!full(out)) emit_if_valid(out);
    }

    void emit_if_valid(BetweenResult& out) {
        const Point last = chain_.back();
        const Rational mid_x = Rational(width_) / Rational(2);
        const Rational lx(last.x);
        const Rational ly(last.y);
        if (lx < mid_x) {
            const Rational mid_y = ly + (mid_x - lx) / Rational(2);
            if (mid_y < lower_.at(mid_x) || mid_y > upper_.at(mid_x)) return;
            if (!chord_below_upper(lx, ly, mid_x, mid_y)) return;
        }
        std::vector<Vertex> v;
        for (const auto& p : chain_) v.push_back(Vertex{p.x, Rational(p.y)});
        for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
            const std::int64_t mx = width_ - it->x;
            if (mx == it->x) continue;  // midpoint vertex
            v.push_back(Vertex{mx, height_ - Rational(it->x) + Rational(it->y)});
        }
        out.polygons.push_back(NewtonPolygon::from_vertices(std::move(v)));
    }

    const NewtonPolygon& lower_;
    const NewtonPolygon& upper_;
    std::size_t cap_;
    std::int64_t width_;
    Rational height_;
    std::int64_t half_ = 0;
    std::vector<std::int64_t> lo_;
    std::vector<std::int64_t> hi_;
    std::vector<Point> chain_;
};

}  // namespace

BetweenResult enumerate_between(const NewtonPolygon& lower, const NewtonPolygon& upper, std::size_t cap) {
    if (!lies_on_or_above(upper, lower)) throw InputError("enumerate_between: lower bound is not below upper bound");
    if (!is_symmetric(lower) || !is_symmetric(upper)) throw InputError("enumerate_between: bounds must be symmetric");
    return BetweenSearch(lower, upper, cap).run();
}

BetweenResult enumerate_strictly_between(const NewtonPolygon& lower, const NewtonPolygon& upper,
                                         std::size_t cap) {
    // Two extra slots absorb the endpoints if they appear.
    auto all = enumerate_between(lower, upper, cap + 2);
    BetweenResult out;
    for (auto& p : all.polygons) {
        if (p == lower || p == upper) continue;
        if (out.polygons.size() == cap) {
            out.truncated = true;
            break;
        }
        out.polygons.push_back(std::move(p));
    }
    if (all.truncated) out.truncated = true;
    return out;
}

}  // namespace asnp
