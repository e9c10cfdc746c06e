#pragma once

#include "asnp/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace asnp {

struct Vertex {
    std::int64_t x = 0;
    Rational y;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex& a, const Vertex& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }
};

struct SlopeEntry {
    Rational slope;
    std::int64_t mult = 0;

    friend bool operator==(const SlopeEntry&, const SlopeEntry&) = default;
};

// Multiset of slopes. Kept sorted ascending with distinct slopes and positive multiplicities.
class SlopeMultiset {
public:
    SlopeMultiset() = default;
    // Entries may be unsorted and repeat slopes; they are merged. Zero multiplicities are dropped.
    explicit SlopeMultiset(std::vector<SlopeEntry> entries);

    void add(const Rational& slope, std::int64_t mult);
    void add(const SlopeMultiset& other);

    const std::vector<SlopeEntry>& entries() const { return entries_; }
    std::int64_t width() const;
    std::int64_t multiplicity(const Rational& slope) const;
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const SlopeMultiset&, const SlopeMultiset&) = default;

private:
    std::vector<SlopeEntry> entries_;
};

// Lower-convex polygon starting at (0,0) with integer x-breakpoints and exact rational heights.
// Canonical: consecutive slopes strictly increase, so equality is equality of vertex lists.
class NewtonPolygon {
public:
    // The width-0 polygon {(0,0)}.
    NewtonPolygon() : vertices_{Vertex{0, Rational(0)}} {}

    // Validates (0,0) start, strictly increasing x and strictly increasing slopes.
    static NewtonPolygon from_vertices(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::int64_t width() const { return vertices_.back().x; }
    const Rational& height() const { return vertices_.back().y; }
    const Vertex& endpoint() const { return vertices_.back(); }

    SlopeMultiset slopes() const;
    // Height of the polygon at x in [0, width].
    Rational at(const Rational& x) const;
    Rational at(std::int64_t x) const { return at(Rational(x)); }

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
    friend auto operator<=>(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.vertices_ <=> b.vertices_;
    }

private:
    explicit NewtonPolygon(std::vector<Vertex> v) : vertices_(std::move(v)) {}
    std::vector<Vertex> vertices_;
};

NewtonPolygon lower_hull(std::vector<Vertex> points);
NewtonPolygon from_slopes(const SlopeMultiset& slopes);

// upper(x) >= lower(x) on [0, width]. Throws InputError if widths or endpoints differ.
bool lies_on_or_above(const NewtonPolygon& upper, const NewtonPolygon& lower);

bool is_symmetric(const NewtonPolygon& polygon);
bool has_integral_breakpoints(const NewtonPolygon& polygon);
NewtonPolygon scale_multiplicities(const NewtonPolygon& polygon, std::int64_t factor);
std::int64_t slope_zero_multiplicity(const NewtonPolygon& polygon);

struct BetweenResult {
    std::vector<NewtonPolygon> polygons;
    bool truncated = false;
};

// Symmetric convex polygons with integral breakpoints squeezed between two bounds,
// in lexicographic order of vertex lists, at most `cap` of them.
BetweenResult enumerate_between(const NewtonPolygon& lower, const NewtonPolygon& upper, std::size_t cap);

// enumerate_between with both endpoints removed.
BetweenResult enumerate_strictly_between(const NewtonPolygon& lower, const NewtonPolygon& upper,
                                         std::size_t cap);

}  // namespace asnp
