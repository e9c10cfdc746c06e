#pragma once

#include "asnp/polygon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace asnp {

struct BranchPoint {
    std::string label;
    std::int64_t d = 1;  // ramification invariant, prime to p
};

// Base curve X (genus g, Newton polygon slopes), characteristic p and branch data D = {d_Q}.
class RamificationData {
public:
    // base_slopes must be symmetric, in [0,1], of width 2g; every d prime to p; labels distinct.
    RamificationData(std::int64_t p, std::int64_t g, SlopeMultiset base_slopes, std::vector<BranchPoint> branch);

    // Base curve with slopes {0 x g, 1 x g}.
    static RamificationData ordinary(std::int64_t p, std::int64_t g, const std::vector<std::int64_t>& ds);

    std::int64_t p() const { return p_; }
    std::int64_t g() const { return g_; }
    std::int64_t r() const { return static_cast<std::int64_t>(branch_.size()); }
    const SlopeMultiset& base_slopes() const { return base_slopes_; }
    const std::vector<BranchPoint>& branch() const { return branch_; }
    std::int64_t max_d() const;

    bool is_ordinary() const;

private:
    std::int64_t p_;
    std::int64_t g_;
    SlopeMultiset base_slopes_;
    std::vector<BranchPoint> branch_;
};

// NP_X together with {0,1}^{(p-1)(g+r-1)} and {1/d,...,(d-1)/d}^{p-1} per branch point.
NewtonPolygon hodge_bound(const RamificationData& rd);

// As hodge_bound, with each branch contribution replaced by the slopes of (p-1)GNP(d,p).
NewtonPolygon np_bound(const RamificationData& rd);

// Deuring-Shafarevich: f_Y = 1 + p(f_X - 1) + r(p - 1) for a connected cover.
std::int64_t p_rank_cover(const RamificationData& rd, std::int64_t f_x);

// Genus of a smooth connected cover: p g - p + 1 + sum (p-1)(d_Q+1)/2.
std::int64_t genus_cover(const RamificationData& rd);

// Genus (p-1)(d-1)/2 of y^p - y = f with deg f = d over the projective line.
std::int64_t genus_local(std::int64_t p, std::int64_t d);

// Rank of the dual graph of the singular fiber: r(p-1) connected, (r-1)(p-1) otherwise.
std::int64_t torus_rank(std::int64_t p, std::int64_t r, bool connected);

// g + (p-1)(g+r-1) + sum g_Q.
std::int64_t singular_fiber_dimension(const RamificationData& rd);

// Newton polygon of the singular cover Y_o built from Y' -> X and the local covers Y_Q.
NewtonPolygon singular_fiber_np(const RamificationData& rd, bool connected);

}  // namespace asnp
