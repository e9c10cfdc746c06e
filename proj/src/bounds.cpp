#include "asnp/bounds.hpp"

#include "asnp/errors.hpp"
#include "asnp/gnp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace asnp {

RamificationData::RamificationData(std::int64_t p, std::int64_t g, SlopeMultiset base_slopes,
                                   std::vector<BranchPoint> branch)
    : p_(p), g_(g), base_slopes_(std::move(base_slopes)), branch_(std::move(branch)) {
    if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
    if (g < 0) throw InputError("genus must be nonnegative");
    if (base_slopes_.width() != 2 * g) {
        throw InputError("base Newton polygon has width " + std::to_string(base_slopes_.width()) +
                         ", expected 2g = " + std::to_string(2 * g));
    }
    for (const auto& e : base_slopes_.entries()) {
        if (e.slope < Rational(0) || e.slope > Rational(1)) throw InputError("base slopes must lie in [0,1]");
    }
    if (!is_symmetric(from_slopes(base_slopes_))) throw InputError("base Newton polygon must be symmetric");
    std::set<std::string> labels;
    for (const auto& q : branch_) {
        if (q.d < 1) throw InputError("ramification invariant must be positive");
        if (std::gcd(q.d, p) != 1) {
            throw InputError("ramification invariant " + std::to_string(q.d) + " is not prime to p");
        }
        if (!labels.insert(q.label).second) throw InputError("duplicate branch label '" + q.label + "'");
    }
}

RamificationData RamificationData::ordinary(std::int64_t p, std::int64_t g, const std::vector<std::int64_t>& ds) {
    SlopeMultiset base;
    base.add(Rational(0), g);
    base.add(Rational(1), g);
    std::vector<BranchPoint> branch;
    for (std::size_t i = 0; i < ds.size(); ++i) branch.push_back({"Q" + std::to_string(i + 1), ds[i]});
    return RamificationData(p, g, std::move(base), std::move(branch));
}

std::int64_t RamificationData::max_d() const {
    std::int64_t m = 0;
    for (const auto& q : branch_) m = std::max(m, q.d);
    return m;
}

bool RamificationData::is_ordinary() const {
    SlopeMultiset ord;
    ord.add(Rational(0), g_);
    ord.add(Rational(1), g_);
    return base_slopes_ == ord;
}

namespace {

SlopeMultiset common_part(const RamificationData& rd) {
    const std::int64_t e = (rd.p() - 1) * (rd.g() + rd.r() - 1);
    if (e < 0) throw InputError("g = 0 and no branch points: there is no cover to bound");
    SlopeMultiset s = rd.base_slopes();
    s.add(Rational(0), e);
    s.add(Rational(1), e);
    return s;
}

}  // namespace

NewtonPolygon hodge_bound(const RamificationData& rd) {
    SlopeMultiset s = common_part(rd);
    for (const auto& q : rd.branch()) {
        for (std::int64_t i = 1; i < q.d; ++i) s.add(Rational(BigInt(i), BigInt(q.d)), rd.p() - 1);
    }
    return from_slopes(s);
}

NewtonPolygon np_bound(const RamificationData& rd) {
    SlopeMultiset s = common_part(rd);
    for (const auto& q : rd.branch()) s.add(gnp_scaled(GnpInput(q.d, rd.p())).slopes());
    return from_slopes(s);
}

std::int64_t p_rank_cover(const RamificationData& rd, std::int64_t f_x) {
    if (f_x < 0 || f_x > rd.g()) throw InputError("p-rank of X must lie in 0..g");
    const std::int64_t f_y = 1 + rd.p() * (f_x - 1) + rd.r() * (rd.p() - 1);
    if (f_y < 0) {
        throw InputError("no connected unramified cover of a p-rank-0 curve: Deuring-Shafarevich gives a negative p-rank");
    }
    return f_y;
}

std::int64_t genus_local(std::int64_t p, std::int64_t d) { return (p - 1) * (d - 1) / 2; }

std::int64_t genus_cover(const RamificationData& rd) {
    if (rd.g() == 0 && rd.r() == 0) throw InputError("the projective line has no connected unramified cover");
    std::int64_t g_y = rd.p() * rd.g() - rd.p() + 1;
    for (const auto& q : rd.branch()) g_y += (rd.p() - 1) * (q.d + 1) / 2;
    return g_y;
}

std::int64_t torus_rank(std::int64_t p, std::int64_t r, bool connected) {
    if (r < 1) throw InputError("torus rank needs at least one branch point");
    return connected ? r * (p - 1) : (r - 1) * (p - 1);
}

std::int64_t singular_fiber_dimension(const RamificationData& rd) {
    if (rd.g() == 0 && rd.r() == 0) throw InputError("the projective line has no connected unramified cover");
    std::int64_t dim = rd.g() + (rd.p() - 1) * (rd.g() + rd.r() - 1);
    for (const auto& q : rd.branch()) dim += genus_local(rd.p(), q.d);
    return dim;
}

NewtonPolygon singular_fiber_np(const RamificationData& rd, bool connected) {
    if (!rd.is_ordinary()) throw HypothesisError("the base curve must be ordinary");
    std::int64_t unit_mult = 0;
    if (connected) {
        if (rd.g() < 1) throw InputError("a connected unramified cover Y' needs g >= 1");
        const std::int64_t g_y_prime = rd.g() + (rd.p() - 1) * (rd.g() - 1);
        unit_mult = g_y_prime + (rd.r() > 0 ? torus_rank(rd.p(), rd.r(), true) : 0);
    } else {
        unit_mult = rd.p() * rd.g() + torus_rank(rd.p(), rd.r(), false);
    }
    SlopeMultiset s;
    s.add(Rational(0), unit_mult);
    s.add(Rational(1), unit_mult);
    for (const auto& q : rd.branch()) s.add(gnp_scaled(GnpInput(q.d, rd.p())).slopes());
    return from_slopes(s);
}

}  // namespace asnp
