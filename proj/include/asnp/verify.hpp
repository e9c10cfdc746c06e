#pragma once

#include "asnp/artin_schreier.hpp"
#include "asnp/counting.hpp"
#include "asnp/json_io.hpp"
#include "asnp/zeta.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asnp {

struct Check {
    std::string name;
    bool passed = false;
    // Informational checks are reported but never fail a run.
    bool hard = true;
    std::string detail;
};

bool all_hard_passed(const std::vector<Check>& checks);

struct AnalyzeOptions {
    CountOptions count;
    // Also count over F_{p^l} for g < l <= 2g (as far as the budget allows) and compare with L.
    bool check_extra = false;
};

struct CoverReport {
    PrimeFieldFunction original{FpPoly(2)};
    PrimeFieldFunction f{FpPoly(2)};  // AS-reduced
    std::int64_t p = 0;
    std::vector<BranchOrbit> branch;
    std::int64_t g_y = 0;
    std::vector<BigInt> counts;  // N_1..N_g
    std::vector<BigInt> extra_counts;  // N_{g+1}.. when requested
    LPolynomial l;
    NewtonPolygon np;
    NewtonPolygon hodge;
    NewtonPolygon np_bound;
    std::vector<Check> checks;
    bool p_ge_3d = false;

    bool passed() const { return all_hard_passed(checks); }
};

// reduce -> branch data -> genus -> counts for l = 1..g_Y -> L -> NP -> bounds -> checks.
// Throws EngineError if NP falls below the Hodge bound.
CoverReport analyze_cover(const PrimeFieldFunction& f_raw, const AnalyzeOptions& options = {});

enum class Family {
    Normal,             // monic, zero constant term, zero x^{d-1} term
    MonicZeroConstant,  // monic, zero constant term
    Monic,              // every monic polynomial of degree d
};

std::string family_name(Family family);
Family family_from_name(const std::string& name);

struct SweepMode {
    bool exhaustive = true;
    std::size_t samples = 0;  // random mode only
    std::uint64_t seed = 0;
};

struct NpTally {
    NewtonPolygon np;
    std::size_t count = 0;
};

struct FamilyReport {
    std::int64_t p = 0;
    std::int64_t d = 0;
    Family family = Family::MonicZeroConstant;
    SweepMode mode;
    std::int64_t g_y = 0;
    std::vector<CoverReport> covers;  // canonical f-order
    std::vector<NpTally> distinct;    // sorted by polygon
    std::vector<NewtonPolygon> minimal;  // minimal elements of the observed NPs
    std::optional<NewtonPolygon> minimum;  // least observed NP, if one lies below all others
    NewtonPolygon hodge;
    NewtonPolygon np_bound;
    NewtonPolygon gnp_scaled;
    std::vector<Check> checks;

    bool passed() const;
};

// The polynomials a sweep visits, in canonical order (coefficient vectors compared from the constant term up).
std::vector<FpPoly> family_members(std::int64_t p, std::int64_t d, Family family, const SweepMode& mode);

// Covers are analyzed in parallel (counting inside each cover is single-threaded) and merged in f-order.
FamilyReport sweep_family(std::int64_t p, std::int64_t d, Family family, const SweepMode& mode,
                          const CountOptions& options = {});

struct MatchingCertificate {
    NewtonPolygon hodge;
    NewtonPolygon intermediate;
    NewtonPolygon gnp_scaled;
    std::size_t strictly_between = 0;  // lattice polygons strictly between the bounds
    std::vector<Check> checks;
};

// p = 23, d = 6: a symmetric polygon with integral breakpoints strictly between the Hodge bound and
// (p-1)GNP, whose breakpoints sit over breakpoints of the bounds.
MatchingCertificate reproduce_matching_example();

Json checks_to_json(const std::vector<Check>& checks);
Json cover_report_to_json(const CoverReport& report);
Json family_report_to_json(const FamilyReport& report);
Json certificate_to_json(const MatchingCertificate& cert);

}  // namespace asnp
