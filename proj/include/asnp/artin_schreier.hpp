#pragma once

#include "asnp/bounds.hpp"
#include "asnp/function.hpp"

#include <string>
#include <vector>

namespace asnp {

struct Reduction {
    PrimeFieldFunction reduced;
    // f - reduced = u^p - u
    PrimeFieldFunction u;
};

// Replaces f by f - (u^p - u) until every pole order is prime to p. The cover y^p - y = f
// is unchanged. Throws InputError when f reduces to a constant (no connected cover).
Reduction artin_schreier_reduce_with_witness(const PrimeFieldFunction& f);
PrimeFieldFunction artin_schreier_reduce(const PrimeFieldFunction& f);

// Nonconstant with every pole order prime to p.
bool is_artin_schreier_reduced(const PrimeFieldFunction& f);

// A Galois orbit of poles: the point at infinity, or the roots of an irreducible factor of the denominator.
struct BranchOrbit {
    bool at_infinity = false;
    FpPoly place{2};  // irreducible factor; unused at infinity
    int residue_degree = 1;
    std::int64_t d = 0;  // pole order (ramification invariant)

    // "inf", "0", "3" for rational points; "[x^2 + 1]" for higher-degree orbits.
    std::string label() const;
};

// Poles of an AS-reduced function over the algebraic closure, grouped into Galois orbits.
std::vector<BranchOrbit> branch_data(const PrimeFieldFunction& f);

// Cover of the projective line: g = 0 and one branch point per geometric pole.
RamificationData ramification_data(const PrimeFieldFunction& f);

}  // namespace asnp
