#include "asnp/artin_schreier.hpp"

#include "asnp/errors.hpp"

namespace asnp {

namespace {

// s with s^p = r in F_p[x]/(pi): walk the Frobenius orbit of r back one step.
FpPoly frobenius_preimage(const FpPoly& r, const FpPoly& pi) {
    const BigInt p(pi.p());
    FpPoly t = r % pi;
    for (;;) {
        FpPoly next = powmod(t, p, pi);
        if (next == r % pi) return t;
        t = std::move(next);
    }
}

bool has_poles(const PrimeFieldFunction& f) {
    return f.pole_order_at_infinity() > 0 || f.denominator().degree() > 0;
}

}  // namespace

Reduction artin_schreier_reduce_with_witness(const PrimeFieldFunction& f) {
    const auto p = f.p();
    PrimeFieldFunction cur = f;
    PrimeFieldFunction witness{FpPoly(p)};
    const auto step = [&](const PrimeFieldFunction& u) {
        cur = cur - u.frobenius() + u;
        witness = witness + u;
    };
    for (;;) {
        const int inf_order = cur.pole_order_at_infinity();
        if (inf_order > 0 && inf_order % static_cast<int>(p) == 0) {
            // c^{1/p} = c in F_p
            step(PrimeFieldFunction(FpPoly::monomial(p, cur.numerator().lead(),
                                                     static_cast<std::size_t>(inf_order) / p)));
            continue;
        }
        bool changed = false;
        for (const auto& fac : factor(cur.denominator())) {
            if (fac.multiplicity % static_cast<int>(p) != 0) continue;
            const FpPoly pi_e = pow(fac.poly, static_cast<unsigned>(fac.multiplicity));
            const FpPoly rest = cur.denominator() / pi_e;
            // leading Laurent coefficient of cur along pi, as an element of F_p[x]/(pi)
            const FpPoly lead = (cur.numerator() * inverse_mod(rest, fac.poly)) % fac.poly;
            const FpPoly s = frobenius_preimage(lead, fac.poly);
            step(PrimeFieldFunction(s, pow(fac.poly, static_cast<unsigned>(fac.multiplicity) / p)));
            changed = true;
            break;
        }
        if (!changed) break;
    }
    if (!has_poles(cur)) {
        throw InputError("f reduces to the constant " + cur.str() + ": the cover is disconnected/trivial");
    }
    return Reduction{cur, witness};
}

PrimeFieldFunction artin_schreier_reduce(const PrimeFieldFunction& f) {
    return artin_schreier_reduce_with_witness(f).reduced;
}

bool is_artin_schreier_reduced(const PrimeFieldFunction& f) {
    if (!has_poles(f)) return false;
    const int p = static_cast<int>(f.p());
    if (f.pole_order_at_infinity() % p == 0 && f.pole_order_at_infinity() > 0) return false;
    for (const auto& fac : factor(f.denominator())) {
        if (fac.multiplicity % p == 0) return false;
    }
    return true;
}

std::string BranchOrbit::label() const {
    if (at_infinity) return "inf";
    if (residue_degree == 1) return std::to_string((place.p() - place.coeff(0)) % place.p());
    return "[" + place.str() + "]";
}

std::vector<BranchOrbit> branch_data(const PrimeFieldFunction& f) {
    if (!is_artin_schreier_reduced(f)) throw InputError("branch data needs an Artin-Schreier reduced function");
    std::vector<BranchOrbit> out;
    if (f.pole_order_at_infinity() > 0) {
        BranchOrbit inf;
        inf.at_infinity = true;
        inf.place = FpPoly(f.p());
        inf.d = f.pole_order_at_infinity();
        out.push_back(inf);
    }
    for (const auto& fac : factor(f.denominator())) {
        BranchOrbit o;
        o.place = fac.poly;
        o.residue_degree = fac.poly.degree();
        o.d = fac.multiplicity;
        out.push_back(o);
    }
    return out;
}

RamificationData ramification_data(const PrimeFieldFunction& f) {
    std::vector<BranchPoint> points;
    for (const auto& orbit : branch_data(f)) {
        if (orbit.residue_degree == 1) {
            points.push_back({orbit.label(), orbit.d});
            continue;
        }
        for (int i = 1; i <= orbit.residue_degree; ++i) {
            points.push_back({orbit.label() + "#" + std::to_string(i), orbit.d});
        }
    }
    return RamificationData(static_cast<std::int64_t>(f.p()), 0, SlopeMultiset(), std::move(points));
}

}  // namespace asnp
