#include "asnp/zeta.hpp"

#include "asnp/errors.hpp"

namespace asnp {

LPolynomial l_from_counts(const std::vector<BigInt>& counts, int genus, const BigInt& q) {
    if (genus < 0) throw InputError("genus must be nonnegative");
    if (static_cast<int>(counts.size()) != genus) {
        throw InputError("expected " + std::to_string(genus) + " point counts, got " + std::to_string(counts.size()));
    }
    std::vector<BigInt> s(static_cast<std::size_t>(genus) + 1, BigInt(0));
    for (int l = 1; l <= genus; ++l) {
        const BigInt& n = counts[static_cast<std::size_t>(l - 1)];
        if (n < 0) throw InputError("point counts must be nonnegative");
        s[static_cast<std::size_t>(l)] = n - 1 - ipow(q, static_cast<unsigned>(l));
    }
    LPolynomial out{q, genus, std::vector<BigInt>(2 * static_cast<std::size_t>(genus) + 1, BigInt(0))};
    auto& c = out.coeffs;
    c[0] = 1;
    for (int i = 1; i <= genus; ++i) {
        BigInt acc = 0;
        for (int j = 1; j <= i; ++j) acc += s[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
        if (acc % i != 0) {
            throw EngineError("counts inconsistent with a genus-" + std::to_string(genus) + " curve: c_" +
                              std::to_string(i) + " = " + acc.str() + "/" + std::to_string(i));
        }
        c[static_cast<std::size_t>(i)] = acc / i;
    }
    for (int i = 0; i < genus; ++i) {
        c[static_cast<std::size_t>(2 * genus - i)] = ipow(q, static_cast<unsigned>(genus - i)) * c[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<BigInt> counts_from_l(const LPolynomial& l, int n) {
    const auto coeff = [&](int i) {
        return i < static_cast<int>(l.coeffs.size()) ? l.coeffs[static_cast<std::size_t>(i)] : BigInt(0);
    };
    // i c_i = sum_{j=1}^{i} s_j c_{i-j}  =>  s_i = i c_i - sum_{j<i} s_j c_{i-j}
    std::vector<BigInt> s(static_cast<std::size_t>(n) + 1, BigInt(0));
    std::vector<BigInt> counts;
    for (int i = 1; i <= n; ++i) {
        BigInt v = BigInt(i) * coeff(i);
        for (int j = 1; j < i; ++j) v -= s[static_cast<std::size_t>(j)] * coeff(i - j);
        s[static_cast<std::size_t>(i)] = v;
        counts.push_back(v + 1 + ipow(l.q, static_cast<unsigned>(i)));
    }
    return counts;
}

bool split_prime_power(const BigInt& q, std::uint64_t& p, int& m) {
    if (q < 2) return false;
    BigInt r = q;
    std::uint64_t f = 2;
    while (BigInt(f) * f <= r && r % f != 0) ++f;
    if (r % f != 0) f = static_cast<std::uint64_t>(r);
    int e = 0;
    while (r % f == 0) {
        r /= f;
        ++e;
    }
    if (r != 1) return false;
    p = f;
    m = e;
    return true;
}

NewtonPolygon newton_polygon_of_l(const LPolynomial& l, std::uint64_t p, int m) {
    if (l.coeffs.empty() || l.coeffs[0] != 1) throw InputError("L-polynomial must have constant term 1");
    if (m < 1 || ipow(BigInt(p), static_cast<unsigned>(m)) != l.q) {
        throw InputError("q = " + l.q.str() + " is not " + std::to_string(p) + "^" + std::to_string(m));
    }
    std::vector<Vertex> points;
    int last_unit = 0;
    for (std::size_t i = 0; i < l.coeffs.size(); ++i) {
        if (l.coeffs[i] == 0) continue;
        const int v = valuation(l.coeffs[i], p);
        if (v == 0) last_unit = static_cast<int>(i);
        points.push_back(Vertex{static_cast<std::int64_t>(i), Rational(BigInt(v), BigInt(m))});
    }
    NewtonPolygon np = lower_hull(std::move(points));
    if (slope_zero_multiplicity(np) != last_unit) {
        throw EngineError("slope-0 multiplicity disagrees with the last unit coefficient");
    }
    return np;
}

std::vector<CheckResult> validate_l(const LPolynomial& l) {
    std::vector<CheckResult> out;
    const int g = l.genus;
    const bool shape_ok = g >= 0 && l.coeffs.size() == 2 * static_cast<std::size_t>(g) + 1 && l.coeffs[0] == 1;

    CheckResult fe{"functional_equation", shape_ok, ""};
    if (!shape_ok) fe.detail = "expected 2g+1 coefficients with c_0 = 1";
    for (int i = 0; shape_ok && i <= g; ++i) {
        const BigInt expect = ipow(l.q, static_cast<unsigned>(g - i)) * l.coeffs[static_cast<std::size_t>(i)];
        if (l.coeffs[static_cast<std::size_t>(2 * g - i)] != expect) {
            fe.passed = false;
            fe.detail = "c_" + std::to_string(2 * g - i) + " = " + l.coeffs[static_cast<std::size_t>(2 * g - i)].str() +
                        " but q^" + std::to_string(g - i) + " c_" + std::to_string(i) + " = " + expect.str();
            break;
        }
    }
    out.push_back(fe);

    std::uint64_t p = 0;
    int m = 0;
    if (!shape_ok || !split_prime_power(l.q, p, m)) {
        const std::string why = shape_ok ? "q is not a prime power" : "malformed L-polynomial";
        out.push_back({"np_symmetric", false, why});
        out.push_back({"np_integral_breakpoints", false, why});
        out.push_back({"np_endpoint", false, why});
        return out;
    }
    const NewtonPolygon np = newton_polygon_of_l(l, p, m);
    out.push_back({"np_symmetric", is_symmetric(np), ""});
    out.push_back({"np_integral_breakpoints", has_integral_breakpoints(np), ""});
    const bool endpoint = np.width() == 2 * g && np.height() == Rational(g);
    out.push_back({"np_endpoint", endpoint,
                   endpoint ? "" : "ends at (" + std::to_string(np.width()) + ", " + np.height().pretty() + ")"});
    return out;
}

}  // namespace asnp
