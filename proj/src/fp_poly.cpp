#include "asnp/fp_poly.hpp"

#include "asnp/errors.hpp"

#include <algorithm>
#include <random>

namespace asnp {

namespace {

void require_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.p() != b.p()) throw InputError("polynomials over different prime fields");
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    const std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

}  // namespace

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw InputError("inverse of zero in F_" + std::to_string(p));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t, p);
}

FpPoly::FpPoly(std::uint32_t p, const std::vector<std::int64_t>& coeffs) : p_(p) {
    c_.reserve(coeffs.size());
    for (auto v : coeffs) c_.push_back(reduce(v, p));
    trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) { return FpPoly(p, std::vector<std::int64_t>{c}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, v);
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inverse(lead(), p_));
}

FpPoly::Coeff FpPoly::eval(Coeff a) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * a + *it) % p_;
    return static_cast<Coeff>(acc);
}

FpPoly FpPoly::derivative() const {
    FpPoly d(p_);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d.c_.push_back(static_cast<Coeff>((static_cast<std::uint64_t>(c_[i]) * (i % p_)) % p_));
    }
    d.trim();
    return d;
}

FpPoly FpPoly::scaled(Coeff c) const {
    FpPoly r(p_);
    r.c_.reserve(c_.size());
    for (auto v : c_) r.c_.push_back(static_cast<Coeff>((static_cast<std::uint64_t>(v) * c) % p_));
    r.trim();
    return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
    require_same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
    trim();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
    require_same_field(*this, o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
    trim();
    return *this;
}

FpPoly operator-(const FpPoly& a) { return FpPoly(a.p_) - a; }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    FpPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % a.p_;
        }
    }
    r.c_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw InputError("polynomial division by zero");
    const auto p = a.p();
    FpPoly q(p);
    if (a.degree() < b.degree()) return {q, a};
    std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<std::int64_t> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const std::uint64_t inv_lead = fp_inverse(b.lead(), p);
    const auto& bc = b.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = rem.size(); i-- > db;) {
        const std::uint64_t c = rem[i] * inv_lead % p;
        if (c == 0) continue;
        quot[i - db] = static_cast<std::int64_t>(c);
        for (std::size_t k = 0; k <= db; ++k) rem[i - db + k] = (rem[i - db + k] + (p - bc[k]) * c) % p;
    }
    rem.resize(db);
    std::vector<std::int64_t> r(rem.begin(), rem.end());
    return {FpPoly(p, quot), FpPoly(p, r)};
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

bool operator<(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const bool show_coeff = c_[i] != 1 || i == 0;
        if (show_coeff) out += std::to_string(c_[i]);
        if (i > 0) {
            if (show_coeff) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FpPoly inverse_mod(const FpPoly& a, const FpPoly& m) {
    const auto p = a.p();
    FpPoly r0 = m, r1 = a % m;
    FpPoly t0(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.degree() != 0) throw InputError("polynomial is not invertible modulo " + m.str());
    return (t0.scaled(fp_inverse(r0.lead(), p))) % m;
}

FpPoly powmod(const FpPoly& base, const BigInt& exp, const FpPoly& m) {
    if (exp < 0) throw InputError("negative exponent");
    FpPoly result = FpPoly::constant(base.p(), 1) % m;
    FpPoly b = base % m;
    const auto bits = exp == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(exp)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (boost::multiprecision::bit_test(exp, i)) result = (result * b) % m;
    }
    return result;
}

FpPoly pow(const FpPoly& base, unsigned exp) {
    FpPoly result = FpPoly::constant(base.p(), 1);
    FpPoly b = base;
    while (exp > 0) {
        if (exp & 1u) result = result * b;
        exp >>= 1;
        if (exp > 0) b = b * b;
    }
    return result;
}

FpPoly frobenius_power(const FpPoly& s) {
    const auto p = s.p();
    if (s.is_zero()) return s;
    std::vector<std::int64_t> v(static_cast<std::size_t>(s.degree()) * p + 1, 0);
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) v[i * p] = s.coeffs()[i];
    return FpPoly(p, v);
}

bool is_irreducible(const FpPoly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    const auto p = f.p();
    const FpPoly m = f.monic();
    const FpPoly x = FpPoly::x(p);
    FpPoly xq = x % m;
    for (int k = 1; k < n; ++k) {
        xq = powmod(xq, BigInt(p), m);
        if (!gcd(xq - x, m).is_one()) return false;
    }
    xq = powmod(xq, BigInt(p), m);
    return xq == x % m;
}

namespace {

// Inverse of the Frobenius on polynomials whose derivative vanishes: f(x) = g(x)^p.
FpPoly pth_root(const FpPoly& f) {
    const auto p = f.p();
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
    return FpPoly(p, v);
}

// Distinct-degree factorization of a monic squarefree polynomial: (product, degree) pairs.
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
    const auto p = f.p();
    std::vector<std::pair<FpPoly, int>> out;
    const FpPoly x = FpPoly::x(p);
    FpPoly xq = x % f;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        xq = powmod(xq, BigInt(p), f);
        FpPoly g = gcd(f, xq - x);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            xq = xq % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of equal degree k.
void equal_degree(const FpPoly& f, int k, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == k) {
        out.push_back(f.monic());
        return;
    }
    const auto p = f.p();
    const BigInt q = ipow(BigInt(p), static_cast<unsigned>(k));
    for (;;) {
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(f.degree()));
        for (auto& c : coeffs) c = static_cast<std::int64_t>(rng() % p);
        const FpPoly a(p, coeffs);
        if (a.degree() < 1) continue;
        FpPoly b(p);
        if (p == 2) {
            // a + a^2 + ... + a^(2^(k-1)) lands in F_2 on every component
            FpPoly t = a % f;
            b = t;
            for (int i = 1; i < k; ++i) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            b = powmod(a, (q - 1) / 2, f) - FpPoly::constant(p, 1);
        }
        FpPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, k, rng, out);
            equal_degree(f / g, k, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Factor> factor(const FpPoly& f) {
    if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
    std::vector<Factor> result;
    FpPoly rest = f.monic();
    int scale = 1;
    std::mt19937_64 rng(0x5eedULL);
    while (rest.degree() > 0) {
        const FpPoly d = rest.derivative();
        if (d.is_zero()) {
            rest = pth_root(rest);
            scale *= static_cast<int>(f.p());
            continue;
        }
        // rest / gcd(rest, rest') is the product of irreducibles whose multiplicity is prime to p.
        const FpPoly radical = rest / gcd(rest, d);
        std::vector<FpPoly> irreducibles;
        for (auto& [prod, k] : distinct_degree(radical.monic())) equal_degree(prod, k, rng, irreducibles);
        for (auto& pi : irreducibles) {
            int mult = 0;
            for (;;) {
                auto [q, r] = divmod(rest, pi);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++mult;
            }
            result.push_back(Factor{pi, mult * scale});
        }
    }
    std::sort(result.begin(), result.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    // Merge factors found at different Frobenius depths.
    std::vector<Factor> merged;
    for (auto& fac : result) {
        if (!merged.empty() && merged.back().poly == fac.poly) {
            merged.back().multiplicity += fac.multiplicity;
        } else {
            merged.push_back(std::move(fac));
        }
    }
    return merged;
}

}  // namespace asnp
