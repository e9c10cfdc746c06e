#include "asnp/gnp.hpp"

#include "asnp/assignment.hpp"
#include "asnp/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

namespace asnp {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

GnpInput::GnpInput(std::int64_t d, std::int64_t p) : d_(d), p_(p) {
    if (d < 1) throw InputError("d must be a positive integer, got " + std::to_string(d));
    if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
    if (std::gcd(d, p) != 1) {
        throw InputError("d = " + std::to_string(d) + " must be prime to p = " + std::to_string(p));
    }
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    // b > 0
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

void check_n(const GnpInput& input, std::int64_t n) {
    if (n < 1 || n > input.d() - 1) {
        throw InputError("n = " + std::to_string(n) + " outside 1..d-1 = 1.." + std::to_string(input.d() - 1));
    }
}

std::int64_t term(const GnpInput& input, std::int64_t k, std::int64_t j) {
    return ceil_div(input.p() * k - j, input.d());
}

}  // namespace

std::int64_t y_n(const GnpInput& input, std::int64_t n) {
    check_n(input, n);
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n));
    for (std::int64_t k = 1; k <= n; ++k) {
        for (std::int64_t j = 1; j <= n; ++j) cost[k - 1][j - 1] = term(input, k, j);
    }
    return solve_assignment(cost).cost;
}

std::int64_t y_n_bruteforce(const GnpInput& input, std::int64_t n) {
    check_n(input, n);
    if (n > 9) throw InputError("y_n_bruteforce refuses n > 9");
    std::vector<std::int64_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::int64_t best = 0;
    bool first = true;
    do {
        std::int64_t total = 0;
        for (std::int64_t k = 1; k <= n; ++k) total += term(input, k, sigma[k - 1]);
        if (first || total < best) best = total;
        first = false;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

std::vector<std::int64_t> y_values(const GnpInput& input) {
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> memo;
    const auto key = std::make_pair(input.d(), input.p());
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    std::vector<std::int64_t> ys;
    for (std::int64_t n = 1; n <= input.d() - 1; ++n) ys.push_back(y_n(input, n));
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(key, ys);
    return ys;
}

NewtonPolygon gnp(const GnpInput& input) {
    const auto ys = y_values(input);
    std::vector<Vertex> pts{Vertex{0, Rational(0)}};
    for (std::size_t i = 0; i < ys.size(); ++i) {
        pts.push_back(Vertex{static_cast<std::int64_t>(i + 1), Rational(BigInt(ys[i]), BigInt(input.p() - 1))});
    }
    return lower_hull(std::move(pts));
}

NewtonPolygon gnp_scaled(const GnpInput& input) {
    const auto ys = y_values(input);
    std::vector<Vertex> pts{Vertex{0, Rational(0)}};
    for (std::size_t i = 0; i < ys.size(); ++i) {
        pts.push_back(Vertex{(input.p() - 1) * static_cast<std::int64_t>(i + 1), Rational(ys[i])});
    }
    return lower_hull(std::move(pts));
}

}  // namespace asnp
