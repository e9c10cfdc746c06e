#include "asnp/json_io.hpp"

#include "asnp/errors.hpp"

#include <limits>

namespace asnp {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

}  // namespace

Json big_to_json(const BigInt& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
        return Json(static_cast<std::int64_t>(n));
    }
    return Json(n.str());
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("malformed integer string " + j.dump());
        }
    }
    throw InputError("expected an integer, got " + j.dump());
}

Json slopes_to_json(const SlopeMultiset& slopes) {
    Json arr = Json::array();
    for (const auto& e : slopes.entries()) arr.push_back(Json{{"slope", e.slope.str()}, {"mult", e.mult}});
    return arr;
}

SlopeMultiset slopes_from_json(const Json& j) {
    return guarded("slope multiset", [&] {
        SlopeMultiset s;
        for (const auto& e : j) {
            const auto mult = e.at("mult").get<std::int64_t>();
            if (mult <= 0) throw InputError("slope multiplicities must be positive");
            s.add(Rational::parse(e.at("slope").get<std::string>()), mult);
        }
        return s;
    });
}

Json polygon_to_json(const NewtonPolygon& polygon) {
    Json vertices = Json::array();
    for (const auto& v : polygon.vertices()) vertices.push_back(Json::array({v.x, v.y.str()}));
    return Json{{"width", polygon.width()}, {"vertices", vertices}, {"slopes", slopes_to_json(polygon.slopes())}};
}

NewtonPolygon polygon_from_json(const Json& j) {
    return guarded("polygon", [&] {
        NewtonPolygon polygon;
        if (j.contains("vertices")) {
            std::vector<Vertex> v;
            for (const auto& pt : j.at("vertices")) {
                const auto& y = pt.at(1);
                v.push_back(Vertex{pt.at(0).get<std::int64_t>(),
                                   y.is_string() ? Rational::parse(y.get<std::string>()) : Rational(y.get<std::int64_t>())});
            }
            polygon = NewtonPolygon::from_vertices(std::move(v));
        } else if (j.contains("slopes")) {
            polygon = from_slopes(slopes_from_json(j.at("slopes")));
        } else {
            throw InputError("polygon JSON needs \"vertices\" or \"slopes\"");
        }
        if (j.contains("width") && j.at("width").get<std::int64_t>() != polygon.width()) {
            throw InputError("polygon JSON width disagrees with its vertices");
        }
        return polygon;
    });
}

Json ramification_to_json(const RamificationData& rd) {
    Json branch = Json::array();
    for (const auto& q : rd.branch()) branch.push_back(Json{{"label", q.label}, {"d", q.d}});
    return Json{{"p", rd.p()}, {"g", rd.g()}, {"base_slopes", slopes_to_json(rd.base_slopes())}, {"branch", branch}};
}

RamificationData ramification_from_json(const Json& j) {
    return guarded("ramification data", [&] {
        const auto p = j.at("p").get<std::int64_t>();
        const auto g = j.at("g").get<std::int64_t>();
        SlopeMultiset base;
        if (j.contains("base_slopes")) {
            base = slopes_from_json(j.at("base_slopes"));
        } else {
            base.add(Rational(0), g);
            base.add(Rational(1), g);
        }
        std::vector<BranchPoint> branch;
        for (const auto& q : j.at("branch")) {
            branch.push_back({q.at("label").get<std::string>(), q.at("d").get<std::int64_t>()});
        }
        return RamificationData(p, g, std::move(base), std::move(branch));
    });
}

Json function_to_json(const PrimeFieldFunction& f) {
    Json num = Json::array(), den = Json::array();
    for (auto c : f.numerator().coeffs()) num.push_back(c);
    if (f.numerator().is_zero()) num.push_back(0);
    for (auto c : f.denominator().coeffs()) den.push_back(c);
    return Json{{"p", f.p()}, {"num", num}, {"den", den}};
}

PrimeFieldFunction function_from_json(const Json& j) {
    return guarded("function", [&] {
        const auto p = j.at("p").get<std::int64_t>();
        if (p < 2 || p >= (std::int64_t{1} << 20)) throw InputError("unsupported characteristic");
        const auto up = static_cast<std::uint32_t>(p);
        if (j.contains("f")) return PrimeFieldFunction::parse(up, j.at("f").get<std::string>());
        const FpPoly num(up, j.at("num").get<std::vector<std::int64_t>>());
        const FpPoly den = j.contains("den") ? FpPoly(up, j.at("den").get<std::vector<std::int64_t>>())
                                             : FpPoly::constant(up, 1);
        if (den.is_zero()) throw InputError("function JSON has a zero denominator");
        return PrimeFieldFunction(num, den);
    });
}

Json lpoly_to_json(const LPolynomial& l) {
    Json coeffs = Json::array();
    for (const auto& c : l.coeffs) coeffs.push_back(big_to_json(c));
    return Json{{"q", big_to_json(l.q)}, {"genus", l.genus}, {"coeffs", coeffs}};
}

LPolynomial lpoly_from_json(const Json& j) {
    return guarded("L-polynomial", [&] {
        LPolynomial l;
        l.q = big_from_json(j.at("q"));
        l.genus = j.at("genus").get<int>();
        for (const auto& c : j.at("coeffs")) l.coeffs.push_back(big_from_json(c));
        return l;
    });
}

}  // namespace asnp
