#include "forge/io.hpp"

namespace forge::io {

json int_json(const Int& n) {
    if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
    return to_string(n);
}

json to_json(const PolyQ& p) { return coeff_strings(p); }

json to_json(const RadicalElem& u) {
    return {{"m0", int_json(u.m0())}, {"coeffs", {to_string(u[0]), to_string(u[1]), to_string(u[2])}}};
}

json radical_json(const Rat& q) { return {{"m0", 1}, {"coeffs", {to_string(q), "0", "0"}}}; }

json to_json(const PrimeReport& r) {
    return {{"l", r.ell}, {"count", r.count}, {"trace", r.trace}, {"anomalous", r.anomalous}};
}

namespace {

json point_json(const LiftedPoint& point) {
    return std::visit(
        [](const auto& P) -> json {
            if (P.is_infinity()) return nullptr;
            if constexpr (std::is_same_v<std::decay_t<decltype(P.x())>, Rat>) {
                return {{"x", radical_json(P.x())}, {"y", radical_json(P.y())}};
            } else {
                return {{"x", to_json(P.x())}, {"y", to_json(P.y())}};
            }
        },
        point);
}

}  // namespace

json to_json(const AscentRecord& rec) {
    json divisors = json::array();
    for (const auto& d : rec.anomalous_divisors) {
        divisors.push_back({{"l", int_json(d.prime)}, {"anomalous", d.anomalous}, {"exceptional", d.exceptional}});
    }
    json j;
    j["x"] = to_string(rec.x);
    j["m_x"] = to_string(rec.m_x);
    j["m0"] = int_json(rec.cube_class.m0);
    j["c"] = to_string(rec.cube_class.c);
    j["point"] = point_json(rec.point);
    j["on_curve"] = rec.on_curve;
    j["verdict"] = format(rec.verdict);
    j["anomalous_divisors"] = std::move(divisors);
    return j;
}

json to_json(const CorrelationRow& row) {
    return {{"l", row.ell}, {"has_root", row.has_root}, {"anomalous", row.anomalous}, {"agree", row.agree}};
}

json to_json(const PatternRow& row) { return {{"l", row.ell}, {"pattern", row.pattern}}; }

json to_json(const ConditionReport& report) {
    json divisors = json::array();
    for (const auto& d : report.divisors) {
        divisors.push_back({{"l", int_json(d.prime)}, {"anomalous", d.anomalous}, {"exceptional", d.exceptional}});
    }
    return {{"m", int_json(report.m)}, {"divisors", std::move(divisors)}, {"verdict", to_string(report.verdict)}};
}

}  // namespace forge::io
