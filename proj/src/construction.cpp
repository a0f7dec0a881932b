#include "forge/construction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "forge/parallel.hpp"

namespace forge {

std::string_view to_string(Branch b) { return b == Branch::Generic ? "generic" : "special"; }

ConstructionPoly build_polynomial(const Curve& E) {
    const Rat& a = E.a();
    const Rat& b = E.b();
    if (a == 0) return {E, PolyQ({Rat(108 * b), 0, 0, 0, 0, 0, 1}), Branch::SpecialAZero};
    return {E, PolyQ({Rat(-27 * a * a), 0, Rat(108 * b), 0, Rat(18 * a), 0, 0, 0, 1}), Branch::Generic};
}

Rat disc_closed_form(const Curve& E, unsigned exponent) {
    return Rat(-pow(Rat(2), 24) * pow(Rat(3), 21) * E.a() * E.a() * pow(E.disc_core(), exponent));
}

DiscFormulaCheck check_disc_formula(const Curve& E) {
    if (E.a() == 0) fail(ErrorKind::WrongBranch, "discriminant formula applies to a != 0 only");
    DiscFormulaCheck c;
    c.computed = discriminant(build_polynomial(E).P);
    c.predicted = disc_closed_form(E, 3);
    c.matches = c.computed == c.predicted;
    for (unsigned e = 0; e <= 12 && !c.fitted_exponent; ++e) {
        if (disc_closed_form(E, e) == c.computed) c.fitted_exponent = e;
    }
    return c;
}

bool verify_disc_formula(const Curve& E) { return check_disc_formula(E).matches; }

PhiIdentitySides phi_identity_sides(const Curve& E) {
    const ConstructionPoly cp = build_polynomial(E);
    const BiPolyQ k = BiPolyQ::k(), t = BiPolyQ::t();
    const BiPolyQ k2 = k * k;
    const BiPolyQ a = BiPolyQ::constant(E.a()), b = BiPolyQ::constant(E.b());
    // X = 3x, Y = 6k y
    const BiPolyQ X = k2 - t;
    const BiPolyQ Y = k2 * k2 + Rat(3) * a - Rat(2) * k2 * t;
    PhiIdentitySides s;
    s.lhs = Rat(4) * k2 * pow(X, 3) + Rat(36) * a * k2 * X + Rat(108) * b * k2 - Rat(3) * Y * Y;
    const BiPolyQ P = BiPolyQ::in_k(cp.P);
    const BiPolyQ t3 = pow(t, 3);
    s.rhs = cp.branch == Branch::Generic ? P - Rat(4) * k2 * t3 : k2 * (P - Rat(4) * t3);
    return s;
}

bool verify_phi_identity(const Curve& E) {
    const auto s = phi_identity_sides(E);
    return s.lhs == s.rhs;
}

bool verify_psi3_identity(const Curve& E) {
    const ConstructionPoly cp = build_polynomial(E);
    const PolyQ k2_over_3({0, 0, Rat(1, 3)});
    const PolyQ lhs = Rat(27) * psi3(E).compose(k2_over_3);
    const PolyQ rhs = cp.branch == Branch::Generic ? cp.P : PolyQ({0, 0, 1}) * cp.P;
    return lhs == rhs;
}

MValue m_value(const ConstructionPoly& cp, const Rat& x) {
    if (cp.branch == Branch::Generic && x == 0) fail(ErrorKind::InvalidParameter, "x = 0 is excluded (a != 0)");
    const Rat px = cp.P(x);
    if (px == 0) fail(ErrorKind::DegenerateParameter, "x = " + to_string(x) + " is a root of P");
    Rat m = cp.branch == Branch::Generic ? Rat(px / (4 * x * x)) : Rat(px / 4);
    return {m, cubefree_rat(m)};
}

MValue m_value(const Curve& E, const Rat& x) { return m_value(build_polynomial(E), x); }

namespace {

template <class F>
Point<F> apply_phi(const Curve& E, const Rat& x, const F& t) {
    const Rat x2 = x * x;
    const F three = field_from(t, Rat(3));
    F xe = (field_from(t, x2) - t) / three;
    F ye = (field_from(t, Rat(x2 * x2 + 3 * E.a())) - field_from(t, Rat(2 * x2)) * t) / field_from(t, Rat(6 * x));
    return Point<F>(std::move(xe), std::move(ye));
}

}  // namespace

AscentRecord lift_point(const Curve& E, const Rat& x, const TorsionOptions& opts) {
    if (x == 0) fail(ErrorKind::InvalidParameter, "x = 0 is a pole of the lifting map");
    const MValue mv = m_value(E, x);
    AscentRecord rec{x, mv.m_x, mv.cube_class, Point<Rat>::infinity(), false, {}, {}};
    const CubeClass& cls = mv.cube_class;

    if (cls.trivial()) {
        const Rat t = cls.c;
        if (t * t * t != mv.m_x) fail(ErrorKind::InternalError, "t^3 != m_x");
        const Point<Rat> P = apply_phi(E, x, t);
        rec.on_curve = on_curve(E.over_q(), P);
        rec.point = P;
    } else {
        const RadicalElem theta = RadicalElem::theta(cls.m0);
        const RadicalElem t = theta * theta.with(cls.c);
        if (!(t * t * t == theta.with(mv.m_x))) fail(ErrorKind::InternalError, "t^3 != m_x");
        const Point<RadicalElem> P = apply_phi(E, x, t);
        rec.on_curve = on_curve(E.over(theta), P);
        rec.point = P;
    }
    if (!rec.on_curve) fail(ErrorKind::InternalError, "lifted point is off the curve at x = " + to_string(x));

    rec.verdict = std::visit([&](const auto& P) { return torsion_certify(E, P, opts); }, rec.point);
    if (!cls.trivial()) rec.anomalous_divisors = classify_divisors(E, cls.m0);
    return rec;
}

ParamSpec ParamSpec::integers(const Int& lo, const Int& hi) {
    ParamSpec s;
    s.mode_ = Mode::IntegerRange;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
}

ParamSpec ParamSpec::rationals(unsigned height) {
    ParamSpec s;
    s.mode_ = Mode::RationalHeight;
    s.height_ = height;
    return s;
}

std::vector<Rat> ParamSpec::values() const {
    std::vector<Rat> out;
    if (mode_ == Mode::IntegerRange) {
        for (Int v = lo_; v <= hi_; ++v) out.emplace_back(v);
    } else {
        std::set<Rat> seen;
        for (unsigned q = 1; q <= height_; ++q) {
            for (unsigned p = 1; p <= height_; ++p) {
                if (std::gcd(p, q) != 1) continue;
                seen.insert(make_rat(p, q));
                seen.insert(make_rat(-Int(p), q));
            }
        }
        out.assign(seen.begin(), seen.end());
    }
    if (out.empty()) fail(ErrorKind::InvalidInput, "empty parameter range");
    return out;
}

AscentRun ascend_range(const Curve& E, const ParamSpec& params, unsigned jobs, const TorsionOptions& opts) {
    using Outcome = std::variant<AscentRecord, SkippedParam>;
    const std::vector<Rat> xs = params.values();
    auto outcomes = parallel_map(xs.size(), jobs, [&](std::size_t i) -> Outcome {
        try {
            return lift_point(E, xs[i], opts);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InvalidParameter && e.kind() != ErrorKind::DegenerateParameter) throw;
            return SkippedParam{xs[i], e.kind(), e.what()};
        }
    });
    AscentRun run;
    std::set<Int> m0s;
    for (auto& o : outcomes) {
        if (auto* rec = std::get_if<AscentRecord>(&o)) {
            if (!rec->trivial_class()) m0s.insert(rec->cube_class.m0);
            run.records.push_back(std::move(*rec));
        } else {
            run.skipped.push_back(std::get<SkippedParam>(std::move(o)));
        }
    }
    run.distinct_m0.assign(m0s.begin(), m0s.end());
    return run;
}

}  // namespace forge
