#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "forge/arith.hpp"
#include "forge/error.hpp"
#include "forge/field.hpp"
#include "forge/poly.hpp"

namespace forge {

/// y^2 = x^3 + a x + b over some field F.
template <class F>
struct CurveOver {
    F a;
    F b;
};

template <class F>
class Point {
   public:
    static Point infinity() { return Point(); }
    Point(F x, F y) : xy_(std::in_place, std::move(x), std::move(y)) {}

    bool is_infinity() const { return !xy_.has_value(); }
    const F& x() const { return xy_->first; }
    const F& y() const { return xy_->second; }

    Point operator-() const { return is_infinity() ? *this : Point(x(), -y()); }
    friend bool operator==(const Point& p, const Point& q) {
        if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
        return p.x() == q.x() && p.y() == q.y();
    }

   private:
    Point() = default;
    std::optional<std::pair<F, F>> xy_;
};

template <class F>
bool on_curve(const CurveOver<F>& E, const Point<F>& P) {
    if (P.is_infinity()) return true;
    const F& x = P.x();
    F rhs = x * x * x + E.a * x + E.b;
    F lhs = P.y() * P.y();
    return lhs == rhs;
}

template <class F>
Point<F> point_add(const CurveOver<F>& E, const Point<F>& P, const Point<F>& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const bool same_x = P.x() == Q.x();
    if (same_x && field_is_zero(F(P.y() + Q.y()))) return Point<F>::infinity();
    const F slope = same_x ? F((field_from(P.x(), Rat(3)) * P.x() * P.x() + E.a) / (field_from(P.x(), Rat(2)) * P.y()))
                           : F((Q.y() - P.y()) / (Q.x() - P.x()));
    F x3 = slope * slope - P.x() - Q.x();
    F y3 = slope * (P.x() - x3) - P.y();
    return Point<F>(std::move(x3), std::move(y3));
}

template <class F>
Point<F> point_double(const CurveOver<F>& E, const Point<F>& P) {
    return point_add(E, P, P);
}

/// nP by double-and-add; negative n goes through n(-P).
template <class F>
Point<F> scalar_mul(const CurveOver<F>& E, const Int& n, const Point<F>& P) {
    if (n < 0) return scalar_mul(E, Int(-n), -P);
    Point<F> acc = Point<F>::infinity();
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = point_double(E, acc);
        if (mpz_tstbit(n.get_mpz_t(), i)) acc = point_add(E, acc, P);
    }
    return acc;
}

/// Short Weierstrass curve over Q with nonzero discriminant.
class Curve {
   public:
    /// Throws SingularCurve when 4a^3 + 27b^2 = 0.
    Curve(const Rat& a, const Rat& b);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    /// 4a^3 + 27b^2
    Rat disc_core() const { return Rat(4 * pow(a_, 3) + 27 * pow(b_, 2)); }
    /// -16 (4a^3 + 27b^2)
    Rat discriminant() const { return Rat(-16 * disc_core()); }

    /// l prime, l not dividing 6, den(a), den(b) or num(discriminant).
    bool admissible(std::uint64_t ell) const;

    CurveOver<Rat> over_q() const { return {a_, b_}; }
    /// Base change into the field of `like` (Q(r) elements, or F_l / F_l^d after an admissibility check).
    template <class F>
    CurveOver<F> over(const F& like) const {
        return {field_from(like, a_), field_from(like, b_)};
    }

    friend bool operator==(const Curve&, const Curve&) = default;

   private:
    Rat a_;
    Rat b_;
};

Curve curve_new(const Rat& a, const Rat& b);

/// PrimeExcluded unless `E.admissible(ell)`.
CurveOver<FpElem> reduce_curve(const Curve& E, std::uint64_t ell);

struct PrimeReport {
    std::uint64_t ell = 0;
    std::uint64_t count = 0;
    std::int64_t trace = 0;
    bool anomalous = false;
};

PrimeReport make_report(std::uint64_t ell, std::uint64_t count);

inline constexpr std::uint64_t kMaxCountPrime = 100'000;

/// #E(F_l) including the point at infinity. Naive enumeration for l <= kMaxCountPrime,
/// baby-step giant-step on E and its quadratic twist above that.
PrimeReport count_points(const CurveOver<FpElem>& E);
PrimeReport count_points_naive(const CurveOver<FpElem>& E);
/// Needs l > 229 so that E or its twist has a point pinning the order in the Hasse interval.
PrimeReport count_points_bsgs(const CurveOver<FpElem>& E);
PrimeReport count_points(const Curve& E, std::uint64_t ell);

/// #E(F_{l^d}) for d in 1..3 from the Frobenius trace.
Int count_ext(const PrimeReport& report, unsigned d);

/// 3X^4 + 6aX^2 + 12bX - a^2
PolyQ psi3(const Curve& E);

/// Exact order of P in a group whose order divides `group_order`.
template <class F>
Int point_order(const CurveOver<F>& E, const Point<F>& P, const Int& group_order) {
    if (!scalar_mul(E, group_order, P).is_infinity()) {
        fail(ErrorKind::InternalError, "point order does not divide the group order " + to_string(group_order));
    }
    Int order = group_order;
    for (const auto& p : factorize(group_order).primes()) {
        while (mpz_divisible_p(order.get_mpz_t(), p.get_mpz_t())) {
            Int smaller = order / p;
            if (!scalar_mul(E, smaller, P).is_infinity()) break;
            order = smaller;
        }
    }
    return order;
}

struct ReductionWitness {
    std::uint64_t ell = 0;
    unsigned degree = 1;  // residue field degree
    Int group_order;
    Int point_order;
};

struct TorsionVerdict {
    enum class Kind { Torsion, InfiniteOrder };
    Kind kind = Kind::InfiniteOrder;
    unsigned order = 0;  // set for Torsion
    /// InfiniteOrder and the reduced orders admit no torsion order of any size.
    bool proved_by_reduction = false;
    std::vector<ReductionWitness> witnesses;

    bool infinite() const { return kind == Kind::InfiniteOrder; }
};

struct TorsionOptions {
    unsigned primes = 3;  // at least 2
    unsigned max_order = 30;
    std::uint64_t prime_bound = 20'000;
};

TorsionVerdict torsion_certify(const Curve& E, const Point<Rat>& R, const TorsionOptions& opts = {});
TorsionVerdict torsion_certify(const Curve& E, const Point<RadicalElem>& R, const TorsionOptions& opts = {});

std::string format(const TorsionVerdict& verdict);

template <class F>
std::string format(const Point<F>& P) {
    if (P.is_infinity()) return "O";
    return "(" + format(P.x()) + ", " + format(P.y()) + ")";
}

}  // namespace forge
