#include "forge/elliptic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forge/modular.hpp"

namespace forge {

namespace md = modular;

Curve::Curve(const Rat& a, const Rat& b) : a_(a), b_(b) {
    if (disc_core() == 0) fail(ErrorKind::SingularCurve, "singular curve: 4a^3 + 27b^2 = 0");
}

Curve curve_new(const Rat& a, const Rat& b) { return Curve(a, b); }

bool Curve::admissible(std::uint64_t ell) const {
    if (ell < 5 || !is_prime(ell)) return false;
    auto divides = [ell](const Int& v) { return mpz_divisible_ui_p(v.get_mpz_t(), ell) != 0; };
    return !divides(a_.get_den()) && !divides(b_.get_den()) && !divides(discriminant().get_num());
}

CurveOver<FpElem> reduce_curve(const Curve& E, std::uint64_t ell) {
    if (!E.admissible(ell)) {
        fail(ErrorKind::PrimeExcluded, std::to_string(ell) + " is not a prime of admissible reduction");
    }
    return E.over(FpElem(ell, 0));
}

PrimeReport make_report(std::uint64_t l, std::uint64_t count) {
    PrimeReport r;
    r.ell = l;
    r.count = count;
    r.trace = static_cast<std::int64_t>(l + 1) - static_cast<std::int64_t>(count);
    r.anomalous = count % 3 == 0;
    return r;
}

PrimeReport count_points(const CurveOver<FpElem>& E) {
    return E.a.modulus() <= kMaxCountPrime ? count_points_naive(E) : count_points_bsgs(E);
}

PrimeReport count_points_naive(const CurveOver<FpElem>& E) {
    const std::uint64_t l = E.a.modulus();
    if (l > kMaxCountPrime) fail(ErrorKind::InvalidInput, "naive point count is capped at l <= 100000");
    // square_roots[v] = #{y : y^2 = v}
    std::vector<unsigned char> square_roots(l, 0);
    for (std::uint64_t y = 0; y < l; ++y) ++square_roots[md::mul(y, y, l)];
    const std::uint64_t a = E.a.value(), b = E.b.value();
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < l; ++x) {
        const std::uint64_t rhs = md::add(md::mul(md::add(md::mul(x, x, l), a, l), x, l), b, l);
        count += square_roots[rhs];
    }
    return make_report(l, count);
}

PrimeReport count_points(const Curve& E, std::uint64_t ell) { return count_points(reduce_curve(E, ell)); }

Int count_ext(const PrimeReport& report, unsigned d) {
    const Int l = static_cast<unsigned long>(report.ell);
    const Int a = static_cast<long>(report.trace);
    Int power_sum;
    switch (d) {
        case 1: power_sum = a; break;
        case 2: power_sum = a * a - 2 * l; break;
        case 3: power_sum = a * a * a - 3 * l * a; break;
        default: fail(ErrorKind::InvalidInput, "extension degree must be 1, 2 or 3");
    }
    return pow(l, d) + 1 - power_sum;
}

PolyQ psi3(const Curve& E) {
    return PolyQ({Rat(-E.a() * E.a()), Rat(12 * E.b()), Rat(6 * E.a()), Rat(0), Rat(3)});
}

namespace {

bool ell_divides_den(const Rat& q, std::uint64_t ell) { return mpz_divisible_ui_p(q.get_den().get_mpz_t(), ell) != 0; }

// Nullopt when the point's coordinates cannot be reduced at ell.
std::optional<std::vector<ReductionWitness>> reduce_orders(const Curve& E, const Point<Rat>& R, std::uint64_t ell) {
    if (ell_divides_den(R.x(), ell) || ell_divides_den(R.y(), ell)) return std::nullopt;
    const auto Ebar = reduce_curve(E, ell);
    const auto report = count_points(Ebar);
    const FpElem zero(ell, 0);
    const Point<FpElem> Rbar(field_from(zero, R.x()), field_from(zero, R.y()));
    const Int n = count_ext(report, 1);
    return std::vector<ReductionWitness>{{ell, 1, n, point_order(Ebar, Rbar, n)}};
}

std::optional<std::vector<ReductionWitness>> reduce_orders(const Curve& E, const Point<RadicalElem>& R,
                                                           std::uint64_t ell) {
    const Int& m0 = R.x().m0();
    if (mpz_divisible_ui_p(m0.get_mpz_t(), ell)) return std::nullopt;
    for (const auto* c : {&R.x(), &R.y()}) {
        for (const auto& a : c->coeffs()) {
            if (ell_divides_den(a, ell)) return std::nullopt;
        }
    }
    const auto report = count_points(E, ell);
    std::vector<ReductionWitness> out;
    for (const auto& g : build_residue_fields(m0, ell)) {
        const ExtFieldElem x = reduce_radical(R.x(), g);
        const ExtFieldElem y = reduce_radical(R.y(), g);
        const auto Ebar = E.over(x);
        const Point<ExtFieldElem> Rbar(x, y);
        const unsigned d = static_cast<unsigned>(g.degree());
        const Int n = count_ext(report, d);
        out.push_back({ell, d, n, point_order(Ebar, Rbar, n)});
    }
    return out;
}

// Torsion of order n reduces to order o with o | n and n / o a power of ell.
bool compatible(unsigned n, const ReductionWitness& w) {
    const Int nn = n;
    if (!mpz_divisible_p(nn.get_mpz_t(), w.point_order.get_mpz_t())) return false;
    Int rest = nn / w.point_order;
    const Int l = static_cast<unsigned long>(w.ell);
    while (rest > 1 && mpz_divisible_p(rest.get_mpz_t(), l.get_mpz_t())) rest /= l;
    return rest == 1;
}

// True when no positive integer n is compatible with every witness.
bool no_order_possible(const std::vector<ReductionWitness>& ws) {
    std::set<Int> primes;
    for (const auto& w : ws) {
        for (const auto& p : factorize(w.point_order).primes()) primes.insert(p);
        primes.insert(Int(static_cast<unsigned long>(w.ell)));
    }
    for (const auto& q : primes) {
        std::optional<unsigned> exact;
        unsigned lower = 0;
        for (const auto& w : ws) {
            const unsigned v = w.point_order == 1 ? 0 : valuation(w.point_order, q);
            if (Int(static_cast<unsigned long>(w.ell)) == q) {
                lower = std::max(lower, v);
            } else if (exact && *exact != v) {
                return true;
            } else {
                exact = v;
            }
        }
        if (exact && *exact < lower) return true;
    }
    return false;
}

template <class F>
TorsionVerdict certify(const Curve& E, const Point<F>& R, const TorsionOptions& opts) {
    TorsionVerdict verdict;
    if (R.is_infinity()) {
        verdict.kind = TorsionVerdict::Kind::Torsion;
        verdict.order = 1;
        return verdict;
    }
    if (!on_curve(E.over(R.x()), R)) fail(ErrorKind::InvalidInput, "point is not on the curve");

    const unsigned wanted = std::max(2u, opts.primes);
    unsigned used = 0;
    for (std::uint64_t ell = 5; used < wanted && ell <= opts.prime_bound; ell += 2) {
        if (!E.admissible(ell)) continue;
        auto ws = reduce_orders(E, R, ell);
        if (!ws) continue;
        ++used;
        verdict.witnesses.insert(verdict.witnesses.end(), ws->begin(), ws->end());
    }
    if (used < wanted) fail(ErrorKind::OracleExhausted, "not enough admissible primes below the bound");

    const auto curve = E.over(R.x());
    for (unsigned n = 1; n <= opts.max_order; ++n) {
        const bool survives = std::all_of(verdict.witnesses.begin(), verdict.witnesses.end(),
                                          [n](const ReductionWitness& w) { return compatible(n, w); });
        if (survives && scalar_mul(curve, Int(n), R).is_infinity()) {
            verdict.kind = TorsionVerdict::Kind::Torsion;
            verdict.order = n;
            return verdict;
        }
    }
    verdict.kind = TorsionVerdict::Kind::InfiniteOrder;
    verdict.proved_by_reduction = no_order_possible(verdict.witnesses);
    return verdict;
}

}  // namespace

TorsionVerdict torsion_certify(const Curve& E, const Point<Rat>& R, const TorsionOptions& opts) {
    return certify(E, R, opts);
}

TorsionVerdict torsion_certify(const Curve& E, const Point<RadicalElem>& R, const TorsionOptions& opts) {
    return certify(E, R, opts);
}

std::string format(const TorsionVerdict& verdict) {
    return verdict.infinite() ? "infinite" : "torsion:" + std::to_string(verdict.order);
}

}  // namespace forge
