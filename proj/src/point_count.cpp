#include <cmath>
#include <map>
#include <random>

#include "forge/elliptic.hpp"
#include "forge/modular.hpp"

namespace forge {

namespace md = modular;

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(std::uint64_t v, std::uint64_t p) { return v == 0 || md::pow(v, (p - 1) / 2, p) == 1; }

// Tonelli-Shanks; v must be a square mod the odd prime p.
std::uint64_t sqrt_mod(std::uint64_t v, std::uint64_t p) {
    if (v == 0) return 0;
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (is_square(z, p)) ++z;
    std::uint64_t m = s, c = md::pow(z, q, p), t = md::pow(v, q, p), r = md::pow(v, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = md::mul(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = md::mul(b, b, p);
        m = i;
        c = md::mul(b, b, p);
        t = md::mul(t, c, p);
        r = md::mul(r, b, p);
    }
    return r;
}

using FpPoint = Point<FpElem>;

std::pair<std::uint64_t, std::uint64_t> key_of(const FpPoint& P) {
    return P.is_infinity() ? std::pair<std::uint64_t, std::uint64_t>{~0ull, ~0ull}
                           : std::pair{P.x().value(), P.y().value()};
}

// Some N with N*P = O and |p + 1 - N| <= 2 sqrt(p).
Int hasse_annihilator(const CurveOver<FpElem>& E, const FpPoint& P, std::uint64_t p) {
    const auto w = static_cast<std::int64_t>(isqrt(4 * p));
    const auto span = static_cast<std::uint64_t>(2 * w + 1);
    const std::uint64_t s = isqrt(span) + 1;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> baby;
    FpPoint jP = FpPoint::infinity();
    for (std::uint64_t j = 0; j < s; ++j) {
        baby.emplace(key_of(jP), j);
        jP = point_add(E, jP, P);
    }
    // t P = (p + 1) P with t = -w + i s + j
    const FpPoint Q = scalar_mul(E, Int(static_cast<unsigned long>(p + 1)), P);
    FpPoint R = point_add(E, Q, scalar_mul(E, Int(static_cast<long>(w)), P));
    const FpPoint step = -scalar_mul(E, Int(static_cast<unsigned long>(s)), P);
    for (std::uint64_t i = 0; i <= s; ++i) {
        if (auto it = baby.find(key_of(R)); it != baby.end()) {
            const auto t = -w + static_cast<std::int64_t>(i * s + it->second);
            return Int(static_cast<unsigned long>(p + 1)) - Int(static_cast<long>(t));
        }
        R = point_add(E, R, step);
    }
    fail(ErrorKind::InternalError, "no group order found in the Hasse interval mod " + std::to_string(p));
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

PrimeReport count_points_bsgs(const CurveOver<FpElem>& E) {
    const std::uint64_t p = E.a.modulus();
    if (p <= 229) fail(ErrorKind::InvalidInput, "baby-step giant-step counting needs l > 229");
    const std::uint64_t a = E.a.value(), b = E.b.value();
    std::uint64_t d = 2;
    while (is_square(d, p)) ++d;
    // twist y^2 = x^3 + a d^2 x + b d^3 has p + 1 + t points
    const CurveOver<FpElem> twist{FpElem(p, md::mul(a, md::mul(d, d, p), p)),
                                  FpElem(p, md::mul(b, md::mul(d, md::mul(d, d, p), p), p))};

    const auto w = isqrt(4 * p);
    const Int lo = static_cast<unsigned long>(p + 1 - w), hi = static_cast<unsigned long>(p + 1 + w);
    const Int total = static_cast<unsigned long>(2 * p + 2);
    Int m_e = 1, m_twist = 1;  // lcm of point orders found on E and on the twist

    std::mt19937_64 rng(p);
    for (unsigned iter = 0; iter < 400; ++iter) {
        const bool on_twist = iter % 2 == 1;
        const auto& C = on_twist ? twist : E;
        const std::uint64_t x = rng() % p;
        const std::uint64_t rhs =
            md::add(md::mul(md::add(md::mul(x, x, p), C.a.value(), p), x, p), C.b.value(), p);
        if (!is_square(rhs, p)) continue;
        const FpPoint P(FpElem(p, x), FpElem(p, sqrt_mod(rhs, p)));
        const Int order = point_order(C, P, hasse_annihilator(C, P, p));
        (on_twist ? m_twist : m_e) = lcm(on_twist ? m_twist : m_e, order);

        // candidates N in [lo, hi] with m_e | N and m_twist | total - N; walk the sparser side
        const bool walk_twist = m_twist > m_e;
        const Int& step = walk_twist ? m_twist : m_e;
        const Int other_lo = walk_twist ? Int(total - hi) : lo;
        const Int other_hi = walk_twist ? Int(total - lo) : hi;
        Int first;
        mpz_cdiv_q(first.get_mpz_t(), other_lo.get_mpz_t(), step.get_mpz_t());
        first *= step;
        if (first > other_hi || (other_hi - first) / step > 5000) continue;
        std::vector<Int> found;
        for (Int v = first; v <= other_hi; v += step) {
            const Int n = walk_twist ? Int(total - v) : v;
            const Int rest = total - n;
            if (mpz_divisible_p(n.get_mpz_t(), m_e.get_mpz_t()) && mpz_divisible_p(rest.get_mpz_t(), m_twist.get_mpz_t())) {
                found.push_back(n);
            }
        }
        if (found.size() == 1) return make_report(p, found.front().get_ui());
    }
    fail(ErrorKind::InternalError, "group order not pinned down mod " + std::to_string(p));
}

}  // namespace forge
