#include "forge/field.hpp"

#include <sstream>

#include "forge/error.hpp"
#include "forge/modular.hpp"

namespace forge {

namespace md = modular;

// ---------------------------------------------------------------- RadicalElem

RadicalElem::RadicalElem(const Int& m0, const Rat& a0, const Rat& a1, const Rat& a2) : m0_(m0), a_{a0, a1, a2} {
    if (m0_ < 2) fail(ErrorKind::InvalidInput, "radical field needs m0 >= 2, got " + to_string(m0_));
    for (const auto& [p, e] : factorize(m0_).factors) {
        if (e >= 3) fail(ErrorKind::InvalidInput, "m0 = " + to_string(m0_) + " is not cube-free");
    }
}

RadicalElem RadicalElem::with(const Rat& a0, const Rat& a1, const Rat& a2) const {
    return RadicalElem(Trusted{}, m0_, {a0, a1, a2});
}

namespace {
void require_same_field(const RadicalElem& u, const RadicalElem& v) {
    if (u.m0() != v.m0()) {
        fail(ErrorKind::FieldMismatch, "radicals of " + to_string(u.m0()) + " and " + to_string(v.m0()));
    }
}
}  // namespace

RadicalElem RadicalElem::operator-() const { return with(-a_[0], -a_[1], -a_[2]); }

RadicalElem operator+(const RadicalElem& u, const RadicalElem& v) {
    require_same_field(u, v);
    return u.with(u[0] + v[0], u[1] + v[1], u[2] + v[2]);
}

RadicalElem operator-(const RadicalElem& u, const RadicalElem& v) {
    require_same_field(u, v);
    return u.with(u[0] - v[0], u[1] - v[1], u[2] - v[2]);
}

RadicalElem operator*(const RadicalElem& u, const RadicalElem& v) {
    require_same_field(u, v);
    const Rat m(u.m0());
    // r^3 = m, r^4 = m*r
    Rat c0 = u[0] * v[0] + m * (u[1] * v[2] + u[2] * v[1]);
    Rat c1 = u[0] * v[1] + u[1] * v[0] + m * u[2] * v[2];
    Rat c2 = u[0] * v[2] + u[1] * v[1] + u[2] * v[0];
    return u.with(c0, c1, c2);
}

RadicalElem operator/(const RadicalElem& u, const RadicalElem& v) { return u * rad_inv(v); }

bool operator==(const RadicalElem& u, const RadicalElem& v) { return u.m0_ == v.m0_ && u.a_ == v.a_; }

RadicalElem rad_mul(const RadicalElem& u, const RadicalElem& v) { return u * v; }

Rat rad_norm(const RadicalElem& u) {
    const Rat m(u.m0());
    return Rat(pow(u[0], 3) + m * pow(u[1], 3) + m * m * pow(u[2], 3) - 3 * m * u[0] * u[1] * u[2]);
}

RadicalElem rad_inv(const RadicalElem& u) {
    if (u.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(r)");
    const Rat m(u.m0());
    // u * adj(u) = N(u)
    Rat b0 = u[0] * u[0] - m * u[1] * u[2];
    Rat b1 = m * u[2] * u[2] - u[0] * u[1];
    Rat b2 = u[1] * u[1] - u[0] * u[2];
    const Rat n = rad_norm(u);
    return u.with(b0 / n, b1 / n, b2 / n);
}

std::string format(const RadicalElem& u) {
    std::ostringstream os;
    const auto term = [&](const Rat& c, const char* power) {
        os << (c < 0 ? " - " : " + ") << to_string(Rat(abs(c))) << power;
    };
    os << to_string(u[0]);
    term(u[1], "*r");
    term(u[2], "*r^2");
    os << " where r^3 = " << to_string(u.m0());
    return os.str();
}

// ---------------------------------------------------------------- FpElem

namespace {
void require_same_field(const FpElem& u, const FpElem& v) {
    if (u.modulus() != v.modulus()) fail(ErrorKind::FieldMismatch, "elements of different prime fields");
}
}  // namespace

FpElem FpElem::operator-() const { return FpElem(modulus_, md::neg(value_, modulus_)); }

FpElem operator+(const FpElem& u, const FpElem& v) {
    require_same_field(u, v);
    return FpElem(u.modulus_, md::add(u.value_, v.value_, u.modulus_));
}

FpElem operator-(const FpElem& u, const FpElem& v) {
    require_same_field(u, v);
    return FpElem(u.modulus_, md::sub(u.value_, v.value_, u.modulus_));
}

FpElem operator*(const FpElem& u, const FpElem& v) {
    require_same_field(u, v);
    return FpElem(u.modulus_, md::mul(u.value_, v.value_, u.modulus_));
}

FpElem operator/(const FpElem& u, const FpElem& v) {
    require_same_field(u, v);
    return FpElem(u.modulus_, md::mul(u.value_, md::inv(v.value_, u.modulus_), u.modulus_));
}

FpElem field_from(const FpElem& like, const Rat& q) { return FpElem(like.modulus(), md::reduce(q, like.modulus())); }

std::string format(const FpElem& u) { return std::to_string(u.value()); }

// ---------------------------------------------------------------- ExtFieldElem

namespace {

bool irreducible_small(const PolyFp& g) {
    // degree <= 3: irreducible iff no roots
    return g.degree() >= 1 && g.degree() <= 3 && (g.degree() == 1 || roots_mod(g).empty());
}

std::shared_ptr<const PolyFp> checked_field_poly(const PolyFp& g) {
    if (!irreducible_small(g)) fail(ErrorKind::InvalidInput, "defining polynomial must be irreducible of degree 1..3");
    return std::make_shared<const PolyFp>(g.monic());
}

}  // namespace

ExtFieldElem::ExtFieldElem(const PolyFp& g, const PolyFp& value) : g_(checked_field_poly(g)), value_(value % *g_) {}

ExtFieldElem ExtFieldElem::with(const PolyFp& value) const { return ExtFieldElem(g_, value % *g_); }

namespace {
void require_same_field(const ExtFieldElem& u, const ExtFieldElem& v) {
    if (!(u.modulus_poly() == v.modulus_poly())) fail(ErrorKind::FieldMismatch, "elements of different extension fields");
}
}  // namespace

ExtFieldElem ExtFieldElem::operator-() const { return with(PolyFp(characteristic()) - value_); }

ExtFieldElem operator+(const ExtFieldElem& u, const ExtFieldElem& v) {
    require_same_field(u, v);
    return u.with(u.value_ + v.value_);
}

ExtFieldElem operator-(const ExtFieldElem& u, const ExtFieldElem& v) {
    require_same_field(u, v);
    return u.with(u.value_ - v.value_);
}

ExtFieldElem operator*(const ExtFieldElem& u, const ExtFieldElem& v) {
    require_same_field(u, v);
    return u.with(u.value_ * v.value_);
}

ExtFieldElem operator/(const ExtFieldElem& u, const ExtFieldElem& v) {
    require_same_field(u, v);
    return u * v.inverse();
}

bool operator==(const ExtFieldElem& u, const ExtFieldElem& v) {
    return u.modulus_poly() == v.modulus_poly() && u.value_ == v.value_;
}

ExtFieldElem ExtFieldElem::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in F_l[x]/(g)");
    // extended Euclid: s*value + t*g = 1
    const auto l = characteristic();
    PolyFp r0 = *g_, r1 = value_;
    PolyFp s0(l), s1(l, {1});
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        PolyFp s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant since g is irreducible
    const PolyFp scale(l, {md::inv(r0.lead(), l)});
    return with(s0 * scale);
}

ExtFieldElem field_from(const ExtFieldElem& like, const Rat& q) {
    return like.with(PolyFp(like.characteristic(), {md::reduce(q, like.characteristic())}));
}

std::string format(const ExtFieldElem& u) {
    std::ostringstream os;
    os << '[';
    for (unsigned i = 0; i < u.degree(); ++i) os << (i ? "," : "") << u.value().coeff(i);
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------- residue fields

std::vector<PolyFp> build_residue_fields(const Int& m0, std::uint64_t ell) {
    if (!is_prime(ell)) fail(ErrorKind::InvalidInput, std::to_string(ell) + " is not prime");
    const std::uint64_t m = md::reduce(m0, ell);
    if (ell == 3 || m == 0) fail(ErrorKind::PrimeExcluded, std::to_string(ell) + " divides 3*m0");
    const PolyFp cubic(ell, {md::neg(m, ell), 0, 0, 1});
    const auto roots = roots_mod(cubic);
    std::vector<PolyFp> out;
    for (auto r : roots) out.emplace_back(ell, std::vector<std::uint64_t>{md::neg(r, ell), 1});
    if (roots.size() == 1) {
        out.push_back(cubic / out.front());
    } else if (roots.empty()) {
        out.push_back(cubic);
    }
    return out;
}

namespace {
void require_divides_radical_poly(const Int& m0, const PolyFp& g) {
    const auto l = g.modulus();
    const PolyFp cubic(l, {md::neg(md::reduce(m0, l), l), 0, 0, 1});
    if (!(cubic % g).is_zero()) fail(ErrorKind::InvalidInput, "g does not divide x^3 - m0 mod l");
}
}  // namespace

ExtFieldElem reduce_radical(const RadicalElem& u, const PolyFp& g) {
    const auto l = g.modulus();
    if (l == 3 || md::reduce(u.m0(), l) == 0) fail(ErrorKind::PrimeExcluded, std::to_string(l) + " divides 3*m0");
    require_divides_radical_poly(u.m0(), g);
    std::vector<std::uint64_t> v;
    for (const auto& a : u.coeffs()) v.push_back(md::reduce(a, l));
    return ExtFieldElem(g, PolyFp(l, std::move(v)));
}

ExtFieldElem reduce_rational(const Rat& q, const PolyFp& g) {
    return ExtFieldElem(g, PolyFp(g.modulus(), {md::reduce(q, g.modulus())}));
}

}  // namespace forge
