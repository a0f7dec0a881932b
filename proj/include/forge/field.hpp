#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "forge/arith.hpp"
#include "forge/poly.hpp"

namespace forge {

/// a0 + a1*r + a2*r^2 in Q(r), r^3 = m0 with m0 >= 2 cube-free.
class RadicalElem {
   public:
    /// Validates m0 (>= 2 and cube-free).
    RadicalElem(const Int& m0, const Rat& a0, const Rat& a1 = 0, const Rat& a2 = 0);

    static RadicalElem theta(const Int& m0) { return RadicalElem(m0, 0, 1, 0); }

    const Int& m0() const { return m0_; }
    const std::array<Rat, 3>& coeffs() const { return a_; }
    const Rat& operator[](std::size_t i) const { return a_[i]; }
    bool is_zero() const { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0; }
    bool is_rational() const { return a_[1] == 0 && a_[2] == 0; }

    /// Same field, different value.
    RadicalElem with(const Rat& a0, const Rat& a1 = 0, const Rat& a2 = 0) const;

    RadicalElem operator-() const;
    friend RadicalElem operator+(const RadicalElem& u, const RadicalElem& v);
    friend RadicalElem operator-(const RadicalElem& u, const RadicalElem& v);
    friend RadicalElem operator*(const RadicalElem& u, const RadicalElem& v);
    friend RadicalElem operator/(const RadicalElem& u, const RadicalElem& v);
    friend bool operator==(const RadicalElem& u, const RadicalElem& v);

   private:
    struct Trusted {};
    RadicalElem(Trusted, Int m0, std::array<Rat, 3> a) : m0_(std::move(m0)), a_(std::move(a)) {}

    Int m0_;
    std::array<Rat, 3> a_;
};

RadicalElem rad_mul(const RadicalElem& u, const RadicalElem& v);
RadicalElem rad_inv(const RadicalElem& u);
Rat rad_norm(const RadicalElem& u);
/// "a0 + a1*r + a2*r^2 where r^3 = m0"
std::string format(const RadicalElem& u);

/// Element of a prime field F_l.
class FpElem {
   public:
    FpElem(std::uint64_t modulus, std::uint64_t value) : modulus_(modulus), value_(value % modulus) {}

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FpElem operator-() const;
    friend FpElem operator+(const FpElem& u, const FpElem& v);
    friend FpElem operator-(const FpElem& u, const FpElem& v);
    friend FpElem operator*(const FpElem& u, const FpElem& v);
    friend FpElem operator/(const FpElem& u, const FpElem& v);
    friend bool operator==(const FpElem&, const FpElem&) = default;

   private:
    std::uint64_t modulus_;
    std::uint64_t value_;
};

/// Element of F_l[x]/(g) with g irreducible of degree 1..3.
class ExtFieldElem {
   public:
    /// Throws InvalidInput unless g is irreducible of degree 1..3.
    ExtFieldElem(const PolyFp& g, const PolyFp& value);

    const PolyFp& modulus_poly() const { return *g_; }
    std::uint64_t characteristic() const { return g_->modulus(); }
    unsigned degree() const { return static_cast<unsigned>(g_->degree()); }
    const PolyFp& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    /// Same field, different value (reduced mod g).
    ExtFieldElem with(const PolyFp& value) const;

    ExtFieldElem operator-() const;
    friend ExtFieldElem operator+(const ExtFieldElem& u, const ExtFieldElem& v);
    friend ExtFieldElem operator-(const ExtFieldElem& u, const ExtFieldElem& v);
    friend ExtFieldElem operator*(const ExtFieldElem& u, const ExtFieldElem& v);
    friend ExtFieldElem operator/(const ExtFieldElem& u, const ExtFieldElem& v);
    friend bool operator==(const ExtFieldElem& u, const ExtFieldElem& v);

    ExtFieldElem inverse() const;

   private:
    ExtFieldElem(std::shared_ptr<const PolyFp> g, PolyFp value) : g_(std::move(g)), value_(std::move(value)) {}

    std::shared_ptr<const PolyFp> g_;
    PolyFp value_;
};

/// Irreducible factors of x^3 - m0 mod l (monic), ascending degree.
std::vector<PolyFp> build_residue_fields(const Int& m0, std::uint64_t ell);

/// Image of u under r -> (x mod g).
ExtFieldElem reduce_radical(const RadicalElem& u, const PolyFp& g);
/// Rational image in F_l[x]/(g).
ExtFieldElem reduce_rational(const Rat& q, const PolyFp& g);

// Uniform hooks used by code generic over the coefficient field.

inline Rat field_from(const Rat&, const Rat& q) { return q; }
inline RadicalElem field_from(const RadicalElem& like, const Rat& q) { return like.with(q); }
FpElem field_from(const FpElem& like, const Rat& q);
ExtFieldElem field_from(const ExtFieldElem& like, const Rat& q);

inline bool field_is_zero(const Rat& q) { return q == 0; }
template <class F>
bool field_is_zero(const F& u) {
    return u.is_zero();
}

std::string format(const FpElem& u);
std::string format(const ExtFieldElem& u);
inline std::string format(const Rat& q) { return to_string(q); }

}  // namespace forge
