#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace forge {

using Int = mpz_class;
/// Always canonical: positive denominator, coprime parts.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

/// Parses "p/q" or "p" with an optional leading minus and no whitespace.
std::optional<Rat> parse_rat(std::string_view text);
Rat parse_rat_or_throw(std::string_view text);
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

Rat pow(const Rat& base, unsigned exponent);
Int pow(const Int& base, unsigned exponent);

/// Valuation of n at prime p; n must be nonzero.
unsigned valuation(const Int& n, const Int& p);

struct PrimePower {
    Int prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // ascending, distinct primes

    Int reconstruct() const;
    std::vector<Int> primes() const;
};

/// Deterministic below 2^64; GMP's BPSW-backed test above that.
bool is_prime(const Int& n);
bool is_prime(std::uint64_t n);

Factorization factorize(const Int& n);

/// Ascending primes in [lo, hi].
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Representative of q in Q*/Q*^3: q = c^3 * m0 with m0 a positive cube-free integer.
struct CubeClass {
    Int m0;
    Rat c;

    Rat value() const { return Rat(c * c * c * m0); }
    bool trivial() const { return m0 == 1; }
};

CubeClass cubefree_rat(const Rat& q);

}  // namespace forge
