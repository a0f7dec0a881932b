#pragma once

#include <cstdint>

#include "forge/arith.hpp"

namespace forge::modular {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= m - b ? a - (m - b) : a + b;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + (m - b); }
inline std::uint64_t neg(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t m);
/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv(std::uint64_t a, std::uint64_t m);

std::uint64_t reduce(const Int& n, std::uint64_t m);
/// Image of q in F_m; PrimeExcluded when m divides the denominator.
std::uint64_t reduce(const Rat& q, std::uint64_t m);

}  // namespace forge::modular
