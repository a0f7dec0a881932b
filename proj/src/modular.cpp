#include "forge/modular.hpp"

#include "forge/error.hpp"

namespace forge::modular {

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul(r, base, m);
        base = mul(base, base, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t m) {
    if (a % m == 0) fail(ErrorKind::DivisionByZero, "zero has no inverse mod " + std::to_string(m));
    return pow(a, m - 2, m);
}

std::uint64_t reduce(const Int& n, std::uint64_t m) {
    return mpz_fdiv_ui(n.get_mpz_t(), m);
}

std::uint64_t reduce(const Rat& q, std::uint64_t m) {
    std::uint64_t den = reduce(q.get_den(), m);
    if (den == 0) {
        fail(ErrorKind::PrimeExcluded, std::to_string(m) + " divides the denominator of " + to_string(q));
    }
    return mul(reduce(q.get_num(), m), inv(den, m), m);
}

}  // namespace forge::modular
