#include "forge/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "forge/error.hpp"

namespace forge {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool fits_u64(const Int& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Int& n) {
    // mpz_get_ui is only 64-bit on LP64, which is the only target we build for.
    static_assert(sizeof(unsigned long) == 8);
    return mpz_get_ui(n.get_mpz_t());
}

const std::vector<std::uint64_t>& small_primes() {
    static const std::vector<std::uint64_t> table = primes_in(2, kTrialLimit);
    return table;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
Int rho_split(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        auto f = [&](const Int& v) {
            Int w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        constexpr unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Int diff = abs(x - y);
                    q = q * diff % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Int diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = rho_split(n);
    split_into(d, out);
    split_into(Int(n / d), out);
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Rat> parse_rat(std::string_view text) {
    auto digits_only = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!digits_only(num) || !digits_only(den)) return std::nullopt;
    Int n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    if (negative) n = -n;
    return make_rat(n, d);
}

Rat parse_rat_or_throw(std::string_view text) {
    auto q = parse_rat(text);
    if (!q) fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
    return *q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }
std::string to_string(const Int& n) { return n.get_str(10); }

Int pow(const Int& base, unsigned exponent) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rat pow(const Rat& base, unsigned exponent) {
    return make_rat(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) fail(ErrorKind::InvalidInput, "valuation of zero");
    Int m = abs(n);
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

Int Factorization::reconstruct() const {
    Int r = sign;
    for (const auto& [p, e] : factors) r *= pow(p, e);
    return r;
}

std::vector<Int> Factorization::primes() const {
    std::vector<Int> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a proven witness set for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
        if (!composite[i]) out.push_back(i);
    }
    return out;
}

Factorization factorize(const Int& n) {
    if (n == 0) fail(ErrorKind::InvalidInput, "cannot factorize 0");
    Factorization result;
    result.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    for (std::uint64_t p : small_primes()) {
        if (m == 1) break;
        Int pp = static_cast<unsigned long>(p);
        if (pp * pp > m) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) result.factors.push_back({pp, e});
    }
    if (m != 1) {
        std::map<Int, unsigned> rest;
        split_into(m, rest);
        for (const auto& [p, e] : rest) result.factors.push_back({p, e});
    }
    return result;
}

CubeClass cubefree_rat(const Rat& q) {
    if (q == 0) fail(ErrorKind::InvalidInput, "zero has no cube class");
    Int m0 = 1, c_num = sgn(q) < 0 ? -1 : 1, c_den = 1;
    for (const auto& [p, e] : factorize(q.get_num()).factors) {
        m0 *= pow(p, e % 3);
        c_num *= pow(p, e / 3);
    }
    for (const auto& [p, e] : factorize(q.get_den()).factors) {
        // p^-e = p^-(3k) * p^(3k-e) with 3k the least multiple of 3 >= e
        unsigned k = (e + 2) / 3;
        m0 *= pow(p, 3 * k - e);
        c_den *= pow(p, k);
    }
    CubeClass cls{m0, make_rat(c_num, c_den)};
    if (cls.value() != q) fail(ErrorKind::InternalError, "cube class does not reconstruct " + to_string(q));
    return cls;
}

}  // namespace forge
