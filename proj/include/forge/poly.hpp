#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forge/arith.hpp"

namespace forge {

/// Dense univariate polynomial over Q, constant term first, no leading zeros.
class PolyQ {
   public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs);
    PolyQ(std::initializer_list<Rat> coeffs) : PolyQ(std::vector<Rat>(coeffs)) {}

    static PolyQ constant(const Rat& c) { return PolyQ({c}); }
    static PolyQ monomial(const Rat& c, unsigned degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat lead() const { return is_zero() ? Rat(0) : coeffs_.back(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Rat& x) const;
    PolyQ derivative() const;
    /// this(inner(x))
    PolyQ compose(const PolyQ& inner) const;

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& p, const PolyQ& q);
    friend PolyQ operator-(const PolyQ& p, const PolyQ& q);
    friend PolyQ operator*(const PolyQ& p, const PolyQ& q);
    friend PolyQ operator*(const Rat& s, const PolyQ& p);
    friend bool operator==(const PolyQ&, const PolyQ&) = default;

    /// Euclidean division; divisor must be nonzero.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

   private:
    void trim();
    std::vector<Rat> coeffs_;
};

Rat eval(const PolyQ& p, const Rat& x);
Rat resultant(const PolyQ& p, const PolyQ& q);
Rat discriminant(const PolyQ& p);

/// "c_n*x^n + ... + c_0"
std::string format(const PolyQ& p, const std::string& var = "x");
/// Coefficient strings, constant term first.
std::vector<std::string> coeff_strings(const PolyQ& p);

/// Dense polynomial over F_l, constant term first, coefficients in [0, l).
class PolyFp {
   public:
    PolyFp(std::uint64_t modulus, std::vector<std::uint64_t> coeffs);
    explicit PolyFp(std::uint64_t modulus) : modulus_(modulus) {}

    static PolyFp x_power(std::uint64_t modulus, unsigned degree);

    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::uint64_t coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t lead() const { return is_zero() ? 0 : coeffs_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    std::uint64_t operator()(std::uint64_t x) const;
    PolyFp derivative() const;
    PolyFp monic() const;

    friend PolyFp operator+(const PolyFp& p, const PolyFp& q);
    friend PolyFp operator-(const PolyFp& p, const PolyFp& q);
    friend PolyFp operator*(const PolyFp& p, const PolyFp& q);
    friend bool operator==(const PolyFp&, const PolyFp&) = default;

    std::pair<PolyFp, PolyFp> divmod(const PolyFp& divisor) const;
    PolyFp operator%(const PolyFp& divisor) const { return divmod(divisor).second; }
    PolyFp operator/(const PolyFp& divisor) const { return divmod(divisor).first; }

   private:
    void trim();
    std::uint64_t modulus_ = 0;
    std::vector<std::uint64_t> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
PolyFp gcd(PolyFp a, PolyFp b);
/// base^e mod m
PolyFp pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& m);

PolyFp reduce_mod(const PolyQ& p, std::uint64_t ell);
std::vector<std::uint64_t> roots_mod(const PolyFp& p);

/// Degrees of the irreducible factors, with multiplicity, ascending.
using DegreePattern = std::vector<unsigned>;
DegreePattern ddf_pattern(const PolyFp& p);
std::string format(const DegreePattern& pattern);

enum class Irreducibility { Irreducible, Reducible, Unknown };
std::string_view to_string(Irreducibility status);

/// Tries `prime_budget` good primes. Never claims irreducibility unless some
/// degree pattern or combination of patterns rules out every proper factor degree.
Irreducibility irreducibility_sieve(const PolyQ& p, unsigned prime_budget);

/// Rational roots of p (exact), ascending.
std::vector<Rat> rational_roots(const PolyQ& p);

/// Sparse polynomial in k, t over Q.
class BiPolyQ {
   public:
    struct Key {
        unsigned k = 0;
        unsigned t = 0;
    };
    /// Graded lexicographic, k before t: higher total degree first, then higher k-degree.
    struct GradedLex {
        bool operator()(const Key& a, const Key& b) const {
            if (a.k + a.t != b.k + b.t) return a.k + a.t > b.k + b.t;
            return a.k > b.k;
        }
    };
    using Terms = std::map<Key, Rat, GradedLex>;

    BiPolyQ() = default;
    static BiPolyQ constant(const Rat& c);
    static BiPolyQ k();
    static BiPolyQ t();
    static BiPolyQ monomial(const Rat& c, unsigned k_degree, unsigned t_degree);
    /// Embeds a univariate polynomial in k.
    static BiPolyQ in_k(const PolyQ& p);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat operator()(const Rat& k, const Rat& t) const;

    BiPolyQ operator-() const;
    friend BiPolyQ operator+(const BiPolyQ& f, const BiPolyQ& g);
    friend BiPolyQ operator-(const BiPolyQ& f, const BiPolyQ& g);
    friend BiPolyQ operator*(const BiPolyQ& f, const BiPolyQ& g);
    friend BiPolyQ operator*(const Rat& s, const BiPolyQ& f);
    friend bool operator==(const BiPolyQ& f, const BiPolyQ& g);

   private:
    void add_term(const Key& key, const Rat& c);
    Terms terms_;
};

BiPolyQ pow(const BiPolyQ& base, unsigned exponent);
std::string format(const BiPolyQ& f);

}  // namespace forge
