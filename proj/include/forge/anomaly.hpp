#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "forge/arith.hpp"
#include "forge/elliptic.hpp"
#include "forge/poly.hpp"

namespace forge {

/// Primes where the root/anomalous correspondence is not asserted. Always holds 2 and 3.
struct ExceptionSet {
    std::set<Int> primes;

    bool contains(const Int& p) const { return primes.count(p) != 0; }
    bool contains(std::uint64_t p) const { return contains(Int(static_cast<unsigned long>(p))); }
};

/// Generic branch: support of 6 * a * (4a^3 + 27b^2) (numerators and denominators).
/// a = 0: support of 6 * b.
ExceptionSet exception_set(const Curve& E);

/// 3 | #E(F_l). PrimeExcluded unless l is admissible for E.
bool is_anomalous(const Curve& E, std::uint64_t ell);

enum class ResidueClass { All, TwoMod3, OneMod3 };
bool matches(ResidueClass cls, std::uint64_t ell);

struct CorrelationRow {
    std::uint64_t ell = 0;
    bool has_root = false;
    bool anomalous = false;
    bool agree = false;
};

struct CorrelationReport {
    std::vector<CorrelationRow> rows;
    unsigned mismatches = 0;
    Irreducibility p_status = Irreducibility::Unknown;

    /// Without irreducibility of P only "root mod l => anomalous" is expected.
    bool one_directional_only() const { return p_status != Irreducibility::Irreducible; }
};

inline constexpr unsigned kSievePrimeBudget = 50;

/// Generic branch only (WrongBranch otherwise).
CorrelationReport correlation_scan(const Curve& E, std::uint64_t bound, ResidueClass filter = ResidueClass::All,
                                   unsigned jobs = 1);

struct PatternRow {
    std::uint64_t ell = 0;
    DegreePattern pattern;
};

/// Generic branch only (WrongBranch otherwise).
std::vector<PatternRow> degree_pattern_scan(const Curve& E, std::uint64_t bound, ResidueClass filter = ResidueClass::All,
                                            unsigned jobs = 1);

/// PrimeReport for every admissible prime l <= bound in the class.
std::vector<PrimeReport> anomalous_scan(const Curve& E, std::uint64_t bound, ResidueClass filter = ResidueClass::All,
                                        unsigned jobs = 1);

struct DivisorClass {
    Int prime;
    bool exceptional = false;
    bool anomalous = false;  // only meaningful when !exceptional
};

enum class ConditionVerdict { Satisfied, ExceptionalOnly, NotSatisfied };
std::string_view to_string(ConditionVerdict v);

struct ConditionReport {
    Int m;
    std::vector<DivisorClass> divisors;
    ConditionVerdict verdict = ConditionVerdict::NotSatisfied;
};

/// Classifies each prime q | m; satisfied iff some non-exceptional divisor is anomalous.
ConditionReport condition_ii_check(const Curve& E, const Int& m);

/// Same classification for every prime dividing m.
std::vector<DivisorClass> classify_divisors(const Curve& E, const Int& m);

enum class Lemma11Class { DivisibleBy11, PrimeTo11 };
std::string_view to_string(Lemma11Class c);

/// For X1(11): x = +-1 mod 11 predicts 11 || m0. InvalidParameter when 11 | x.
Lemma11Class lemma11_classify(const Int& x);

}  // namespace forge
