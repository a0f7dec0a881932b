#include <gtest/gtest.h>

#include <random>

#include "forge/arith.hpp"
#include "forge/error.hpp"
#include "forge/sampling.hpp"

using namespace forge;

namespace {

bool trial_division_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalError;
}

}  // namespace

TEST(Rational, ParsesCanonicalText) {
    EXPECT_EQ(parse_rat_or_throw("-1/3"), Rat(-1, 3));
    EXPECT_EQ(parse_rat_or_throw("19/108"), Rat(19, 108));
    EXPECT_EQ(parse_rat_or_throw("4/6"), Rat(2, 3));
    EXPECT_EQ(parse_rat_or_throw("0"), Rat(0));
    EXPECT_EQ(to_string(parse_rat_or_throw("-10/4")), "-5/2");
    EXPECT_EQ(to_string(parse_rat_or_throw("7")), "7");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "+3", " 1", "1 /2", "1/-2", "1.5", "--1", "0x10"}) {
        EXPECT_FALSE(parse_rat(bad).has_value()) << bad;
    }
    EXPECT_EQ(kind_of([] { parse_rat_or_throw("abc"); }), ErrorKind::InvalidInput);
}

TEST(Factorize, KnownValues) {
    const Factorization f176 = factorize(Int(176));
    EXPECT_EQ(f176.sign, 1);
    EXPECT_EQ(f176.factors, (std::vector<PrimePower>{{Int(2), 4}, {Int(11), 1}}));

    const Factorization fm1 = factorize(Int(-1));
    EXPECT_EQ(fm1.sign, -1);
    EXPECT_TRUE(fm1.factors.empty());

    const Factorization f = factorize(Int(59648));
    EXPECT_EQ(f.factors, (std::vector<PrimePower>{{Int(2), 8}, {Int(233), 1}}));
}

TEST(Factorize, ZeroIsInvalid) { EXPECT_EQ(kind_of([] { factorize(Int(0)); }), ErrorKind::InvalidInput); }

TEST(Factorize, LargeSemiprimesNeedRho) {
    // 1000003 and 1000033 are both above the trial-division limit
    const Int n = Int(1000003) * Int(1000033) * 4;
    const Factorization f = factorize(n);
    EXPECT_EQ(f.factors, (std::vector<PrimePower>{{Int(2), 2}, {Int(1000003), 1}, {Int(1000033), 1}}));
    // P(41) and P(46) for X1(11) are prime
    EXPECT_EQ(factorize(Int("20047585407401")).factors.size(), 1u);
    const Int big = Int("7984908306491") * Int("2251866410147");
    EXPECT_EQ(factorize(big).factors.size(), 2u);
    EXPECT_EQ(factorize(big).reconstruct(), big);
    // P(43) = 11 * 79 * 7247 * 1855961
    EXPECT_EQ(factorize(Int("11688179799923")).primes(),
              (std::vector<Int>{Int(11), Int(79), Int(7247), Int(1855961)}));
}

TEST(Factorize, ReconstructsRandomIntegers) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const long v = static_cast<long>(rng() % 2'000'000'001ull) - 1'000'000'000;
        if (v == 0) continue;
        const Factorization f = factorize(Int(v));
        EXPECT_EQ(f.reconstruct(), Int(v));
        for (std::size_t j = 0; j < f.factors.size(); ++j) {
            EXPECT_TRUE(is_prime(f.factors[j].prime));
            EXPECT_GT(f.factors[j].exponent, 0u);
            if (j) EXPECT_LT(f.factors[j - 1].prime, f.factors[j].prime);
        }
    }
}

TEST(IsPrime, AgreesWithTrialDivision) {
    EXPECT_TRUE(is_prime(Int(233)));
    EXPECT_FALSE(is_prime(Int(4)));
    EXPECT_TRUE(is_prime(Int(11)));
    for (std::uint64_t n = 2; n < 20000; ++n) EXPECT_EQ(is_prime(n), trial_division_is_prime(n)) << n;
    // strong pseudoprimes to several small bases
    EXPECT_FALSE(is_prime(std::uint64_t{3215031751}));
    EXPECT_FALSE(is_prime(std::uint64_t{3825123056546413051ull}));
    EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ull}));
}

TEST(CubeClass, KnownValues) {
    const CubeClass c1 = cubefree_rat(Rat(11, 4));
    EXPECT_EQ(c1.m0, 22);
    EXPECT_EQ(c1.c, Rat(1, 2));

    const CubeClass c2 = cubefree_rat(Rat(-8));
    EXPECT_EQ(c2.m0, 1);
    EXPECT_EQ(c2.c, Rat(-2));
    EXPECT_TRUE(c2.trivial());

    const CubeClass c3 = cubefree_rat(Rat(233, 16));
    EXPECT_EQ(c3.m0, 932);
    EXPECT_EQ(c3.c, Rat(1, 4));

    EXPECT_EQ(kind_of([] { cubefree_rat(Rat(0)); }), ErrorKind::InvalidInput);
}

TEST(CubeClass, RoundTripClassSoundnessAndCubeFreeness) {
    Sampler s(11);
    for (int i = 0; i < 300; ++i) {
        const Rat q = s.rational(5000, true);
        const CubeClass cls = cubefree_rat(q);
        EXPECT_EQ(Rat(cls.c * cls.c * cls.c * cls.m0), q);
        EXPECT_GE(cls.m0, 1);
        for (const auto& [p, e] : factorize(cls.m0).factors) EXPECT_LE(e, 2u);

        const Rat r = s.rational(300, true);
        EXPECT_EQ(cubefree_rat(Rat(q * r * r * r)).m0, cls.m0);
    }
}
