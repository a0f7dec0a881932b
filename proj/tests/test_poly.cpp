#include <gtest/gtest.h>

#include "forge/error.hpp"
#include "forge/poly.hpp"
#include "forge/sampling.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

// x^8 - 6x^4 + 19x^2 - 3
PolyQ p_x11() { return PolyQ({-3, 0, 19, 0, -6, 0, 0, 0, 1}); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalError;
}

PolyQ random_poly(Sampler& s, int degree, unsigned height) {
    std::vector<Rat> c;
    for (int i = 0; i < degree; ++i) c.push_back(s.rational(height));
    c.push_back(s.rational(height, true));
    return PolyQ(c);
}

}  // namespace

TEST(PolyQ, Evaluation) {
    EXPECT_EQ(eval(p_x11(), 1), 11);
    EXPECT_EQ(eval(p_x11(), 0), -3);
    EXPECT_EQ(eval(p_x11(), 2), 233);
}

TEST(PolyQ, Formatting) {
    EXPECT_EQ(format(p_x11()), "x^8 - 6*x^4 + 19*x^2 - 3");
    EXPECT_EQ(format(PolyQ({216, 0, 0, 0, 0, 0, 1})), "x^6 + 216");
    EXPECT_EQ(format(PolyQ({Rat(-1, 9), Rat(19, 9), Rat(-2), 0, 3}), "X"), "3*X^4 - 2*X^2 + 19/9*X - 1/9");
    EXPECT_EQ(format(PolyQ{}), "0");
    EXPECT_EQ(format(PolyQ({0, -1})), "-x");
    EXPECT_EQ(coeff_strings(PolyQ({Rat(1, 2), -3})), (std::vector<std::string>{"1/2", "-3"}));
}

TEST(PolyQ, DivmodAndCompose) {
    const PolyQ f = p_x11();
    const PolyQ g({1, 2, 3});
    auto [q, r] = f.divmod(g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
    EXPECT_EQ(PolyQ({0, 1, 1}).compose(PolyQ({1, 1})), PolyQ({2, 3, 1}));
}

TEST(Resultant, KnownValues) {
    EXPECT_EQ(resultant(PolyQ({1, 0, 1}), PolyQ({0, 1})), 1);
    EXPECT_EQ(resultant(PolyQ({-2, 1}), PolyQ({-3, 1})), -1);
    EXPECT_EQ(resultant(PolyQ({-1, 0, 1}), PolyQ({-4, 0, 1})), 9);
    EXPECT_EQ(kind_of([] { resultant(PolyQ{}, PolyQ({1, 1})); }), ErrorKind::InvalidInput);
}

TEST(Resultant, MatchesSylvesterAndAntisymmetry) {
    Sampler s(3);
    for (int i = 0; i < 60; ++i) {
        const PolyQ p = random_poly(s, static_cast<int>(s.integer(0, 6)), 9);
        const PolyQ q = random_poly(s, static_cast<int>(s.integer(0, 6)), 9);
        const Rat r = resultant(p, q);
        EXPECT_EQ(r, oracle::sylvester_resultant(p, q));
        const int sign = (p.degree() * q.degree()) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(resultant(q, p), Rat(sign * r));
    }
}

TEST(Discriminant, KnownValues) {
    EXPECT_EQ(discriminant(PolyQ({1, 0, 1})), -4);
    EXPECT_EQ(discriminant(PolyQ({1, 1, 0, 1})), -31);
    // cross-checked against sympy and an mpmath product over the roots
    EXPECT_EQ(discriminant(p_x11()), Rat(Int("-4356267555416832")));
    EXPECT_EQ(discriminant(p_x11()), oracle::sylvester_discriminant(p_x11()));
    EXPECT_EQ(kind_of([] { discriminant(PolyQ({5})); }), ErrorKind::InvalidInput);
}

TEST(Discriminant, CubicClosedForm) {
    Sampler s(5);
    for (int i = 0; i < 100; ++i) {
        const Rat a = s.rational(40), b = s.rational(40);
        EXPECT_EQ(discriminant(PolyQ({b, a, 0, 1})), Rat(-4 * a * a * a - 27 * b * b));
    }
}

TEST(ReduceMod, KnownValues) {
    EXPECT_EQ(reduce_mod(p_x11(), 5), PolyFp(5, {2, 0, 4, 0, 4, 0, 0, 0, 1}));
    EXPECT_EQ(reduce_mod(PolyQ({1, 0, 1}), 2), PolyFp(2, {1, 0, 1}));
    EXPECT_EQ(kind_of([] { reduce_mod(PolyQ({0, Rat(1, 3)}), 3); }), ErrorKind::PrimeExcluded);
}

TEST(RootsMod, KnownValues) {
    EXPECT_TRUE(roots_mod(reduce_mod(p_x11(), 5)).empty());
    const auto r233 = roots_mod(reduce_mod(p_x11(), 233));
    EXPECT_NE(std::find(r233.begin(), r233.end(), 2u), r233.end());
    EXPECT_EQ(roots_mod(PolyFp(5, {1, 0, 1})), (std::vector<std::uint64_t>{2, 3}));
}

TEST(DdfPattern, KnownValues) {
    EXPECT_EQ(ddf_pattern(PolyFp(5, {1, 0, 1})), (DegreePattern{1, 1}));
    EXPECT_EQ(ddf_pattern(PolyFp(3, {1, 0, 1})), (DegreePattern{2}));
    EXPECT_EQ(ddf_pattern(reduce_mod(p_x11(), 5)), (DegreePattern{8}));
    EXPECT_EQ(oracle::trial_division_pattern(reduce_mod(p_x11(), 5)), (DegreePattern{8}));
}

TEST(DdfPattern, RepeatedFactorsKeepMultiplicity) {
    // (x - 1)^3 (x^2 + 2)^2 (x + 1) mod 5 with the cube collapsing to a p-th power mod 3
    const PolyFp lin(5, {4, 1}), quad(5, {2, 0, 1}), other(5, {1, 1});
    EXPECT_EQ(ddf_pattern(lin * lin * lin * quad * quad * other), (DegreePattern{1, 1, 1, 1, 2, 2}));
    const PolyFp l3(3, {1, 1});
    EXPECT_EQ(ddf_pattern(l3 * l3 * l3 * PolyFp(3, {1, 0, 1})), (DegreePattern{1, 1, 1, 2}));
}

TEST(DdfPattern, AgreesWithTrialDivisionOracle) {
    Sampler s(9);
    for (std::uint64_t l : {3u, 5u, 7u, 11u, 13u}) {
        for (int i = 0; i < 25; ++i) {
            std::vector<std::uint64_t> c;
            const int deg = static_cast<int>(s.integer(1, 8));
            for (int j = 0; j < deg; ++j) c.push_back(static_cast<std::uint64_t>(s.integer(0, static_cast<long>(l) - 1)));
            c.push_back(1);
            const PolyFp f(l, c);
            const DegreePattern pattern = ddf_pattern(f);
            EXPECT_EQ(pattern, oracle::trial_division_pattern(f)) << "l=" << l;
            unsigned total = 0;
            for (unsigned d : pattern) total += d;
            EXPECT_EQ(total, static_cast<unsigned>(f.degree()));
            const bool has_linear = std::find(pattern.begin(), pattern.end(), 1u) != pattern.end();
            EXPECT_EQ(has_linear, !roots_mod(f).empty());
        }
    }
}

TEST(Berlekamp, FactorCountMatchesPatternLength) {
    Sampler s(19);
    for (std::uint64_t l : {5u, 7u, 11u}) {
        for (int i = 0; i < 20; ++i) {
            std::vector<std::uint64_t> c;
            const int deg = static_cast<int>(s.integer(2, 7));
            for (int j = 0; j < deg; ++j) c.push_back(static_cast<std::uint64_t>(s.integer(0, static_cast<long>(l) - 1)));
            c.push_back(1);
            const PolyFp f(l, c);
            if (gcd(f, f.derivative()).degree() > 0) continue;  // Berlekamp needs squarefree input
            EXPECT_EQ(oracle::berlekamp_factor_count(f), oracle::trial_division_pattern(f).size());
        }
    }
}

TEST(IrreducibilitySieve, KnownValues) {
    EXPECT_EQ(irreducibility_sieve(p_x11(), 50), Irreducibility::Irreducible);
    EXPECT_EQ(irreducibility_sieve(PolyQ({-1, 0, 1}), 10), Irreducibility::Reducible);
    // x^4 + 1 splits mod every prime
    for (unsigned budget : {3u, 20u}) {
        EXPECT_NE(irreducibility_sieve(PolyQ({1, 0, 0, 0, 1}), budget), Irreducibility::Irreducible);
    }
    for (std::uint64_t l : {3u, 5u, 7u}) EXPECT_GT(oracle::trial_division_pattern(PolyFp(l, {1, 0, 0, 0, 1})).size(), 1u);
}

TEST(IrreducibilitySieve, NeverClaimsIrreducibleForProducts) {
    Sampler s(13);
    for (int i = 0; i < 30; ++i) {
        const PolyQ f = random_poly(s, static_cast<int>(s.integer(2, 3)), 7);
        const PolyQ g = random_poly(s, static_cast<int>(s.integer(2, 3)), 7);
        const PolyQ h = f * g;
        if (discriminant(h) == 0) continue;
        EXPECT_NE(irreducibility_sieve(h, 30), Irreducibility::Irreducible) << format(h);
    }
    EXPECT_EQ(irreducibility_sieve(PolyQ({-2, 0, 0, 1}), 10), Irreducibility::Irreducible);
}

TEST(RationalRoots, FindsExactRoots) {
    // (2x - 3)(x + 5)(x^2 + 1)
    const PolyQ f = PolyQ({-3, 2}) * PolyQ({5, 1}) * PolyQ({1, 0, 1});
    EXPECT_EQ(rational_roots(f), (std::vector<Rat>{Rat(-5), Rat(3, 2)}));
    EXPECT_EQ(rational_roots(PolyQ({0, 0, 1})), (std::vector<Rat>{Rat(0)}));
}

TEST(BiPolyQ, ArithmeticMatchesPointwiseEvaluation) {
    Sampler s(17);
    auto random_bi = [&] {
        BiPolyQ f;
        for (int i = 0; i < 6; ++i) {
            f = f + BiPolyQ::monomial(s.rational(9), static_cast<unsigned>(s.integer(0, 4)),
                                      static_cast<unsigned>(s.integer(0, 4)));
        }
        return f;
    };
    for (int i = 0; i < 50; ++i) {
        const BiPolyQ f = random_bi(), g = random_bi();
        const Rat k = s.rational(20), t = s.rational(20);
        EXPECT_EQ((f + g)(k, t), Rat(f(k, t) + g(k, t)));
        EXPECT_EQ((f - g)(k, t), Rat(f(k, t) - g(k, t)));
        EXPECT_EQ((f * g)(k, t), Rat(f(k, t) * g(k, t)));
        EXPECT_TRUE((f - f).is_zero());
    }
}

TEST(BiPolyQ, CanonicalOrderAndFormat) {
    const BiPolyQ k = BiPolyQ::k(), t = BiPolyQ::t();
    const BiPolyQ f = Rat(4) * k * k * t * t * t - k * k * k * k * k + BiPolyQ::constant(7) + t;
    EXPECT_EQ(format(f), "-k^5 + 4*k^2*t^3 + t + 7");
}
