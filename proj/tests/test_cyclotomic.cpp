#include <gtest/gtest.h>

#include <random>

#include "nsct/cyclotomic.hpp"
#include "nsct/error.hpp"
#include "oracles.hpp"

using namespace nsct;

namespace {

CycNum random_cyc(std::mt19937_64& rng, unsigned m) {
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
    std::uniform_int_distribution<unsigned> len(0, m);
    std::vector<Rational> poly(len(rng));
    for (auto& c : poly) c = Rational(coef(rng), den(rng));
    return CycNum::from_polynomial(m, poly);
}

}  // namespace

TEST(Cyclotomic, Phi) {
    EXPECT_EQ(euler_phi(1), 1u);
    EXPECT_EQ(euler_phi(12), 4u);
    EXPECT_EQ(euler_phi(60), 16u);
    for (unsigned m = 1; m <= 60; ++m) EXPECT_EQ(cyclotomic_polynomial(m).size(), euler_phi(m) + 1) << m;
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
}

TEST(Cyclotomic, RootsOfUnity) {
    EXPECT_EQ(root_of_unity(1, 0), CycNum(1));
    EXPECT_EQ(root_of_unity(3, 1) + root_of_unity(3, 2), CycNum(-1));
    EXPECT_EQ(root_of_unity(4, 2), CycNum(-1));
    EXPECT_EQ(root_of_unity(4, 6), CycNum(-1));
    EXPECT_EQ(root_of_unity(5, -1), root_of_unity(5, 4));
}

TEST(Cyclotomic, Arithmetic) {
    const CycNum z = root_of_unity(3, 1);
    EXPECT_EQ(z + CycNum(0), z);
    EXPECT_EQ(z * root_of_unity(3, 2), CycNum(1));
    CycNum sum(0);
    for (int k = 0; k < 5; ++k) sum += root_of_unity(5, k);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(-(-z), z);
    EXPECT_EQ(z / Rational(2) * CycNum(2), z);
}

TEST(Cyclotomic, ConductorPolicy) {
    EXPECT_THROW(root_of_unity(3, 1) + root_of_unity(4, 1), ConductorMismatch);
    EXPECT_THROW(root_of_unity(3, 1) * root_of_unity(4, 1), ConductorMismatch);
    EXPECT_EQ(root_of_unity(12, 4), root_of_unity(3, 1));
    EXPECT_EQ(root_of_unity(3, 1).rebase(12), root_of_unity(12, 4));
    EXPECT_THROW(root_of_unity(3, 1).rebase(4), ConductorMismatch);
    EXPECT_EQ(CycNum(5).rebase(7), CycNum(5));
}

TEST(Cyclotomic, Rationality) {
    EXPECT_TRUE(root_of_unity(4, 2).is_rational());
    EXPECT_EQ(root_of_unity(4, 2).as_rational(), Rational(-1));
    EXPECT_FALSE(root_of_unity(3, 1).is_rational());
    EXPECT_THROW(root_of_unity(3, 1).as_rational(), NotRational);
    EXPECT_EQ((root_of_unity(3, 1) + root_of_unity(3, 2) + CycNum(5)).as_rational(), Rational(4));
}

TEST(Cyclotomic, Galois) {
    EXPECT_EQ(galois_power(CycNum(Rational(3, 7)), 5), CycNum(Rational(3, 7)));
    EXPECT_EQ(galois_power(root_of_unity(3, 1), 2), root_of_unity(3, 2));
    EXPECT_EQ(galois_power(root_of_unity(3, 1), 2), CycNum(-1) - root_of_unity(3, 1));
    EXPECT_THROW(galois_power(root_of_unity(6, 1), 2), NotCoprime);
    EXPECT_EQ(complex_conjugate(root_of_unity(8, 3)), root_of_unity(8, 5));
}

TEST(Cyclotomic, ParseExamples) {
    EXPECT_EQ(parse_cyc("1/2"), CycNum(Rational(1, 2)));
    EXPECT_EQ(parse_cyc("E(3)^2"), CycNum(-1) - root_of_unity(3, 1));
    EXPECT_EQ(parse_cyc("2*E(4)+1-E(4)"), CycNum(1) + root_of_unity(4, 1));
    EXPECT_EQ(parse_cyc(" - ( E(5) ) + 0*E(5)^0"), parse_cyc("-E(5)"));
    EXPECT_EQ(parse_cyc("E(4)^-1"), root_of_unity(4, 3));
    EXPECT_EQ(parse_cyc("E(3)*E(4)"), root_of_unity(12, 7));
}

TEST(Cyclotomic, ParseErrors) {
    try {
        parse_cyc("1 + * 2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 4u);
        EXPECT_FALSE(e.expected().empty());
    }
    EXPECT_THROW(parse_cyc("E(0)"), ParseError);
    EXPECT_THROW(parse_cyc("1/0"), ParseError);
    EXPECT_THROW(parse_cyc("(1"), ParseError);
    EXPECT_THROW(parse_cyc(""), ParseError);
    EXPECT_THROW(parse_cyc("1 2"), ParseError);
}

TEST(Cyclotomic, FormatExamples) {
    EXPECT_EQ(format_cyc(CycNum(Rational(-3, 4))), "-3/4");
    EXPECT_EQ(format_cyc(root_of_unity(3, 2)), "-1-E(3)");
    EXPECT_EQ(format_cyc(root_of_unity(12, 1) * CycNum(2)), "2*E(12)");
}

TEST(CyclotomicProperties, VanishingSums) {
    for (unsigned m = 2; m <= 60; ++m) {
        CycNum sum(0);
        sum = sum.rebase(m);
        for (unsigned k = 0; k < m; ++k) sum += root_of_unity(m, k);
        EXPECT_TRUE(sum.is_zero()) << m;
    }
}

TEST(CyclotomicProperties, FieldAxiomsSampled) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<unsigned> cond(1, 60);
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned m = cond(rng);
        const CycNum a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
        ASSERT_EQ((a + b) + c, a + (b + c)) << m;
        ASSERT_EQ((a * b) * c, a * (b * c)) << m;
        ASSERT_EQ(a * (b + c), a * b + a * c) << m;
        ASSERT_EQ(a + b, b + a) << m;
        ASSERT_EQ(a * b, b * a) << m;
        ASSERT_TRUE((a - a).is_zero()) << m;
    }
}

TEST(CyclotomicProperties, CanonicalizationIsIdempotent) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned> cond(1, 60);
    for (int trial = 0; trial < 1000; ++trial) {
        const unsigned m = cond(rng);
        const CycNum a = random_cyc(rng, m);
        ASSERT_EQ(a.coeffs().size(), euler_phi(m));
        const CycNum again = CycNum::from_polynomial(m, a.coeffs());
        ASSERT_EQ(again.coeffs(), a.coeffs());
    }
}

TEST(CyclotomicProperties, GaloisIsAutomorphism) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<unsigned> cond(1, 60);
    int checked = 0;
    while (checked < 1000) {
        const unsigned m = cond(rng);
        const long long r = std::uniform_int_distribution<long long>(-60, 60)(rng);
        if (std::gcd(static_cast<long long>(m), r) != 1 && m > 1) continue;
        const CycNum a = random_cyc(rng, m), b = random_cyc(rng, m);
        ASSERT_EQ(galois_power(a + b, r), galois_power(a, r) + galois_power(b, r));
        ASSERT_EQ(galois_power(a * b, r), galois_power(a, r) * galois_power(b, r));
        ++checked;
    }
}

TEST(CyclotomicProperties, ParseFormatRoundTrip) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<unsigned> cond(1, 60);
    for (int trial = 0; trial < 1000; ++trial) {
        const CycNum a = random_cyc(rng, cond(rng));
        ASSERT_EQ(parse_cyc(format_cyc(a)), a) << format_cyc(a);
    }
}

TEST(CyclotomicProperties, NumericEmbeddingIsHomomorphic) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<unsigned> cond(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned m = cond(rng);
        const CycNum a = random_cyc(rng, m), b = random_cyc(rng, m);
        EXPECT_LT(std::abs(oracle::to_complex(a * b) - oracle::to_complex(a) * oracle::to_complex(b)), 1e-6);
    }
}
