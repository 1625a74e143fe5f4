#include "lexirank/grossnum.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace lexirank {
namespace {

Grossnumeral G() { return Grossnumeral::unit(); }

Grossnumeral mono(long coefficient, long exponent) {
    return Grossnumeral::monomial(Rational(coefficient), Rational(exponent));
}

MedalWord word(std::vector<MedalWord::Letter> letters) {
    return MedalWord(std::move(letters));
}

TEST(Grossnumeral, ConstructionAndQueries) {
    const Grossnumeral zero;
    EXPECT_TRUE(zero.is_zero());
    EXPECT_TRUE(zero.is_constant());
    EXPECT_THROW(zero.leading_exponent(), DomainError);
    EXPECT_THROW(zero.leading_coefficient(), DomainError);

    const Grossnumeral five(5);
    EXPECT_TRUE(five.is_constant());
    EXPECT_TRUE(five.is_monomial());
    EXPECT_EQ(five.leading_exponent(), Rational(0));
    EXPECT_EQ(five.leading_coefficient(), Rational(5));

    const Grossnumeral g = G();
    EXPECT_FALSE(g.is_constant());
    EXPECT_EQ(g.leading_exponent(), Rational(1));
    EXPECT_EQ(g.leading_coefficient(), Rational(1));

    const Grossnumeral x = mono(5, 3) + mono(12, 1) + Grossnumeral(1);
    EXPECT_EQ(x.term_count(), 3U);
    EXPECT_EQ(x.coefficient(Rational(3)), Rational(5));
    EXPECT_EQ(x.coefficient(Rational(2)), Rational(0));
    EXPECT_EQ(x.coefficient(Rational(0)), Rational(1));
}

TEST(Grossnumeral, ArithmeticCancelsExactly) {
    const Grossnumeral a = G() + Grossnumeral(1);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * (G() - Grossnumeral(1))), mono(1, 2) - Grossnumeral(1));
    EXPECT_EQ(G() + G(), mono(2, 1));
    EXPECT_EQ(-(G() - Grossnumeral(1)), Grossnumeral(1) - G());
    // Zero coefficients never linger in the term map.
    EXPECT_EQ((G() - G()).term_count(), 0U);
}

TEST(Grossnumeral, ToStringFrozenForms) {
    EXPECT_EQ(Grossnumeral().to_string(), "0");
    EXPECT_EQ(Grossnumeral(7).to_string(), "7");
    EXPECT_EQ(Grossnumeral(Rational(-3, 4)).to_string(), "-3/4");
    EXPECT_EQ(G().to_string(), "G");
    EXPECT_EQ((mono(5, 3) + mono(12, 1) + Grossnumeral(1)).to_string(),
              "5*G^3 + 12*G + 1");
    EXPECT_EQ(mono(1, -2).to_string(), "G^-2");
    EXPECT_EQ(Grossnumeral::monomial(Rational(1), Rational(1, 2)).to_string(),
              "G^(1/2)");
    EXPECT_EQ((mono(-1, 1) + Grossnumeral(Rational(1, 2))).to_string(),
              "-G + 1/2");
    EXPECT_EQ((mono(2, 2) - mono(3, 1)).to_string(), "2*G^2 - 3*G");
}

TEST(Grossnumeral, RingAxiomsOnRandomTriples) {
    std::mt19937_64 rng(19937);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(-4, 4);
    std::uniform_int_distribution<int> terms(0, 3);
    const auto random_value = [&]() {
        Grossnumeral out;
        const int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            out = out + Grossnumeral::monomial(Rational(coeff(rng)),
                                               Rational(expo(rng)));
        }
        return out;
    };
    for (int i = 0; i < 500; ++i) {
        const Grossnumeral a = random_value();
        const Grossnumeral b = random_value();
        const Grossnumeral c = random_value();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + Grossnumeral(), a);
        EXPECT_EQ(a * Grossnumeral(1), a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Compare, LeadingTermDecides) {
    // G exceeds every rational constant, however large.
    EXPECT_EQ(compare(G(), Grossnumeral(Rational(10).pow(100))),
              std::strong_ordering::greater);
    EXPECT_EQ(compare(Grossnumeral::monomial(Rational(1), Rational(1, 2)),
                      Grossnumeral(Rational(10).pow(100))),
              std::strong_ordering::greater);
    // A positive infinitesimal sits strictly between 0 and every positive
    // rational.
    EXPECT_EQ(compare(mono(1, -1), Grossnumeral()),
              std::strong_ordering::greater);
    EXPECT_EQ(compare(mono(1, -1), Grossnumeral(Rational(1, 1000000))),
              std::strong_ordering::less);

    EXPECT_EQ(compare(mono(2, 1), G()), std::strong_ordering::greater);
    EXPECT_EQ(compare(mono(1, 2), mono(1000, 1)), std::strong_ordering::greater);
    EXPECT_EQ(compare(G() + Grossnumeral(1), G()), std::strong_ordering::greater);
    EXPECT_EQ(compare(G() - Grossnumeral(1), G()), std::strong_ordering::less);
    EXPECT_EQ(compare(G() + Grossnumeral(1) - Grossnumeral(1), G()),
              std::strong_ordering::equal);
    EXPECT_EQ(compare(-G(), Grossnumeral(-1000000)), std::strong_ordering::less);
}

TEST(Compare, IsATotalOrderOnSamples) {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> terms(0, 3);
    const auto random_value = [&]() {
        Grossnumeral out;
        const int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            out = out + Grossnumeral::monomial(Rational(coeff(rng)),
                                               Rational(expo(rng)));
        }
        return out;
    };
    for (int i = 0; i < 500; ++i) {
        const Grossnumeral a = random_value();
        const Grossnumeral b = random_value();
        const Grossnumeral c = random_value();
        // Antisymmetry.
        const auto ab = compare(a, b);
        const auto ba = compare(b, a);
        EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
        EXPECT_EQ(ab == std::strong_ordering::greater,
                  ba == std::strong_ordering::less);
        // Transitivity of <=.
        if (ab != std::strong_ordering::greater &&
            compare(b, c) != std::strong_ordering::greater) {
            EXPECT_NE(compare(a, c), std::strong_ordering::greater);
        }
        // Translation invariance.
        EXPECT_EQ(compare(a + c, b + c), ab);
    }
}

TEST(Classify, CoversAllMagnitudes) {
    EXPECT_EQ(classify(Grossnumeral()), Magnitude::zero);
    EXPECT_EQ(classify(Grossnumeral(5)), Magnitude::finite);
    EXPECT_EQ(classify(Grossnumeral(Rational(-2, 3))), Magnitude::finite);
    EXPECT_EQ(classify(mono(1, -2)), Magnitude::infinitesimal);
    EXPECT_EQ(classify(mono(3, -1) + mono(1, -2)), Magnitude::infinitesimal);
    EXPECT_EQ(classify(G()), Magnitude::infinite);
    EXPECT_EQ(classify(-G()), Magnitude::infinite);
    EXPECT_EQ(classify(Grossnumeral::monomial(Rational(1), Rational(1, 2))),
              Magnitude::infinite);
    EXPECT_EQ(classify(Grossnumeral(2) + mono(1, -1)), Magnitude::finite);
    EXPECT_EQ(classify(G() - G() + Grossnumeral(1)), Magnitude::finite);
    EXPECT_EQ(to_string(Magnitude::infinite), "infinite");
    EXPECT_EQ(to_string(Magnitude::zero), "zero");
}

TEST(SergeyevRank, PositionalPolynomial) {
    EXPECT_EQ(sergeyev_rank(word({13, 11, 9})),
              mono(13, 2) + mono(11, 1) + Grossnumeral(9));
    EXPECT_EQ(sergeyev_rank(word({5, 0, 12, 1})),
              mono(5, 3) + mono(12, 1) + Grossnumeral(1));
    EXPECT_EQ(sergeyev_rank(MedalWord()), Grossnumeral());
    EXPECT_EQ(sergeyev_rank(word({0, 0, 7})), Grossnumeral(7));
    EXPECT_EQ(sergeyev_rank(word({13, 11, 9})).to_string(),
              "13*G^2 + 11*G + 9");
}

// The raw positional number is not stable under appending trailing zeros:
// (1,0,0) canonicalizes to (1) and scores 1, exactly like (0,1), even
// though (1,0,0) beats (0,1) lexicographically. Embedding both words into
// their common length by scaling with G^(L_common - L) restores agreement.
TEST(SergeyevRank, RequiresCommonLengthEmbeddingForOrder) {
    const MedalWord u = word({1, 0, 0});  // canonically (1)
    const MedalWord v = word({0, 1});
    ASSERT_EQ(lex_compare(u, v), std::strong_ordering::greater);
    EXPECT_EQ(sergeyev_rank(u), sergeyev_rank(v));  // the collision

    const auto embed = [](const MedalWord& w, std::size_t common_length) {
        const long shift = static_cast<long>(common_length - w.length());
        return sergeyev_rank(w) *
               Grossnumeral::monomial(Rational(1), Rational(shift));
    };
    const std::size_t common = std::max(u.length(), v.length());
    EXPECT_EQ(compare(embed(u, common), embed(v, common)),
              std::strong_ordering::greater);
}

TEST(SergeyevRank, EmbeddedOrderMatchesLexOrderOnRandomPairs) {
    std::mt19937_64 rng(70707);
    std::uniform_int_distribution<std::size_t> len_dist(0, 4);
    std::uniform_int_distribution<MedalWord::Letter> letter_dist(0, 9);
    const auto random_word = [&]() {
        std::vector<MedalWord::Letter> letters(len_dist(rng));
        for (auto& letter : letters) {
            letter = letter_dist(rng);
        }
        return MedalWord(std::move(letters));
    };
    const auto embed = [](const MedalWord& w, std::size_t common_length) {
        const long shift = static_cast<long>(common_length - w.length());
        return sergeyev_rank(w) *
               Grossnumeral::monomial(Rational(1), Rational(shift));
    };
    for (int i = 0; i < 2000; ++i) {
        const MedalWord u = random_word();
        const MedalWord v = random_word();
        const std::size_t common = std::max(u.length(), v.length());
        EXPECT_EQ(compare(embed(u, common), embed(v, common)),
                  lex_compare(u, v))
            << u.to_string() << " vs " << v.to_string();
    }
}

TEST(EvalAtBase, ExactSubstitution) {
    const Grossnumeral x = mono(5, 3) + mono(12, 1) + Grossnumeral(1);
    EXPECT_EQ(eval_at_base(x, Rational(1000000)),
              Rational(Integer("5000000000012000001", 10)));
    EXPECT_EQ(eval_at_base(x, Rational(1000)), Rational(Integer(5000012001L)));
    EXPECT_EQ(eval_at_base(x, Rational(2)), Rational(65));
    EXPECT_EQ(eval_at_base(mono(1, -1), Rational(1000)), Rational(1, 1000));
    EXPECT_EQ(eval_at_base(Grossnumeral(), Rational(7)), Rational(0));
    EXPECT_EQ(
        eval_at_base(Grossnumeral::monomial(Rational(1), Rational(1, 2)),
                     Rational(4)),
        Rational(2));
    EXPECT_EQ(eval_at_base(G(), Rational(3, 2)), Rational(3, 2));
}

TEST(EvalAtBase, RejectsBadBasesAndInexactRoots) {
    EXPECT_THROW(eval_at_base(G(), Rational(0)), DomainError);
    EXPECT_THROW(eval_at_base(G(), Rational(-2)), DomainError);
    EXPECT_THROW(
        eval_at_base(Grossnumeral::monomial(Rational(1), Rational(1, 2)),
                     Rational(2)),
        RationalPowerUnavailable);
}

TEST(ComparisonBaseBound, FrozenAndSound) {
    const Grossnumeral x = mono(5, 3) + mono(12, 1) + Grossnumeral(1);
    EXPECT_EQ(comparison_base_bound(x, Grossnumeral()), Rational(19));
    EXPECT_EQ(comparison_base_bound(x, x), Rational(1));

    // For integer-coefficient values, any base above the bound makes exact
    // evaluation agree with the symbolic order.
    std::mt19937_64 rng(260816);
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<int> expo(-5, 5);
    std::uniform_int_distribution<int> terms(0, 3);
    std::uniform_int_distribution<long> slack(0, 9);
    const auto random_value = [&]() {
        Grossnumeral out;
        const int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            out = out + Grossnumeral::monomial(Rational(coeff(rng)),
                                               Rational(expo(rng)));
        }
        return out;
    };
    for (int i = 0; i < 200; ++i) {
        const Grossnumeral a = random_value();
        const Grossnumeral b = random_value();
        const Rational bound = comparison_base_bound(a, b);
        // bound has an integer value here (1 + sum of integer magnitudes).
        const Rational base = bound + Rational(1 + slack(rng));
        const auto symbolic = compare(a, b);
        const Rational left = eval_at_base(a, base);
        const Rational right = eval_at_base(b, base);
        EXPECT_EQ(symbolic, left <=> right)
            << a.to_string() << " vs " << b.to_string() << " at base "
            << base.to_string();
    }
}

TEST(Pow, MonomialAndIntegerSumPowers) {
    EXPECT_EQ(pow(G() + Grossnumeral(1), Rational(2)),
              mono(1, 2) + mono(2, 1) + Grossnumeral(1));
    EXPECT_EQ(pow(G() + Grossnumeral(1), Rational(0)), Grossnumeral(1));
    EXPECT_EQ(pow(Grossnumeral(), Rational(0)), Grossnumeral(1));
    EXPECT_EQ(pow(Grossnumeral(), Rational(5)), Grossnumeral());
    EXPECT_EQ(pow(mono(4, 2), Rational(1, 2)), mono(2, 1));
    EXPECT_EQ(pow(mono(4, 2), Rational(3, 2)), mono(8, 3));
    EXPECT_EQ(pow(mono(9, 1), Rational(1, 2)),
              Grossnumeral::monomial(Rational(3), Rational(1, 2)));
    EXPECT_EQ(pow(G(), Rational(-1)), mono(1, -1));
    EXPECT_EQ(pow(Grossnumeral(2), Rational(-1)),
              Grossnumeral(Rational(1, 2)));
    // (G^2 + 2G + 1)^(1/2) would be G + 1, but general radicals are not
    // attempted: only monomials get fractional powers.
    EXPECT_THROW(pow(G() + Grossnumeral(1), Rational(1, 2)), PowerUndefined);
    EXPECT_THROW(pow(G() + Grossnumeral(1), Rational(-1)), PowerUndefined);
    EXPECT_THROW(pow(Grossnumeral(), Rational(-2)), DivisionByZero);
    EXPECT_THROW(pow(G() + Grossnumeral(1), Rational(5000)), DomainError);
    EXPECT_THROW(pow(mono(2, 1), Rational(1, 2)), RationalPowerUnavailable);
}

TEST(Pow, AgreesWithRepeatedMultiplication) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(-2, 2);
    std::uniform_int_distribution<int> terms(1, 3);
    std::uniform_int_distribution<long> power(0, 6);
    for (int i = 0; i < 100; ++i) {
        Grossnumeral base;
        const int n = terms(rng);
        for (int t = 0; t < n; ++t) {
            base = base + Grossnumeral::monomial(Rational(coeff(rng)),
                                                 Rational(expo(rng)));
        }
        const long p = power(rng);
        Grossnumeral expected(1);
        for (long k = 0; k < p; ++k) {
            expected = expected * base;
        }
        if (base.is_zero() && p == 0) {
            expected = Grossnumeral(1);
        }
        EXPECT_EQ(pow(base, Rational(p)), expected);
    }
}

}  // namespace
}  // namespace lexirank
