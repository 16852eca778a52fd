#include <gtest/gtest.h>

#include "paircount/error.hpp"
#include "paircount/profile.hpp"
#include "reference_oracle.hpp"

using namespace paircount;

namespace {
PairProfile lin(const char* s) { return linear_pair_counts(BitString::parse(s)); }
PairProfile circ(const char* s) { return circular_pair_counts(BitString::parse(s)); }
}  // namespace

TEST(LinearPairCounts, Examples) {
    EXPECT_EQ(lin("001010001010001"), (PairProfile{15, 5, 0}));
    EXPECT_EQ(lin("00"), (PairProfile{2, 1, 0}));
    EXPECT_EQ(lin("0111"), (PairProfile{4, 0, 2}));
    EXPECT_EQ(lin("1"), (PairProfile{1, 0, 0}));
}

TEST(LinearPairCounts, EmptyInput) {
    try {
        linear_pair_counts(BitString{});
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_STREQ(e.what(), "empty input");
    }
}

TEST(CircularPairCounts, Examples) {
    EXPECT_EQ(circ("0011"), (PairProfile{4, 1, 1}));
    EXPECT_EQ(circ("0000"), (PairProfile{4, 4, 0}));
    EXPECT_EQ(circ("01"), (PairProfile{2, 0, 0}));
    // Length 2 visits (0,1) and (1,0).
    EXPECT_EQ(circ("00"), (PairProfile{2, 2, 0}));
    EXPECT_EQ(circ("11"), (PairProfile{2, 0, 2}));
}

TEST(CircularPairCounts, ShortInput) {
    EXPECT_THROW(circ("0"), DomainError);
    try {
        circular_pair_counts(BitString{});
    } catch (const DomainError& e) {
        EXPECT_STREQ(e.what(), "circular adjacency undefined below length 2");
    }
}

TEST(CircularPairCounts, RotationInvariant) {
    for (int n = 2; n <= 12; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            const auto b = BitString::from_mask(n, mask);
            const auto p = circular_pair_counts(b);
            for (int r = 1; r < n; ++r) ASSERT_EQ(circular_pair_counts(b.rotated(static_cast<std::size_t>(r))), p);
        }
    }
}

TEST(SDEncode, Examples) {
    EXPECT_EQ(sd_encode(BitString::parse("0011")).to_string(), "SDS");
    EXPECT_EQ(sd_encode(BitString::parse("0101")).to_string(), "DDD");
    EXPECT_EQ(sd_encode(BitString::parse("000")).to_string(), "SS");
    EXPECT_EQ(sd_encode(BitString::parse("1")).size(), 0U);
    EXPECT_THROW(sd_encode(BitString{}), DomainError);
}

TEST(SDEncode, SameCountIsPairTotal) {
    for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            const auto b = BitString::from_mask(n, mask);
            const auto p = linear_pair_counts(b);
            const auto w = sd_encode(b);
            ASSERT_EQ(w.size(), static_cast<std::size_t>(n - 1));
            ASSERT_EQ(w.count_same(), p.k + p.m);
        }
    }
}

TEST(WrapParity, Examples) {
    EXPECT_FALSE(wrap_parity_predicts_equal_ends(4, 1, 1));
    EXPECT_TRUE(wrap_parity_predicts_equal_ends(1, 0, 0));
    EXPECT_TRUE(wrap_parity_predicts_equal_ends(2, 1, 0));
}

TEST(WrapParity, ExhaustiveUpTo14) {
    for (int n = 1; n <= 14; ++n) {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            const auto b = BitString::from_mask(n, mask);
            const auto p = linear_pair_counts(b);
            const bool ends_equal = b.front() == b.back();
            ASSERT_EQ(ends_equal, wrap_parity_predicts_equal_ends(n, p.k, p.m)) << b.to_string();
            ASSERT_EQ(ends_equal, sd_encode(b).count_different() % 2 == 0) << b.to_string();
        }
    }
}

TEST(PairCounts, AgreeWithReference) {
    for (int n = 2; n <= 10; ++n) {
        for (std::uint64_t i = 0; i < (1ULL << n); ++i) {
            const auto text = reference::nth_string(n, i);
            const auto b = BitString::parse(text);
            const auto [k, m] = reference::ref_linear(text);
            ASSERT_EQ(linear_pair_counts(b), (PairProfile{n, k, m}));
            const auto [ck, cm] = reference::ref_circular(text);
            ASSERT_EQ(circular_pair_counts(b), (PairProfile{n, ck, cm}));
        }
    }
}

TEST(BitStringText, ParseAndMask) {
    EXPECT_EQ(BitString::from_mask(4, 0b0011).to_string(), "0011");
    EXPECT_EQ(BitString::parse("0110"), BitString::from_mask(4, 0b0110));
    EXPECT_THROW(BitString::parse("01a"), DomainError);
    EXPECT_LT(BitString::parse("0011"), BitString::parse("0100"));
}
