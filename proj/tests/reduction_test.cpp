#include <gtest/gtest.h>

#include <set>

#include "ratrel/buchi.hpp"
#include "ratrel/corpus.hpp"
#include "ratrel/error.hpp"
#include "ratrel/reduction.hpp"

using namespace ratrel;

TEST(ReduceVerify, ConstantTrees) {
    const auto one = reduce_verify(constant_tree('1'), 2);
    EXPECT_EQ(one.vertex_count, 1u);
    EXPECT_TRUE(one.ground);
    EXPECT_TRUE(one.feasible);
    EXPECT_EQ(one.ones, 4u);
    EXPECT_EQ(one.visits, 3u);
    EXPECT_TRUE(one.verdict);
    EXPECT_TRUE(one.agreement);
    EXPECT_TRUE(one.coherent);
    EXPECT_TRUE(one.sound);

    const auto zero = reduce_verify(constant_tree('0'), 2);
    EXPECT_FALSE(zero.ground);
    EXPECT_EQ(zero.ones, 0u);
    EXPECT_EQ(zero.visits, 0u);
    EXPECT_TRUE(zero.agreement);
}

TEST(ReduceVerify, UsesMinimalVertexCount) {
    const RegularTree padded({{"a", '1', 1, 1}, {"b", '1', 0, 0}}, 0);
    EXPECT_EQ(reduce_verify(padded, 1).vertex_count, 1u);
}

TEST(ReduceVerify, SoundnessFlag) {
    const RegularTree two({{"a", '0', 1, 0}, {"b", '1', 1, 1}}, 0);
    EXPECT_FALSE(reduce_verify(two, 3).sound);
    EXPECT_TRUE(reduce_verify(two, 4).sound);
}

TEST(ReduceVerify, AllTwoVertexTreesAtFourBlocks) {
    for (const auto& t : enumerate_trees(2)) {
        const auto r = reduce_verify(t, 4);
        ASSERT_TRUE(r.sound);
        EXPECT_EQ(r.ground, path_check(t, b_automaton()));
        EXPECT_TRUE(r.agreement) << canonical_key(t) << " ones " << r.ones;
        EXPECT_TRUE(r.coherent) << canonical_key(t) << " ones " << r.ones << " visits " << r.visits;
    }
}

TEST(ReduceVerify, RejectsNonBinaryLabels) {
    EXPECT_THROW(reduce_verify(constant_tree('2'), 2), AlphabetMismatch);
}

TEST(Corpus, DistinctDeterministicAndBounded) {
    const CorpusSpec spec{3, 20, 7, 7};
    const auto a = generate_corpus(spec);
    EXPECT_EQ(a, generate_corpus(spec));
    ASSERT_EQ(a.size(), 20u);
    std::set<std::string> keys;
    for (const auto& t : a) {
        EXPECT_LE(t.size(), 3u);
        EXPECT_EQ(minimize(t), t);
        keys.insert(canonical_key(t));
    }
    EXPECT_EQ(keys.size(), a.size());
    EXPECT_NE(a, generate_corpus({3, 20, 8, 7}));
}

TEST(Corpus, SmallUniverseIsExhausted) {
    // Only two distinct one-vertex trees exist.
    EXPECT_EQ(generate_corpus({1, 50, 7, 2}).size(), 2u);
}

TEST(Corpus, Validation) {
    EXPECT_THROW(validate({4, 50, 7, 7}), CapacityError);
    EXPECT_THROW(validate({0, 50, 7, 7}), CapacityError);
    EXPECT_THROW(validate({3, 50, 7, 0}), CapacityError);
    EXPECT_THROW(validate({3, 50, 7, 10}), CapacityError);
    EXPECT_THROW(validate({3, 0, 7, 7}), CapacityError);
    EXPECT_NO_THROW(validate(CorpusSpec{}));
    EXPECT_THROW(generate_corpus({5, 50, 7, 7}), CapacityError);
}

TEST(Corpus, VerifySmall) {
    const auto report = verify_corpus({1, 50, 7, 2});
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.rows.size(), 2u);
}

TEST(EnumerateTrees, ThreeVertexCount) {
    const auto all = enumerate_trees(3);
    EXPECT_EQ(all.size(), 1054u);
    std::set<std::string> keys;
    for (const auto& t : all)
        keys.insert(canonical_key(t));
    EXPECT_EQ(keys.size(), all.size());
}
