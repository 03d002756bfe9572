#include <gtest/gtest.h>

#include <set>

#include "excgamma/bijections.hpp"

using namespace excgamma;

TEST(FoataTransform, DescentsBecomeExcedances) {
    for (unsigned n = 1; n <= 7; ++n) {
        for_each_element(GroupSpec::symmetric(n), [&](WindowView w) {
            const Perm p{Window(w.begin(), w.end())};
            const Perm img = foata_fft(p);
            ASSERT_EQ(stat::des(img.window()), stat::exc(w)) << to_string(p);
            ASSERT_EQ(foata_fft_inverse(img), p) << to_string(p);
        });
    }
}

TEST(FoataTransform, KnownImage) {
    // One cycle 1 -> 3 -> 2 -> 1 read backwards from 3, then the fixed point 4.
    EXPECT_EQ(foata_fft(Perm::parse("3,1,2,4")), Perm::parse("3,1,2,4"));
    // Cycles (1 2)(3 4): blocks 2,1 and 4,3.
    EXPECT_EQ(foata_fft(Perm::parse("2,1,4,3")), Perm::parse("2,1,4,3"));
    // The 4-cycle 1 -> 2 -> 3 -> 4 -> 1 read backwards from 4.
    EXPECT_EQ(foata_fft(Perm::parse("2,3,4,1")), Perm::parse("4,3,2,1"));
}

TEST(PenultimateMax, TransportsStatistics) {
    for (unsigned n = 2; n <= 7; ++n) {
        for_each_element(GroupSpec::with_pos_n(n, n - 1), [&](WindowView w) {
            const Perm p{Window(w.begin(), w.end())};
            const Perm img = penultimate_max_map(p);
            ASSERT_EQ(stat::pos_max(img.window()), 1u);
            const StatsA a = stats_a(p), b = stats_a(img);
            ASSERT_EQ(b.des, a.exc);
            ASSERT_EQ(b.asc, a.nexc - 1);
            ASSERT_EQ(penultimate_max_map_inverse(img), p);
        });
    }
}

TEST(PenultimateMax, Preconditions) {
    EXPECT_THROW(penultimate_max_map(Perm::parse("3,1,2")), PreconditionViolated);
    EXPECT_THROW(penultimate_max_map_inverse(Perm::parse("1,3,2")), PreconditionViolated);
}

TEST(LastTwoSwap, KnownExample) {
    const Perm p = Perm::parse("3,1,2");
    const Perm q = last_two_swap(p);
    EXPECT_EQ(q, Perm::parse("3,2,1"));
    EXPECT_EQ(stat::exc(q.window()), 1u);
    EXPECT_EQ(stats_a(q).sign, -stats_a(p).sign);
}

TEST(LastTwoSwap, InvolutionKeepingExcAndPosition) {
    for (unsigned n = 3; n <= 7; ++n)
        for (unsigned r = 1; r + 2 <= n; ++r)
            for_each_element(GroupSpec::with_pos_n(n, r), [&](WindowView w) {
                const Perm p{Window(w.begin(), w.end())};
                const Perm q = last_two_swap(p);
                ASSERT_EQ(stat::exc(q.window()), stat::exc(w));
                ASSERT_EQ(stat::pos_max(q.window()), r);
                ASSERT_EQ(stats_a(q).sign, -stats_a(p).sign);
                ASSERT_EQ(last_two_swap(q), p);
            });
    EXPECT_THROW(last_two_swap(Perm::parse("1,3,2")), PreconditionViolated);
}

TEST(CycleMap, KnownExample) {
    EXPECT_EQ(cycle_map(Perm::parse("1,2")), Perm::parse("3,1,2"));
    EXPECT_EQ(cycle_map_inverse(Perm::parse("3,1,2")), Perm::parse("1,2"));
}

TEST(CycleMap, BijectionOntoLongCycles) {
    for (unsigned n = 2; n <= 7; ++n) {
        std::set<Perm> images;
        for_each_element(GroupSpec::symmetric(n - 1), [&](WindowView w) {
            const Perm p{Window(w.begin(), w.end())};
            const Perm c = cycle_map(p);
            ASSERT_EQ(cycle_type(c), CycleType({n}));
            ASSERT_EQ(stat::exc(c.window()), stat::des(w) + 1);
            ASSERT_EQ(cycle_map_inverse(c), p);
            images.insert(c);
        });
        Integer expected = 1;
        for (unsigned k = 2; k < n; ++k) expected *= k;
        EXPECT_EQ(Integer(images.size()), expected);
    }
    EXPECT_THROW(cycle_map_inverse(Perm::parse("2,1,3")), PreconditionViolated);
}

TEST(RestrictOrderPreserving, KeepsCycleExcedances) {
    const std::vector<int> cycle{2, 7, 5};
    const Perm p = restrict_order_preserving(cycle);
    EXPECT_EQ(p, Perm::parse("3,1,2"));  // cycle (1 3 2)
    EXPECT_EQ(cycle_excedances(cycle), 1u);
    EXPECT_EQ(stat::exc(p.window()), 1u);
    EXPECT_THROW(restrict_order_preserving({2, 2}), DuplicateEntries);
}
