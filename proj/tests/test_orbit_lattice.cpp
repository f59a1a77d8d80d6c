#include <gtest/gtest.h>

#include "qhr/orbit_lattice.hpp"
#include "support.hpp"

using namespace qhr;
using qhr::testing::P;

namespace {
/// Covering by definition: lam < mu with nothing strictly between.
bool covers_brute_force(const Partition& lam, const Partition& mu, const std::vector<Partition>& all) {
    if (!dominance_less(lam, mu)) return false;
    for (const auto& nu : all)
        if (dominance_less(lam, nu) && dominance_less(nu, mu)) return false;
    return true;
}
} // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(Partition({2, 3}), DomainError);
    EXPECT_THROW(Partition({2, 0}), DomainError);
    EXPECT_THROW(P("2,,1"), DomainError);
    EXPECT_EQ(Partition::from_unsorted({1, 3, 0, 2}), P("3,2,1"));
    EXPECT_EQ(P("4,2,1").transpose(), P("3,2,1,1"));
    EXPECT_EQ(P("3,2").part(5), 0);
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(dominance_leq(P("2,2"), P("3,1")));
    EXPECT_TRUE(dominance_leq(P("2,2"), P("2,2")));
    EXPECT_FALSE(dominance_leq(P("3,3"), P("4,1,1")));
    EXPECT_FALSE(dominance_leq(P("4,1,1"), P("3,3")));
    EXPECT_THROW(dominance_leq(P("2"), P("2,1")), DomainError);
}

TEST(Dominance, PartialOrderLaws) {
    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (const auto& a : all) {
            EXPECT_TRUE(dominance_leq(a, a));
            for (const auto& b : all) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) {
                    EXPECT_EQ(a, b);
                }
                // order reversal under transpose
                EXPECT_EQ(dominance_leq(a, b), dominance_leq(b.transpose(), a.transpose()));
                for (const auto& c : all)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) {
                        EXPECT_TRUE(dominance_leq(a, c));
                    }
            }
        }
    }
}

TEST(PartitionsOf, Counts) {
    const std::vector<std::size_t> expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(partitions_of(n).size(), expected[std::size_t(n)]);
    EXPECT_EQ(partitions_of(4).front(), P("4"));
    EXPECT_EQ(partitions_of(4).back(), P("1,1,1,1"));
}

TEST(Adjacency, Examples) {
    EXPECT_TRUE(is_adjacent(P("5,3,3,3"), P("5,4,3,2")));
    EXPECT_TRUE(is_adjacent(P("5,4,3,2"), P("6,3,3,2")));
    EXPECT_FALSE(is_adjacent(P("5,3,3,3"), P("6,3,3,2")));
    EXPECT_TRUE(is_adjacent(P("1,1"), P("2")));
    EXPECT_THROW(is_adjacent(P("2"), P("1")), DomainError);
}

TEST(BoxMove, Examples) {
    EXPECT_TRUE(satisfies_box_move(P("5,3,3,3"), P("6,3,3,2")));
    EXPECT_TRUE(satisfies_box_move(P("5,3,3,3"), P("5,4,3,2")));
    EXPECT_FALSE(satisfies_box_move(P("2,2"), P("2,2")));
    EXPECT_FALSE(satisfies_box_move(P("1,1,1,1"), P("2,2")));
    EXPECT_EQ(box_move_witness(P("6,5,3,3,3,2"), P("6,6,3,3,2,2")), (std::pair{2, 5}));
}

TEST(Adjacency, AgreesWithBruteForceCovering) {
    for (int n = 1; n <= 9; ++n) {
        const auto all = partitions_of(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                EXPECT_EQ(is_adjacent(a, b), covers_brute_force(a, b, all)) << a.str() << " " << b.str();
                if (is_adjacent(a, b)) {
                    EXPECT_TRUE(satisfies_box_move(a, b));
                }
                if (satisfies_box_move(a, b)) {
                    EXPECT_TRUE(dominance_less(a, b));
                }
            }
    }
}

TEST(Covers, Examples) {
    EXPECT_EQ(covers_of(P("1,1,1")), (std::vector<Partition>{P("2,1")}));
    EXPECT_TRUE(covers_of(P("5")).empty());
    EXPECT_EQ(covers_of(P("2,2")), (std::vector<Partition>{P("3,1")}));
}

TEST(ReductionPath, Examples) {
    EXPECT_EQ(reduction_path(P("5,3,3,3"), P("6,3,3,2")).steps,
              (std::vector<Partition>{P("5,3,3,3"), P("5,4,3,2"), P("6,3,3,2")}));
    EXPECT_EQ(reduction_path(P("3,1"), P("3,1")).steps, (std::vector<Partition>{P("3,1")}));
    EXPECT_EQ(reduction_path(P("1,1,1,1"), P("4")).steps,
              (std::vector<Partition>{P("1,1,1,1"), P("2,1,1"), P("2,2"), P("3,1"), P("4")}));
    EXPECT_THROW(reduction_path(P("3,3"), P("4,1,1")), NoPathError);
}

TEST(ReductionPath, ValidChainsForAllComparablePairs) {
    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!dominance_leq(a, b)) {
                    EXPECT_THROW(reduction_path(a, b), NoPathError);
                    continue;
                }
                const auto chain = reduction_path(a, b);
                ASSERT_FALSE(chain.steps.empty());
                EXPECT_EQ(chain.steps.front(), a);
                EXPECT_EQ(chain.steps.back(), b);
                for (std::size_t k = 1; k < chain.steps.size(); ++k)
                    EXPECT_TRUE(is_adjacent(chain.steps[k - 1], chain.steps[k]));
                EXPECT_EQ(chain.steps, reduction_path(a, b).steps);
            }
    }
}
