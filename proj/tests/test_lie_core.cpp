#include <gtest/gtest.h>

#include "qhr/lie_core.hpp"
#include "qhr/linalg.hpp"
#include "support.hpp"

using namespace qhr;
using qhr::testing::mat;
using qhr::testing::P;

namespace {
ExactMatrix E(int n, int i, int j) { return ExactMatrix::unit(n, i, j); }
GradingElement grading(std::initializer_list<Rational> d) { return GradingElement(std::vector<Rational>(d)); }
} // namespace

TEST(Bracket, Examples) {
    EXPECT_EQ(bracket(E(2, 1, 2), E(2, 2, 1)), mat(2, {{1, 1, 1}, {2, 2, -1}}));
    EXPECT_TRUE(bracket(E(2, 1, 2), E(2, 1, 2)).is_zero());
    EXPECT_EQ(bracket(E(3, 1, 2), E(3, 2, 3)), E(3, 1, 3));
    EXPECT_THROW(bracket(E(2, 1, 2), E(3, 1, 2)), DimensionError);
}

TEST(TraceForm, Examples) {
    EXPECT_EQ(trace_form(E(2, 1, 2), E(2, 2, 1)), 1);
    EXPECT_EQ(trace_form(E(2, 1, 2), E(2, 1, 2)), 0);
    const auto h = ExactMatrix::diagonal({1, -1});
    EXPECT_EQ(trace_form(h, h), 2);
    EXPECT_THROW(trace_form(E(2, 1, 2), E(3, 1, 2)), DimensionError);
}

TEST(Bracket, AntisymmetryJacobiInvariance) {
    qhr::testing::Lcg rng(11);
    for (int n = 2; n <= 6; ++n) {
        const auto all = roots(n);
        for (int trial = 0; trial < 40; ++trial) {
            const auto& ra = all[std::size_t(rng.next(0, int(all.size()) - 1))];
            const auto& rb = all[std::size_t(rng.next(0, int(all.size()) - 1))];
            const auto& rc = all[std::size_t(rng.next(0, int(all.size()) - 1))];
            const auto a = ra.vector(n) * Rational(rng.next(1, 3)), b = rb.vector(n), c = rc.vector(n) + ExactMatrix::unit(n, 1, 1);
            EXPECT_EQ(bracket(a, b), -bracket(b, a));
            EXPECT_TRUE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
            EXPECT_EQ(trace_form(bracket(a, b), c), trace_form(a, bracket(b, c)));
        }
    }
}

TEST(Roots, CountsAndOrder) {
    EXPECT_EQ(roots(4).size(), 12u);
    EXPECT_EQ(positive_roots(4).size(), 6u);
    const auto simple = simple_roots(4);
    ASSERT_EQ(simple.size(), 3u);
    EXPECT_EQ(simple[1], (Root{2, 3}));
    EXPECT_TRUE((Root{1, 3}).positive());
    EXPECT_FALSE((Root{1, 3}).simple());
}

TEST(GradingElement, MustBeTraceless) {
    EXPECT_THROW(grading({1, 0}), DomainError);
    EXPECT_NO_THROW(grading({Rational(1, 2), Rational(-1, 2)}));
}

TEST(JordanType, Examples) {
    EXPECT_EQ(jordan_type(ExactMatrix(3)), P("1,1,1"));
    EXPECT_EQ(jordan_type(E(3, 1, 2) + E(3, 2, 3)), P("3"));
    EXPECT_EQ(jordan_type(E(5, 2, 1) + E(5, 4, 2) + E(5, 5, 3)), P("3,2"));
    EXPECT_THROW(jordan_type(ExactMatrix::identity(2)), DomainError);
}

TEST(JordanType, ConjugationInvariance) {
    qhr::testing::Lcg rng(5);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            ExactMatrix m(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (rng.next(0, 2) == 0) m.set(i, j, rng.next(-2, 2));
            ExactMatrix g(n);
            do {
                g = ExactMatrix(n);
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) g.set(i, j, rng.next(-3, 3));
            } while (determinant(to_dense(g)) == 0);
            const auto t = jordan_type(m);
            EXPECT_EQ(jordan_type(g * m * inverse(g)), t);
            EXPECT_EQ(t.n(), n);
            std::vector<int> drops;
            auto power = ExactMatrix::identity(n);
            std::size_t previous = std::size_t(n);
            for (int k = 1; k <= n; ++k) {
                power = power * m;
                const auto r = rank(power);
                if (previous > r) drops.push_back(int(previous - r));
                previous = r;
            }
            EXPECT_EQ(t.transpose(), Partition(drops));
        }
}

TEST(Grading, RootGrades) {
    const auto principal = grading({Rational(1, 2), Rational(-1, 2)});
    EXPECT_EQ(grading_of_root(principal, Root{1, 2}), 1);
    EXPECT_EQ(grading_of_root(GradingElement::zero(3), Root{3, 1}), 0);
    const auto x32 = grading({Rational(6, 5), Rational(1, 5), Rational(1, 5), Rational(-4, 5), Rational(-4, 5)});
    EXPECT_EQ(grading_of_root(x32, Root{2, 3}), 0);
}

TEST(Grading, RootDecomposition) {
    const auto zero = root_decomposition(GradingElement::zero(2));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero.at(0).size(), 2u);

    const auto principal = root_decomposition(grading({Rational(1, 2), Rational(-1, 2)}));
    EXPECT_EQ(principal.at(1), (std::vector<Root>{{1, 2}}));
    EXPECT_EQ(principal.at(-1), (std::vector<Root>{{2, 1}}));

    const auto x32 = root_decomposition(grading({Rational(6, 5), Rational(1, 5), Rational(1, 5), Rational(-4, 5), Rational(-4, 5)}));
    std::vector<Root> grade0_positive;
    for (const auto& r : x32.at(0))
        if (r.positive()) grade0_positive.push_back(r);
    // x_4 = x_5 as well as x_2 = x_3
    EXPECT_EQ(grade0_positive, (std::vector<Root>{{2, 3}, {4, 5}}));
    std::size_t total = 0;
    for (const auto& [g, rs] : x32) total += rs.size();
    EXPECT_EQ(total, 20u);
}
