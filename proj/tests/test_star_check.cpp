#include <gtest/gtest.h>

#include "qhr/orbit_lattice.hpp"
#include "qhr/reduction.hpp"
#include "qhr/star_check.hpp"
#include "support.hpp"

using namespace qhr;
using qhr::testing::mat;
using qhr::testing::P;

namespace {
const GradingElement principal2({Rational(1, 2), Rational(-1, 2)});
}

TEST(Bigrade, EqualGradingsAreDiagonal) {
    const auto x = grading_element_of(left_aligned(P("3,2")));
    for (const auto& [deg, piece] : bigrade(BiGrading{x, x})) EXPECT_EQ(deg.first, deg.second);
}

TEST(Bigrade, VirasoroPieces) {
    const auto pieces = bigrade(BiGrading{GradingElement::zero(2), principal2});
    EXPECT_EQ(pieces.at({0, 1}).roots, (std::vector<Root>{{1, 2}}));
    EXPECT_EQ(pieces.at({0, -1}).roots, (std::vector<Root>{{2, 1}}));
    EXPECT_TRUE(pieces.at({0, 0}).cartan);
}

TEST(Bigrade, RejectsOddGrades) {
    const GradingElement odd({Rational(1, 4), Rational(-1, 4)});
    EXPECT_THROW(bigrade(BiGrading{odd, odd}), DomainError);
}

TEST(Bigrade, PiecesPartitionTheAlgebra) {
    const auto d = build_reduction(P("3,3,3"), P("4,3,2"));
    const auto pieces = bigrade(BiGrading{d.x_lam, d.x_mu});
    std::size_t total = 0;
    for (const auto& [deg, piece] : pieces) total += piece.dimension();
    EXPECT_EQ(total, 80u);  // 72 roots and the 8-dimensional Cartan
}

TEST(CheckStar, Virasoro) {
    const auto cert = check_star(ExactMatrix(2), mat(2, {{2, 1, 1}}), BiGrading{GradingElement::zero(2), principal2});
    EXPECT_TRUE(cert.passed());
    EXPECT_EQ(cert.ghost_basis, (std::vector<ExactMatrix>{mat(2, {{1, 2, 1}})}));
    EXPECT_EQ(cert.f_circ, mat(2, {{2, 1, 1}}));
    EXPECT_EQ(cert.omega_matrix.rows(), 0u);
    EXPECT_TRUE(cert.omega_nondegenerate);
}

TEST(CheckStar, WrongGradingIsRejectedOrFails) {
    const BiGrading bi{GradingElement::zero(2), GradingElement::zero(2)};
    EXPECT_THROW(check_star(ExactMatrix(2), mat(2, {{2, 1, 1}}), bi), PreconditionError);
    const auto cert = evaluate_star(ExactMatrix(2), mat(2, {{2, 1, 1}}), bi);
    EXPECT_FALSE(cert.nilpotent_ok);
    EXPECT_FALSE(cert.passed());
    EXPECT_FALSE(cert.failures.empty());
}

TEST(CheckStar, SlNinePair) {
    const auto lam = P("3,3,3");
    const auto src = align_for_theorem(lam, 1, 3, Stage::source);
    const auto tgt = align_for_theorem(lam, 1, 3, Stage::target);
    const auto f1 = nilpotent_from_pyramid(src);
    const auto f2 = f1 + build_case_one(3, 3, 1).f_circ;
    const auto cert = check_star(f1, f2, BiGrading{grading_element_of(src), grading_element_of(tgt)});
    EXPECT_TRUE(cert.passed());
    EXPECT_TRUE(cert.abelian_01 && cert.abelian_10);
    std::vector<ExactMatrix> expected;
    for (int i = 1; i <= 2; ++i) expected.push_back(mat(9, {{i, 3, 1}, {i + 3, 6, 1}, {i + 6, 9, 1}}));
    EXPECT_EQ(cert.ghost_basis, expected);
}

TEST(Centralizer, Examples) {
    const BiGradedPiece piece{{0, 1}, {{1, 2}, {1, 3}}, false, 3};
    EXPECT_EQ(centralizer_piece(piece, ExactMatrix(3)), piece.basis());
    EXPECT_TRUE(centralizer_piece(BiGradedPiece{{0, 1}, {}, false, 2}, mat(2, {{2, 1, 1}})).empty());
}

TEST(Omega, DegenerateWhenFOneVanishes) {
    const BiGradedPiece p01{{0, 1}, {{1, 2}}, false, 3};
    const BiGradedPiece p10{{1, 0}, {{2, 3}}, false, 3};
    EXPECT_FALSE(compute_omega(ExactMatrix(3), p01, p10).nondegenerate);
    EXPECT_TRUE(compute_omega(ExactMatrix(3), BiGradedPiece{{0, 1}, {}, false, 3}, BiGradedPiece{{1, 0}, {}, false, 3}).nondegenerate);
}

TEST(CheckStar, PropertiesOverAllBoxMoves) {
    for (int n = 2; n <= 7; ++n) {
        const auto all = partitions_of(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!satisfies_box_move(a, b)) continue;
                const auto d = build_reduction(a, b);
                const auto& c = d.certificate;
                EXPECT_TRUE(c.passed() && c.abelian_01 && c.abelian_10);
                EXPECT_EQ(c.omega_matrix.rows(), c.omega_matrix.cols());
                const auto pieces = bigrade(BiGrading{d.x_lam, d.x_mu});
                auto dim = [&](BiDegree deg) {
                    auto it = pieces.find(deg);
                    return it == pieces.end() ? std::size_t(0) : positive_part(it->second).dimension();
                };
                EXPECT_EQ(dim({0, 1}) - c.ghost_basis.size(), dim({1, 0}));
                EXPECT_TRUE(dominance_leq(jordan_type(d.f_lam), jordan_type(d.f_mu_tilde)));
                for (std::size_t k = 0; k < c.ghost_basis.size(); ++k)
                    for (std::size_t l = 0; l < c.ghost_basis.size(); ++l)
                        EXPECT_TRUE(bracket(c.ghost_basis[k], c.ghost_basis[l]).is_zero());
            }
    }
}

TEST(CertificateJson, CarriesFlagsAndCharacter) {
    const auto cert = check_star(ExactMatrix(2), mat(2, {{2, 1, 1}}), BiGrading{GradingElement::zero(2), principal2});
    const auto j = certificate_json(cert);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(j.at("character").at(0).at("value"), "1/1");
    EXPECT_EQ(j.at("omega_matrix"), Json::array());
}
