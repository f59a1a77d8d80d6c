#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/json_io.hpp"
#include "qhr/lie_core.hpp"
#include "qhr/linalg.hpp"
#include "qhr/pyramid.hpp"

namespace qhr {

using BiDegree = std::pair<int, int>;

struct BiGrading {
    GradingElement x1;
    GradingElement x2;
};

/// g_{i,j}: the root vectors of bidegree (i, j), plus the Cartan subalgebra in (0, 0).
struct BiGradedPiece {
    BiDegree degree{0, 0};
    std::vector<Root> roots;
    bool cartan = false;
    int n = 0;

    std::size_t dimension() const { return roots.size() + (cartan && n > 0 ? std::size_t(n - 1) : 0); }

    std::vector<Root> positive_roots() const {
        std::vector<Root> out;
        for (const auto& r : roots)
            if (r.positive()) out.push_back(r);
        return out;
    }

    std::vector<ExactMatrix> basis() const {
        std::vector<ExactMatrix> out;
        for (const auto& r : roots) out.push_back(r.vector(n));
        if (cartan)
            for (int k = 1; k < n; ++k) out.push_back(ExactMatrix::unit(n, k, k) - ExactMatrix::unit(n, k + 1, k + 1));
        return out;
    }
};

namespace detail {
inline int integer_grade(const Rational& q) {
    if (q.get_den() != 1) throw DomainError("non-integer grade " + q.get_str() + " in an even bigrading");
    return static_cast<int>(q.get_num().get_si());
}
} // namespace detail

inline BiDegree bidegree(const BiGrading& bi, const Root& r) {
    return {detail::integer_grade(grading_of_root(bi.x1, r)), detail::integer_grade(grading_of_root(bi.x2, r))};
}

inline std::map<BiDegree, BiGradedPiece> bigrade(const BiGrading& bi) {
    const int n = bi.x1.size();
    if (bi.x2.size() != n) throw DimensionError("bigrading elements of different sizes");
    std::map<BiDegree, BiGradedPiece> pieces;
    auto& zero = pieces[{0, 0}];
    zero.degree = {0, 0};
    zero.cartan = true;
    zero.n = n;
    for (const auto& r : roots(n)) {
        const auto d = bidegree(bi, r);
        auto& piece = pieces[d];
        piece.degree = d;
        piece.n = n;
        piece.roots.push_back(r);
    }
    return pieces;
}

/// Positive part n_{i,j} of a piece (Cartan dropped).
inline BiGradedPiece positive_part(const BiGradedPiece& piece) {
    return {piece.degree, piece.positive_roots(), false, piece.n};
}

struct CentralizerBasis {
    std::vector<ExactMatrix> basis;     ///< reduced echelon kernel basis
    std::vector<std::size_t> pivots;    ///< pivot coordinate of each basis element
    std::vector<std::size_t> non_pivots;
};

/// Kernel of ad(f) on the span of a piece, in reduced echelon form w.r.t. the piece's
/// coordinate order (roots in lexicographic order, then Cartan).
inline CentralizerBasis centralizer_with_pivots(const BiGradedPiece& piece, const ExactMatrix& f) {
    const auto basis = piece.basis();
    CentralizerBasis out;
    if (basis.empty()) return out;
    std::vector<ExactMatrix> images;
    for (const auto& u : basis) images.push_back(bracket(f, u));
    const auto kernel = nullspace(columns_of(images, f.size()));
    DenseMatrix rows(kernel.size(), basis.size());
    for (std::size_t k = 0; k < kernel.size(); ++k)
        for (std::size_t c = 0; c < basis.size(); ++c) rows(k, c) = kernel[k][c];
    const auto ech = rref(rows);
    out.pivots = ech.pivots;
    std::vector<bool> is_pivot(basis.size(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < basis.size(); ++c)
        if (!is_pivot[c]) out.non_pivots.push_back(c);
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
        ExactMatrix m(f.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (ech.matrix(k, c) != 0) m += ech.matrix(k, c) * basis[c];
        out.basis.push_back(std::move(m));
    }
    return out;
}

inline std::vector<ExactMatrix> centralizer_piece(const BiGradedPiece& piece, const ExactMatrix& f) {
    return centralizer_with_pivots(piece, f).basis;
}

struct OmegaPairing {
    DenseMatrix matrix;                   ///< omega(u_k, v_l) = (f1, [u_k, v_l])
    bool nondegenerate = false;
    std::vector<ExactMatrix> complement;  ///< u_k: non-pivot root vectors of n_{0,1}
    std::vector<ExactMatrix> partners;    ///< v_l: root vectors of n_{1,0}
};

/// Pairing on (n_{0,1} / n_{0,1}^{f1}) x n_{1,0}; the quotient is represented by the root
/// vectors at the non-pivot coordinates of the echelonised centralizer.
inline OmegaPairing compute_omega(const ExactMatrix& f1, const BiGradedPiece& piece01, const BiGradedPiece& piece10) {
    OmegaPairing out;
    const auto cent = centralizer_with_pivots(piece01, f1);
    const auto basis01 = piece01.basis();
    for (auto c : cent.non_pivots) out.complement.push_back(basis01[c]);
    out.partners = piece10.basis();
    out.matrix = DenseMatrix(out.complement.size(), out.partners.size());
    for (std::size_t k = 0; k < out.complement.size(); ++k)
        for (std::size_t l = 0; l < out.partners.size(); ++l)
            out.matrix(k, l) = trace_form(f1, bracket(out.complement[k], out.partners[l]));
    out.nondegenerate = out.matrix.rows() == out.matrix.cols() && rank(out.matrix) == out.matrix.rows();
    return out;
}

struct StarCertificate {
    bool grading_ok = false;
    bool nilpotent_ok = false;
    bool abelian_01 = false;
    bool abelian_10 = false;
    bool omega_nondegenerate = false;
    std::vector<ExactMatrix> ghost_basis;  ///< basis of n_{0,1}^{f1}
    std::vector<ExactMatrix> complement;   ///< representatives of n_{0,1}/n_{0,1}^{f1}
    std::vector<ExactMatrix> partners;     ///< basis of n_{1,0}
    DenseMatrix omega_matrix;
    ExactMatrix f_circ;
    std::vector<Rational> character;       ///< (f_circ, ghost_basis[k])
    std::vector<std::string> failures;

    bool passed() const { return grading_ok && nilpotent_ok && omega_nondegenerate; }
};

namespace detail {
inline bool pairwise_commute(const std::vector<ExactMatrix>& basis) {
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!bracket(basis[a], basis[b]).is_zero()) return false;
    return true;
}
} // namespace detail

/// Evaluates every sub-check of the bigrading condition without requiring good pairs.
inline StarCertificate evaluate_star(const ExactMatrix& f1, const ExactMatrix& f2, const BiGrading& bi) {
    const int n = f1.size();
    if (f2.size() != n || bi.x1.size() != n || bi.x2.size() != n) throw DimensionError("check_star size mismatch");
    StarCertificate cert;
    cert.grading_ok = true;
    for (const auto& r : positive_roots(n)) {
        const auto [p, q] = bidegree(bi, r);
        const bool allowed = (p == 0 && q == 0) || (p == 0 && q == 1) || (p == 1 && q == 0) || (p > 0 && q > 0);
        if (!allowed) {
            cert.grading_ok = false;
            cert.failures.push_back("grading: root " + r.str() + " has bidegree (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
        }
    }
    cert.f_circ = f2 - f1;
    cert.nilpotent_ok = true;
    for (const auto& [ix, v] : cert.f_circ.entries()) {
        const Root r{ix.first, ix.second};
        if (ix.first == ix.second || r.positive() || bidegree(bi, r) != BiDegree{0, -1}) {
            cert.nilpotent_ok = false;
            cert.failures.push_back("nilpotent: f_circ has support at " + r.str() + " outside n^-_{0,-1}");
        }
    }
    const auto pieces = bigrade(bi);
    auto positive_piece = [&](BiDegree d) {
        auto it = pieces.find(d);
        return it == pieces.end() ? BiGradedPiece{d, {}, false, n} : positive_part(it->second);
    };
    const auto n01 = positive_piece({0, 1});
    const auto n10 = positive_piece({1, 0});
    cert.abelian_01 = detail::pairwise_commute(n01.basis());
    cert.abelian_10 = detail::pairwise_commute(n10.basis());
    if (!cert.abelian_01) cert.failures.push_back("abelian: n_{0,1} is not abelian");
    if (!cert.abelian_10) cert.failures.push_back("abelian: n_{1,0} is not abelian");

    cert.ghost_basis = centralizer_piece(n01, f1);
    auto omega = compute_omega(f1, n01, n10);
    cert.omega_nondegenerate = omega.nondegenerate;
    if (!omega.nondegenerate)
        cert.failures.push_back("omega: pairing matrix " + std::to_string(omega.matrix.rows()) + "x" +
                                std::to_string(omega.matrix.cols()) + " is degenerate");
    cert.omega_matrix = std::move(omega.matrix);
    cert.complement = std::move(omega.complement);
    cert.partners = std::move(omega.partners);
    for (const auto& u : cert.ghost_basis) cert.character.push_back(trace_form(cert.f_circ, u));
    return cert;
}

/// Certificate for the bigrading condition; (f1, x1) and (f2, x2) must be good pairs.
inline StarCertificate check_star(const ExactMatrix& f1, const ExactMatrix& f2, const BiGrading& bi) {
    if (f1.size() != f2.size() || bi.x1.size() != f1.size() || bi.x2.size() != f1.size())
        throw DimensionError("check_star size mismatch");
    if (!is_good_grading(f1, bi.x1)) throw PreconditionError("check_star: (f1, x1) is not a good pair");
    if (!is_good_grading(f2, bi.x2)) throw PreconditionError("check_star: (f2, x2) is not a good pair");
    return evaluate_star(f1, f2, bi);
}

inline Json certificate_json(const StarCertificate& c) {
    Json ghosts = Json::array(), comp = Json::array(), part = Json::array();
    for (const auto& u : c.ghost_basis) ghosts.push_back(sparse_json(u));
    for (const auto& u : c.complement) comp.push_back(sparse_json(u));
    for (const auto& v : c.partners) part.push_back(sparse_json(v));
    Json character = Json::array();
    for (std::size_t k = 0; k < c.ghost_basis.size(); ++k)
        character.push_back(Json{{"ghost", k}, {"value", to_string(c.character[k])}});
    return Json{{"pass", c.passed()},
                {"grading_ok", c.grading_ok},
                {"nilpotent_ok", c.nilpotent_ok},
                {"abelian_01", c.abelian_01},
                {"abelian_10", c.abelian_10},
                {"omega_nondegenerate", c.omega_nondegenerate},
                {"ghost_basis", ghosts},
                {"omega_complement", comp},
                {"omega_partners", part},
                {"omega_matrix", dense_json(c.omega_matrix)},
                {"f_circ", sparse_json(c.f_circ)},
                {"character", character},
                {"failures", c.failures}};
}

} // namespace qhr
