#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/json_io.hpp"
#include "qhr/lie_core.hpp"
#include "qhr/linalg.hpp"
#include "qhr/orbit_lattice.hpp"
#include "qhr/pyramid.hpp"
#include "qhr/star_check.hpp"

namespace qhr {

enum class ReductionCase { I, II };

struct AdjacencyData {
    int i = 0;
    int j = 0;
    ReductionCase kind = ReductionCase::I;
};

inline AdjacencyData adjacency_data(const Partition& lam, const Partition& mu) {
    const auto w = box_move_witness(lam, mu);
    if (!w) throw DomainError("[" + lam.str() + "] -> [" + mu.str() + "] is not a box move");
    const auto [i, j] = *w;
    const bool whole = i == 1 && j == static_cast<int>(lam.length());
    return {i, j, whole ? ReductionCase::I : ReductionCase::II};
}

/// Data for lam = [a, b^{s+1}] -> mu = [a+1, b^s, b-1] on the left-aligned tableau.
struct CaseOneDatum {
    int a = 0, b = 0, s = 0;
    Partition lam, mu;
    Pyramid source, target;
    ExactMatrix f_lambda;
    std::vector<ExactMatrix> ghost_basis;  ///< E^_i, 0 < i < s + 2
    ExactMatrix f_circ;
};

inline CaseOneDatum build_case_one(int a, int b, int s) {
    if (b < 1 || a < b || s < 0)
        throw PreconditionError("build_case_one needs a >= b >= 1 and s >= 0, got (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(s) + ")");
    CaseOneDatum d;
    d.a = a;
    d.b = b;
    d.s = s;
    std::vector<int> lam_parts{a}, mu_parts{a + 1};
    for (int k = 0; k <= s; ++k) lam_parts.push_back(b);
    for (int k = 0; k < s; ++k) mu_parts.push_back(b);
    if (b > 1) mu_parts.push_back(b - 1);
    d.lam = Partition(lam_parts);
    d.mu = Partition(mu_parts);
    const int rows = s + 2;
    d.source = align_for_theorem(d.lam, 1, rows, Stage::source);
    d.target = align_for_theorem(d.lam, 1, rows, Stage::target);
    d.f_lambda = nilpotent_from_pyramid(d.source);

    const int n = d.lam.n();
    const int r = a - b;
    const int step = s + 2;  // boxes per full column
    for (int i = 1; i < step; ++i) {
        ExactMatrix e(n);
        for (int j = 0; j < b; ++j) e.set(r + i + j * step, r + (j + 1) * step, 1);
        d.ghost_basis.push_back(std::move(e));
    }
    d.f_circ = ExactMatrix(n);
    for (int j = 0; j < b; ++j) d.f_circ.set(r + (j + 1) * step, r + 1 + j * step, 1);
    return d;
}

/// Case I datum transported into sl_N through the window rows i..j of lam.
struct EmbeddedDatum {
    std::vector<int> window;  ///< labels of the window boxes; window[k-1] is the image of k
    ExactMatrix f_circ;
    std::vector<ExactMatrix> ghost_basis;
};

/// Labels of the boxes of rows [first, last] (1-based) of a pyramid, ascending.
inline std::vector<int> labels_of_rows(const Pyramid& p, int first, int last) {
    std::vector<int> out;
    for (const auto& b : p.boxes())
        if (b.row + 1 >= first && b.row + 1 <= last) out.push_back(b.label);
    return out;
}

inline EmbeddedDatum embed_case_two(const CaseOneDatum& inner, const Partition& lam, const AdjacencyData& ad) {
    if (ad.i < 1 || ad.j > static_cast<int>(lam.length()) || ad.j - ad.i - 1 != inner.s ||
        lam.part(ad.i) != inner.a || lam.part(ad.j) != inner.b)
        throw PreconditionError("embedding window rows " + std::to_string(ad.i) + ".." + std::to_string(ad.j) +
                                " do not carry [" + inner.lam.str() + "] inside [" + lam.str() + "]");
    const auto source = align_for_theorem(lam, ad.i, ad.j, Stage::source);
    EmbeddedDatum out;
    out.window = labels_of_rows(source, ad.i, ad.j);
    out.f_circ = inner.f_circ.embed(lam.n(), out.window);
    for (const auto& e : inner.ghost_basis) out.ghost_basis.push_back(e.embed(lam.n(), out.window));
    return out;
}

/// Member of the block-diagonal family diag(unit_a I_{r+1}, A_k.., c unit_a I_1),
/// A_k = [[(c-k) unit_b, k unit_a], [-unit_b, unit_a]].
struct ConjugatorVariant {
    std::string name;
    int coefficient = 0;  ///< c
    int first_block = 1;  ///< index k of the first A_k
    int block_count = 0;
};

/// Candidate family for the height-two conjugator, in search order. Only variants whose
/// size matches N = a + b are listed; the displayed one (c = a, A_1..A_{a-1}) fits iff a = b.
inline std::vector<ConjugatorVariant> conjugator_variants(int a, int b) {
    std::vector<ConjugatorVariant> out;
    if (a == b) out.push_back({"displayed", a, 1, a - 1});
    if (a != b) {
        out.push_back({"truncated", a, 1, b - 1});
        out.push_back({"tail", a, a - b + 1, b - 1});
    }
    out.push_back({"row-length-b", b, 1, b - 1});
    return out;
}

inline ExactMatrix conjugator_height_two(int a, int b, const Rational& unit_a, const Rational& unit_b,
                                         const ConjugatorVariant& v) {
    if (b < 1 || a < b) throw PreconditionError("conjugator needs a >= b >= 1");
    if (unit_a == 0 || unit_b == 0) throw DomainError("conjugator units must be nonzero");
    if (v.block_count < 0) throw PreconditionError("negative block count");
    const int r = a - b;
    const int size = r + 1 + 2 * v.block_count + 1;
    ExactMatrix g(size);
    int pos = 1;
    for (int k = 0; k <= r; ++k, ++pos) g.set(pos, pos, unit_a);
    for (int t = 0; t < v.block_count; ++t, pos += 2) {
        const int k = v.first_block + t;
        g.set(pos, pos, Rational(v.coefficient - k) * unit_b);
        g.set(pos, pos + 1, Rational(k) * unit_a);
        g.set(pos + 1, pos, -unit_b);
        g.set(pos + 1, pos + 1, unit_a);
    }
    g.set(pos, pos, Rational(v.coefficient) * unit_a);
    return g;
}

/// The displayed form diag(unit_a I_{r+1}, A_1, ..., A_{a-1}, a unit_a I_1).
inline ExactMatrix conjugator_height_two(int a, int b, const Rational& unit_a, const Rational& unit_b) {
    return conjugator_height_two(a, b, unit_a, unit_b, ConjugatorVariant{"displayed", a, 1, a - 1});
}

/// g^{-1} f_tilde g == f_std.
inline bool verify_conjugation(const ExactMatrix& g, const ExactMatrix& f_tilde, const ExactMatrix& f_std) {
    if (g.size() != f_tilde.size() || g.size() != f_std.size()) throw DimensionError("verify_conjugation size mismatch");
    const auto d = to_dense(g);
    if (determinant(d) == 0) throw DomainError("verify_conjugation: g is singular");
    return from_dense(inverse(d)) * f_tilde * g == f_std;
}

struct ConjugatorRecord {
    ExactMatrix g;
    std::string variant;
    Rational unit_a = 1, unit_b = 1;
};

struct ReductionDatum {
    Partition lam, mu;
    AdjacencyData adjacency;
    Pyramid pyr_lam, pyr_mu;
    ExactMatrix f_lam, f_mu_std, f_circ, f_mu_tilde;
    GradingElement x_lam, x_mu;
    std::vector<ExactMatrix> ghost_basis;
    std::vector<Rational> character;
    std::optional<ConjugatorRecord> conjugator;
    StarCertificate certificate;
    std::vector<int> window;  ///< labels of rows i..j
    int window_size = 0;      ///< M = lam_i + ... + lam_j

    /// "conjugator" when g was verified exactly, otherwise "jordan-type".
    std::string membership() const { return conjugator ? "conjugator" : "jordan-type"; }
};

/// Tries every candidate of the height-two family on rows i and j; the first that
/// conjugates f_tilde to f_std exactly is returned.
inline std::optional<ConjugatorRecord> find_conjugator(const Pyramid& source, const AdjacencyData& ad, int a, int b,
                                                       const ExactMatrix& f_tilde, const ExactMatrix& f_std) {
    if (ad.j != ad.i + 1) return std::nullopt;
    const int n = source.n();
    std::vector<int> rows_ij = labels_of_rows(source, ad.i, ad.i);
    for (int l : labels_of_rows(source, ad.j, ad.j)) rows_ij.push_back(l);
    std::sort(rows_ij.begin(), rows_ij.end());
    for (const auto& v : conjugator_variants(a, b)) {
        const auto small = conjugator_height_two(a, b, 1, 1, v);
        if (small.size() != a + b) continue;
        ExactMatrix g = ExactMatrix::identity(n);
        for (int l : rows_ij) g.set(l, l, 0);
        g += small.embed(n, rows_ij);
        if (verify_conjugation(g, f_tilde, f_std)) return ConjugatorRecord{std::move(g), v.name, 1, 1};
    }
    return std::nullopt;
}

inline ReductionDatum build_reduction(const Partition& lam, const Partition& mu) {
    if (!satisfies_box_move(lam, mu))
        throw PreconditionError("[" + lam.str() + "] -> [" + mu.str() + "] does not satisfy the box-move condition");
    ReductionDatum d;
    d.lam = lam;
    d.mu = mu;
    d.adjacency = adjacency_data(lam, mu);
    const auto& ad = d.adjacency;
    d.pyr_lam = align_for_theorem(lam, ad.i, ad.j, Stage::source);
    d.pyr_mu = align_for_theorem(lam, ad.i, ad.j, Stage::target);
    d.f_lam = nilpotent_from_pyramid(d.pyr_lam);
    d.f_mu_std = nilpotent_from_pyramid(d.pyr_mu);
    d.x_lam = grading_element_of(d.pyr_lam);
    d.x_mu = grading_element_of(d.pyr_mu);

    const int a = lam.part(ad.i), b = lam.part(ad.j);
    const auto inner = build_case_one(a, b, ad.j - ad.i - 1);
    const auto embedded = embed_case_two(inner, lam, ad);
    d.window = embedded.window;
    d.window_size = static_cast<int>(embedded.window.size());
    d.f_circ = embedded.f_circ;
    d.f_mu_tilde = d.f_lam + d.f_circ;

    const auto jt = jordan_type(d.f_mu_tilde);
    if (jt != mu) throw VerificationError("jordan_type", "f_lam + f_circ has type [" + jt.str() + "], expected [" + mu.str() + "]");
    if (!is_good_grading(d.f_lam, d.x_lam)) throw VerificationError("good_pair", "(f_lam, x_lam) is not good");
    if (!is_good_grading(d.f_mu_tilde, d.x_mu)) throw VerificationError("good_pair", "(f_mu_tilde, x_mu) is not good");
    d.certificate = evaluate_star(d.f_lam, d.f_mu_tilde, BiGrading{d.x_lam, d.x_mu});
    if (!d.certificate.passed())
        throw VerificationError("star", d.certificate.failures.empty() ? "failed" : d.certificate.failures.front());
    d.ghost_basis = d.certificate.ghost_basis;
    d.character = d.certificate.character;
    d.conjugator = find_conjugator(d.pyr_lam, ad, a, b, d.f_mu_tilde, d.f_mu_std);
    return d;
}

inline std::vector<ReductionDatum> build_chain(const Partition& lam, const Partition& mu) {
    const auto path = reduction_path(lam, mu);
    std::vector<ReductionDatum> out;
    for (std::size_t k = 1; k < path.steps.size(); ++k) out.push_back(build_reduction(path.steps[k - 1], path.steps[k]));
    return out;
}

inline std::string reduction_summary(const ReductionDatum& d) {
    std::string s = "[" + d.lam.str() + "] -> [" + d.mu.str() + "] in sl_" + std::to_string(d.lam.n()) + ": case " +
                    (d.adjacency.kind == ReductionCase::I ? "I" : "II") + ", rows " + std::to_string(d.adjacency.i) +
                    ".." + std::to_string(d.adjacency.j) + "\n";
    s += "  f_lambda = " + d.f_lam.str() + "\n";
    s += "  f_circ   = " + d.f_circ.str() + "\n";
    s += "  ghosts   = " + std::to_string(d.ghost_basis.size()) + ", character = (";
    for (std::size_t k = 0; k < d.character.size(); ++k) s += (k ? ", " : "") + d.character[k].get_str();
    s += ")\n  star " + std::string(d.certificate.passed() ? "passes" : "FAILS") + ", membership by " + d.membership();
    if (d.conjugator) s += " (" + d.conjugator->variant + ")";
    return s + "\n";
}

inline Json reduction_json(const ReductionDatum& d) {
    Json ghosts = Json::array();
    for (const auto& u : d.ghost_basis) ghosts.push_back(sparse_json(u));
    Json j{{"lambda", partition_json(d.lam)},
           {"mu", partition_json(d.mu)},
           {"n", d.lam.n()},
           {"case", d.adjacency.kind == ReductionCase::I ? "I" : "II"},
           {"rows", Json::array({d.adjacency.i, d.adjacency.j})},
           {"adjacent", is_adjacent(d.lam, d.mu)},
           {"pyramid_lambda", pyramid_json(d.pyr_lam)},
           {"pyramid_mu", pyramid_json(d.pyr_mu)},
           {"f_lambda", sparse_json(d.f_lam)},
           {"f_mu_std", sparse_json(d.f_mu_std)},
           {"f_circ", sparse_json(d.f_circ)},
           {"f_mu_tilde", sparse_json(d.f_mu_tilde)},
           {"x_lambda", rationals_json(d.x_lam.diag())},
           {"x_mu", rationals_json(d.x_mu.diag())},
           {"ghost_basis", ghosts},
           {"character", rationals_json(d.character)},
           {"jordan_type_f_mu_tilde", partition_json(jordan_type(d.f_mu_tilde))},
           {"membership", d.membership()},
           {"embedding_window", Json{{"rows", Json::array({d.adjacency.i, d.adjacency.j})},
                                     {"size", d.window_size},
                                     {"labels", d.window}}},
           {"certificate", certificate_json(d.certificate)},
           {"summary", reduction_summary(d)}};
    if (d.conjugator)
        j["conjugator"] = Json{{"g", sparse_json(d.conjugator->g)},
                               {"variant", d.conjugator->variant},
                               {"unit_a", to_string(d.conjugator->unit_a)},
                               {"unit_b", to_string(d.conjugator->unit_b)}};
    else
        j["conjugator"] = nullptr;
    return j;
}

/// Source and target tableaux side by side; boxes that move are shaded.
inline std::string reduction_tikz(const ReductionDatum& d) {
    std::set<int> moved;
    for (const auto& b : d.pyr_mu.boxes()) {
        const auto& before = d.pyr_lam.box(b.label);
        if (before.x != b.x || before.row != b.row) moved.insert(b.label);
    }
    return tikz_document({detail::tikz_picture(d.pyr_lam, moved), detail::tikz_picture(d.pyr_mu, moved)});
}

} // namespace qhr
