#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/exact_matrix.hpp"
#include "qhr/linalg.hpp"
#include "qhr/partition.hpp"
#include "qhr/rational.hpp"

namespace qhr {

/// The root eps_i - eps_j of sl_n, with root vector E_{i,j}.
struct Root {
    int i = 0;
    int j = 0;

    bool positive() const noexcept { return i < j; }
    /// Simple roots are (k, k+1).
    bool simple() const noexcept { return j == i + 1; }
    Root opposite() const noexcept { return {j, i}; }
    ExactMatrix vector(int n) const { return ExactMatrix::unit(n, i, j); }
    std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

    friend auto operator<=>(const Root&, const Root&) = default;
};

/// All n(n-1) roots in lexicographic order.
inline std::vector<Root> roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.push_back({i, j});
    return out;
}

inline std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

inline std::vector<Root> simple_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i < n; ++i) out.push_back({i, i + 1});
    return out;
}

/// Traceless diagonal element x defining an ad(x)-grading.
class GradingElement {
public:
    GradingElement() = default;
    explicit GradingElement(std::vector<Rational> diag) : diag_(std::move(diag)) {
        Rational sum = 0;
        for (const auto& d : diag_) sum += d;
        if (sum != 0) throw DomainError("grading element must be traceless");
    }
    static GradingElement zero(int n) { return GradingElement(std::vector<Rational>(std::size_t(n))); }

    int size() const noexcept { return static_cast<int>(diag_.size()); }
    const std::vector<Rational>& diag() const noexcept { return diag_; }
    /// 1-based diagonal entry.
    const Rational& operator[](int i) const { return diag_.at(std::size_t(i - 1)); }
    ExactMatrix matrix() const { return ExactMatrix::diagonal(diag_); }

    friend bool operator==(const GradingElement&, const GradingElement&) = default;

private:
    std::vector<Rational> diag_;
};

inline ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("bracket of matrices of different sizes");
    return a * b - b * a;
}

/// tr(ab), the normalised invariant form of sl_n in the defining representation.
inline Rational trace_form(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("trace form of matrices of different sizes");
    Rational t = 0;
    for (const auto& [ix, v] : a.entries()) {
        auto it = b.entries().find({ix.second, ix.first});
        if (it != b.entries().end()) t += v * it->second;
    }
    return t;
}

inline bool is_nilpotent(const ExactMatrix& m) {
    ExactMatrix p = m;
    for (int k = 1; k < m.size() && !p.is_zero(); ++k) p = p * m;
    return p.is_zero();
}

/// Jordan type from the rank drops of successive powers.
inline Partition jordan_type(const ExactMatrix& m) {
    const int n = m.size();
    std::vector<std::size_t> ranks{std::size_t(n)};
    ExactMatrix p = ExactMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        p = p * m;
        ranks.push_back(p.is_zero() ? 0 : rank(p));
    }
    if (ranks.back() != 0) throw DomainError("jordan_type: matrix is not nilpotent");
    std::vector<int> at_least;  // #blocks of size >= k
    for (int k = 1; k <= n; ++k) {
        const int drop = static_cast<int>(ranks[k - 1] - ranks[k]);
        if (drop > 0) at_least.push_back(drop);
    }
    if (at_least.empty()) return Partition{};
    return Partition(at_least).transpose();
}

/// ad(x)-eigenvalue on E_{i,j}.
inline Rational grading_of_root(const GradingElement& x, const Root& r) { return x[r.i] - x[r.j]; }

inline std::map<Rational, std::vector<Root>> root_decomposition(const GradingElement& x) {
    std::map<Rational, std::vector<Root>> out;
    for (const auto& r : roots(x.size())) out[grading_of_root(x, r)].push_back(r);
    return out;
}

} // namespace qhr
