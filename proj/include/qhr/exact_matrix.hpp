#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/rational.hpp"

namespace qhr {

/// Sparse N x N matrix over the rationals with 1-based indices.
/// Zero entries are never stored, so two equal matrices have identical entry maps.
class ExactMatrix {
public:
    using Index = std::pair<int, int>;
    using Entries = std::map<Index, Rational>;

    ExactMatrix() = default;
    explicit ExactMatrix(int n) : n_(n) {
        if (n < 0) throw DimensionError("negative matrix size");
    }

    /// E_{i,j}
    static ExactMatrix unit(int n, int i, int j) {
        ExactMatrix m(n);
        m.set(i, j, 1);
        return m;
    }
    static ExactMatrix identity(int n) {
        ExactMatrix m(n);
        for (int i = 1; i <= n; ++i) m.set(i, i, 1);
        return m;
    }
    static ExactMatrix diagonal(const std::vector<Rational>& diag) {
        ExactMatrix m(static_cast<int>(diag.size()));
        for (std::size_t i = 0; i < diag.size(); ++i) m.set(int(i) + 1, int(i) + 1, diag[i]);
        return m;
    }

    int size() const noexcept { return n_; }
    const Entries& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    std::size_t nonzeros() const noexcept { return entries_.size(); }

    Rational at(int row, int col) const {
        check_index(row, col);
        auto it = entries_.find({row, col});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    void set(int row, int col, const Rational& value) {
        check_index(row, col);
        if (value == 0)
            entries_.erase({row, col});
        else
            entries_[{row, col}] = value;
    }

    void add(int row, int col, const Rational& value) {
        check_index(row, col);
        if (value == 0) return;
        auto [it, inserted] = entries_.try_emplace({row, col}, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) entries_.erase(it);
        }
    }

    Rational trace() const {
        Rational t = 0;
        for (const auto& [ix, v] : entries_)
            if (ix.first == ix.second) t += v;
        return t;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(n_);
        for (const auto& [ix, v] : entries_) t.entries_.emplace(Index{ix.second, ix.first}, v);
        return t;
    }

    ExactMatrix& operator+=(const ExactMatrix& o) {
        check_same(o);
        for (const auto& [ix, v] : o.entries_) add(ix.first, ix.second, v);
        return *this;
    }
    ExactMatrix& operator-=(const ExactMatrix& o) {
        check_same(o);
        for (const auto& [ix, v] : o.entries_) add(ix.first, ix.second, -v);
        return *this;
    }
    ExactMatrix& operator*=(const Rational& s) {
        if (s == 0) {
            entries_.clear();
        } else {
            for (auto& [ix, v] : entries_) v *= s;
        }
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator-(ExactMatrix a) { return a *= Rational(-1); }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        a.check_same(b);
        ExactMatrix c(a.n_);
        for (const auto& [ia, va] : a.entries_) {
            const int k = ia.second;
            for (auto it = b.entries_.lower_bound({k, 0}); it != b.entries_.end() && it->first.first == k; ++it)
                c.add(ia.first, it->first.second, va * it->second);
        }
        return c;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    /// Restriction to rows/cols in `keep` (1-based, ascending), renumbered 1..keep.size().
    ExactMatrix restrict_to(const std::vector<int>& keep) const {
        std::map<int, int> pos;
        for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = int(k) + 1;
        ExactMatrix r(static_cast<int>(keep.size()));
        for (const auto& [ix, v] : entries_) {
            auto a = pos.find(ix.first);
            auto b = pos.find(ix.second);
            if (a != pos.end() && b != pos.end()) r.set(a->second, b->second, v);
        }
        return r;
    }

    /// Inverse of restrict_to: places this matrix at indices `image` of an n x n matrix.
    ExactMatrix embed(int n, const std::vector<int>& image) const {
        if (static_cast<int>(image.size()) != n_) throw DimensionError("embedding image has wrong length");
        ExactMatrix r(n);
        for (const auto& [ix, v] : entries_) r.set(image[ix.first - 1], image[ix.second - 1], v);
        return r;
    }

    std::string str() const {
        std::string s;
        for (const auto& [ix, v] : entries_) {
            if (!s.empty()) s += " + ";
            if (v != 1) s += (v == -1 ? std::string("-") : v.get_str() + "*");
            s += "E(" + std::to_string(ix.first) + "," + std::to_string(ix.second) + ")";
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_index(int row, int col) const {
        if (row < 1 || row > n_ || col < 1 || col > n_)
            throw DimensionError("index (" + std::to_string(row) + "," + std::to_string(col) +
                                 ") outside 1.." + std::to_string(n_));
    }
    void check_same(const ExactMatrix& o) const {
        if (n_ != o.n_)
            throw DimensionError("size mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

    int n_ = 0;
    Entries entries_;
};

} // namespace qhr
