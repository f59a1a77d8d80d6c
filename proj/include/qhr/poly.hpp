#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/exact_matrix.hpp"
#include "qhr/json_io.hpp"
#include "qhr/rational.hpp"

namespace qhr {

enum class VarKind { z, beta_root, gamma, beta, gamma_hat, beta_hat, eps };

/// Commuting symbol. Root-tagged kinds use (a, b) = (i, j); indexed kinds use a only.
struct Var {
    VarKind kind = VarKind::z;
    int a = 0;
    int b = 0;

    static Var z(int i, int j) { return {VarKind::z, i, j}; }
    static Var beta_root(int i, int j) { return {VarKind::beta_root, i, j}; }
    static Var gamma(int k) { return {VarKind::gamma, k, 0}; }
    static Var beta(int k) { return {VarKind::beta, k, 0}; }
    static Var gamma_hat(int k) { return {VarKind::gamma_hat, k, 0}; }
    static Var beta_hat(int k) { return {VarKind::beta_hat, k, 0}; }
    static Var eps() { return {VarKind::eps, 0, 0}; }

    std::string name() const {
        const auto pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        switch (kind) {
            case VarKind::z: return "z_" + pair;
            case VarKind::beta_root: return "beta_" + pair;
            case VarKind::gamma: return "gamma_" + std::to_string(a);
            case VarKind::beta: return "beta_" + std::to_string(a);
            case VarKind::gamma_hat: return "gamma-hat_" + std::to_string(a);
            case VarKind::beta_hat: return "beta-hat_" + std::to_string(a);
            case VarKind::eps: return "eps";
        }
        return "?";
    }

    friend auto operator<=>(const Var&, const Var&) = default;
};

using Monomial = std::map<Var, int>;

inline Monomial monomial_product(const Monomial& x, const Monomial& y) {
    Monomial out = x;
    for (const auto& [v, e] : y) out[v] += e;
    return out;
}

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_[Monomial{}] = c;
    }
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    static Poly var(const Var& v) {
        Poly p;
        p.terms_[Monomial{{v, 1}}] = 1;
        return p;
    }

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
        return out;
    }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative(const Var& v) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it == m.end()) continue;
            Monomial dm = m;
            const int e = it->second;
            if (e == 1)
                dm.erase(v);
            else
                dm[v] = e - 1;
            out.add_term(dm, c * e);
        }
        return out;
    }

    Poly substitute(const Var& v, const Poly& value) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it == m.end()) {
                out.add_term(m, c);
                continue;
            }
            Monomial rest = m;
            rest.erase(v);
            Poly term;
            term.terms_[rest] = c;
            for (int k = 0; k < it->second; ++k) term = term * value;
            out += term;
        }
        return out;
    }

    /// Drops every monomial of degree >= 2 in eps.
    Poly truncate_eps() const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(Var::eps());
            if (it == m.end() || it->second < 2) out.terms_[m] = c;
        }
        return out;
    }

    /// Coefficient of eps^1, with eps removed.
    Poly eps_part() const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(Var::eps());
            if (it == m.end() || it->second != 1) continue;
            Monomial rest = m;
            rest.erase(Var::eps());
            out.terms_[rest] = c;
        }
        return out;
    }

    std::set<Var> variables() const {
        std::set<Var> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int t = 0;
            for (const auto& [v, e] : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = abs(c);
            s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            const bool unit = mag == 1 && !m.empty();
            if (!unit) s += mag.get_str();
            bool lead = unit;
            for (const auto& [v, e] : m) {
                s += lead ? "" : "*";
                lead = false;
                s += v.name();
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

/// [{"monomial": {name: exponent}, "coeff": "p/q"}, ...] in monomial order.
inline Json poly_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json mono = Json::object();
        for (const auto& [v, e] : m) mono[v.name()] = e;
        out.push_back(Json{{"monomial", mono}, {"coeff", to_string(c)}});
    }
    return out;
}

/// Square matrix with polynomial entries, 1-based.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(int n) : n_(n), data_(std::size_t(n) * std::size_t(n)) {}
    static PolyMatrix identity(int n) {
        PolyMatrix m(n);
        for (int k = 1; k <= n; ++k) m(k, k) = Poly(1);
        return m;
    }
    static PolyMatrix from(const ExactMatrix& a) {
        PolyMatrix m(a.size());
        for (const auto& [ix, v] : a.entries()) m(ix.first, ix.second) = Poly(v);
        return m;
    }
    /// sum_k coeffs[k] * basis[k]
    static PolyMatrix combination(const std::vector<Poly>& coeffs, const std::vector<ExactMatrix>& basis, int n) {
        if (coeffs.size() != basis.size()) throw DimensionError("combination: coefficient count mismatch");
        PolyMatrix m(n);
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (const auto& [ix, v] : basis[k].entries()) m(ix.first, ix.second) += coeffs[k] * v;
        return m;
    }

    int size() const noexcept { return n_; }
    Poly& operator()(int i, int j) { return data_.at(index(i, j)); }
    const Poly& operator()(int i, int j) const { return data_.at(index(i, j)); }

    bool is_zero() const {
        for (const auto& p : data_)
            if (!p.is_zero()) return false;
        return true;
    }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    PolyMatrix& operator*=(const Rational& s) {
        for (auto& p : data_) p *= s;
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(PolyMatrix a, const Rational& s) { return a *= s; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        a.same(b);
        PolyMatrix out(a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int k = 1; k <= a.n_; ++k) {
                const Poly& x = a(i, k);
                if (x.is_zero()) continue;
                for (int j = 1; j <= a.n_; ++j)
                    if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
            }
        return out;
    }
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    template <class F>
    PolyMatrix map(F&& f) const {
        PolyMatrix out(n_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k]);
        return out;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw DimensionError("poly matrix index out of range");
        return std::size_t(i - 1) * std::size_t(n_) + std::size_t(j - 1);
    }
    void same(const PolyMatrix& o) const {
        if (o.n_ != n_) throw DimensionError("poly matrix size mismatch");
    }

    int n_ = 0;
    std::vector<Poly> data_;
};

/// (a, m) = tr(a m).
inline Poly trace_form(const ExactMatrix& a, const PolyMatrix& m) {
    Poly out;
    for (const auto& [ix, v] : a.entries()) out += m(ix.second, ix.first) * v;
    return out;
}

} // namespace qhr
