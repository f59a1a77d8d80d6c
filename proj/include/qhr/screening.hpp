#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/json_io.hpp"
#include "qhr/lie_core.hpp"
#include "qhr/linalg.hpp"
#include "qhr/poly.hpp"
#include "qhr/pyramid.hpp"
#include "qhr/reduction.hpp"
#include "qhr/star_check.hpp"

namespace qhr {

/// First-kind coordinates exp(sum z_a E_a) on the unipotent group of a closed set of positive roots.
class UnipotentChart {
public:
    UnipotentChart() = default;
    UnipotentChart(int n, std::vector<Root> roots) : n_(n), roots_(std::move(roots)) {
        std::sort(roots_.begin(), roots_.end());
        roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
        std::set<Root> in(roots_.begin(), roots_.end());
        for (const auto& r : roots_) {
            if (!r.positive() || r.j > n) throw DomainError("chart root " + r.str() + " is not a positive root of sl_" + std::to_string(n));
            for (const auto& s : roots_)
                if (r.j == s.i && !in.count(Root{r.i, s.j}))
                    throw DomainError("chart roots are not closed under bracket: " + r.str() + " + " + s.str());
        }
    }
    static UnipotentChart full(int n) { return UnipotentChart(n, positive_roots(n)); }

    int n() const noexcept { return n_; }
    const std::vector<Root>& roots() const noexcept { return roots_; }
    bool contains(const Root& r) const { return std::binary_search(roots_.begin(), roots_.end(), r); }

    /// sum z_a E_a
    PolyMatrix generic_algebra_element() const {
        PolyMatrix m(n_);
        for (const auto& r : roots_) m(r.i, r.j) = Poly::var(Var::z(r.i, r.j));
        return m;
    }

private:
    int n_ = 0;
    std::vector<Root> roots_;
};

namespace detail {
inline PolyMatrix product_eps(const PolyMatrix& a, const PolyMatrix& b) {
    return (a * b).map([](const Poly& p) { return p.truncate_eps(); });
}
} // namespace detail

/// Finite exponential series; eps is treated as a dual number.
inline PolyMatrix exp_nilpotent(const PolyMatrix& x) {
    const int n = x.size();
    PolyMatrix out = PolyMatrix::identity(n), power = PolyMatrix::identity(n);
    Rational factorial = 1;
    for (int k = 1; k <= n; ++k) {
        power = detail::product_eps(power, x);
        if (power.is_zero()) return out;
        factorial *= k;
        out += power * (Rational(1) / factorial);
    }
    throw DomainError("exp_nilpotent: matrix is not nilpotent");
}

/// log(u) for unipotent u, as the finite alternating series in u - I.
inline PolyMatrix log_unipotent(const PolyMatrix& u) {
    const int n = u.size();
    const PolyMatrix x = u - PolyMatrix::identity(n);
    PolyMatrix out(n), power = PolyMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        power = detail::product_eps(power, x);
        if (power.is_zero()) return out;
        out += power * (Rational(k % 2 == 1 ? 1 : -1) / k);
    }
    throw DomainError("log_unipotent: matrix is not unipotent");
}

/// Component along d/dz_a for each chart root a.
using VectorField = std::map<Root, Poly>;

namespace detail {
inline VectorField field_from_eps(const PolyMatrix& log_part, const UnipotentChart& chart) {
    VectorField out;
    for (const auto& r : chart.roots()) out[r] = Poly();
    const int n = chart.n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Poly p = log_part(i, j).eps_part();
            if (p.is_zero()) continue;
            if (!chart.contains(Root{i, j}))
                throw DomainError("action leaves the chart at entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            out[Root{i, j}] = std::move(p);
        }
    return out;
}
} // namespace detail

/// exp(eps x) g(z) = g(z + eps P(z)).
inline VectorField left_action_field(const ExactMatrix& x, const UnipotentChart& chart) {
    if (x.size() != chart.n()) throw DimensionError("left_action_field size mismatch");
    const PolyMatrix g = exp_nilpotent(chart.generic_algebra_element());
    PolyMatrix eps_x = PolyMatrix::from(x).map([](const Poly& p) { return p * Poly::var(Var::eps()); });
    return detail::field_from_eps(log_unipotent(detail::product_eps(PolyMatrix::identity(chart.n()) + eps_x, g)), chart);
}

/// g(z) exp(eps x) = g(z + eps R(z)).
inline VectorField right_action_field(const ExactMatrix& x, const UnipotentChart& chart) {
    if (x.size() != chart.n()) throw DimensionError("right_action_field size mismatch");
    const PolyMatrix g = exp_nilpotent(chart.generic_algebra_element());
    PolyMatrix eps_x = PolyMatrix::from(x).map([](const Poly& p) { return p * Poly::var(Var::eps()); });
    return detail::field_from_eps(log_unipotent(detail::product_eps(g, PolyMatrix::identity(chart.n()) + eps_x)), chart);
}

/// P_i^a for the simple root vector e_i = E_{i,i+1}.
inline VectorField left_action_coeffs(int i, const UnipotentChart& chart) {
    if (i < 1 || i >= chart.n()) throw DimensionError("simple root index out of range");
    if (!chart.contains(Root{i, i + 1})) throw DomainError("e_" + std::to_string(i) + " is not in the chart");
    return left_action_field(ExactMatrix::unit(chart.n(), i, i + 1), chart);
}

inline Poly apply_field(const VectorField& d, const Poly& p) {
    Poly out;
    for (const auto& [r, c] : d)
        if (!c.is_zero()) out += c * p.derivative(Var::z(r.i, r.j));
    return out;
}

/// [D, E] = D E - E D as derivations.
inline VectorField field_bracket(const VectorField& d, const VectorField& e) {
    VectorField out;
    std::set<Root> keys;
    for (const auto& [r, c] : d) keys.insert(r);
    for (const auto& [r, c] : e) keys.insert(r);
    for (const auto& r : keys) {
        auto di = d.find(r);
        auto ei = e.find(r);
        Poly v;
        if (ei != e.end()) v += apply_field(d, ei->second);
        if (di != d.end()) v -= apply_field(e, di->second);
        out[r] = std::move(v);
    }
    return out;
}

inline bool fields_equal(const VectorField& d, const VectorField& e) {
    std::set<Root> keys;
    for (const auto& [r, c] : d) keys.insert(r);
    for (const auto& [r, c] : e) keys.insert(r);
    for (const auto& r : keys) {
        auto di = d.find(r);
        auto ei = e.find(r);
        const Poly a = di == d.end() ? Poly() : di->second;
        const Poly b = ei == e.end() ? Poly() : ei->second;
        if (!(a == b)) return false;
    }
    return true;
}

/// sum_a P^a * beta_a
inline Poly field_as_poly(const VectorField& d) {
    Poly out;
    for (const auto& [r, c] : d) out += c * Poly::var(Var::beta_root(r.i, r.j));
    return out;
}

/// g0^{-1} x g0 for the generic element g0 of the chart.
inline PolyMatrix g0_conjugate(const ExactMatrix& x, const UnipotentChart& chart0) {
    const PolyMatrix z = chart0.generic_algebra_element();
    PolyMatrix minus_z = z;
    minus_z *= Rational(-1);
    return exp_nilpotent(minus_z) * PolyMatrix::from(x) * exp_nilpotent(z);
}

inline PolyMatrix g0_conjugate(int i, const UnipotentChart& chart0) {
    return g0_conjugate(ExactMatrix::unit(chart0.n(), i, i + 1), chart0);
}

/// Coordinates of y in a linearly independent family; throws if y is outside the span.
inline std::vector<Poly> coordinates_in(const PolyMatrix& y, const std::vector<ExactMatrix>& basis) {
    const std::size_t m = basis.size();
    std::vector<Poly> out(m);
    if (m > 0) {
        DenseMatrix gram(m, m);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l) gram(k, l) = trace_form(basis[k].transpose(), basis[l]);
        const DenseMatrix inv = inverse(gram);
        std::vector<Poly> proj(m);
        for (std::size_t k = 0; k < m; ++k) proj[k] = trace_form(basis[k].transpose(), y);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t l = 0; l < m; ++l)
                if (inv(k, l) != 0) out[k] += proj[l] * inv(k, l);
    }
    if (!(PolyMatrix::combination(out, basis, y.size()) == y)) throw DomainError("matrix is not in the span of the chart basis");
    return out;
}

/// Splitting n_{0,1} = span(u_1..u_n) + n_{0,1}^{f1} with v_1..v_n the omega-dual basis of n_{1,0}.
/// The complement is the echelon one, shifted along a ghost so that (f_circ, u_k) = 0.
struct OmegaSplitting {
    std::vector<ExactMatrix> u;       ///< u_1..u_m: complement, then ghost basis
    std::size_t n = 0;                ///< size of the complement
    std::vector<ExactMatrix> v;       ///< v_1..v_n
    std::vector<ExactMatrix> u_star;  ///< [v_j, f1]
    std::vector<ExactMatrix> v_star;  ///< [f1, u_j]
    std::vector<Rational> ghost_values;  ///< (f_circ, u_k) for k > n
};

inline OmegaSplitting omega_splitting(const ExactMatrix& f1, const ExactMatrix& f_circ, const StarCertificate& cert) {
    if (!cert.omega_nondegenerate) throw PreconditionError("omega_splitting needs a nondegenerate pairing");
    OmegaSplitting s;
    s.n = cert.complement.size();
    const ExactMatrix* anchor = nullptr;
    Rational anchor_value = 0;
    for (const auto& w : cert.ghost_basis) {
        anchor_value = trace_form(f_circ, w);
        if (anchor_value != 0) {
            anchor = &w;
            break;
        }
    }
    for (const auto& c : cert.complement) {
        const Rational t = trace_form(f_circ, c);
        s.u.push_back(anchor && t != 0 ? c - (t / anchor_value) * *anchor : c);
    }
    for (const auto& w : cert.ghost_basis) {
        s.u.push_back(w);
        s.ghost_values.push_back(trace_form(f_circ, w));
    }
    DenseMatrix w(s.n, s.n);
    for (std::size_t k = 0; k < s.n; ++k)
        for (std::size_t l = 0; l < s.n; ++l) w(k, l) = trace_form(f1, bracket(s.u[k], cert.partners[l]));
    const DenseMatrix c = inverse(w);
    for (std::size_t j = 0; j < s.n; ++j) {
        ExactMatrix v(f1.size());
        for (std::size_t l = 0; l < s.n; ++l)
            if (c(l, j) != 0) v += c(l, j) * cert.partners[l];
        s.v.push_back(v);
    }
    for (std::size_t j = 0; j < s.n; ++j) {
        s.u_star.push_back(bracket(s.v[j], f1));
        s.v_star.push_back(bracket(f1, s.u[j]));
    }
    return s;
}

struct ScreeningTerm {
    int simple = 0;
    std::string tag;  ///< "I_0", "I_1" for a good pair; "I_{p,q}" for a bigrading
    Poly coeff;
};

struct ScreeningSet {
    std::string side;  ///< "good-pair", "source", "target"
    int n = 0;
    std::string chart = "first-kind";
    std::vector<ScreeningTerm> terms;
};

inline std::string bidegree_tag(const BiDegree& d) {
    return "I_{" + std::to_string(d.first) + "," + std::to_string(d.second) + "}";
}

inline UnipotentChart degree_zero_chart(const GradingElement& x) {
    std::vector<Root> roots;
    for (const auto& r : positive_roots(x.size()))
        if (grading_of_root(x, r) == 0) roots.push_back(r);
    return UnipotentChart(x.size(), roots);
}

/// Coefficients for a single good pair: the left action on N_0 for grade-0 simple roots,
/// (f, g0 * e_i) for grade-1 ones.
inline ScreeningSet screening_coeffs(const GoodPair& pair) {
    const int n = pair.f.size();
    ScreeningSet out{"good-pair", n, "first-kind", {}};
    const auto chart0 = degree_zero_chart(pair.x);
    for (int i = 1; i < n; ++i) {
        const Rational grade = grading_of_root(pair.x, Root{i, i + 1});
        if (grade == 0)
            out.terms.push_back({i, "I_0", field_as_poly(left_action_coeffs(i, chart0))});
        else if (grade == 1)
            out.terms.push_back({i, "I_1", trace_form(pair.f, g0_conjugate(i, chart0))});
        else
            throw DomainError("simple root " + std::to_string(i) + " has grade " + grade.get_str() + ", expected 0 or 1");
    }
    return out;
}

enum class Side { source, target };

namespace detail {
/// (f, (g0 h)^{-1} e_i (g0 h)) with h = exp(sum coeff_k basis_k).
inline Poly character_after(const ExactMatrix& f, int i, const UnipotentChart& chart0, const std::vector<ExactMatrix>& basis,
                            VarKind kind) {
    const int n = chart0.n();
    std::vector<Poly> coords;
    for (std::size_t k = 0; k < basis.size(); ++k) coords.push_back(Poly::var(Var{kind, int(k) + 1, 0}));
    PolyMatrix a = PolyMatrix::combination(coords, basis, n);
    PolyMatrix minus_a = a;
    minus_a *= Rational(-1);
    const PolyMatrix y = g0_conjugate(i, chart0);
    return trace_form(f, exp_nilpotent(minus_a) * y * exp_nilpotent(a));
}

inline Poly momentum_sum(const std::vector<Poly>& coords, VarKind kind) {
    Poly out;
    for (std::size_t k = 0; k < coords.size(); ++k) out += coords[k] * Poly::var(Var{kind, int(k) + 1, 0});
    return out;
}
} // namespace detail

/// Coefficients of the source (O_1) or target (O_2) side of a reduction, computed from the
/// group factorisations g0 g01 and g0 g10 rather than from closed forms.
inline ScreeningSet screening_coeffs(const ReductionDatum& d, Side side) {
    const int n = d.lam.n();
    const BiGrading bi{d.x_lam, d.x_mu};
    const auto split = omega_splitting(d.f_lam, d.f_circ, d.certificate);
    std::vector<Root> roots00;
    for (const auto& r : positive_roots(n))
        if (bidegree(bi, r) == BiDegree{0, 0}) roots00.push_back(r);
    const UnipotentChart chart0(n, roots00);
    ScreeningSet out{side == Side::source ? "source" : "target", n, "first-kind", {}};
    for (int i = 1; i < n; ++i) {
        const BiDegree deg = bidegree(bi, Root{i, i + 1});
        const auto tag = bidegree_tag(deg);
        Poly p;
        if (deg == BiDegree{0, 0}) {
            p = field_as_poly(left_action_coeffs(i, chart0));
        } else if (side == Side::source && deg == BiDegree{0, 1}) {
            p = detail::momentum_sum(coordinates_in(g0_conjugate(i, chart0), split.u), VarKind::beta);
        } else if (side == Side::target && deg == BiDegree{1, 0}) {
            p = detail::momentum_sum(coordinates_in(g0_conjugate(i, chart0), split.v), VarKind::beta_hat);
        } else if (deg.first >= 0 && deg.second >= 0 && deg.first <= 1 && deg.second <= 1) {
            p = side == Side::source ? detail::character_after(d.f_lam, i, chart0, split.u, VarKind::gamma)
                                     : detail::character_after(d.f_mu_tilde, i, chart0, split.v, VarKind::gamma_hat);
        } else {
            throw DomainError("simple root " + std::to_string(i) + " has bidegree outside {0,1}^2");
        }
        out.terms.push_back({i, tag, std::move(p)});
    }
    return out;
}

/// The same coefficients through the dual elements u_j^* = [v_j, f1] and v_j^* = [f1, u_j].
inline ScreeningSet screening_closed_form(const ReductionDatum& d, Side side) {
    const int n = d.lam.n();
    const BiGrading bi{d.x_lam, d.x_mu};
    const auto split = omega_splitting(d.f_lam, d.f_circ, d.certificate);
    std::vector<Root> roots00;
    for (const auto& r : positive_roots(n))
        if (bidegree(bi, r) == BiDegree{0, 0}) roots00.push_back(r);
    const UnipotentChart chart0(n, roots00);
    ScreeningSet out{side == Side::source ? "source" : "target", n, "closed-form", {}};
    for (int i = 1; i < n; ++i) {
        const BiDegree deg = bidegree(bi, Root{i, i + 1});
        const PolyMatrix y = g0_conjugate(i, chart0);
        Poly p;
        if (deg == BiDegree{0, 0}) {
            p = field_as_poly(left_action_coeffs(i, chart0));
        } else if (deg == BiDegree{1, 1}) {
            p = trace_form(d.f_lam, y);
        } else if (deg == BiDegree{1, 0}) {
            for (std::size_t j = 0; j < split.n; ++j) {
                const Var v = side == Side::source ? Var::gamma(int(j) + 1) : Var::beta_hat(int(j) + 1);
                p += trace_form(split.v_star[j], y) * Poly::var(v) * Rational(side == Side::source ? -1 : 1);
            }
        } else if (deg == BiDegree{0, 1} && side == Side::target) {
            p = trace_form(d.f_circ, y);
            for (std::size_t j = 0; j < split.n; ++j) p += trace_form(split.u_star[j], y) * Poly::var(Var::gamma_hat(int(j) + 1));
        } else if (deg == BiDegree{0, 1}) {
            const auto coords = coordinates_in(y, split.u);
            for (std::size_t j = 0; j < split.u.size(); ++j) {
                const Poly c = j < split.n ? trace_form(split.u_star[j], y) : coords[j];
                p += c * Poly::var(Var::beta(int(j) + 1));
            }
        } else {
            throw DomainError("simple root " + std::to_string(i) + " has bidegree outside {0,1}^2");
        }
        out.terms.push_back({i, bidegree_tag(deg), std::move(p)});
    }
    return out;
}

struct FourierReport {
    bool matched = false;
    std::vector<int> signs;  ///< +1 or -1 per simple root, 0 on mismatch
    std::vector<std::string> mismatches;
};

/// Cohomology class of a source coefficient: ghost momenta beta_k (k > n) are evaluated at
/// -(f_circ, u_k), then beta_k, gamma_k -> -gamma-hat_k, beta-hat_k for k <= n.
inline Poly fourier_transform(const Poly& p, const OmegaSplitting& split) {
    Poly out = p;
    for (std::size_t k = split.n; k < split.u.size(); ++k)
        out = out.substitute(Var::beta(int(k) + 1), Poly(-split.ghost_values[k - split.n]));
    for (std::size_t k = 0; k < split.n; ++k) {
        out = out.substitute(Var::beta(int(k) + 1), -Poly::var(Var::gamma_hat(int(k) + 1)));
        out = out.substitute(Var::gamma(int(k) + 1), Poly::var(Var::beta_hat(int(k) + 1)));
    }
    return out;
}

inline FourierReport fourier_compare(const ScreeningSet& set1, const ScreeningSet& set2, const OmegaSplitting& split) {
    if (set1.n != set2.n || set1.terms.size() != set2.terms.size())
        throw DimensionError("fourier_compare: screening sets over different algebras");
    FourierReport rep;
    rep.matched = true;
    for (std::size_t k = 0; k < set1.terms.size(); ++k) {
        const auto& a = set1.terms[k];
        const auto& b = set2.terms[k];
        if (a.simple != b.simple || a.tag != b.tag) throw DimensionError("fourier_compare: incompatible charts");
        const Poly t = fourier_transform(a.coeff, split);
        int sign = 0;
        if (t == b.coeff)
            sign = 1;
        else if (t == -b.coeff)
            sign = -1;
        rep.signs.push_back(sign);
        if (sign == 0) {
            rep.matched = false;
            rep.mismatches.push_back("e_" + std::to_string(a.simple) + " " + a.tag + ": [" + t.str() + "] vs " + b.coeff.str());
        }
    }
    return rep;
}

inline FourierReport fourier_compare(const ReductionDatum& d) {
    return fourier_compare(screening_coeffs(d, Side::source), screening_coeffs(d, Side::target),
                           omega_splitting(d.f_lam, d.f_circ, d.certificate));
}

inline Json screening_json(const ScreeningSet& s) {
    Json terms = Json::array();
    for (const auto& t : s.terms)
        terms.push_back(Json{{"simple", t.simple}, {"case", t.tag}, {"polynomial", poly_json(t.coeff)}, {"text", t.coeff.str()}});
    return Json{{"side", s.side}, {"n", s.n}, {"chart", s.chart}, {"coefficients", terms}};
}

inline Json fourier_json(const FourierReport& r) {
    return Json{{"matched", r.matched}, {"signs", r.signs}, {"mismatches", r.mismatches}};
}

} // namespace qhr
