#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "qhr/orbit_lattice.hpp"
#include "qhr/reduction.hpp"
#include "qhr/screening.hpp"

using namespace qhr;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

std::string pair_str(const Partition& a, const Partition& b) { return "[" + a.str() + "] -> [" + b.str() + "]"; }

bool certificate_complete(const ReductionDatum& d) {
    const auto& c = d.certificate;
    return c.passed() && c.abelian_01 && c.abelian_10 && c.omega_matrix.rows() == c.omega_matrix.cols() &&
           rank(c.omega_matrix) == c.omega_matrix.rows();
}

Outcome covering_oracle() {
    Outcome o;
    std::size_t pairs = 0;
    for (int n = 1; n <= 12; ++n) {
        const auto all = partitions_of(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                bool covers = dominance_less(a, b);
                if (covers)
                    for (const auto& c : all)
                        if (dominance_less(a, c) && dominance_less(c, b)) {
                            covers = false;
                            break;
                        }
                ++pairs;
                if (covers != is_adjacent(a, b)) fail(o, pair_str(a, b));
            }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs agree";
    return o;
}

Outcome figure_pairs() {
    Outcome o;
    const Partition a{5, 3, 3, 3}, b{5, 4, 3, 2}, c{6, 3, 3, 2};
    if (!is_adjacent(a, b)) fail(o, pair_str(a, b) + " not adjacent");
    if (!is_adjacent(b, c)) fail(o, pair_str(b, c) + " not adjacent");
    if (is_adjacent(a, c)) fail(o, pair_str(a, c) + " adjacent");
    if (!satisfies_box_move(a, c)) fail(o, pair_str(a, c) + " not a box move");
    if (o.pass) o.detail = "two covers, one non-adjacent box move";
    return o;
}

Outcome pyramid_goodness() {
    Outcome o;
    std::size_t checked = 0;
    auto check = [&](const Pyramid& p, const Partition& expected, const std::string& what) {
        const auto f = nilpotent_from_pyramid(p);
        ++checked;
        if (!is_good_grading(f, grading_element_of(p))) fail(o, what + " not good");
        if (jordan_type(f) != expected) fail(o, what + " has Jordan type [" + jordan_type(f).str() + "]");
    };
    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (const auto& lam : all) {
            check(left_aligned(lam), lam, "left-aligned [" + lam.str() + "]");
            check(right_aligned(lam), lam, "right-aligned [" + lam.str() + "]");
            for (const auto& mu : all) {
                const auto w = box_move_witness(lam, mu);
                if (!w) continue;
                check(align_for_theorem(lam, w->first, w->second, Stage::source), lam, "source of " + pair_str(lam, mu));
                check(align_for_theorem(lam, w->first, w->second, Stage::target), mu, "target of " + pair_str(lam, mu));
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " pyramids good";
    return o;
}

Outcome box_move_certificates() {
    Outcome o;
    std::size_t count = 0;
    for (int n = 2; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (const auto& lam : all)
            for (const auto& mu : all) {
                if (!satisfies_box_move(lam, mu)) continue;
                ++count;
                try {
                    const auto d = build_reduction(lam, mu);
                    if (jordan_type(d.f_lam + d.f_circ) != mu) fail(o, pair_str(lam, mu) + " wrong Jordan type");
                    if (!certificate_complete(d)) fail(o, pair_str(lam, mu) + " certificate incomplete");
                } catch (const std::exception& e) {
                    fail(o, pair_str(lam, mu) + ": " + e.what());
                }
            }
    }
    if (o.pass) o.detail = std::to_string(count) + " box moves certified";
    return o;
}

Outcome conjugators() {
    Outcome o;
    std::ostringstream rec;
    for (int a = 1; a <= 4; ++a) {
        const Partition lam({a, a});
        const Partition mu = a > 1 ? Partition({a + 1, a - 1}) : Partition({2});
        const auto d = build_reduction(lam, mu);
        if (!d.conjugator || d.conjugator->variant != "displayed" ||
            !verify_conjugation(d.conjugator->g, d.f_mu_tilde, d.f_mu_std))
            fail(o, pair_str(lam, mu) + " has no verified displayed conjugator");
        else
            rec << " a=b=" << a << ":" << d.conjugator->variant << "/" << (a - 1) << " blocks";
    }
    for (int a = 2; a <= 4; ++a)
        for (int b = 1; b < a; ++b) {
            std::vector<int> mu_parts{a + 1};
            if (b > 1) mu_parts.push_back(b - 1);
            const Partition lam({a, b});
            const auto d = build_reduction(lam, Partition(mu_parts));
            if (d.conjugator)
                rec << " (" << a << "," << b << "):" << d.conjugator->variant;
            else if (!certificate_complete(d))
                fail(o, pair_str(lam, Partition(mu_parts)) + " neither conjugated nor certified");
            else
                rec << " (" << a << "," << b << "):jordan-type";
        }
    if (o.pass) o.detail = "variants" + rec.str();
    return o;
}

Outcome anti_homomorphism() {
    Outcome o;
    std::size_t pairs = 0;
    for (int n = 3; n <= 4; ++n) {
        const auto chart = UnipotentChart::full(n);
        for (const auto& a : positive_roots(n))
            for (const auto& b : positive_roots(n)) {
                const auto x = a.vector(n), y = b.vector(n);
                const auto dx = left_action_field(x, chart);
                ++pairs;
                if (!fields_equal(field_bracket(dx, left_action_field(y, chart)), left_action_field(bracket(y, x), chart)))
                    fail(o, "bracket reversal fails for " + a.str() + ", " + b.str() + " in sl_" + std::to_string(n));
                if (!fields_equal(field_bracket(dx, right_action_field(y, chart)), {}))
                    fail(o, "left/right fields do not commute for " + a.str() + ", " + b.str());
            }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " root pairs";
    return o;
}

Outcome fourier() {
    Outcome o;
    std::size_t count = 0;
    for (int n = 2; n <= 6; ++n) {
        const auto all = partitions_of(n);
        for (const auto& lam : all)
            for (const auto& mu : all) {
                if (!satisfies_box_move(lam, mu)) continue;
                ++count;
                try {
                    const auto rep = fourier_compare(build_reduction(lam, mu));
                    if (!rep.matched) fail(o, pair_str(lam, mu) + ": " + rep.mismatches.front());
                } catch (const std::exception& e) {
                    fail(o, pair_str(lam, mu) + ": " + e.what());
                }
            }
    }
    if (o.pass) o.detail = std::to_string(count) + " box moves matched";
    return o;
}

Outcome chains() {
    Outcome o;
    std::size_t count = 0, steps = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (const auto& lam : all)
            for (const auto& mu : all) {
                if (!dominance_leq(lam, mu)) continue;
                ++count;
                try {
                    const auto path = reduction_path(lam, mu);
                    if (path.steps.front() != lam || path.steps.back() != mu) fail(o, pair_str(lam, mu) + " wrong endpoints");
                    for (std::size_t k = 1; k < path.steps.size(); ++k)
                        if (!is_adjacent(path.steps[k - 1], path.steps[k])) fail(o, pair_str(lam, mu) + " non-adjacent step");
                    const auto data = build_chain(lam, mu);
                    if (data.size() + 1 != path.steps.size()) fail(o, pair_str(lam, mu) + " chain length");
                    for (std::size_t k = 0; k < data.size(); ++k) {
                        if (data[k].lam != path.steps[k] || data[k].mu != path.steps[k + 1]) fail(o, pair_str(lam, mu) + " step mismatch");
                        if (!certificate_complete(data[k]) || jordan_type(data[k].f_mu_tilde) != data[k].mu)
                            fail(o, pair_str(lam, mu) + " step " + std::to_string(k + 1) + " uncertified");
                    }
                    steps += data.size();
                } catch (const std::exception& e) {
                    fail(o, pair_str(lam, mu) + ": " + e.what());
                }
            }
    }
    if (o.pass) o.detail = std::to_string(count) + " comparable pairs, " + std::to_string(steps) + " certified steps";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"adjacency equals covering for N <= 12", covering_oracle},
        {"figure pairs", figure_pairs},
        {"pyramid goodness for N <= 8", pyramid_goodness},
        {"box-move certificates for N <= 8", box_move_certificates},
        {"height-two conjugators", conjugators},
        {"screening anti-homomorphism on sl_3, sl_4", anti_homomorphism},
        {"Fourier matching for N <= 6", fourier},
        {"chain composition for N <= 8", chains},
    };
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " (" << o.detail
                  << ", " << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
    }
    return all ? 0 : 1;
}
