#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/json_io.hpp"
#include "qhr/orbit_lattice.hpp"
#include "qhr/pyramid.hpp"
#include "qhr/reduction.hpp"
#include "qhr/screening.hpp"
#include "qhr/star_check.hpp"

namespace qhr::cli {

enum class Format { text, json, tikz, ascii };

struct Options {
    Format format = Format::text;
    bool quiet = false;
    int max_n = 8;
    std::optional<std::vector<int>> offsets;
};

struct Report {
    Report() = default;
    explicit Report(std::string verb) : command(std::move(verb)) {}

    std::string command;
    std::string status = "pass";  ///< "pass", "fail" or "error"
    Json payload = Json::object();
    std::string summary;
    std::string tikz;   ///< standalone source, when the verb has a picture
    std::string ascii;  ///< grid rendering, when the verb has one

    int exit_code() const { return status == "pass" ? 0 : status == "fail" ? 1 : 2; }
};

inline constexpr int max_n_bound = 12;

inline Json chain_json(const std::vector<Partition>& steps) {
    Json out = Json::array();
    for (const auto& p : steps) out.push_back(partition_json(p));
    return out;
}

inline Report orbits(int n) {
    if (n < 1 || n > 30) throw PreconditionError("orbits: N must be between 1 and 30");
    Report r{"orbits"};
    const auto parts = partitions_of(n);
    Json covers = Json::array();
    std::ostringstream os;
    os << parts.size() << " nilpotent orbits in sl_" << n << "\n";
    for (const auto& p : parts) {
        for (const auto& c : covers_of(p)) {
            covers.push_back(Json::array({partition_json(p), partition_json(c)}));
            os << "  [" << p.str() << "] < [" << c.str() << "]\n";
        }
    }
    Json list = Json::array();
    for (const auto& p : parts) list.push_back(partition_json(p));
    r.payload = Json{{"n", n}, {"partitions", list}, {"covers", covers}};
    r.summary = os.str();
    return r;
}

inline Report adjacent(const Partition& lam, const Partition& mu) {
    Report r{"adjacent"};
    const bool adj = is_adjacent(lam, mu);
    const auto w = box_move_witness(lam, mu);
    r.payload = Json{{"lambda", partition_json(lam)},
                     {"mu", partition_json(mu)},
                     {"dominance_leq", dominance_leq(lam, mu)},
                     {"adjacent", adj},
                     {"box_move", w.has_value()},
                     {"witness", w ? Json::array({w->first, w->second}) : Json(nullptr)}};
    r.summary = "[" + lam.str() + "] -> [" + mu.str() + "]: " + (adj ? "adjacent" : "not adjacent") + ", " +
                (w ? "box move at rows " + std::to_string(w->first) + ".." + std::to_string(w->second) : "no box move") + "\n";
    return r;
}

inline Report path(const Partition& lam, const Partition& mu) {
    Report r{"path"};
    const auto chain = reduction_path(lam, mu);
    r.payload = Json{{"lambda", partition_json(lam)}, {"mu", partition_json(mu)}, {"chain", chain_json(chain.steps)}};
    std::string s;
    for (std::size_t k = 0; k < chain.steps.size(); ++k) s += (k ? " < [" : "[") + chain.steps[k].str() + "]";
    r.summary = s + "\n";
    return r;
}

inline Report reduce(const Partition& lam, const Partition& mu) {
    Report r{"reduce"};
    try {
        const auto d = build_reduction(lam, mu);
        r.payload = reduction_json(d);
        r.summary = reduction_summary(d);
        r.tikz = reduction_tikz(d);
    } catch (const VerificationError& e) {
        r.status = "fail";
        r.payload = Json{{"check", e.check()}, {"detail", e.what()}};
        r.summary = std::string("verification failed: ") + e.what() + "\n";
    }
    return r;
}

inline Report chain(const Partition& lam, const Partition& mu) {
    Report r{"chain"};
    const auto steps = reduction_path(lam, mu);
    Json data = Json::array();
    std::vector<std::string> pictures;
    for (std::size_t k = 1; k < steps.steps.size(); ++k) {
        try {
            const auto d = build_reduction(steps.steps[k - 1], steps.steps[k]);
            data.push_back(reduction_json(d));
            r.summary += reduction_summary(d);
            pictures.push_back(reduction_tikz(d));
        } catch (const VerificationError& e) {
            r.status = "fail";
            data.push_back(Json{{"check", e.check()}, {"detail", e.what()}});
            r.summary += std::string("verification failed: ") + e.what() + "\n";
        }
    }
    r.payload = Json{{"chain", chain_json(steps.steps)}, {"data", data}};
    for (const auto& p : pictures) r.tikz += p;
    if (steps.steps.size() <= 1) r.summary = "empty chain\n";
    return r;
}

/// The tableaux pair of a box move, checked without assuming the certificate passes.
inline Report check_star_verb(const Partition& lam, const Partition& mu) {
    Report r{"check-star"};
    if (!satisfies_box_move(lam, mu))
        throw PreconditionError("[" + lam.str() + "] -> [" + mu.str() + "] does not satisfy the box-move condition");
    const auto ad = adjacency_data(lam, mu);
    const auto src = align_for_theorem(lam, ad.i, ad.j, Stage::source);
    const auto tgt = align_for_theorem(lam, ad.i, ad.j, Stage::target);
    const auto inner = build_case_one(lam.part(ad.i), lam.part(ad.j), ad.j - ad.i - 1);
    const auto emb = embed_case_two(inner, lam, ad);
    const auto f1 = nilpotent_from_pyramid(src);
    const auto cert = check_star(f1, f1 + emb.f_circ, BiGrading{grading_element_of(src), grading_element_of(tgt)});
    r.status = cert.passed() && cert.abelian_01 && cert.abelian_10 ? "pass" : "fail";
    r.payload = certificate_json(cert);
    std::ostringstream os;
    os << "[" << lam.str() << "] -> [" << mu.str() << "]: condition " << (cert.passed() ? "holds" : "fails") << "\n"
       << "  grading " << cert.grading_ok << ", f_circ in n^-_{0,-1} " << cert.nilpotent_ok << ", n_{0,1} abelian "
       << cert.abelian_01 << ", n_{1,0} abelian " << cert.abelian_10 << ", omega nondegenerate "
       << cert.omega_nondegenerate << "\n";
    for (const auto& f : cert.failures) os << "  " << f << "\n";
    r.summary = os.str();
    return r;
}

inline Report screenings(const Partition& lam, const std::optional<Partition>& mu, const std::optional<std::vector<int>>& offsets) {
    Report r{"screenings"};
    if (!mu) {
        const auto pyr = offsets ? build_pyramid(lam, *offsets) : left_aligned(lam);
        if (!is_good_grading(nilpotent_from_pyramid(pyr), grading_element_of(pyr)))
            throw PreconditionError("pyramid offsets do not give a good grading");
        const auto set = screening_coeffs(good_pair_of(pyr));
        r.payload = Json{{"partition", partition_json(lam)}, {"pyramid", pyramid_json(pyr)}, {"screenings", screening_json(set)}};
        for (const auto& t : set.terms) r.summary += "e_" + std::to_string(t.simple) + " " + t.tag + ": " + t.coeff.str() + "\n";
        return r;
    }
    const auto d = build_reduction(lam, *mu);
    const auto s1 = screening_coeffs(d, Side::source);
    const auto s2 = screening_coeffs(d, Side::target);
    const auto split = omega_splitting(d.f_lam, d.f_circ, d.certificate);
    const auto rep = fourier_compare(s1, s2, split);
    r.status = rep.matched ? "pass" : "fail";
    r.payload = Json{{"lambda", partition_json(lam)},
                     {"mu", partition_json(*mu)},
                     {"source", screening_json(s1)},
                     {"target", screening_json(s2)},
                     {"fourier", fourier_json(rep)}};
    for (std::size_t k = 0; k < s1.terms.size(); ++k) {
        const auto& a = s1.terms[k];
        r.summary += "e_" + std::to_string(a.simple) + " " + a.tag + ": " + a.coeff.str() + "  ~  " + s2.terms[k].coeff.str() +
                     " (sign " + (rep.signs[k] > 0 ? "+" : rep.signs[k] < 0 ? "-" : "?") + ")\n";
    }
    r.summary += rep.matched ? "Fourier transform matches all coefficients\n" : "Fourier transform mismatch\n";
    return r;
}

inline Report render_verb(const Partition& lam, const std::optional<std::vector<int>>& offsets) {
    Report r{"render"};
    const auto pyr = offsets ? build_pyramid(lam, *offsets) : left_aligned(lam);
    r.payload = pyramid_json(pyr);
    r.ascii = render(pyr, RenderFormat::ascii);
    r.tikz = render(pyr, RenderFormat::tikz);
    r.summary = r.ascii;
    return r;
}

inline int worker_count() {
    if (const char* env = std::getenv("QHR_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1) return std::min(w, 64);
        } catch (const std::exception&) {
        }
        throw PreconditionError("QHR_WORKERS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Every pair satisfying the box-move condition with N <= n_max.
inline std::vector<std::pair<Partition, Partition>> box_move_pairs(int n_max) {
    std::vector<std::pair<Partition, Partition>> out;
    for (int n = 2; n <= n_max; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                if (satisfies_box_move(a, b)) out.emplace_back(a, b);
    }
    return out;
}

inline Report verify_all(int n_max, int workers) {
    if (n_max > max_n_bound) throw PreconditionError("verify-all: --max-n is limited to " + std::to_string(max_n_bound));
    Report r{"verify-all"};
    const auto pairs = box_move_pairs(n_max);
    std::vector<std::string> failure(pairs.size());
    std::vector<std::string> membership(pairs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < pairs.size(); k = next++) {
            try {
                const auto d = build_reduction(pairs[k].first, pairs[k].second);
                if (!(d.certificate.abelian_01 && d.certificate.abelian_10)) failure[k] = "abelian";
                membership[k] = d.membership();
            } catch (const std::exception& e) {
                failure[k] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    Json failures = Json::array();
    std::size_t by_conjugator = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!failure[k].empty())
            failures.push_back(Json{{"lambda", partition_json(pairs[k].first)}, {"mu", partition_json(pairs[k].second)}, {"detail", failure[k]}});
        else if (membership[k] == "conjugator")
            ++by_conjugator;
    }
    r.status = failures.empty() ? "pass" : "fail";
    r.payload = Json{{"max_n", n_max},
                     {"pairs", pairs.size()},
                     {"passed", pairs.size() - failures.size()},
                     {"membership_by_conjugator", by_conjugator},
                     {"failures", failures}};
    r.summary = std::to_string(pairs.size() - failures.size()) + "/" + std::to_string(pairs.size()) +
                " box-move pairs with N <= " + std::to_string(n_max) + " certified\n";
    return r;
}

/// Output text for a report in the requested format.
inline std::string emit(const Report& r, Format format, bool quiet) {
    switch (format) {
        case Format::json: {
            Json doc{{"command", r.command}, {"status", r.status}, {"payload", r.payload}};
            if (!quiet) doc["summary"] = r.summary;
            return doc.dump(2) + "\n";
        }
        case Format::tikz:
            if (r.tikz.empty()) throw PreconditionError("'" + r.command + "' has no TikZ output");
            return r.tikz;
        case Format::ascii:
            if (r.ascii.empty()) throw PreconditionError("'" + r.command + "' has no ASCII output");
            return r.ascii;
        case Format::text:
            return quiet ? std::string() : r.summary;
    }
    return {};
}

inline Report error_report(const std::string& command, const std::string& message) {
    Report r{command};
    r.status = "error";
    r.payload = Json{{"error", message}};
    r.summary = "error: " + message + "\n";
    return r;
}

} // namespace qhr::cli
