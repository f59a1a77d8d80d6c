#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qhr/errors.hpp"
#include "qhr/json_io.hpp"
#include "qhr/lie_core.hpp"
#include "qhr/linalg.hpp"
#include "qhr/partition.hpp"

namespace qhr {

/// A box of a pyramid: integer x-coordinate of its centre, row (0 = bottom) and label.
struct Box {
    int x = 0;
    int row = 0;
    int label = 0;
    friend bool operator==(const Box&, const Box&) = default;
};

/// Row-shifted Young diagram with labelled boxes. Rows are listed bottom to top and
/// each row occupies consecutive integer x-coordinates; only even pyramids exist here.
class Pyramid {
public:
    Pyramid() = default;

    /// Labels assigned canonically: x descending, then row ascending.
    static Pyramid canonical(const Partition& lam, const std::vector<int>& row_offset) {
        if (row_offset.size() != lam.length())
            throw DimensionError("expected " + std::to_string(lam.length()) + " row offsets, got " +
                                 std::to_string(row_offset.size()));
        std::vector<Box> boxes;
        for (std::size_t r = 0; r < lam.length(); ++r)
            for (int k = 0; k < lam.parts()[r]; ++k) boxes.push_back({row_offset[r] - k, int(r), 0});
        std::sort(boxes.begin(), boxes.end(), canonical_order);
        for (std::size_t k = 0; k < boxes.size(); ++k) boxes[k].label = int(k) + 1;
        return from_boxes(std::move(boxes));
    }

    /// General constructor; labels need not be canonical, but must be a bijection onto
    /// 1..N with x weakly decreasing in the label.
    static Pyramid from_boxes(std::vector<Box> boxes) {
        Pyramid p;
        std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.label < b.label; });
        for (std::size_t k = 0; k < boxes.size(); ++k) {
            if (boxes[k].label != int(k) + 1) throw DomainError("pyramid labels must be a bijection onto 1..N");
            if (k > 0 && boxes[k].x > boxes[k - 1].x)
                throw DomainError("pyramid labels must not increase to the right");
        }
        std::map<int, std::vector<int>> rows;
        std::set<std::pair<int, int>> seen;
        for (const auto& b : boxes) {
            if (!seen.insert({b.x, b.row}).second) throw DomainError("two boxes share a position");
            rows[b.row].push_back(b.x);
        }
        std::vector<int> lengths;
        int expect = 0;
        for (auto& [row, xs] : rows) {
            if (row != expect++) throw DomainError("pyramid rows must be 0..r-1 without gaps");
            std::sort(xs.begin(), xs.end());
            if (xs.back() - xs.front() + 1 != int(xs.size())) throw DomainError("pyramid row is not contiguous");
            lengths.push_back(int(xs.size()));
            p.row_offset_.push_back(xs.back());
        }
        p.partition_ = Partition(lengths);
        p.boxes_ = std::move(boxes);
        return p;
    }

    int n() const noexcept { return partition_.n(); }
    const Partition& partition() const noexcept { return partition_; }
    /// x-coordinate of the rightmost box of each row.
    const std::vector<int>& row_offset() const noexcept { return row_offset_; }
    /// Boxes sorted by label.
    const std::vector<Box>& boxes() const noexcept { return boxes_; }
    const Box& box(int label) const { return boxes_.at(std::size_t(label - 1)); }
    int x_of(int label) const { return box(label).x; }
    bool even() const noexcept { return true; }

    std::optional<int> label_at(int x, int row) const {
        for (const auto& b : boxes_)
            if (b.x == x && b.row == row) return b.label;
        return std::nullopt;
    }

    bool canonically_labelled() const {
        for (std::size_t k = 1; k < boxes_.size(); ++k)
            if (!canonical_order(boxes_[k - 1], boxes_[k])) return false;
        return true;
    }

    /// Every row lies within the x-range of the row below it.
    bool is_pyramid_shape() const {
        for (std::size_t r = 1; r < row_offset_.size(); ++r) {
            const int lo = row_offset_[r] - partition_.parts()[r] + 1;
            const int below_lo = row_offset_[r - 1] - partition_.parts()[r - 1] + 1;
            if (lo < below_lo || row_offset_[r] > row_offset_[r - 1]) return false;
        }
        return true;
    }

    friend bool operator==(const Pyramid& a, const Pyramid& b) { return a.boxes_ == b.boxes_; }

private:
    static bool canonical_order(const Box& a, const Box& b) {
        return a.x != b.x ? a.x > b.x : a.row < b.row;
    }

    Partition partition_;
    std::vector<int> row_offset_;
    std::vector<Box> boxes_;
};

/// The good pair (f, x) read off a pyramid.
struct GoodPair {
    ExactMatrix f;
    GradingElement x;
    Pyramid pyramid;
};

inline Pyramid build_pyramid(const Partition& lam, const std::vector<int>& offsets) {
    return Pyramid::canonical(lam, offsets);
}

/// All rows share their left end.
inline Pyramid left_aligned(const Partition& lam) {
    std::vector<int> off;
    for (int p : lam.parts()) off.push_back(p - 1);
    return build_pyramid(lam, off);
}

inline Pyramid right_aligned(const Partition& lam) {
    return build_pyramid(lam, std::vector<int>(lam.length(), 0));
}

enum class Stage { source, target };

/// Tableaux used for a box move of lam at rows (i, j): rows 1..i right-aligned, rows i..j
/// left-aligned, rows j..n right-aligned. The target shifts rows j..n one step left and
/// moves the left-end box of row j onto the left end of row i, keeping all labels.
inline Pyramid align_for_theorem(const Partition& lam, int i, int j, Stage stage) {
    const int n = static_cast<int>(lam.length());
    if (i < 1 || j <= i || j > n)
        throw PreconditionError("inconsistent box-move rows (" + std::to_string(i) + "," + std::to_string(j) +
                                ") for [" + lam.str() + "]");
    for (int k = i + 1; k < j; ++k)
        if (lam.part(k) != lam.part(j))
            throw PreconditionError("rows " + std::to_string(i + 1) + ".." + std::to_string(j) +
                                    " must have equal length for a box move");
    std::vector<int> ends(static_cast<std::size_t>(n));
    for (int r = i; r <= j; ++r) ends[r - 1] = lam.part(r) - 1;  // left ends at x = 0
    for (int r = 1; r < i; ++r) ends[r - 1] = ends[i - 1];
    for (int r = j + 1; r <= n; ++r) ends[r - 1] = ends[j - 1];
    Pyramid source = build_pyramid(lam, ends);
    if (stage == Stage::source) return source;

    std::vector<Box> boxes = source.boxes();
    for (auto& b : boxes)
        if (b.row >= j - 1) --b.x;
    for (auto& b : boxes)
        if (b.row == j - 1 && b.x == -1) b.row = i - 1;
    return Pyramid::from_boxes(std::move(boxes));
}

/// f = sum of E_{i,j} over horizontally adjacent boxes with i immediately left of j.
inline ExactMatrix nilpotent_from_pyramid(const Pyramid& p) {
    ExactMatrix f(p.n());
    std::map<std::pair<int, int>, int> at;
    for (const auto& b : p.boxes()) at[{b.x, b.row}] = b.label;
    for (const auto& b : p.boxes()) {
        auto right = at.find({b.x + 1, b.row});
        if (right != at.end()) f.set(b.label, right->second, 1);
    }
    return f;
}

inline GradingElement grading_element_of(const Pyramid& p) {
    const int n = p.n();
    Rational mean = 0;
    for (const auto& b : p.boxes()) mean += b.x;
    if (n > 0) mean /= n;
    std::vector<Rational> diag;
    for (const auto& b : p.boxes()) diag.push_back(Rational(b.x) - mean);
    return GradingElement(std::move(diag));
}

inline GoodPair good_pair_of(const Pyramid& p) {
    return {nilpotent_from_pyramid(p), grading_element_of(p), p};
}

namespace detail {

// Basis of the ad(x)-eigenspace of gl_n; grade 0 includes the diagonal units.
inline std::map<Rational, std::vector<ExactMatrix>> graded_basis(const GradingElement& x) {
    const int n = x.size();
    std::map<Rational, std::vector<ExactMatrix>> g;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) g[x[a] - x[b]].push_back(ExactMatrix::unit(n, a, b));
    return g;
}

inline std::size_t ad_rank(const ExactMatrix& f, const std::vector<ExactMatrix>& basis) {
    if (basis.empty()) return 0;
    std::vector<ExactMatrix> images;
    images.reserve(basis.size());
    for (const auto& u : basis) images.push_back(bracket(f, u));
    return rank(columns_of(images, f.size()));
}

} // namespace detail

/// f in g_{-1}, ker ad(f) meets g_+ trivially and g_- lies in the image of ad(f).
/// Computed in gl_n; the centre only adds to ker ad(f) in degree 0.
inline bool is_good_grading(const ExactMatrix& f, const GradingElement& x) {
    if (f.size() != x.size()) throw DimensionError("nilpotent and grading element have different sizes");
    if (!is_nilpotent(f)) throw DomainError("is_good_grading: f is not nilpotent");
    for (const auto& [ix, v] : f.entries())
        if (x[ix.first] - x[ix.second] != -1) return false;
    const auto g = detail::graded_basis(x);
    for (const auto& [d, basis] : g) {
        if (d > 0 && detail::ad_rank(f, basis) != basis.size()) return false;
        if (d < 0) {
            auto above = g.find(d + 1);
            const std::size_t image = above == g.end() ? 0 : detail::ad_rank(f, above->second);
            if (image != basis.size()) return false;
        }
    }
    return true;
}

inline Json pyramid_json(const Pyramid& p) {
    Json labels = Json::array();
    for (const auto& b : p.boxes()) labels.push_back(Json::array({b.x, b.row, b.label}));
    return Json{{"partition", partition_json(p.partition())}, {"row_offset", p.row_offset()}, {"labels", labels}};
}

enum class RenderFormat { ascii, tikz };

namespace detail {

inline std::string tikz_picture(const Pyramid& p, const std::set<int>& shaded = {}) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[every node/.style={draw,regular polygon sides=4,minimum size=1cm,"
          "line width=0.04em},scale=0.58, transform shape]\n";
    int lo = 0, hi = 0;
    for (const auto& b : p.boxes()) {
        lo = std::min(lo, b.x);
        hi = std::max(hi, b.x);
        os << "  \\node" << (shaded.count(b.label) ? "[fill=gray!50]" : "") << " at (" << b.x << "," << b.row
           << ")  {" << b.label << "};\n";
    }
    os << "  \\draw[<-] (" << hi + 2 << ",-1) -- (" << lo - 2 << ",-1);\n";
    os << "  \\node[draw=none,regular polygon sides=0,minimum size=0pt,line width=0pt] at (" << hi + 2
       << ",-0.5) {{$x$-axis}};\n";
    os << "\\end{tikzpicture}";
    return os.str();
}

} // namespace detail

inline std::string tikz_document(const std::vector<std::string>& pictures) {
    std::string s = "\\documentclass{standalone}\n\\usepackage{tikz}\n\\begin{document}\n";
    for (std::size_t k = 0; k < pictures.size(); ++k) s += (k ? "\\hspace{2cm}\n" : "") + pictures[k] + "\n";
    return s + "\\end{document}\n";
}

/// ASCII: rows top to bottom as [label] cells, then the x-axis with coordinates.
/// TikZ: a standalone document with one node per box.
inline std::string render(const Pyramid& p, RenderFormat format) {
    if (format == RenderFormat::tikz) return tikz_document({detail::tikz_picture(p)});
    if (p.boxes().empty()) return "(empty)\n";
    int lo = p.boxes().front().x, hi = lo;
    for (const auto& b : p.boxes()) {
        lo = std::min(lo, b.x);
        hi = std::max(hi, b.x);
    }
    const int coord_width = static_cast<int>(std::max(std::to_string(lo).size(), std::to_string(hi).size()));
    const int width = std::max(static_cast<int>(std::to_string(p.n()).size()), coord_width - 1);
    auto pad = [](const std::string& s, int w) { return std::string(std::size_t(std::max(0, w - int(s.size()))), ' ') + s; };
    std::ostringstream os;
    for (int row = int(p.row_offset().size()) - 1; row >= 0; --row) {
        std::string line;
        for (int x = lo; x <= hi; ++x) {
            auto label = p.label_at(x, row);
            line += label ? "[" + pad(std::to_string(*label), width) + "]" : std::string(std::size_t(width) + 2, ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << "\n";
    }
    os << std::string(std::size_t((hi - lo + 1) * (width + 2)), '-') << "> x\n";
    std::string axis;
    for (int x = lo; x <= hi; ++x) axis += pad(std::to_string(x), width + 1) + " ";
    axis.erase(axis.find_last_not_of(' ') + 1);
    os << axis << "\n";
    return os.str();
}

} // namespace qhr
