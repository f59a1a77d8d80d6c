#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>

#include "qhr/exact_matrix.hpp"
#include "qhr/partition.hpp"
#include "qhr/rational.hpp"

namespace qhr::testing {

/// Matrix from (row, col, value) triples.
inline ExactMatrix mat(int n, std::initializer_list<std::tuple<int, int, long>> entries) {
    ExactMatrix m(n);
    for (const auto& [r, c, v] : entries) m.add(r, c, Rational(v));
    return m;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Partition P(const char* text) { return Partition::parse(text); }

/// Deterministic generator for property tests.
struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned long long seed) : state(seed) {}
    int next(int lo, int hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + int((state >> 33) % (unsigned long long)(hi - lo + 1));
    }
};

} // namespace qhr::testing
