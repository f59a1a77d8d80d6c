#pragma once

#include <json.hpp>

#include <vector>

#include "qhr/exact_matrix.hpp"
#include "qhr/linalg.hpp"
#include "qhr/partition.hpp"
#include "qhr/rational.hpp"

namespace qhr {

using Json = nlohmann::json;

/// {"n": N, "entries": [[row, col, "num/den"], ...]} sorted by (row, col).
inline Json sparse_json(const ExactMatrix& m) {
    Json entries = Json::array();
    for (const auto& [ix, v] : m.entries()) entries.push_back(Json::array({ix.first, ix.second, to_string(v)}));
    return Json{{"n", m.size()}, {"entries", std::move(entries)}};
}

inline ExactMatrix sparse_from_json(const Json& j) {
    ExactMatrix m(j.at("n").get<int>());
    for (const auto& e : j.at("entries")) {
        const Rational v = e.at(2).is_string() ? parse_rational(e.at(2).get<std::string>()) : Rational(e.at(2).get<long>());
        m.add(e.at(0).get<int>(), e.at(1).get<int>(), v);
    }
    return m;
}

inline Json dense_json(const DenseMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json partition_json(const Partition& p) { return Json(p.parts()); }

inline Json rationals_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

} // namespace qhr
