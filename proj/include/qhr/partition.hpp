#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qhr/errors.hpp"

namespace qhr {

/// Weakly decreasing sequence of positive integers; labels a nilpotent orbit of sl_n.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0) throw DomainError("partition parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Drops zeros and sorts, so that "0,1,2" style inputs are accepted.
    static Partition from_unsorted(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// Comma-separated positive integers, e.g. "5,3,3,3".
    static Partition parse(std::string_view text) {
        std::vector<int> parts;
        std::string item;
        std::stringstream ss{std::string(text)};
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw DomainError("malformed partition '" + std::string(text) + "'");
            parts.push_back(std::stoi(item));
        }
        if (parts.empty()) throw DomainError("empty partition");
        return Partition(std::move(parts));
    }

    int n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    const std::vector<int>& parts() const noexcept { return parts_; }

    /// 1-based part with zero padding past the length.
    int part(std::size_t k) const noexcept { return k >= 1 && k <= parts_.size() ? parts_[k - 1] : 0; }

    /// Prefix sums padded to `len` entries.
    std::vector<int> partial_sums(std::size_t len) const {
        std::vector<int> s(len);
        int acc = 0;
        for (std::size_t k = 0; k < len; ++k) s[k] = (acc += part(k + 1));
        return s;
    }

    /// Conjugate partition (column lengths).
    Partition transpose() const {
        std::vector<int> t;
        if (!parts_.empty()) {
            for (int c = 1; c <= parts_.front(); ++c)
                t.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [c](int p) { return p >= c; })));
        }
        return Partition(std::move(t));
    }

    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

inline Partition transpose(const Partition& p) { return p.transpose(); }

} // namespace qhr
