#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mnforge/errors.hpp"
#include "mnforge/index_set.hpp"
#include "mnforge/rational.hpp"

namespace mnforge {

// Element of the free abelian group on generators x1, x2, ...: a finite list
// of (index, exponent) pairs, ascending by index, exponents nonzero.  The
// order is lexicographic on the exponent sequence read from index 1 upward
// (missing indices count as exponent 0), which is a translation-invariant
// total order.
class GroupWord {
  public:
    GroupWord() = default;

    static GroupWord generator(std::uint32_t i, Int n = 1) {
        if (i == 0) throw BadArguments("generator index must be positive");
        GroupWord w;
        if (n != 0) w.exps_.emplace_back(i, std::move(n));
        return w;
    }

    bool is_identity() const { return exps_.empty(); }

    Int exponent(std::uint32_t i) const {
        for (const auto& [j, n] : exps_) {
            if (j == i) return n;
            if (j > i) break;
        }
        return 0;
    }

    std::uint32_t max_index() const { return exps_.empty() ? 0 : exps_.back().first; }

    const std::vector<std::pair<std::uint32_t, Int>>& exponents() const { return exps_; }

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b) {
        GroupWord out;
        std::size_t i = 0, j = 0;
        while (i < a.exps_.size() || j < b.exps_.size()) {
            if (j == b.exps_.size() || (i < a.exps_.size() && a.exps_[i].first < b.exps_[j].first)) {
                out.exps_.push_back(a.exps_[i++]);
            } else if (i == a.exps_.size() || b.exps_[j].first < a.exps_[i].first) {
                out.exps_.push_back(b.exps_[j++]);
            } else {
                Int n = a.exps_[i].second + b.exps_[j].second;
                if (n != 0) out.exps_.emplace_back(a.exps_[i].first, std::move(n));
                ++i, ++j;
            }
        }
        return out;
    }

    GroupWord inverse() const {
        GroupWord out;
        out.exps_.reserve(exps_.size());
        for (const auto& [i, n] : exps_) out.exps_.emplace_back(i, -n);
        return out;
    }

    GroupWord pow(const Int& k) const {
        GroupWord out;
        if (k == 0) return out;
        out.exps_.reserve(exps_.size());
        for (const auto& [i, n] : exps_) out.exps_.emplace_back(i, n * k);
        return out;
    }

    // True when every exponent is even, i.e. the word lies in the subgroup of
    // squares.
    bool all_even() const {
        for (const auto& [i, n] : exps_)
            if (n % 2 != 0) return false;
        return true;
    }

    // Indices carrying an odd exponent; this is the parity datum that drives
    // the twisting automorphism attached to the word.
    Parity odd_indices() const {
        std::vector<std::uint32_t> odd;
        for (const auto& [i, n] : exps_)
            if (n % 2 != 0) odd.push_back(i);
        return Parity(std::move(odd));
    }

    bool operator==(const GroupWord&) const = default;

    // Lexicographic comparison of exponent sequences from index 1 upward;
    // a missing index reads as exponent 0.
    friend std::strong_ordering operator<=>(const GroupWord& a, const GroupWord& b) {
        std::size_t i = 0, j = 0;
        while (i < a.exps_.size() || j < b.exps_.size()) {
            std::uint32_t ia = i < a.exps_.size() ? a.exps_[i].first : UINT32_MAX;
            std::uint32_t ib = j < b.exps_.size() ? b.exps_[j].first : UINT32_MAX;
            if (ia < ib) {
                // b has exponent 0 here.
                if (a.exps_[i].second != 0)
                    return a.exps_[i].second > 0 ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
                ++i;
            } else if (ib < ia) {
                if (b.exps_[j].second != 0)
                    return b.exps_[j].second > 0 ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
                ++j;
            } else {
                if (auto c = a.exps_[i].second.compare(b.exps_[j].second); c != 0)
                    return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
                ++i, ++j;
            }
        }
        return std::strong_ordering::equal;
    }

  private:
    std::vector<std::pair<std::uint32_t, Int>> exps_;
};

// Canonical text: "e" for the identity, otherwise "x{i}" / "x{i}^{n}" factors
// joined by "*" in index order, with "^1" omitted.  Example: "x1^-1*x3^2".
inline std::string to_string(const GroupWord& w) {
    if (w.is_identity()) return "e";
    std::string out;
    for (const auto& [i, n] : w.exponents()) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i);
        if (n != 1) out += "^" + to_string(n);
    }
    return out;
}

}  // namespace mnforge
