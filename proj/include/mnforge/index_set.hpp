#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "mnforge/errors.hpp"

namespace mnforge {

// Finite set of generator indices (all >= 1), kept sorted ascending.
// Doubles as a radical mask (which square roots a field term carries) and as
// a twist parity (which indices have odd exponent in a group word).  The
// default ordering is lexicographic on the sorted index list, which is the
// canonical term order for field-element output.
class IndexSet {
  public:
    IndexSet() = default;

    IndexSet(std::initializer_list<std::uint32_t> indices)
        : ix_(indices) {
        normalize();
    }

    explicit IndexSet(std::vector<std::uint32_t> indices) : ix_(std::move(indices)) { normalize(); }

    static IndexSet single(std::uint32_t i) { return IndexSet({i}); }

    bool empty() const { return ix_.empty(); }
    std::size_t size() const { return ix_.size(); }

    bool contains(std::uint32_t i) const {
        return std::binary_search(ix_.begin(), ix_.end(), i);
    }

    // 0 when empty.
    std::uint32_t max_index() const { return ix_.empty() ? 0 : ix_.back(); }

    const std::vector<std::uint32_t>& indices() const { return ix_; }

    auto begin() const { return ix_.begin(); }
    auto end() const { return ix_.end(); }

    friend IndexSet sym_diff(const IndexSet& a, const IndexSet& b) {
        IndexSet out;
        std::set_symmetric_difference(a.ix_.begin(), a.ix_.end(), b.ix_.begin(), b.ix_.end(),
                                      std::back_inserter(out.ix_));
        return out;
    }

    friend IndexSet intersection(const IndexSet& a, const IndexSet& b) {
        IndexSet out;
        std::set_intersection(a.ix_.begin(), a.ix_.end(), b.ix_.begin(), b.ix_.end(),
                              std::back_inserter(out.ix_));
        return out;
    }

    // |a ∩ b| without building the intersection.
    friend std::size_t shared_count(const IndexSet& a, const IndexSet& b) {
        std::size_t n = 0;
        auto i = a.ix_.begin();
        auto j = b.ix_.begin();
        while (i != a.ix_.end() && j != b.ix_.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else {
                ++n;
                ++i;
                ++j;
            }
        }
        return n;
    }

    auto operator<=>(const IndexSet&) const = default;

  private:
    void normalize() {
        std::sort(ix_.begin(), ix_.end());
        ix_.erase(std::unique(ix_.begin(), ix_.end()), ix_.end());
        if (!ix_.empty() && ix_.front() == 0) throw BadArguments("index 0 is not a valid generator index");
    }

    std::vector<std::uint32_t> ix_;
};

using RadicalMask = IndexSet;
using Parity = IndexSet;

}  // namespace mnforge
