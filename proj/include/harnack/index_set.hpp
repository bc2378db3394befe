#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harnack/errors.hpp"

namespace harnack {

/// Strictly increasing 1-based indices i_1 < ... < i_k within [1, n].
class IndexSet {
public:
    IndexSet() = default;

    /// Validates strict increase; range against n is checked separately
    /// because the target dimension is not always known at parse time.
    explicit IndexSet(std::vector<int> indices);

    int k() const { return static_cast<int>(indices_.size()); }
    const std::vector<int>& indices() const { return indices_; }

    /// 1-based position j in [1, k].
    int index(int j) const { return indices_[static_cast<size_t>(j - 1)]; }

    /// Throws InvalidIndexSet unless 1 <= i_1 and i_k <= n and k >= 1.
    void require_valid_for(int n) const;

    std::string to_string() const; // e.g. "1,3,4"

    bool operator==(const IndexSet& other) const { return indices_ == other.indices_; }

private:
    std::vector<int> indices_;
};

/// Every non-empty index set of {1..n}; 2^n - 1 sets, ordered by k then
/// lexicographically. Intended for n <= 5.
std::vector<IndexSet> all_index_sets(int n);

/// Exhaustive for n <= 5; otherwise up to `per_k` distinct seeded random
/// subsets for each k (all of them when fewer exist).
std::vector<IndexSet> index_sets_for(int n, int per_k, std::uint64_t seed);

} // namespace harnack
