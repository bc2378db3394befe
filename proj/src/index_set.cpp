#include "harnack/index_set.hpp"

#include <algorithm>
#include <set>

#include "harnack/rng.hpp"

namespace harnack {

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
    for (size_t i = 1; i < indices_.size(); ++i)
        if (indices_[i] <= indices_[i - 1])
            throw InvalidIndexSet("indices must be strictly increasing");
}

void IndexSet::require_valid_for(int n) const {
    if (indices_.empty()) throw InvalidIndexSet("index set must be non-empty");
    if (indices_.front() < 1 || indices_.back() > n)
        throw InvalidIndexSet("index set out of range for dimension " + std::to_string(n));
}

std::string IndexSet::to_string() const {
    std::string out;
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(indices_[i]);
    }
    return out;
}

std::vector<IndexSet> all_index_sets(int n) {
    std::vector<IndexSet> out;
    for (int k = 1; k <= n; ++k) {
        // Lexicographic k-combinations of {1..n}.
        std::vector<int> c(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i + 1;
        while (true) {
            out.emplace_back(c);
            int i = k - 1;
            while (i >= 0 && c[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
            if (i < 0) break;
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::vector<IndexSet> index_sets_for(int n, int per_k, std::uint64_t seed) {
    if (n <= 5) return all_index_sets(n);

    std::vector<IndexSet> out;
    Rng rng(derive_seed(seed, 0x1d5e75));
    for (int k = 1; k <= n; ++k) {
        double combos = 1.0;
        for (int i = 0; i < k; ++i) combos = combos * (n - i) / (i + 1);
        if (combos <= per_k) {
            for (auto& s : all_index_sets(n))
                if (s.k() == k) out.push_back(std::move(s));
            continue;
        }
        std::set<std::vector<int>> seen;
        while (static_cast<int>(seen.size()) < per_k) {
            // Draw k distinct indices by rejection, then sort.
            std::set<int> draw;
            while (static_cast<int>(draw.size()) < k)
                draw.insert(1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n)));
            seen.emplace(draw.begin(), draw.end());
        }
        for (const auto& v : seen) out.emplace_back(v);
    }
    return out;
}

} // namespace harnack
