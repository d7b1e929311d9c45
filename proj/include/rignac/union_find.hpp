#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rignac {

/// Union-find with union by size and an undo trail.
///
/// No path compression, so every union is a single parent-pointer write and
/// rollback restores the exact previous forest. find() is iterative and runs
/// in O(log n).
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int n = 0) : parent_(n), size_(n, 1), components_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    /// Merges the sets of a and b; returns false if already merged.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        --components_;
        return true;
    }

    std::size_t checkpoint() const noexcept { return trail_.size(); }

    /// Undoes every union performed after `mark`.
    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            int b = trail_.back();
            trail_.pop_back();
            int a = parent_[b];
            size_[a] -= size_[b];
            parent_[b] = b;
            ++components_;
        }
    }

    int components() const noexcept { return components_; }
    int element_count() const noexcept { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
    int components_ = 0;
};

} // namespace rignac
