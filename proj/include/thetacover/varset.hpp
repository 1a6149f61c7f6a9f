#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

namespace thetacover {

/// Canonical variable-index subset: strictly increasing, duplicate-free.
using VarSubset = std::vector<int>;

inline bool is_canonical(const VarSubset& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline VarSubset canonicalize(VarSubset s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const VarSubset& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline bool is_subset(const VarSubset& a, const VarSubset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VarSubset set_union(const VarSubset& a, const VarSubset& b) {
    VarSubset out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VarSubset set_difference(const VarSubset& a, const VarSubset& b) {
    VarSubset out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VarSubset set_intersection(const VarSubset& a, const VarSubset& b) {
    VarSubset out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Graded lexicographic order: shorter sets first, then elementwise.
struct GradedLexLess {
    bool operator()(const VarSubset& a, const VarSubset& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct VarSubsetHash {
    std::size_t operator()(const VarSubset& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}
