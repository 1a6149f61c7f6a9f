#pragma once

#include <cstddef>
#include <vector>

#include "thetacover/rational.hpp"

namespace thetacover {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Row rank over the rationals; destroys the argument copy.
inline int rational_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Incremental row-echelon basis for affine-rank computations: insert vectors
/// one at a time, rank() is the number kept.
class IncrementalRank {
public:
    explicit IncrementalRank(std::size_t cols) : cols_(cols) {}

    /// Returns true if v was independent of the rows seen so far.
    bool insert(std::vector<Rational> v) {
        if (v.size() != cols_) throw std::invalid_argument("IncrementalRank: width mismatch");
        for (const auto& [lead, row] : rows_) {
            if (v[lead] == 0) continue;
            Rational f = v[lead] / row[lead];
            for (std::size_t c = lead; c < cols_; ++c) v[c] -= f * row[c];
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c] != 0) {
                rows_.emplace_back(c, std::move(v));
                // Keep rows ordered by leading column so elimination stays triangular.
                for (std::size_t r = rows_.size(); r > 1 && rows_[r - 1].first < rows_[r - 2].first; --r)
                    std::swap(rows_[r - 1], rows_[r - 2]);
                return true;
            }
        }
        return false;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::size_t cols_;
    std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

/// Exact PSD test for a symmetric rational matrix via LDL^T without pivoting:
/// PSD iff every pivot is >= 0 and any zero pivot has an all-zero trailing row.
inline bool exact_psd(RatMatrix a) {
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r)
        if (a[r].size() != n) throw std::invalid_argument("exact_psd: matrix not square");
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] < 0) return false;
        if (a[k][k] == 0) {
            for (std::size_t c = k + 1; c < n; ++c)
                if (a[k][c] != 0) return false;
            continue;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            Rational f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return true;
}

}
