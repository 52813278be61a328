#pragma once

// Test-only oracles, independent of the library's elimination routines.

#include <optional>
#include <vector>

#include "lieposet/exactla.hpp"

namespace oracles {

using lieposet::Matrix;
using lieposet::Rational;

// Rank by brute-force minor enumeration: the largest k such that some k x k
// minor has nonzero determinant, with determinants computed by cofactor
// expansion. Exponential; keep inputs small.
inline Rational cofactor_det(const Matrix<Rational>& m, std::vector<std::size_t> rows,
                             std::vector<std::size_t> cols) {
    const std::size_t k = rows.size();
    if (k == 0) return 1;
    if (k == 1) return m(rows[0], cols[0]);
    Rational acc = 0;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        if (m(rows[0], cols[c]) != 0) {
            std::vector<std::size_t> subRows(rows.begin() + 1, rows.end());
            std::vector<std::size_t> subCols;
            for (std::size_t d = 0; d < k; ++d)
                if (d != c) subCols.push_back(cols[d]);
            acc += Rational(sign) * m(rows[0], cols[c]) * cofactor_det(m, subRows, subCols);
        }
        sign = -sign;
    }
    return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::size_t rank_by_minors(const Matrix<Rational>& m) {
    const std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t k = bound; k >= 1; --k) {
        std::vector<std::vector<std::size_t>> rowSets, colSets;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rowSets);
        subsets(m.cols(), k, 0, cur, colSets);
        for (const auto& rs : rowSets)
            for (const auto& cs : colSets)
                if (cofactor_det(m, rs, cs) != 0) return k;
    }
    return 0;
}

// Plain (fraction-ful) Gaussian elimination over the rationals.
inline std::size_t rank_by_gauss(Matrix<Rational> m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

inline Matrix<Rational> from_rows(const std::vector<std::vector<int>>& rows) {
    Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace oracles
