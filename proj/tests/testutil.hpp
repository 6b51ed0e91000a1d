#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ihom/linalg.hpp"

namespace testutil {

/// Textbook row-echelon rank over GF(2) on plain int rows — an elimination
/// path independent of the library's column-based reducer.
inline int naiveRank(std::vector<std::vector<int>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t pivot = row;
        while (pivot < nr && rows[pivot][col] % 2 == 0) ++pivot;
        if (pivot == nr) continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i != row && rows[i][col] % 2 != 0)
                for (std::size_t j = 0; j < nc; ++j) rows[i][j] = (rows[i][j] + rows[row][j]) % 2;
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<int>> toIntRows(const ihom::MatrixZ2& m) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.rows()),
                                       std::vector<int>(static_cast<std::size_t>(m.cols()), 0));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = int(m(i, j).v);
    return rows;
}

inline ihom::MatrixZ2 randomMatrixZ2(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
    ihom::MatrixZ2 m(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i) m(i, j) = ihom::Z2(static_cast<int>(rng() & 1));
    return m;
}

inline ihom::VectorZ2 randomVectorZ2(std::mt19937_64& rng, Eigen::Index n) {
    ihom::VectorZ2 v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = ihom::Z2(static_cast<int>(rng() & 1));
    return v;
}

/// Number of coefficient vectors x (over all 2^cols of them) with m x = 0.
/// Brute force; keep cols small.
inline std::uint64_t kernelSizeByEnumeration(const ihom::MatrixZ2& m) {
    const Eigen::Index cols = m.cols();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cols); ++mask) {
        ihom::VectorZ2 acc = ihom::VectorZ2::Zero(m.rows());
        for (Eigen::Index j = 0; j < cols; ++j)
            if ((mask >> j) & 1) acc += m.col(j);
        bool zero = true;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (acc[i].isSet()) zero = false;
        if (zero) ++count;
    }
    return count;
}

inline bool inSpan(const ihom::MatrixZ2& basis, const ihom::VectorZ2& v) {
    ihom::ColumnReducer<ihom::Z2> red(basis.rows());
    for (Eigen::Index j = 0; j < basis.cols(); ++j) red.insert(basis.col(j));
    return red.spans(v);
}

inline bool isZeroVector(const ihom::VectorZ2& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i].isSet()) return false;
    return true;
}

inline bool sameMatrix(const ihom::MatrixZ2& a, const ihom::MatrixZ2& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

inline ihom::MatrixZ2 fromRows(const std::vector<std::vector<int>>& rows) {
    const Eigen::Index nr = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index nc = nr == 0 ? 0 : static_cast<Eigen::Index>(rows[0].size());
    ihom::MatrixZ2 m(nr, nc);
    for (Eigen::Index i = 0; i < nr; ++i)
        for (Eigen::Index j = 0; j < nc; ++j)
            m(i, j) = ihom::Z2(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

}  // namespace testutil
