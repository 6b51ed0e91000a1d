#pragma once

#include <cassert>
#include <cstddef>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ihom/z2.hpp"

namespace ihom {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixZ2 = MatrixX<Z2>;
using VectorZ2 = VectorX<Z2>;

namespace detail {

/// dst ^= src over n bytes. A plain loop so the compiler vectorizes it.
inline void xorBytes(unsigned char* dst, const unsigned char* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

/// First index in [from, limit) with a nonzero entry, or -1 if none.
template <typename Scalar>
Index findNonzero(const VectorX<Scalar>& v, Index from, Index limit) {
    if constexpr (std::is_same_v<Scalar, Z2>) {
        if (from >= limit) return -1;
        const auto* base = reinterpret_cast<const unsigned char*>(v.data());
        const void* hit = std::memchr(base + from, 1, static_cast<std::size_t>(limit - from));
        if (hit == nullptr) return -1;
        return static_cast<Index>(static_cast<const unsigned char*>(hit) - base);
    } else {
        for (Index i = from; i < limit; ++i)
            if (v[i] != Scalar(0)) return i;
        return -1;
    }
}

/// dst -= factor * src. Over the two-element field the factor is always 1 and
/// the update is a byte XOR over the whole column.
template <typename Scalar>
void cancelInto(VectorX<Scalar>& dst, const VectorX<Scalar>& src, Scalar factor) {
    assert(dst.size() == src.size());
    if constexpr (std::is_same_v<Scalar, Z2>) {
        (void)factor;
        xorBytes(reinterpret_cast<unsigned char*>(dst.data()),
                 reinterpret_cast<const unsigned char*>(src.data()),
                 static_cast<std::size_t>(dst.size()));
    } else {
        dst -= factor * src;
    }
}

}  // namespace detail

/// Incremental column-echelon elimination over an exact scalar field.
///
/// Columns are inserted left to right; each stored column owns a distinct
/// pivot row (the first nonzero row of its reduced form, normalized to 1).
/// reduce() cancels the leading entries of a vector against stored columns
/// until the leading entry lands on a pivot-free row or the vector vanishes.
/// Pivot rows can be confined to an initial block so that augmented columns
/// (kernel and solve bookkeeping below the block) never host pivots.
///
/// All choices are index-based and deterministic: the same input columns in
/// the same order always produce the same stored basis.
template <typename Scalar>
class ColumnReducer {
public:
    /// A stored-column index together with the cancellation factor applied.
    using Use = std::pair<Index, Scalar>;

    explicit ColumnReducer(Index rows, Index pivotRows = -1)
        : rows_(rows),
          pivotRows_(pivotRows < 0 ? rows : pivotRows),
          pivotOfRow_(static_cast<std::size_t>(pivotRows_), -1) {
        assert(pivotRows_ <= rows_);
    }

    Index rows() const { return rows_; }
    Index rank() const { return static_cast<Index>(columns_.size()); }

    const VectorX<Scalar>& column(Index i) const { return columns_[static_cast<std::size_t>(i)]; }
    Index pivotRowOfColumn(Index i) const { return pivotRowOfColumn_[static_cast<std::size_t>(i)]; }

    /// Reduces v in place against the stored columns. Returns the pivot row of
    /// the reduced vector inside the pivot block, or -1 if that block
    /// vanished. When `used` is given, appends one (column, factor) entry per
    /// cancellation; each stored column appears at most once.
    Index reduce(VectorX<Scalar>& v, std::vector<Use>* used = nullptr) const {
        assert(v.size() == rows_);
        Index r = detail::findNonzero(v, Index{0}, pivotRows_);
        while (r >= 0) {
            const int c = pivotOfRow_[static_cast<std::size_t>(r)];
            if (c < 0) return r;
            const Scalar factor = v[r];  // stored pivot entries are normalized to 1
            detail::cancelInto(v, columns_[static_cast<std::size_t>(c)], factor);
            if (used != nullptr) used->emplace_back(static_cast<Index>(c), factor);
            r = detail::findNonzero(v, r + 1, pivotRows_);
        }
        return -1;
    }

    /// Stores an already reduced vector whose pivot row is r.
    void insertReduced(VectorX<Scalar> v, Index r) {
        assert(r >= 0 && r < pivotRows_);
        assert(v[r] != Scalar(0));
        assert(pivotOfRow_[static_cast<std::size_t>(r)] < 0);
        if constexpr (!std::is_same_v<Scalar, Z2>) {
            v /= v[r];
        }
        pivotOfRow_[static_cast<std::size_t>(r)] = static_cast<int>(columns_.size());
        pivotRowOfColumn_.push_back(r);
        columns_.push_back(std::move(v));
    }

    /// Reduces v and stores it if it survives. Returns the pivot row, or -1
    /// when v lies in the span of the stored columns.
    Index insert(VectorX<Scalar> v, std::vector<Use>* used = nullptr) {
        const Index r = reduce(v, used);
        if (r >= 0) insertReduced(std::move(v), r);
        return r;
    }

    /// True when v belongs to the span of the stored columns.
    bool spans(VectorX<Scalar> v) const { return reduce(v) < 0; }

private:
    Index rows_;
    Index pivotRows_;
    std::vector<int> pivotOfRow_;
    std::vector<Index> pivotRowOfColumn_;
    std::vector<VectorX<Scalar>> columns_;
};

/// Rank of a dense matrix over its exact scalar field.
template <typename Scalar>
Index rank(const MatrixX<Scalar>& m) {
    ColumnReducer<Scalar> red(m.rows());
    for (Index j = 0; j < m.cols(); ++j) red.insert(m.col(j));
    return red.rank();
}

/// Echelon basis of the column span, one basis vector per matrix column that
/// introduced a new pivot, each reduced against the earlier ones.
template <typename Scalar>
MatrixX<Scalar> imageBasis(const MatrixX<Scalar>& m) {
    ColumnReducer<Scalar> red(m.rows());
    for (Index j = 0; j < m.cols(); ++j) red.insert(m.col(j));
    MatrixX<Scalar> out(m.rows(), red.rank());
    for (Index i = 0; i < red.rank(); ++i) out.col(i) = red.column(i);
    return out;
}

/// Basis of the kernel of m, as columns. Built by eliminating the columns of
/// [m; I] with pivots confined to the m block: every column whose m part dies
/// carries a kernel coefficient vector in its identity part.
template <typename Scalar>
MatrixX<Scalar> nullspaceBasis(const MatrixX<Scalar>& m) {
    const Index rows = m.rows();
    const Index cols = m.cols();
    ColumnReducer<Scalar> red(rows + cols, rows);
    std::vector<VectorX<Scalar>> kernel;
    VectorX<Scalar> aug(rows + cols);
    for (Index j = 0; j < cols; ++j) {
        aug.setZero();
        aug.head(rows) = m.col(j);
        aug[rows + j] = Scalar(1);
        VectorX<Scalar> w = aug;
        const Index r = red.reduce(w);
        if (r < 0) {
            kernel.push_back(w.tail(cols));
        } else {
            red.insertReduced(std::move(w), r);
        }
    }
    MatrixX<Scalar> out(cols, static_cast<Index>(kernel.size()));
    for (Index k = 0; k < out.cols(); ++k) out.col(k) = kernel[static_cast<std::size_t>(k)];
    return out;
}

/// Exact linear solver for repeated right-hand sides against a fixed matrix.
template <typename Scalar>
class Solver {
public:
    explicit Solver(const MatrixX<Scalar>& m)
        : rows_(m.rows()), cols_(m.cols()), red_(m.rows() + m.cols(), m.rows()) {
        VectorX<Scalar> aug(rows_ + cols_);
        for (Index j = 0; j < cols_; ++j) {
            aug.setZero();
            aug.head(rows_) = m.col(j);
            aug[rows_ + j] = Scalar(1);
            red_.insert(aug);
        }
    }

    Index rank() const { return red_.rank(); }

    /// A solution x of M x = b, or nullopt when b is outside the column span.
    std::optional<VectorX<Scalar>> solve(const VectorX<Scalar>& b) const {
        assert(b.size() == rows_);
        VectorX<Scalar> aug = VectorX<Scalar>::Zero(rows_ + cols_);
        aug.head(rows_) = b;
        if (red_.reduce(aug) >= 0) return std::nullopt;
        VectorX<Scalar> x = -aug.tail(cols_);
        return x;
    }

private:
    Index rows_;
    Index cols_;
    ColumnReducer<Scalar> red_;
};

/// One-shot convenience wrapper around Solver.
template <typename Scalar>
std::optional<VectorX<Scalar>> solve(const MatrixX<Scalar>& m, const VectorX<Scalar>& b) {
    return Solver<Scalar>(m).solve(b);
}

/// Quotient of the span of `cycles` by the span of `boundaries`, with stored
/// class representatives and coordinate evaluation in the representative
/// basis.
///
/// The boundary columns are eliminated first, then the cycle columns; each
/// cycle column that still introduces a new pivot becomes, in its reduced
/// form, the representative of a new quotient class. Coordinates of a vector
/// are read off from which representative columns its reduction consumes.
template <typename Scalar>
class QuotientSpace {
public:
    QuotientSpace() : red_(0) {}

    QuotientSpace(const MatrixX<Scalar>& cycles, const MatrixX<Scalar>& boundaries)
        : ambient_(cycles.rows()), red_(cycles.rows()) {
        if (boundaries.cols() > 0 && boundaries.rows() != cycles.rows())
            throw std::invalid_argument("QuotientSpace: ambient dimensions differ");
        {
            ColumnReducer<Scalar> cycleSpan(cycles.rows());
            for (Index j = 0; j < cycles.cols(); ++j) cycleSpan.insert(cycles.col(j));
            for (Index j = 0; j < boundaries.cols(); ++j) {
                if (!cycleSpan.spans(boundaries.col(j)))
                    throw std::invalid_argument("QuotientSpace: boundary outside the cycle span");
            }
        }
        for (Index j = 0; j < boundaries.cols(); ++j) insertColumn(boundaries.col(j), false);
        for (Index j = 0; j < cycles.cols(); ++j) insertColumn(cycles.col(j), true);
        reps_.resize(ambient_, dim_);
        for (Index i = 0; i < red_.rank(); ++i) {
            const Index k = classOfColumn_[static_cast<std::size_t>(i)];
            if (k >= 0) reps_.col(k) = red_.column(i);
        }
    }

    Index dimension() const { return dim_; }
    Index ambientDimension() const { return ambient_; }

    /// One ambient column vector per quotient class, deterministic.
    const MatrixX<Scalar>& representatives() const { return reps_; }

    /// True when v lies in the cycle span.
    bool contains(const VectorX<Scalar>& v) const {
        VectorX<Scalar> w = v;
        return red_.reduce(w) < 0;
    }

    /// Coordinates of [v] in the representative basis, or nullopt when v is
    /// not in the cycle span.
    std::optional<VectorX<Scalar>> tryCoordinates(const VectorX<Scalar>& v) const {
        std::vector<typename ColumnReducer<Scalar>::Use> used;
        VectorX<Scalar> w = v;
        if (red_.reduce(w, &used) >= 0) return std::nullopt;
        VectorX<Scalar> out = VectorX<Scalar>::Zero(dim_);
        for (const auto& [col, factor] : used) {
            const Index k = classOfColumn_[static_cast<std::size_t>(col)];
            if (k >= 0) out[k] += factor;
        }
        return out;
    }

    /// Coordinates of [v]; throws when v is not in the cycle span.
    VectorX<Scalar> coordinates(const VectorX<Scalar>& v) const {
        auto c = tryCoordinates(v);
        if (!c) throw std::invalid_argument("QuotientSpace: vector outside the cycle span");
        return *c;
    }

private:
    void insertColumn(VectorX<Scalar> v, bool isCycle) {
        const Index r = red_.reduce(v);
        if (r < 0) return;
        classOfColumn_.push_back(isCycle ? dim_++ : Index{-1});
        red_.insertReduced(std::move(v), r);
    }

    Index ambient_ = 0;
    Index dim_ = 0;
    ColumnReducer<Scalar> red_;
    std::vector<Index> classOfColumn_;
    MatrixX<Scalar> reps_;
};

/// Extracts the listed columns into a fresh matrix, in list order.
template <typename Scalar>
MatrixX<Scalar> selectColumns(const MatrixX<Scalar>& m, const std::vector<Index>& idx) {
    MatrixX<Scalar> out(m.rows(), static_cast<Index>(idx.size()));
    for (Index k = 0; k < out.cols(); ++k) out.col(k) = m.col(idx[static_cast<std::size_t>(k)]);
    return out;
}

/// Extracts the listed rows into a fresh matrix, in list order.
template <typename Scalar>
MatrixX<Scalar> selectRows(const MatrixX<Scalar>& m, const std::vector<Index>& idx) {
    MatrixX<Scalar> out(static_cast<Index>(idx.size()), m.cols());
    for (Index k = 0; k < out.rows(); ++k) out.row(k) = m.row(idx[static_cast<std::size_t>(k)]);
    return out;
}

/// m v computed by accumulating columns of m over the nonzero entries of v;
/// fast when v is sparse, exact always.
template <typename Scalar>
VectorX<Scalar> applyByColumns(const MatrixX<Scalar>& m, const VectorX<Scalar>& v) {
    assert(v.size() == m.cols());
    VectorX<Scalar> acc = VectorX<Scalar>::Zero(m.rows());
    for (Index j = 0; j < v.size(); ++j) {
        if (v[j] == Scalar(0)) continue;
        if constexpr (std::is_same_v<Scalar, Z2>) {
            detail::xorBytes(reinterpret_cast<unsigned char*>(acc.data()),
                             reinterpret_cast<const unsigned char*>(m.data()) +
                                 static_cast<std::ptrdiff_t>(j) * m.rows(),
                             static_cast<std::size_t>(m.rows()));
        } else {
            acc += v[j] * m.col(j);
        }
    }
    return acc;
}

/// m n, column by column via applyByColumns.
template <typename Scalar>
MatrixX<Scalar> multiplyByColumns(const MatrixX<Scalar>& m, const MatrixX<Scalar>& n) {
    assert(m.cols() == n.rows());
    MatrixX<Scalar> out(m.rows(), n.cols());
    for (Index j = 0; j < n.cols(); ++j)
        out.col(j) = applyByColumns<Scalar>(m, VectorX<Scalar>(n.col(j)));
    return out;
}

/// True when every entry of m is zero.
template <typename Scalar>
bool isZero(const MatrixX<Scalar>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Scalar(0)) return false;
    return true;
}

}  // namespace ihom
