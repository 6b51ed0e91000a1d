#include "ihom/ih.hpp"

#include <stdexcept>

namespace ihom {

namespace {

std::vector<Index> trueIndices(const std::vector<bool>& mask) {
    std::vector<Index> out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(Index(i));
    return out;
}

std::vector<Index> complementOf(const std::vector<Index>& idx, Index n) {
    std::vector<bool> in(std::size_t(n), false);
    for (Index i : idx) in[std::size_t(i)] = true;
    std::vector<Index> out;
    for (Index i = 0; i < n; ++i)
        if (!in[std::size_t(i)]) out.push_back(i);
    return out;
}

/// Lifts coefficient combinations over a sparse index set back to full chain
/// coordinates: row k of `compact` becomes row rows[k].
MatrixZ2 expandRows(const MatrixZ2& compact, const std::vector<Index>& rows, Index fullRows) {
    MatrixZ2 out = MatrixZ2::Zero(fullRows, compact.cols());
    for (Index j = 0; j < compact.cols(); ++j)
        for (std::size_t k = 0; k < rows.size(); ++k)
            out(rows[k], j) = compact(Index(k), j);
    return out;
}

/// Basis of cycles supported on the allowed columns whose boundary vanishes on
/// every row outside `goodRows`; full chain coordinates.
MatrixZ2 constrainedCycles(const SimplicialComplex& K, int degree,
                           const std::vector<Index>& allowedCols,
                           const std::vector<Index>& goodRows) {
    if (degree == 0) {
        MatrixZ2 out = MatrixZ2::Zero(K.simplexCount(0), Index(allowedCols.size()));
        for (std::size_t k = 0; k < allowedCols.size(); ++k)
            out(allowedCols[k], Index(k)) = Z2(1);
        return out;
    }
    const MatrixZ2 restricted = selectColumns<Z2>(K.boundaryMatrix(degree), allowedCols);
    const std::vector<Index> badRows = complementOf(goodRows, restricted.rows());
    const MatrixZ2 combos = nullspaceBasis<Z2>(selectRows<Z2>(restricted, badRows));
    return expandRows(combos, allowedCols, K.simplexCount(degree));
}

/// Boundaries of degree-(i+1) chains supported on allowed columns whose
/// boundary is supported on the allowed rows; full degree-i coordinates.
MatrixZ2 allowableBoundaries(const SimplicialComplex& K, int i,
                             const std::vector<Index>& allowedAbove,
                             const std::vector<Index>& allowedHere) {
    if (i + 1 > K.dimension()) return MatrixZ2(K.simplexCount(i), 0);
    const MatrixZ2 restricted = selectColumns<Z2>(K.boundaryMatrix(i + 1), allowedAbove);
    const std::vector<Index> badRows = complementOf(allowedHere, restricted.rows());
    const MatrixZ2 combos = nullspaceBasis<Z2>(selectRows<Z2>(restricted, badRows));
    return multiplyByColumns<Z2>(restricted, combos);
}

MatrixZ2 concatColumns(const MatrixZ2& a, const MatrixZ2& b) {
    MatrixZ2 out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

}  // namespace

const DegreeGroup& GradedHomology::group(int degree) const {
    if (degree < 0 || std::size_t(degree) >= groups.size())
        throw std::out_of_range("no homology group in that degree");
    return groups[std::size_t(degree)];
}

std::vector<Index> GradedHomology::betti() const {
    std::vector<Index> out;
    for (const DegreeGroup& g : groups) out.push_back(g.betti());
    return out;
}

long GradedHomology::eulerCharacteristic() const {
    long chi = 0;
    for (std::size_t d = 0; d < groups.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * long(groups[d].betti());
    return chi;
}

GradedHomology ihGroups(const SimplicialComplex& K, const Stratification& s,
                        const Perversity& p) {
    if (K.empty()) throw std::invalid_argument("cannot take homology of an empty complex");
    const int n = K.dimension();
    std::vector<std::vector<Index>> allowed(std::size_t(n + 1));
    for (int d = 0; d <= n; ++d) allowed[std::size_t(d)] = trueIndices(allowableMask(K, s, p, d));

    GradedHomology out;
    for (int i = 0; i <= n; ++i) {
        DegreeGroup g;
        g.degree = i;
        g.allowed = allowed[std::size_t(i)];
        g.cycles = constrainedCycles(K, i, g.allowed, {});
        g.boundaries = i + 1 <= n ? allowableBoundaries(K, i, allowed[std::size_t(i + 1)], g.allowed)
                                  : MatrixZ2(K.simplexCount(i), 0);
        g.classes = QuotientSpace<Z2>(g.cycles, g.boundaries);
        out.groups.push_back(std::move(g));
    }
    return out;
}

GradedHomology homology(const SimplicialComplex& K) {
    return ihGroups(K, trivialStratification(K), Perversity::zero());
}

GradedHomology ihGroupsRelative(const SimplicialComplex& K, const Stratification& s,
                                const Perversity& p, const SimplicialComplex& L) {
    if (K.empty()) throw std::invalid_argument("cannot take homology of an empty complex");
    const Embedding emb = L.empty() ? Embedding{} : embeddingOf(K, L);
    const int n = K.dimension();

    std::vector<std::vector<Index>> allowed(std::size_t(n + 1));
    std::vector<std::vector<Index>> allowedInL(std::size_t(n + 1));
    for (int d = 0; d <= n; ++d) {
        const std::vector<bool> mask = allowableMask(K, s, p, d);
        allowed[std::size_t(d)] = trueIndices(mask);
        std::vector<bool> inL(mask.size(), false);
        if (!L.empty() && d <= L.dimension())
            for (Index i : emb.parentIndex[std::size_t(d)]) inL[std::size_t(i)] = true;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i] && inL[i]) allowedInL[std::size_t(d)].push_back(Index(i));
    }

    GradedHomology out;
    for (int i = 0; i <= n; ++i) {
        DegreeGroup g;
        g.degree = i;
        g.allowed = allowed[std::size_t(i)];

        // Relative cycles: boundary allowable and supported in L.
        const std::vector<Index> goodRows = i == 0 ? std::vector<Index>{} : allowedInL[std::size_t(i - 1)];
        g.cycles = constrainedCycles(K, i, g.allowed, goodRows);

        // Boundaries of allowable chains, plus allowable chains living in L.
        const MatrixZ2 fromAbove =
            i + 1 <= n ? allowableBoundaries(K, i, allowed[std::size_t(i + 1)], g.allowed)
                       : MatrixZ2(K.simplexCount(i), 0);
        const MatrixZ2 inSubcomplex =
            constrainedCycles(K, i, allowedInL[std::size_t(i)],
                              i == 0 ? std::vector<Index>{} : allowedInL[std::size_t(i - 1)]);
        g.boundaries = concatColumns(fromAbove, inSubcomplex);
        g.classes = QuotientSpace<Z2>(g.cycles, g.boundaries);
        out.groups.push_back(std::move(g));
    }
    return out;
}

const QuotientSpace<Z2>& GradedCohomology::group(int degree) const {
    if (degree < 0 || std::size_t(degree) >= groups.size())
        throw std::out_of_range("no cohomology group in that degree");
    return groups[std::size_t(degree)];
}

std::vector<Index> GradedCohomology::betti() const {
    std::vector<Index> out;
    for (const QuotientSpace<Z2>& g : groups) out.push_back(g.dimension());
    return out;
}

GradedCohomology cohomology(const SimplicialComplex& K) {
    if (K.empty()) throw std::invalid_argument("cannot take cohomology of an empty complex");
    const int n = K.dimension();
    GradedCohomology out;
    for (int q = 0; q <= n; ++q) {
        MatrixZ2 cocycles;
        if (q == n) {
            cocycles = MatrixZ2::Identity(K.simplexCount(n), K.simplexCount(n));
        } else {
            const MatrixZ2 d = K.boundaryMatrix(q + 1).transpose();
            cocycles = nullspaceBasis<Z2>(d);
        }
        const MatrixZ2 coboundaries =
            q == 0 ? MatrixZ2(K.simplexCount(0), 0) : MatrixZ2(K.boundaryMatrix(q).transpose());
        out.groups.push_back(QuotientSpace<Z2>(cocycles, coboundaries));
    }
    return out;
}

MatrixZ2 forgetMap(const GradedHomology& ih, const GradedHomology& h, int degree) {
    const DegreeGroup& a = ih.group(degree);
    const DegreeGroup& b = h.group(degree);
    MatrixZ2 out(b.betti(), a.betti());
    for (Index j = 0; j < a.betti(); ++j)
        out.col(j) = b.classes.coordinates(a.classes.representatives().col(j));
    return out;
}

}  // namespace ihom
