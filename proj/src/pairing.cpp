#include "ihom/pairing.hpp"

#include <random>
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

MatrixZ2 expandRows(const MatrixZ2& compact, const std::vector<Index>& rows, Index fullRows) {
    MatrixZ2 out = MatrixZ2::Zero(fullRows, compact.cols());
    for (Index j = 0; j < compact.cols(); ++j)
        for (std::size_t k = 0; k < rows.size(); ++k)
            out(rows[k], j) = compact(Index(k), j);
    return out;
}

MatrixZ2 stackRows(const MatrixZ2& a, const MatrixZ2& b) {
    MatrixZ2 out(a.rows() + b.rows(), a.cols());
    out.topRows(a.rows()) = a;
    out.bottomRows(b.rows()) = b;
    return out;
}

Z2 dot(const VectorZ2& a, const VectorZ2& b) {
    Z2 sum(0);
    for (Index i = 0; i < a.size(); ++i) sum = sum + a(i) * b(i);
    return sum;
}

bool equalMatrices(const MatrixZ2& a, const MatrixZ2& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

MatrixZ2 dotMatrix(const MatrixZ2& lhs, const MatrixZ2& rhs) {
    if (lhs.rows() != rhs.rows())
        throw std::logic_error("pairing sides are indexed by different simplex sets");
    MatrixZ2 out(lhs.cols(), rhs.cols());
    for (Index l = 0; l < lhs.cols(); ++l)
        for (Index k = 0; k < rhs.cols(); ++k) out(l, k) = dot(lhs.col(l), rhs.col(k));
    return out;
}

/// Coordinates, in the subdivided group's basis, of the subdivided base
/// representatives: the transport matrix between the two presentations.
MatrixZ2 transportMatrix(const Subdivision& sd, const SimplicialComplex& base,
                         const DegreeGroup& coarse, const DegreeGroup& fine) {
    if (coarse.betti() != fine.betti())
        throw std::logic_error("subdivision changes the homology presentation");
    MatrixZ2 out(fine.betti(), coarse.betti());
    for (Index j = 0; j < coarse.betti(); ++j) {
        Chain rep{coarse.degree, coarse.classes.representatives().col(j)};
        const Chain moved = subdivideChain(sd, base, rep);
        const auto coords = fine.classes.tryCoordinates(moved.coefficients);
        if (!coords)
            throw std::logic_error("subdivided representative leaves the cycle space");
        out.col(j) = *coords;
    }
    return out;
}

VectorZ2 randomCombination(const MatrixZ2& generators, std::mt19937& rng) {
    VectorZ2 v = VectorZ2::Zero(generators.rows());
    std::bernoulli_distribution coin(0.5);
    for (Index j = 0; j < generators.cols(); ++j)
        if (coin(rng)) v += generators.col(j);
    return v;
}

}  // namespace

DualityContext::DualityContext(SimplicialComplex K, Stratification s, Perversity p)
    : base_(std::move(K)),
      strat_(std::move(s)),
      perversity_(std::move(p)),
      boundary_(boundarySubcomplex(base_)),
      sd_(barycentricSubdivision(base_)),
      blocks_(dualBlocks(base_, sd_)),
      fineStrat_(subdividedStratification(base_, strat_, sd_)) {}

const GradedHomology& DualityContext::baseGroups() {
    if (!baseGroups_) baseGroups_ = ihGroups(base_, strat_, perversity_);
    return *baseGroups_;
}

const GradedHomology& DualityContext::baseRelativeGroups() {
    if (closed()) throw std::invalid_argument("relative groups need a base with boundary");
    if (!baseRel_) baseRel_ = ihGroupsRelative(base_, strat_, perversity_, boundary_);
    return *baseRel_;
}

const GradedHomology& DualityContext::fineGroups() {
    if (!fineGroups_) fineGroups_ = ihGroups(sd_.prime, fineStrat_, perversity_);
    return *fineGroups_;
}

const GradedHomology& DualityContext::fineRelativeGroups() {
    if (closed()) throw std::invalid_argument("relative groups need a base with boundary");
    if (!fineRel_)
        fineRel_ = ihGroupsRelative(sd_.prime, fineStrat_, perversity_,
                                    boundarySubcomplex(sd_.prime));
    return *fineRel_;
}

const std::vector<bool>& DualityContext::fineMask(int m) {
    auto it = fineMask_.find(m);
    if (it == fineMask_.end())
        it = fineMask_.emplace(m, allowableMask(sd_.prime, fineStrat_, perversity_, m)).first;
    return it->second;
}

std::vector<Index> DualityContext::allowedBlockIndices(int m) {
    const int d = dimension() - m;
    const std::vector<bool>& mask = fineMask(m);
    std::vector<Index> out;
    for (Index j = 0; j < base_.simplexCount(d); ++j) {
        bool good = true;
        for (Index s : blocks_.cells[std::size_t(d)][std::size_t(j)])
            if (!mask[std::size_t(s)]) {
                good = false;
                break;
            }
        if (good) out.push_back(j);
    }
    return out;
}

const MatrixZ2& DualityContext::realizationMatrix(int m) {
    auto it = realization_.find(m);
    if (it == realization_.end()) {
        const int d = dimension() - m;
        MatrixZ2 R = MatrixZ2::Zero(sd_.prime.simplexCount(m), base_.simplexCount(d));
        for (Index j = 0; j < base_.simplexCount(d); ++j)
            for (Index s : blocks_.cells[std::size_t(d)][std::size_t(j)]) R(s, j) = Z2(1);
        it = realization_.emplace(m, std::move(R)).first;
    }
    return it->second;
}

Chain DualityContext::realizeBlocks(int m, const VectorZ2& coefficients) const {
    return blockCombinationChain(base_, sd_, blocks_, dimension() - m, coefficients);
}

/// Block cycles at block degree m: combinations of allowable blocks with
/// vanishing block boundary and, relatively, an allowable rim.
MatrixZ2 DualityContext::blockCycles(int m, bool relative) {
    const int d = dimension() - m;
    const std::vector<Index> allowed = allowedBlockIndices(m);

    MatrixZ2 conditions(0, Index(allowed.size()));
    if (m >= 1) {
        const MatrixZ2 diff = base_.boundaryMatrix(d + 1).transpose();
        conditions = selectColumns<Z2>(diff, allowed);
    }
    if (relative && m >= 1) {
        // The rim of the realized chain must stay allowable.
        const MatrixZ2 rim = multiplyByColumns<Z2>(
            sd_.prime.boundaryMatrix(m), selectColumns<Z2>(realizationMatrix(m), allowed));
        const std::vector<Index> badRows =
            complementOf(trueIndices(fineMask(m - 1)), sd_.prime.simplexCount(m - 1));
        conditions = stackRows(conditions, selectRows<Z2>(rim, badRows));
    }
    const MatrixZ2 combos = nullspaceBasis<Z2>(conditions);
    return expandRows(combos, allowed, base_.simplexCount(d));
}

MatrixZ2 DualityContext::movesFor(int m, bool relative) {
    const int d = dimension() - m;
    if (d == 0) return MatrixZ2(base_.simplexCount(d), 0);

    // Allowable block chains one dual degree up, with allowable block
    // boundary (and, relatively, an allowable rim).
    const std::vector<Index> allowedAbove = allowedBlockIndices(m + 1);
    const MatrixZ2 diff = base_.boundaryMatrix(d).transpose();
    const MatrixZ2 restricted = selectColumns<Z2>(diff, allowedAbove);
    const std::vector<Index> badRows =
        complementOf(allowedBlockIndices(m), base_.simplexCount(d));
    MatrixZ2 conditions = selectRows<Z2>(restricted, badRows);
    if (relative) {
        const MatrixZ2 rim =
            multiplyByColumns<Z2>(sd_.prime.boundaryMatrix(m + 1),
                                  selectColumns<Z2>(realizationMatrix(m + 1), allowedAbove)) +
            multiplyByColumns<Z2>(realizationMatrix(m), restricted);
        const std::vector<Index> badFine =
            complementOf(trueIndices(fineMask(m)), sd_.prime.simplexCount(m));
        conditions = stackRows(conditions, selectRows<Z2>(rim, badFine));
    }
    const MatrixZ2 combos = nullspaceBasis<Z2>(conditions);
    return multiplyByColumns<Z2>(restricted, combos);
}

const MatrixZ2& DualityContext::presentBasis(int m, bool relative) {
    const auto key = std::make_pair(m, relative);
    auto it = basis_.find(key);
    if (it != basis_.end()) return it->second;

    const GradedHomology& coarse = relative ? baseRelativeGroups() : baseGroups();
    const GradedHomology& fine = relative ? fineRelativeGroups() : fineGroups();
    const DegreeGroup& coarseG = coarse.group(m);
    const DegreeGroup& fineG = fine.group(m);
    const MatrixZ2 transport = transportMatrix(sd_, base_, coarseG, fineG);

    const MatrixZ2 cycles = blockCycles(m, relative);
    const MatrixZ2 realized = multiplyByColumns<Z2>(realizationMatrix(m), cycles);
    MatrixZ2 classes(fineG.betti(), cycles.cols());
    for (Index j = 0; j < cycles.cols(); ++j) {
        const auto coords = fineG.classes.tryCoordinates(realized.col(j));
        if (!coords) throw std::logic_error("a block cycle is not an allowable cycle class");
        classes.col(j) = *coords;
    }

    const Solver<Z2> inBlocks(classes);
    MatrixZ2 out(base_.simplexCount(dimension() - m), coarseG.betti());
    for (Index k = 0; k < coarseG.betti(); ++k) {
        const auto combo = inBlocks.solve(transport.col(k));
        if (!combo)
            throw std::logic_error(
                "dual blocks cannot present the intersection homology basis");
        out.col(k) = applyByColumns<Z2>(cycles, *combo);
    }
    it = basis_.emplace(key, std::move(out)).first;
    return it->second;
}

const MatrixZ2& DualityContext::blockBasis(int m) {
    if (!closed())
        throw std::invalid_argument("absolute block classes need a closed base");
    return presentBasis(m, false);
}

const MatrixZ2& DualityContext::relativeBlockBasis(int m) {
    if (closed()) throw std::invalid_argument("relative block classes need a boundary");
    return presentBasis(m, true);
}

const MatrixZ2& DualityContext::blockMoves(int m) {
    if (!closed())
        throw std::invalid_argument("absolute block classes need a closed base");
    const auto key = std::make_pair(m, false);
    auto it = moves_.find(key);
    if (it == moves_.end()) it = moves_.emplace(key, movesFor(m, false)).first;
    return it->second;
}

const MatrixZ2& DualityContext::relativeBlockMoves(int m) {
    if (closed()) throw std::invalid_argument("relative block classes need a boundary");
    const auto key = std::make_pair(m, true);
    auto it = moves_.find(key);
    if (it == moves_.end()) it = moves_.emplace(key, movesFor(m, true)).first;
    return it->second;
}

MatrixZ2 pairingMatrix(DualityContext& ctx, int degree) {
    const DegreeGroup& g = ctx.baseGroups().group(degree);
    const MatrixZ2& w = ctx.blockBasis(ctx.dimension() - degree);
    return dotMatrix(g.classes.representatives(), w);
}

MatrixZ2 relativePairingMatrix(DualityContext& ctx, int degree) {
    const DegreeGroup& g = ctx.baseGroups().group(degree);
    const MatrixZ2& w = ctx.relativeBlockBasis(ctx.dimension() - degree);
    return dotMatrix(g.classes.representatives(), w);
}

bool nonsingular(const MatrixZ2& m) {
    return m.rows() == m.cols() && rank<Z2>(m) == m.cols();
}

bool pairingIsStable(DualityContext& ctx, int degree, bool relative, unsigned seed,
                     int trials) {
    const MatrixZ2 expected =
        relative ? relativePairingMatrix(ctx, degree) : pairingMatrix(ctx, degree);
    const DegreeGroup& g = ctx.baseGroups().group(degree);
    const int m = ctx.dimension() - degree;
    const MatrixZ2& basis = relative ? ctx.relativeBlockBasis(m) : ctx.blockBasis(m);
    const MatrixZ2& moves = relative ? ctx.relativeBlockMoves(m) : ctx.blockMoves(m);

    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        MatrixZ2 reps = g.classes.representatives();
        for (Index j = 0; j < reps.cols(); ++j)
            reps.col(j) += randomCombination(g.boundaries, rng);
        MatrixZ2 shifted = basis;
        for (Index j = 0; j < shifted.cols(); ++j)
            shifted.col(j) += randomCombination(moves, rng);
        if (!equalMatrices(dotMatrix(reps, shifted), expected)) return false;
    }
    return true;
}

MatrixZ2 pdHom(DualityContext& ctx, int degree) {
    if (!ctx.closed()) throw std::invalid_argument("the duality map needs a closed base");
    const int n = ctx.dimension();
    const DegreeGroup& coarseG = ctx.baseGroups().group(degree);
    const DegreeGroup& fineG = ctx.fineGroups().group(degree);
    const MatrixZ2 transport = transportMatrix(ctx.subdivision(), ctx.complex(), coarseG, fineG);
    const Solver<Z2> solver(transport);

    const MatrixZ2 cocycles = cohomology(ctx.complex()).group(n - degree).representatives();
    MatrixZ2 out(coarseG.betti(), cocycles.cols());
    for (Index l = 0; l < cocycles.cols(); ++l) {
        const Chain realized = ctx.realizeBlocks(degree, cocycles.col(l));
        const auto coords = fineG.classes.tryCoordinates(realized.coefficients);
        if (!coords)
            throw std::logic_error("a dual cocycle realization is not an allowable cycle");
        const auto x = solver.solve(*coords);
        if (!x) throw std::logic_error("the duality image misses the homology basis");
        out.col(l) = *x;
    }
    return out;
}

}  // namespace ihom
