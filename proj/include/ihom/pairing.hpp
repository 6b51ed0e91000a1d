#pragma once

#include <map>
#include <optional>

#include "ihom/ih.hpp"
#include "ihom/subdivision.hpp"

namespace ihom {

/// Machinery for intersection pairings on a stratified pseudomanifold: the
/// barycentric subdivision and its dual blocks, intersection homology of the
/// base and of the subdivision (absolute and relative to the boundary), and
/// dual-block presentations of the classes. Everything is computed lazily and
/// cached, so one context can serve several degrees.
///
/// The mod-2 intersection number underneath is combinatorial: a degree-i
/// simplex meets the block dual to itself in exactly one point (the common
/// barycenter) and every other block of complementary dimension not at all,
/// so pairing a base chain with a block combination is a coefficient dot
/// product.
class DualityContext {
public:
    DualityContext(SimplicialComplex K, Stratification s, Perversity p);

    const SimplicialComplex& complex() const { return base_; }
    const Stratification& stratification() const { return strat_; }
    const Perversity& perversity() const { return perversity_; }
    int dimension() const { return base_.dimension(); }

    /// Boundary subcomplex of the base; empty exactly when the base is closed.
    const SimplicialComplex& boundary() const { return boundary_; }
    bool closed() const { return boundary_.empty(); }

    const Subdivision& subdivision() const { return sd_; }
    const DualBlocks& blocks() const { return blocks_; }
    const SimplicialComplex& fineComplex() const { return sd_.prime; }
    const Stratification& fineStratification() const { return fineStrat_; }

    /// Intersection homology of the base / the subdivision, absolute and
    /// relative to the boundary pair.
    const GradedHomology& baseGroups();
    const GradedHomology& baseRelativeGroups();
    const GradedHomology& fineGroups();
    const GradedHomology& fineRelativeGroups();

    /// Columns: block-coefficient vectors (indexed like the base simplices of
    /// dimension n - m) of allowable block m-cycles realizing the basis of
    /// the degree-m base group, transported through the subdivision. Requires
    /// a closed base.
    const MatrixZ2& blockBasis(int m);
    /// Same for the relative groups of a base with boundary: the blocks' rim
    /// falls into the boundary, so block cycles present relative classes.
    const MatrixZ2& relativeBlockBasis(int m);

    /// Columns: legitimate representative shifts of block m-cycles (block
    /// boundaries of allowable block chains), for re-representation trials.
    const MatrixZ2& blockMoves(int m);
    const MatrixZ2& relativeBlockMoves(int m);

    /// The block combination as a chain of the subdivided complex.
    Chain realizeBlocks(int m, const VectorZ2& coefficients) const;

private:
    std::vector<Index> allowedBlockIndices(int m);
    const MatrixZ2& realizationMatrix(int m);
    const std::vector<bool>& fineMask(int m);
    MatrixZ2 blockCycles(int m, bool relative);
    MatrixZ2 movesFor(int m, bool relative);
    const MatrixZ2& presentBasis(int m, bool relative);

    SimplicialComplex base_;
    Stratification strat_;
    Perversity perversity_;
    SimplicialComplex boundary_;
    Subdivision sd_;
    DualBlocks blocks_;
    Stratification fineStrat_;

    std::optional<GradedHomology> baseGroups_, baseRel_, fineGroups_, fineRel_;
    std::map<int, std::vector<bool>> fineMask_;
    std::map<int, MatrixZ2> realization_;
    std::map<std::pair<int, bool>, MatrixZ2> basis_;
    std::map<std::pair<int, bool>, MatrixZ2> moves_;
};

/// Intersection pairing IH_i x IH_{n-i} -> Z/2 of a closed base: entry (l, k)
/// pairs the l-th degree-i class with the k-th complementary class in its
/// dual-block presentation.
MatrixZ2 pairingMatrix(DualityContext& ctx, int degree);

/// Intersection pairing IH_i(K) x IH_{n-i}(K, bd K) -> Z/2 of a base with
/// boundary, the complementary side presented by blocks rel the boundary.
MatrixZ2 relativePairingMatrix(DualityContext& ctx, int degree);

/// Square with full rank (the empty matrix counts as nonsingular).
bool nonsingular(const MatrixZ2& m);

/// Recomputes the degree-i pairing `trials` times with both sides shifted by
/// seeded random boundaries; true when every trial reproduces the original.
bool pairingIsStable(DualityContext& ctx, int degree, bool relative, unsigned seed, int trials);

/// Combinatorial duality map H^{n-i} -> IH_i of a closed base: a cocycle is
/// realized as the cycle of dual blocks over its support and transported to
/// the degree-i basis of the base group. With the trivial stratification this
/// is the classical duality map onto ordinary homology.
MatrixZ2 pdHom(DualityContext& ctx, int degree);

}  // namespace ihom
