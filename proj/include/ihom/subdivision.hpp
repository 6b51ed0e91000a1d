#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ihom/simplicial.hpp"

namespace ihom {

/// A simplex referenced as (dimension, index) within a fixed complex.
using SimplexRef = std::pair<int, Index>;

/// Barycentric subdivision together with its chain-level structure.
///
/// Each vertex of the subdivided complex is the barycenter of a base simplex,
/// named by joining the base vertex names with '.' (original vertices keep
/// their names). Each subdivided simplex is a flag of base simplices strictly
/// ordered by inclusion.
struct Subdivision {
    SimplicialComplex prime;

    /// The base simplex whose barycenter a prime vertex is.
    std::map<Vertex, SimplexRef> baseOfVertex;

    /// carrier[d][i]: the largest flag element of prime d-simplex i — the base
    /// simplex whose interior carries its interior.
    std::vector<std::vector<SimplexRef>> carrier;

    /// chainColumns[d][j]: the prime d-simplices subdividing base d-simplex j
    /// (full-length flags inside it). These columns are the degree-d chain map
    /// of the subdivision.
    std::vector<std::vector<std::vector<Index>>> chainColumns;

    /// Flag of a prime simplex as base simplex references in increasing
    /// dimension order.
    std::vector<SimplexRef> flagOf(int dim, Index i) const;
};

/// Builds the barycentric subdivision; validates that barycenter names do not
/// collide and that the chain map commutes with the boundary operators.
Subdivision barycentricSubdivision(const SimplicialComplex& base);

/// Pushes a base chain to the subdivided complex through the chain map.
Chain subdivideChain(const Subdivision& sd, const SimplicialComplex& base, const Chain& c);

/// Dual-block decomposition of a subdivided complex. The block dual to a base
/// d-simplex lives in degree n - d (n the base dimension) and consists of the
/// prime simplices whose flags ascend from that simplex through one base
/// simplex of every dimension up to n.
struct DualBlocks {
    /// cells[d][j]: prime (n-d)-simplex indices of the block dual to base
    /// d-simplex j. Distinct blocks have disjoint supports.
    std::vector<std::vector<std::vector<Index>>> cells;
};

/// Builds the dual blocks of a pure base complex and validates the boundary
/// identity: the chain boundary of each block equals the sum of the blocks
/// dual to its cofacets, exactly when the base is closed, and up to chains
/// inside the subdivided boundary subcomplex otherwise.
DualBlocks dualBlocks(const SimplicialComplex& base, const Subdivision& sd);

/// The chain (in the subdivided complex) of the block dual to base simplex
/// (baseDim, j).
Chain blockChain(const SimplicialComplex& base, const Subdivision& sd, const DualBlocks& blocks,
                 int baseDim, Index j);

/// The chain of a combination of dual blocks: coefficients indexed like the
/// base d-simplices, one bit per block.
Chain blockCombinationChain(const SimplicialComplex& base, const Subdivision& sd,
                            const DualBlocks& blocks, int baseDim, const VectorZ2& coefficients);

}  // namespace ihom
