#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihom/linalg.hpp"

namespace ihom {

using Vertex = std::string;

/// A simplex, stored as the sorted list of its distinct vertex names.
using VertexSet = std::vector<Vertex>;

/// Sorts the names and rejects duplicates.
VertexSet canonicalSimplex(VertexSet s);

/// Finite abstract simplicial complex with deterministic indexing: within
/// each dimension, simplices are numbered in lexicographic order of their
/// sorted vertex names. All derived structure (faces, cofaces, boundary
/// operators) is built eagerly at construction, and the composite of two
/// consecutive boundary operators is checked to vanish.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the closure of the given generating simplices. Generators need
    /// not be maximal or distinct.
    static SimplicialComplex fromTopSimplices(const std::vector<VertexSet>& generators);

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    bool empty() const { return simplices_.empty(); }

    /// Number of d-simplices (0 outside the dimension range).
    Index simplexCount(int dim) const;
    std::vector<Index> fVector() const;
    Index totalSimplexCount() const;

    const std::vector<VertexSet>& simplices(int dim) const;
    const VertexSet& simplex(int dim, Index i) const;
    std::optional<Index> indexOf(const VertexSet& s) const;
    bool contains(const VertexSet& s) const;

    std::vector<Vertex> vertexNames() const;
    bool hasVertex(const Vertex& v) const;

    /// Maximal simplices, ordered by (dimension, index).
    std::vector<VertexSet> topSimplices() const;

    /// For each d-simplex, the indices of its (d-1)-faces.
    const std::vector<std::vector<Index>>& facetsOf(int dim) const;
    /// For each d-simplex, the indices of the (d+1)-simplices containing it.
    const std::vector<std::vector<Index>>& cofacetsOf(int dim) const;

    /// Boundary operator from degree-d chains to degree-(d-1) chains
    /// (simplexCount(d-1) x simplexCount(d); zero rows for d = 0).
    const MatrixZ2& boundaryMatrix(int dim) const;

    long eulerCharacteristic() const;

private:
    void buildDerivedStructure();

    std::vector<std::vector<VertexSet>> simplices_;
    std::vector<std::map<VertexSet, Index>> index_;
    std::vector<std::vector<std::vector<Index>>> facets_;
    std::vector<std::vector<std::vector<Index>>> cofacets_;
    std::vector<MatrixZ2> boundary_;
};

/// A chain with coefficients in the two-element field, indexed like the
/// degree-d simplex list of its complex.
struct Chain {
    int degree = 0;
    VectorZ2 coefficients;
};

/// Zero chain of the given degree.
Chain zeroChain(const SimplicialComplex& K, int degree);

/// Chain with coefficient 1 exactly on the listed simplices.
Chain chainFrom(const SimplicialComplex& K, int degree, const std::vector<VertexSet>& simplices);

/// Simplices carrying coefficient 1, in index order.
std::vector<VertexSet> chainSupport(const SimplicialComplex& K, const Chain& c);

/// Boundary of a chain, computed by accumulating boundary-matrix columns over
/// the chain's support.
Chain boundary(const SimplicialComplex& K, const Chain& c);

/// Sum of all top-dimensional simplices.
Chain topChain(const SimplicialComplex& K);

/// Sum of all top-dimensional simplices, validated to be a cycle; throws when
/// the complex is not closed in its top dimension.
Chain fundamentalClass(const SimplicialComplex& K);

/// Cone over K with a fresh apex vertex; the apex name must be unused.
SimplicialComplex cone(const SimplicialComplex& K, const Vertex& apex);

/// Suspension of K with two fresh cone points.
SimplicialComplex suspension(const SimplicialComplex& K, const Vertex& north, const Vertex& south);

/// Link of a vertex: all simplices disjoint from v whose join with v lies in K.
SimplicialComplex vertexLink(const SimplicialComplex& K, const Vertex& v);

/// Link of a simplex: all simplices disjoint from s whose join with s lies in K.
SimplicialComplex simplexLink(const SimplicialComplex& K, const VertexSet& s);

/// Closed star of a vertex: all simplices of K contained in a simplex
/// containing v.
SimplicialComplex vertexStar(const SimplicialComplex& K, const Vertex& v);

/// Subcomplex generated by the codimension-1 simplices with exactly one
/// top-dimensional cofacet. Intended for pure complexes.
SimplicialComplex boundarySubcomplex(const SimplicialComplex& K);

struct PseudomanifoldReport {
    /// Every maximal simplex has the dimension of the complex.
    bool pure = false;
    /// The top-dimensional simplices are connected through shared ridges.
    bool stronglyConnected = false;
    /// Every ridge (codimension-1 simplex) has one or two top cofacets.
    bool ridgeCountsValid = false;
    /// Ridges with exactly one top cofacet.
    std::vector<Index> boundaryRidges;
    /// No boundary ridges.
    bool closed = false;
    /// pure && stronglyConnected && ridgeCountsValid.
    bool verdict = false;
};

PseudomanifoldReport pseudomanifoldReport(const SimplicialComplex& K);

/// Quotient complex identifying vertex `drop` with vertex `keep`. Throws
/// unless the induced map is injective and degenerates no simplex.
SimplicialComplex identifyVertices(const SimplicialComplex& K, const Vertex& keep,
                                   const Vertex& drop);

/// Renames a single vertex; the new name must be unused.
SimplicialComplex renameVertex(const SimplicialComplex& K, const Vertex& from, const Vertex& to);

/// True when K is a sphere of the given dimension (supported for dim 0, 1, 2:
/// two points, a circle, a closed connected surface with Euler number 2).
bool isSphere(const SimplicialComplex& K, int dim);

/// True when K is a ball of the given dimension (supported for dim 0, 1, 2:
/// a point, an arc, a disk).
bool isBall(const SimplicialComplex& K, int dim);

/// Number of connected components of the vertex-edge graph.
int connectedComponentCount(const SimplicialComplex& K);

/// Index translation for a subcomplex: for each dimension, the parent index
/// of every subcomplex simplex. Throws when L is not a subcomplex of K.
struct Embedding {
    std::vector<std::vector<Index>> parentIndex;
};

Embedding embeddingOf(const SimplicialComplex& K, const SimplicialComplex& L);

/// Pushes a chain of L forward to the ambient complex K.
Chain includeChain(const SimplicialComplex& K, const SimplicialComplex& L, const Embedding& emb,
                   const Chain& c);

}  // namespace ihom
