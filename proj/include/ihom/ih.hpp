#pragma once

#include <vector>

#include "ihom/strata.hpp"

namespace ihom {

/// One degree of (intersection) homology: the admitted simplices, bases of
/// allowable cycles and of boundaries of allowable chains, and the quotient
/// classes — all in full chain coordinates of the complex.
struct DegreeGroup {
    int degree = 0;
    /// Simplices of this dimension that allowable chains may touch.
    std::vector<Index> allowed;
    /// Basis of the allowable cycles.
    MatrixZ2 cycles;
    /// Basis of boundaries of allowable chains with allowable boundary (plus,
    /// for relative groups, allowable chains supported in the subcomplex).
    MatrixZ2 boundaries;
    QuotientSpace<Z2> classes;

    Index betti() const { return classes.dimension(); }
};

/// Graded homology, one group per degree from 0 to the dimension.
struct GradedHomology {
    std::vector<DegreeGroup> groups;

    const DegreeGroup& group(int degree) const;
    std::vector<Index> betti() const;
    long eulerCharacteristic() const;
};

/// Intersection homology with the given perversity: cycles among chains
/// supported on allowable simplices, modulo boundaries of allowable chains
/// whose boundary is again allowable.
GradedHomology ihGroups(const SimplicialComplex& K, const Stratification& s, const Perversity& p);

/// Ordinary homology: intersection homology of the trivial stratification,
/// where every chain is allowable.
GradedHomology homology(const SimplicialComplex& K);

/// Relative intersection homology of the pair (K, L): allowable chains whose
/// boundary is allowable and supported in L, modulo boundaries of allowable
/// chains and allowable chains supported in L.
GradedHomology ihGroupsRelative(const SimplicialComplex& K, const Stratification& s,
                                const Perversity& p, const SimplicialComplex& L);

/// Cohomology of the transposed boundary complex, in cochain coordinates
/// (indexed like the simplices of each dimension).
struct GradedCohomology {
    std::vector<QuotientSpace<Z2>> groups;

    const QuotientSpace<Z2>& group(int degree) const;
    std::vector<Index> betti() const;
};

GradedCohomology cohomology(const SimplicialComplex& K);

/// Matrix of the degree-d map from intersection homology to ordinary homology
/// induced by inclusion of allowable cycles: column j holds the ordinary
/// coordinates of the j-th intersection class representative.
MatrixZ2 forgetMap(const GradedHomology& ih, const GradedHomology& h, int degree);

}  // namespace ihom
