#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihom/simplicial.hpp"
#include "ihom/subdivision.hpp"

namespace ihom {

struct Stratum {
    std::string name;
    /// Largest dimension of a simplex assigned to the stratum.
    int dim = -1;
    /// Dimension of the ambient complex minus the stratum dimension.
    int codim = 0;
};

/// Partition of the simplices of a complex into named strata.
struct Stratification {
    std::vector<Stratum> strata;
    /// stratumOf[d][i]: index into `strata` for simplex (d, i).
    std::vector<std::vector<Index>> stratumOf;

    Index stratumIndex(int dim, Index i) const;
    const Stratum& stratumOfSimplex(int dim, Index i) const;
    std::optional<Index> stratumNamed(const std::string& name) const;
};

/// Every simplex in a single stratum named "main".
Stratification trivialStratification(const SimplicialComplex& K);

/// Builds a stratification from explicit per-simplex assignments; unassigned
/// simplices fall into the default stratum. Throws when an assigned simplex is
/// not in the complex.
Stratification fromAssignment(const SimplicialComplex& K,
                              const std::map<VertexSet, std::string>& assigned,
                              const std::string& defaultName = "main");

/// Human-readable frontier-condition warnings: one entry per ordered pair of
/// strata (S, T) where some simplex of S has a facet in T although T does not
/// have strictly smaller dimension. Empty when the stratification is clean.
std::vector<std::string> frontierViolations(const SimplicialComplex& K, const Stratification& s);

/// Stratification of a cone: each base stratum absorbs the cones of its
/// simplices (gaining one dimension, keeping its codimension) and the apex
/// becomes its own point stratum named "pt_" + apex.
Stratification coneStratification(const SimplicialComplex& coneK, const SimplicialComplex& base,
                                  const Stratification& baseStrat, const Vertex& apex);

/// Stratification of a suspension: like the cone on both ends, with the two
/// suspension points as their own point strata.
Stratification suspensionStratification(const SimplicialComplex& suspK,
                                        const SimplicialComplex& base,
                                        const Stratification& baseStrat, const Vertex& north,
                                        const Vertex& south);

/// Splits the vertex v off into its own point stratum named "pt_" + v. Throws
/// when v is already in a point stratum.
Stratification markPoint(const SimplicialComplex& K, const Stratification& s, const Vertex& v);

/// Stratification induced on a subcomplex: simplices keep their strata, empty
/// strata are dropped, and dimensions are recomputed relative to L.
Stratification restrictedTo(const SimplicialComplex& K, const Stratification& s,
                            const SimplicialComplex& L);

/// Stratification induced on a barycentric subdivision: each prime simplex
/// joins the stratum of its carrier.
Stratification subdividedStratification(const SimplicialComplex& base, const Stratification& s,
                                        const Subdivision& sd);

/// Stratification by iterated local failure of regularity (supported up to
/// dimension 3). A simplex is regular in a complex when its link is a sphere
/// or a ball of complementary dimension; the singular simplices generate the
/// next level, and strata are the connected components of the level sets.
/// Level-0 components are named "main" (or "main.0", "main.1", ...), deeper
/// levels "s<level>.<k>".
Stratification singularStratification(const SimplicialComplex& K);

/// Subcomplex of the chain's body where it fails to be a manifold: the faces
/// of dimension below the degree whose link in the body is not a sphere of
/// complementary dimension. Contains the body of the chain's boundary.
/// Supported up to degree 3.
SimplicialComplex chainSingularSet(const SimplicialComplex& K, const Chain& C);

/// Nonnegative defect allowed per codimension; the empty perversity is zero
/// everywhere, and values beyond the listed codimensions default to zero.
class Perversity {
public:
    Perversity() = default;
    /// Values for codimensions 1, 2, ... in order.
    explicit Perversity(std::vector<int> byCodim);
    static Perversity zero() { return Perversity(); }

    int operator()(int codim) const;
    /// Consecutive values grow by at most one and never decrease.
    bool growthValid() const;
    const std::vector<int>& values() const { return byCodim_; }

private:
    std::vector<int> byCodim_;
};

/// For chains of the given degree: which simplices of that dimension may carry
/// a nonzero coefficient. Simplex i is admitted when every face in a stratum
/// of codimension c >= 1 has dimension at most degree - c + p(c).
std::vector<bool> allowableMask(const SimplicialComplex& K, const Stratification& s,
                                const Perversity& p, int degree);

/// True when every simplex in the support of C passes the allowable mask of
/// its degree. Chains of negative degree are allowable.
bool gmAllowable(const SimplicialComplex& K, const Stratification& s, const Perversity& p,
                 const Chain& C);

/// Zero-perversity allowability strengthened by a condition on the chain's
/// own singular set: its intersection with every codimension-1 stratum has
/// dimension at most degree - 2, recursively down the boundary.
bool realAllowable(const SimplicialComplex& K, const Stratification& s, const Chain& C);

}  // namespace ihom
