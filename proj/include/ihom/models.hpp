#pragma once

#include <string>
#include <vector>

#include "ihom/simplicial.hpp"
#include "ihom/strata.hpp"

namespace ihom::models {

/// A bundled example space: a validated complex together with its natural
/// stratification. `pair` marks models whose boundary is part of the story;
/// commands treat such a model as the pair (complex, boundarySubcomplex).
struct Model {
    std::string name;
    std::string description;
    SimplicialComplex complex;
    Stratification strat;
    bool pair = false;
};

/// Names of the bundled models, in catalogue order. The parametric
/// constructors "cone_of:<name>" and "suspension_of:<name>" are additionally
/// accepted by build() but not listed.
const std::vector<std::string>& catalogue();

/// Builds a bundled model by name (or "cone_of:<name>" / "suspension_of:<name>").
/// Every model is validated on construction: closed models must be closed
/// strongly connected pseudomanifolds, pair models pure and strongly connected
/// with nonempty boundary. Throws std::invalid_argument on unknown names and
/// std::logic_error when validation fails.
Model build(const std::string& name);

/// The deterministic auxiliary marked point of the pinched projective plane:
/// the lexicographically smallest vertex of the top stratum at maximal edge
/// distance from the pinch point x0.
Vertex pinchedAuxiliaryPoint(const SimplicialComplex& K, const Vertex& pinch);

}  // namespace ihom::models
