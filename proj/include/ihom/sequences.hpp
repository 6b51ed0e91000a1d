#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ihom/pairing.hpp"

namespace ihom {

/// A finite chain of Z/2 vector spaces joined by linear maps, padded with a
/// zero space at both ends so that every genuine node has an incoming and an
/// outgoing map. maps[k] sends node k to node k + 1, so it is a
/// dims[k + 1] x dims[k] matrix.
struct MapSequence {
    std::vector<std::string> labels;
    std::vector<Index> dims;
    std::vector<MatrixZ2> maps;

    Index nodeCount() const { return Index(dims.size()); }
};

/// Exactness data at one interior node: the composite of the incoming and
/// outgoing maps must vanish and the image of the former must fill the kernel
/// of the latter.
struct JunctionReport {
    std::string node;
    Index image = 0;
    Index kernel = 0;
    bool compositeZero = true;

    bool exact() const { return compositeZero && image == kernel; }
};

/// One report per interior node, left to right.
std::vector<JunctionReport> junctionReports(const MapSequence& seq);

/// Junction-by-junction exactness check: at every interior node the image of
/// the incoming map must equal the kernel of the outgoing one. Each failure
/// is reported as one human-readable line.
std::vector<std::string> exactnessFailures(const MapSequence& seq);

/// Arrow reversal: reverses the node order and transposes every map. Sends
/// exact sequences to exact sequences.
MapSequence dualize(const MapSequence& seq);

/// The three kinds of node in the homology sequence of a pair (N, L):
/// the boundary L, the ambient complex N, and the relative group of the pair.
enum class NodeKind { Boundary, Ambient, Relative };

/// The duality ladder of a pseudomanifold pair (N, L = boundary of N) with
/// dim N = n + 1 and dim L = n.
///
/// Top row: the long exact intersection homology sequence of the pair,
/// reading left to right in decreasing degree,
///
///   0 -> IH_{n+1}(L) -> IH_{n+1}(N) -> IH_{n+1}(N, L) -> IH_n(L) -> ... ->
///        IH_0(N, L) -> 0.
///
/// Bottom row: the linear dual of the same sequence read backwards, so under
/// the top node IH_i(L) sits IH_{n-i}(L)*, under IH_i(N) sits
/// IH_{n+1-i}(N, L)*, and under IH_i(N, L) sits IH_{n+1-i}(N)*.
///
/// Verticals: the intersection pairings, viewed as maps into the duals. On a
/// genuinely dualizable pair every vertical is invertible and the ladder is
/// the classical duality between the sequence of the pair and itself; a
/// non-invertible vertical is exactly a failure of that duality.
struct DualityLadder {
    MapSequence top;
    MapSequence bottom;
    std::vector<MatrixZ2> verticals;
    std::vector<std::string> verticalLabels;
    int boundaryDimension = 0;  ///< n; the ambient complex has dimension n + 1

    /// Position of a node in the rows: the pads sit at position 0 and
    /// nodeCount() - 1, and the triple (boundary, ambient, relative) of
    /// homological degree i sits at positions 1 + 3 * (n + 1 - i) + {0, 1, 2}.
    Index nodePosition(NodeKind kind, int degree) const;
};

/// Builds the two duality contexts of a pair: the ambient complex N with the
/// given stratification, and its boundary subcomplex with the restricted
/// stratification. The complex must have a nonempty boundary.
std::pair<DualityContext, DualityContext> pairContexts(const SimplicialComplex& N,
                                                       const Stratification& s,
                                                       const Perversity& p);

/// The long exact intersection homology sequence of the pair (N, boundary of
/// N): the top row of the ladder on its own, with the same node layout.
MapSequence pairSequence(DualityContext& ambient, DualityContext& boundary);

/// Assembles the duality ladder of the pair (N, boundary of N). `ambient`
/// must have a nonempty boundary and `boundary` must be the context of that
/// boundary subcomplex with the restricted stratification (see pairContexts).
DualityLadder buildLadder(DualityContext& ambient, DualityContext& boundary);

/// One line per square of the ladder whose two ways around disagree; empty
/// when the ladder commutes.
std::vector<std::string> commutationFailures(const DualityLadder& ladder);

/// Labels of every non-invertible vertical map (the pads, being 0 x 0, never
/// appear). Empty exactly when the ladder realizes a full duality.
std::vector<std::string> failingVerticals(const DualityLadder& ladder);

/// The parity consequence of duality at the self-dual degree k = n / 2 (so n
/// must be even). When the three verticals around the junction
///
///   IH_{k+1}(N, L) -> IH_k(L) -> IH_k(N)
///
/// are all invertible, a diagram chase forces dim IH_k(L) to be even: the
/// commuting square under the connecting map identifies the rank of
/// IH_{k+1}(N, L) -> IH_k(L) with the rank of IH_k(L) -> IH_k(N), and by
/// exactness those two numbers add up to dim IH_k(L). A model with an odd
/// middle Betti number therefore certifies at least one failing vertical.
struct ParityReport {
    int degree = 0;
    Index middleBetti = 0;   ///< dim IH_k(L)
    Index alphaKernel = 0;   ///< dim ker(IH_k(L) -> IH_k(N))
    std::vector<std::string> failingVerticals;  ///< among the three central ones

    bool applicable() const { return failingVerticals.empty(); }
    bool even() const { return applicable() && middleBetti == 2 * alphaKernel; }

    /// "even" when the three verticals are invertible and the parity relation
    /// holds, "blocked" when some central vertical fails, and "violated" in
    /// the (engine-bug) case of invertible verticals with odd middle Betti.
    std::string verdict() const;
};

ParityReport parityAt(const DualityLadder& ladder, int degree);

}  // namespace ihom
