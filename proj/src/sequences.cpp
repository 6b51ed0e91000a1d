#include "ihom/sequences.hpp"

#include <stdexcept>
#include <string>

namespace ihom {

namespace {

std::string groupLabel(NodeKind kind, int degree) {
    const std::string d = std::to_string(degree);
    switch (kind) {
        case NodeKind::Boundary: return "IH_" + d + "(L)";
        case NodeKind::Ambient: return "IH_" + d + "(N)";
        case NodeKind::Relative: return "IH_" + d + "(N, L)";
    }
    throw std::logic_error("unknown node kind");
}

/// The bottom node sitting under a top node: the dual of the complementary
/// group in the sequence of the pair.
std::string dualLabel(NodeKind kind, int degree, int n) {
    switch (kind) {
        case NodeKind::Boundary: return groupLabel(kind, n - degree) + "*";
        case NodeKind::Ambient: return groupLabel(NodeKind::Relative, n + 1 - degree) + "*";
        case NodeKind::Relative: return groupLabel(NodeKind::Ambient, n + 1 - degree) + "*";
    }
    throw std::logic_error("unknown node kind");
}

bool sameMatrix(const MatrixZ2& a, const MatrixZ2& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && isZero<Z2>(MatrixZ2(a + b));
}

Index bettiOrZero(const GradedHomology& h, int degree) {
    if (degree < 0 || std::size_t(degree) >= h.groups.size()) return 0;
    return h.group(degree).betti();
}

/// Inclusion-induced map IH_i(L) -> IH_i(N): push each boundary-side
/// representative into the ambient complex and read off its class there.
MatrixZ2 inclusionMap(const SimplicialComplex& N, const SimplicialComplex& L,
                      const Embedding& emb, const GradedHomology& HL, const GradedHomology& HN,
                      int degree) {
    const DegreeGroup& from = HL.group(degree);
    const DegreeGroup& to = HN.group(degree);
    MatrixZ2 out(to.betti(), from.betti());
    for (Index l = 0; l < from.betti(); ++l) {
        const Chain pushed =
            includeChain(N, L, emb, Chain{degree, from.classes.representatives().col(l)});
        const auto coords = to.classes.tryCoordinates(pushed.coefficients);
        if (!coords)
            throw std::logic_error("an allowable cycle of the boundary is not an allowable "
                                   "cycle of the ambient complex in degree " +
                                   std::to_string(degree));
        out.col(l) = *coords;
    }
    return out;
}

/// IH_i(N) -> IH_i(N, L): an absolute cycle is in particular a relative one.
MatrixZ2 relativizeMap(const GradedHomology& HN, const GradedHomology& rel, int degree) {
    const DegreeGroup& from = HN.group(degree);
    const DegreeGroup& to = rel.group(degree);
    MatrixZ2 out(to.betti(), from.betti());
    for (Index l = 0; l < from.betti(); ++l) {
        const auto coords = to.classes.tryCoordinates(from.classes.representatives().col(l));
        if (!coords)
            throw std::logic_error("an absolute cycle is not a relative cycle in degree " +
                                   std::to_string(degree));
        out.col(l) = *coords;
    }
    return out;
}

/// Connecting map IH_i(N, L) -> IH_{i-1}(L): the boundary of a relative cycle
/// lives in L, where it is an allowable cycle of one degree lower.
MatrixZ2 connectingMap(const SimplicialComplex& N, const SimplicialComplex& L,
                       const Embedding& emb, const GradedHomology& rel, const GradedHomology& HL,
                       int degree) {
    const DegreeGroup& from = rel.group(degree);
    const DegreeGroup& to = HL.group(degree - 1);
    MatrixZ2 out(to.betti(), from.betti());
    for (Index l = 0; l < from.betti(); ++l) {
        const VectorZ2 ambientBoundary = applyByColumns<Z2>(
            N.boundaryMatrix(degree), VectorZ2(from.classes.representatives().col(l)));
        VectorZ2 onBoundary = VectorZ2::Zero(L.simplexCount(degree - 1));
        for (Index j = 0; j < onBoundary.size(); ++j)
            onBoundary(j) = ambientBoundary(emb.parentIndex[std::size_t(degree - 1)][std::size_t(j)]);
        const Chain pushedBack = includeChain(N, L, emb, Chain{degree - 1, onBoundary});
        if (!isZero<Z2>(MatrixZ2(pushedBack.coefficients + ambientBoundary)))
            throw std::logic_error("the boundary of a relative cycle leaves the boundary "
                                   "subcomplex in degree " +
                                   std::to_string(degree));
        const auto coords = to.classes.tryCoordinates(onBoundary);
        if (!coords)
            throw std::logic_error("the boundary of a relative cycle is not an allowable cycle "
                                   "of the boundary complex in degree " +
                                   std::to_string(degree));
        out.col(l) = *coords;
    }
    return out;
}

}  // namespace

std::vector<JunctionReport> junctionReports(const MapSequence& seq) {
    std::vector<JunctionReport> reports;
    for (Index j = 1; j + 1 < seq.nodeCount(); ++j) {
        const MatrixZ2& in = seq.maps[std::size_t(j - 1)];
        const MatrixZ2& out = seq.maps[std::size_t(j)];
        JunctionReport r;
        r.node = seq.labels[std::size_t(j)];
        r.compositeZero = isZero<Z2>(multiplyByColumns<Z2>(out, in));
        r.image = rank<Z2>(in);
        r.kernel = seq.dims[std::size_t(j)] - rank<Z2>(out);
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<std::string> exactnessFailures(const MapSequence& seq) {
    std::vector<std::string> failures;
    for (const JunctionReport& r : junctionReports(seq)) {
        if (!r.compositeZero)
            failures.push_back("the composite through " + r.node + " is nonzero");
        if (r.image != r.kernel)
            failures.push_back("at " + r.node + ": image has dimension " +
                               std::to_string(r.image) + " but the kernel has dimension " +
                               std::to_string(r.kernel));
    }
    return failures;
}

MapSequence dualize(const MapSequence& seq) {
    MapSequence out;
    const Index nodes = seq.nodeCount();
    for (Index j = nodes - 1; j >= 0; --j) {
        out.dims.push_back(seq.dims[std::size_t(j)]);
        const std::string& l = seq.labels[std::size_t(j)];
        out.labels.push_back(l == "0" ? l : l + "*");
    }
    for (Index k = Index(seq.maps.size()) - 1; k >= 0; --k)
        out.maps.push_back(seq.maps[std::size_t(k)].transpose());
    return out;
}

Index DualityLadder::nodePosition(NodeKind kind, int degree) const {
    if (degree < 0 || degree > boundaryDimension + 1)
        throw std::out_of_range("no ladder node in degree " + std::to_string(degree));
    const int offset = kind == NodeKind::Boundary ? 0 : kind == NodeKind::Ambient ? 1 : 2;
    return 1 + 3 * Index(boundaryDimension + 1 - degree) + offset;
}

std::pair<DualityContext, DualityContext> pairContexts(const SimplicialComplex& N,
                                                       const Stratification& s,
                                                       const Perversity& p) {
    SimplicialComplex L = boundarySubcomplex(N);
    if (L.empty())
        throw std::invalid_argument("the complex is closed: there is no boundary pair to form");
    Stratification ls = restrictedTo(N, s, L);
    return {DualityContext(N, s, p), DualityContext(std::move(L), std::move(ls), p)};
}

namespace {

/// Shared validation for the pair builders: returns n = dim L.
int validatePair(DualityContext& ambient, DualityContext& boundary) {
    if (ambient.closed())
        throw std::invalid_argument("the ladder needs a pair: the ambient complex is closed");
    if (ambient.boundary().topSimplices() != boundary.complex().topSimplices())
        throw std::invalid_argument(
            "the boundary context does not match the boundary of the ambient complex");
    const int n = boundary.complex().dimension();
    if (ambient.complex().dimension() != n + 1)
        throw std::invalid_argument("the boundary must have codimension one");
    return n;
}

/// The maps of the sequence of the pair, indexed by homological degree.
struct PairMaps {
    std::vector<MatrixZ2> alpha, beta, delta;
};

PairMaps pairMaps(DualityContext& ambient, DualityContext& boundary, int n) {
    const SimplicialComplex& N = ambient.complex();
    const SimplicialComplex& L = boundary.complex();
    const Embedding emb = embeddingOf(N, L);
    const GradedHomology& HL = boundary.baseGroups();
    const GradedHomology& HN = ambient.baseGroups();
    const GradedHomology& rel = ambient.baseRelativeGroups();

    PairMaps maps;
    maps.alpha.resize(std::size_t(n + 2));
    maps.beta.resize(std::size_t(n + 2));
    maps.delta.resize(std::size_t(n + 2));
    for (int i = 0; i <= n + 1; ++i) {
        maps.alpha[std::size_t(i)] = i <= n ? inclusionMap(N, L, emb, HL, HN, i)
                                            : MatrixZ2::Zero(bettiOrZero(HN, i), 0);
        maps.beta[std::size_t(i)] = relativizeMap(HN, rel, i);
        maps.delta[std::size_t(i)] = i >= 1 ? connectingMap(N, L, emb, rel, HL, i)
                                            : MatrixZ2::Zero(0, bettiOrZero(rel, 0));
    }
    return maps;
}

MapSequence topRow(DualityContext& ambient, DualityContext& boundary, const PairMaps& maps,
                   int n) {
    const GradedHomology& HL = boundary.baseGroups();
    const GradedHomology& HN = ambient.baseGroups();
    const GradedHomology& rel = ambient.baseRelativeGroups();

    MapSequence top;
    top.labels.push_back("0");
    top.dims.push_back(0);
    for (int i = n + 1; i >= 0; --i) {
        top.labels.push_back(groupLabel(NodeKind::Boundary, i));
        top.dims.push_back(bettiOrZero(HL, i));
        top.labels.push_back(groupLabel(NodeKind::Ambient, i));
        top.dims.push_back(bettiOrZero(HN, i));
        top.labels.push_back(groupLabel(NodeKind::Relative, i));
        top.dims.push_back(bettiOrZero(rel, i));
    }
    top.labels.push_back("0");
    top.dims.push_back(0);

    top.maps.push_back(MatrixZ2::Zero(top.dims[1], 0));
    for (int i = n + 1; i >= 0; --i) {
        top.maps.push_back(maps.alpha[std::size_t(i)]);
        top.maps.push_back(maps.beta[std::size_t(i)]);
        top.maps.push_back(i >= 1 ? maps.delta[std::size_t(i)]
                                  : MatrixZ2::Zero(0, bettiOrZero(rel, 0)));
    }
    return top;
}

}  // namespace

MapSequence pairSequence(DualityContext& ambient, DualityContext& boundary) {
    const int n = validatePair(ambient, boundary);
    return topRow(ambient, boundary, pairMaps(ambient, boundary, n), n);
}

DualityLadder buildLadder(DualityContext& ambient, DualityContext& boundary) {
    const int n = validatePair(ambient, boundary);
    const PairMaps maps = pairMaps(ambient, boundary, n);
    const GradedHomology& HL = boundary.baseGroups();
    const GradedHomology& HN = ambient.baseGroups();
    const GradedHomology& rel = ambient.baseRelativeGroups();

    DualityLadder lad;
    lad.boundaryDimension = n;
    lad.top = topRow(ambient, boundary, maps, n);

    lad.bottom.labels.push_back("0");
    lad.bottom.dims.push_back(0);
    for (int i = n + 1; i >= 0; --i) {
        lad.bottom.labels.push_back(dualLabel(NodeKind::Boundary, i, n));
        lad.bottom.dims.push_back(bettiOrZero(HL, n - i));
        lad.bottom.labels.push_back(dualLabel(NodeKind::Ambient, i, n));
        lad.bottom.dims.push_back(bettiOrZero(rel, n + 1 - i));
        lad.bottom.labels.push_back(dualLabel(NodeKind::Relative, i, n));
        lad.bottom.dims.push_back(bettiOrZero(HN, n + 1 - i));
    }
    lad.bottom.labels.push_back("0");
    lad.bottom.dims.push_back(0);

    // Under each top map sits the transpose of its complementary-degree twin.
    lad.bottom.maps.push_back(MatrixZ2::Zero(lad.bottom.dims[1], 0));
    for (int i = n + 1; i >= 0; --i) {
        lad.bottom.maps.push_back(maps.delta[std::size_t(n + 1 - i)].transpose());
        lad.bottom.maps.push_back(maps.beta[std::size_t(n + 1 - i)].transpose());
        lad.bottom.maps.push_back(maps.alpha[std::size_t(n + 1 - i)].transpose());
    }

    // Verticals: the intersection pairings read into the duals.
    lad.verticals.push_back(MatrixZ2(0, 0));
    lad.verticalLabels.push_back("0");
    for (int i = n + 1; i >= 0; --i) {
        lad.verticals.push_back(i <= n ? MatrixZ2(pairingMatrix(boundary, i).transpose())
                                       : MatrixZ2(0, 0));
        lad.verticals.push_back(MatrixZ2(relativePairingMatrix(ambient, i).transpose()));
        lad.verticals.push_back(relativePairingMatrix(ambient, n + 1 - i));
    }
    lad.verticals.push_back(MatrixZ2(0, 0));
    lad.verticalLabels.reserve(lad.verticals.size());
    for (Index pos = 1; pos + 1 < lad.top.nodeCount(); ++pos) {
        const MatrixZ2& v = lad.verticals[std::size_t(pos)];
        lad.verticalLabels.push_back(lad.top.labels[std::size_t(pos)] + " -> " +
                                     lad.bottom.labels[std::size_t(pos)] + " (" +
                                     std::to_string(v.rows()) + " x " +
                                     std::to_string(v.cols()) + ")");
    }
    lad.verticalLabels.push_back("0");

    for (Index pos = 0; pos < lad.top.nodeCount(); ++pos) {
        if (lad.verticals[std::size_t(pos)].cols() != lad.top.dims[std::size_t(pos)] ||
            lad.verticals[std::size_t(pos)].rows() != lad.bottom.dims[std::size_t(pos)])
            throw std::logic_error("a vertical pairing has the wrong shape at " +
                                   lad.top.labels[std::size_t(pos)]);
    }
    return lad;
}

std::vector<std::string> commutationFailures(const DualityLadder& ladder) {
    std::vector<std::string> failures;
    for (std::size_t k = 0; k < ladder.top.maps.size(); ++k) {
        const MatrixZ2 down = multiplyByColumns<Z2>(ladder.verticals[k + 1], ladder.top.maps[k]);
        const MatrixZ2 across = multiplyByColumns<Z2>(ladder.bottom.maps[k], ladder.verticals[k]);
        if (!sameMatrix(down, across))
            failures.push_back("the square under " + ladder.top.labels[k] + " -> " +
                               ladder.top.labels[k + 1] + " does not commute");
    }
    return failures;
}

std::vector<std::string> failingVerticals(const DualityLadder& ladder) {
    std::vector<std::string> failures;
    for (std::size_t pos = 0; pos < ladder.verticals.size(); ++pos)
        if (!nonsingular(ladder.verticals[pos]))
            failures.push_back(ladder.verticalLabels[pos]);
    return failures;
}

std::string ParityReport::verdict() const {
    if (!applicable()) return "blocked";
    return even() ? "even" : "violated";
}

ParityReport parityAt(const DualityLadder& ladder, int degree) {
    if (2 * degree != ladder.boundaryDimension)
        throw std::invalid_argument("the parity argument lives at the self-dual middle degree");
    ParityReport report;
    report.degree = degree;
    const Index middle = ladder.nodePosition(NodeKind::Boundary, degree);
    report.middleBetti = ladder.top.dims[std::size_t(middle)];
    report.alphaKernel =
        report.middleBetti - rank<Z2>(ladder.top.maps[std::size_t(middle)]);
    for (Index pos : {ladder.nodePosition(NodeKind::Relative, degree + 1), middle,
                      ladder.nodePosition(NodeKind::Ambient, degree)})
        if (!nonsingular(ladder.verticals[std::size_t(pos)]))
            report.failingVerticals.push_back(ladder.verticalLabels[std::size_t(pos)]);
    return report;
}

}  // namespace ihom
