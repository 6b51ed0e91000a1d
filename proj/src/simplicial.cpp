#include "ihom/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ihom {

namespace {

std::string joinNames(const VertexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ' ';
        out += s[i];
    }
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
    int componentCount() {
        std::set<std::size_t> roots;
        for (std::size_t i = 0; i < parent_.size(); ++i) roots.insert(find(i));
        return static_cast<int>(roots.size());
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

VertexSet canonicalSimplex(VertexSet s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("simplex has a repeated vertex: {" + joinNames(s) + "}");
    return s;
}

SimplicialComplex SimplicialComplex::fromTopSimplices(const std::vector<VertexSet>& generators) {
    std::vector<std::set<VertexSet>> byDim;
    for (const VertexSet& gen : generators) {
        const VertexSet g = canonicalSimplex(gen);
        if (g.empty()) throw std::invalid_argument("empty generator simplex");
        if (g.size() > 20) throw std::invalid_argument("generator simplex too large");
        const std::size_t k = g.size();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
            VertexSet face;
            for (std::size_t b = 0; b < k; ++b)
                if ((mask >> b) & 1) face.push_back(g[b]);
            const std::size_t d = face.size() - 1;
            if (byDim.size() <= d) byDim.resize(d + 1);
            byDim[d].insert(std::move(face));
        }
    }
    SimplicialComplex K;
    K.simplices_.resize(byDim.size());
    K.index_.resize(byDim.size());
    for (std::size_t d = 0; d < byDim.size(); ++d) {
        K.simplices_[d].assign(byDim[d].begin(), byDim[d].end());
        for (Index i = 0; i < static_cast<Index>(K.simplices_[d].size()); ++i)
            K.index_[d].emplace(K.simplices_[d][i], i);
    }
    K.buildDerivedStructure();
    return K;
}

void SimplicialComplex::buildDerivedStructure() {
    const int n = dimension();
    facets_.assign(simplices_.size(), {});
    cofacets_.assign(simplices_.size(), {});
    boundary_.clear();
    for (int d = 0; d <= n; ++d) {
        facets_[static_cast<std::size_t>(d)].resize(simplices_[static_cast<std::size_t>(d)].size());
        cofacets_[static_cast<std::size_t>(d)].resize(
            simplices_[static_cast<std::size_t>(d)].size());
    }
    for (int d = 1; d <= n; ++d) {
        for (Index j = 0; j < simplexCount(d); ++j) {
            const VertexSet& s = simplices_[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
            VertexSet face(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t b = 0; b < s.size(); ++b)
                    if (b != drop) face[w++] = s[b];
                const Index fi = index_[static_cast<std::size_t>(d - 1)].at(face);
                facets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)].push_back(fi);
                cofacets_[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(fi)].push_back(j);
            }
        }
    }
    for (int d = 0; d <= n; ++d) {
        const Index rows = d == 0 ? 0 : simplexCount(d - 1);
        MatrixZ2 B = MatrixZ2::Zero(rows, simplexCount(d));
        if (d >= 1)
            for (Index j = 0; j < simplexCount(d); ++j)
                for (Index fi : facets_[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)])
                    B(fi, j) = Z2(1);
        boundary_.push_back(std::move(B));
    }
    for (int d = 2; d <= n; ++d) {
        const MatrixZ2& Bd = boundary_[static_cast<std::size_t>(d)];
        const MatrixZ2& Bprev = boundary_[static_cast<std::size_t>(d - 1)];
        for (Index j = 0; j < Bd.cols(); ++j) {
            const VectorZ2 acc = applyByColumns<Z2>(Bprev, Bd.col(j));
            if (detail::findNonzero<Z2>(acc, 0, acc.size()) >= 0)
                throw std::logic_error("boundary of a boundary is nonzero");
        }
    }
}

Index SimplicialComplex::simplexCount(int dim) const {
    if (dim < 0 || dim > dimension()) return 0;
    return static_cast<Index>(simplices_[static_cast<std::size_t>(dim)].size());
}

std::vector<Index> SimplicialComplex::fVector() const {
    std::vector<Index> f;
    for (int d = 0; d <= dimension(); ++d) f.push_back(simplexCount(d));
    return f;
}

Index SimplicialComplex::totalSimplexCount() const {
    Index total = 0;
    for (int d = 0; d <= dimension(); ++d) total += simplexCount(d);
    return total;
}

const std::vector<VertexSet>& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim > dimension()) throw std::out_of_range("no simplices in that dimension");
    return simplices_[static_cast<std::size_t>(dim)];
}

const VertexSet& SimplicialComplex::simplex(int dim, Index i) const {
    return simplices(dim).at(static_cast<std::size_t>(i));
}

std::optional<Index> SimplicialComplex::indexOf(const VertexSet& s) const {
    if (s.empty()) return std::nullopt;
    const VertexSet c = canonicalSimplex(s);
    const int d = static_cast<int>(c.size()) - 1;
    if (d > dimension()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    const auto it = idx.find(c);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

bool SimplicialComplex::contains(const VertexSet& s) const { return indexOf(s).has_value(); }

std::vector<Vertex> SimplicialComplex::vertexNames() const {
    std::vector<Vertex> names;
    for (Index i = 0; i < simplexCount(0); ++i) names.push_back(simplex(0, i)[0]);
    return names;
}

bool SimplicialComplex::hasVertex(const Vertex& v) const { return contains({v}); }

std::vector<VertexSet> SimplicialComplex::topSimplices() const {
    std::vector<VertexSet> tops;
    for (int d = 0; d <= dimension(); ++d)
        for (Index i = 0; i < simplexCount(d); ++i)
            if (cofacetsOf(d)[static_cast<std::size_t>(i)].empty()) tops.push_back(simplex(d, i));
    return tops;
}

const std::vector<std::vector<Index>>& SimplicialComplex::facetsOf(int dim) const {
    if (dim < 0 || dim > dimension()) throw std::out_of_range("no simplices in that dimension");
    return facets_[static_cast<std::size_t>(dim)];
}

const std::vector<std::vector<Index>>& SimplicialComplex::cofacetsOf(int dim) const {
    if (dim < 0 || dim > dimension()) throw std::out_of_range("no simplices in that dimension");
    return cofacets_[static_cast<std::size_t>(dim)];
}

const MatrixZ2& SimplicialComplex::boundaryMatrix(int dim) const {
    if (dim < 0 || dim > dimension()) throw std::out_of_range("no boundary operator in that degree");
    return boundary_[static_cast<std::size_t>(dim)];
}

long SimplicialComplex::eulerCharacteristic() const {
    long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simplexCount(d));
    return chi;
}

Chain zeroChain(const SimplicialComplex& K, int degree) {
    return Chain{degree, VectorZ2::Zero(K.simplexCount(degree))};
}

Chain chainFrom(const SimplicialComplex& K, int degree,
                const std::vector<VertexSet>& simplices) {
    Chain c = zeroChain(K, degree);
    for (const VertexSet& s : simplices) {
        if (static_cast<int>(s.size()) != degree + 1)
            throw std::invalid_argument("simplex {" + joinNames(s) + "} has the wrong dimension");
        const auto idx = K.indexOf(s);
        if (!idx) throw std::invalid_argument("simplex {" + joinNames(s) + "} is not in the complex");
        c.coefficients[*idx] += Z2(1);
    }
    return c;
}

std::vector<VertexSet> chainSupport(const SimplicialComplex& K, const Chain& c) {
    std::vector<VertexSet> out;
    for (Index i = 0; i < c.coefficients.size(); ++i)
        if (c.coefficients[i].isSet()) out.push_back(K.simplex(c.degree, i));
    return out;
}

Chain boundary(const SimplicialComplex& K, const Chain& c) {
    if (c.coefficients.size() != K.simplexCount(c.degree))
        throw std::invalid_argument("chain length does not match the complex");
    if (c.degree <= 0) return Chain{c.degree - 1, VectorZ2(0)};
    return Chain{c.degree - 1, applyByColumns<Z2>(K.boundaryMatrix(c.degree), c.coefficients)};
}

Chain topChain(const SimplicialComplex& K) {
    if (K.empty()) throw std::invalid_argument("empty complex has no top chain");
    const int n = K.dimension();
    Chain c = zeroChain(K, n);
    for (Index i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] = Z2(1);
    return c;
}

Chain fundamentalClass(const SimplicialComplex& K) {
    Chain c = topChain(K);
    const Chain b = boundary(K, c);
    if (b.degree >= 0 && detail::findNonzero<Z2>(b.coefficients, 0, b.coefficients.size()) >= 0)
        throw std::invalid_argument("complex is not closed in its top dimension");
    return c;
}

SimplicialComplex cone(const SimplicialComplex& K, const Vertex& apex) {
    if (apex.empty()) throw std::invalid_argument("apex name must not be empty");
    if (K.hasVertex(apex)) throw std::invalid_argument("apex name already in use: " + apex);
    std::vector<VertexSet> gens;
    if (K.empty()) {
        gens.push_back({apex});
    } else {
        for (VertexSet s : K.topSimplices()) {
            s.push_back(apex);
            gens.push_back(std::move(s));
        }
    }
    return SimplicialComplex::fromTopSimplices(gens);
}

SimplicialComplex suspension(const SimplicialComplex& K, const Vertex& north,
                             const Vertex& south) {
    if (north == south) throw std::invalid_argument("suspension points must differ");
    if (north.empty() || south.empty())
        throw std::invalid_argument("suspension point names must not be empty");
    if (K.hasVertex(north) || K.hasVertex(south))
        throw std::invalid_argument("suspension point name already in use");
    std::vector<VertexSet> gens;
    if (K.empty()) {
        gens.push_back({north});
        gens.push_back({south});
    } else {
        for (const VertexSet& s : K.topSimplices()) {
            VertexSet up = s, down = s;
            up.push_back(north);
            down.push_back(south);
            gens.push_back(std::move(up));
            gens.push_back(std::move(down));
        }
    }
    return SimplicialComplex::fromTopSimplices(gens);
}

SimplicialComplex vertexLink(const SimplicialComplex& K, const Vertex& v) {
    return simplexLink(K, {v});
}

SimplicialComplex simplexLink(const SimplicialComplex& K, const VertexSet& s) {
    const VertexSet c = canonicalSimplex(s);
    if (!K.contains(c)) throw std::invalid_argument("simplex {" + joinNames(c) + "} is not in the complex");
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<VertexSet> gens;
    for (int e = d + 1; e <= K.dimension(); ++e) {
        for (const VertexSet& t : K.simplices(e)) {
            if (!std::includes(t.begin(), t.end(), c.begin(), c.end())) continue;
            VertexSet face;
            face.reserve(t.size() - c.size());
            std::set_difference(t.begin(), t.end(), c.begin(), c.end(), std::back_inserter(face));
            gens.push_back(std::move(face));
        }
    }
    return SimplicialComplex::fromTopSimplices(gens);
}

SimplicialComplex vertexStar(const SimplicialComplex& K, const Vertex& v) {
    if (!K.hasVertex(v)) throw std::invalid_argument("no vertex named " + v);
    std::vector<VertexSet> gens;
    for (int d = 0; d <= K.dimension(); ++d)
        for (const VertexSet& s : K.simplices(d))
            if (std::binary_search(s.begin(), s.end(), v)) gens.push_back(s);
    return SimplicialComplex::fromTopSimplices(gens);
}

SimplicialComplex boundarySubcomplex(const SimplicialComplex& K) {
    std::vector<VertexSet> gens;
    const int n = K.dimension();
    if (n >= 1) {
        const auto& cof = K.cofacetsOf(n - 1);
        for (Index i = 0; i < K.simplexCount(n - 1); ++i)
            if (cof[static_cast<std::size_t>(i)].size() == 1) gens.push_back(K.simplex(n - 1, i));
    }
    return SimplicialComplex::fromTopSimplices(gens);
}

PseudomanifoldReport pseudomanifoldReport(const SimplicialComplex& K) {
    PseudomanifoldReport R;
    if (K.empty()) return R;
    const int n = K.dimension();

    R.pure = true;
    for (int d = 0; d < n; ++d)
        for (Index i = 0; i < K.simplexCount(d); ++i)
            if (K.cofacetsOf(d)[static_cast<std::size_t>(i)].empty()) R.pure = false;

    if (n == 0) {
        // No ridges to walk or count; the classical closed cases are one or
        // two points.
        R.ridgeCountsValid = true;
        R.closed = true;
        R.stronglyConnected = K.simplexCount(0) <= 2;
        R.verdict = R.pure && R.stronglyConnected;
        return R;
    }

    R.ridgeCountsValid = true;
    const auto& cof = K.cofacetsOf(n - 1);
    for (Index i = 0; i < K.simplexCount(n - 1); ++i) {
        const std::size_t c = cof[static_cast<std::size_t>(i)].size();
        if (c == 1)
            R.boundaryRidges.push_back(i);
        else if (c != 2)
            R.ridgeCountsValid = false;
    }
    R.closed = R.ridgeCountsValid && R.boundaryRidges.empty();

    UnionFind uf(static_cast<std::size_t>(K.simplexCount(n)));
    for (Index i = 0; i < K.simplexCount(n - 1); ++i) {
        const auto& tops = cof[static_cast<std::size_t>(i)];
        for (std::size_t k = 1; k < tops.size(); ++k)
            uf.unite(static_cast<std::size_t>(tops[0]), static_cast<std::size_t>(tops[k]));
    }
    R.stronglyConnected = K.simplexCount(n) > 0 && uf.componentCount() == 1;

    R.verdict = R.pure && R.stronglyConnected && R.ridgeCountsValid;
    return R;
}

SimplicialComplex identifyVertices(const SimplicialComplex& K, const Vertex& keep,
                                   const Vertex& drop) {
    if (keep == drop) throw std::invalid_argument("cannot identify a vertex with itself");
    if (!K.hasVertex(keep)) throw std::invalid_argument("no vertex named " + keep);
    if (!K.hasVertex(drop)) throw std::invalid_argument("no vertex named " + drop);

    const auto imageOf = [&](VertexSet s) {
        for (Vertex& x : s)
            if (x == drop) x = keep;
        std::sort(s.begin(), s.end());
        return s;
    };

    for (int d = 0; d <= K.dimension(); ++d) {
        std::set<VertexSet> images;
        for (const VertexSet& s : K.simplices(d)) {
            VertexSet img = imageOf(s);
            if (std::adjacent_find(img.begin(), img.end()) != img.end())
                throw std::invalid_argument("identification collapses simplex {" + joinNames(s) +
                                            "}");
            images.insert(std::move(img));
        }
        // In dimension 0 the identified pair itself merges; nothing else may.
        const std::size_t expected =
            static_cast<std::size_t>(K.simplexCount(d)) - (d == 0 ? 1 : 0);
        if (images.size() != expected)
            throw std::invalid_argument("identification merges distinct simplices of dimension " +
                                        std::to_string(d));
    }

    std::vector<VertexSet> gens;
    for (const VertexSet& s : K.topSimplices()) gens.push_back(imageOf(s));
    return SimplicialComplex::fromTopSimplices(gens);
}

SimplicialComplex renameVertex(const SimplicialComplex& K, const Vertex& from, const Vertex& to) {
    if (to.empty()) throw std::invalid_argument("vertex name must not be empty");
    if (!K.hasVertex(from)) throw std::invalid_argument("no vertex named " + from);
    if (from != to && K.hasVertex(to)) throw std::invalid_argument("vertex name already in use: " + to);
    std::vector<VertexSet> gens;
    for (VertexSet s : K.topSimplices()) {
        for (Vertex& x : s)
            if (x == from) x = to;
        gens.push_back(std::move(s));
    }
    return SimplicialComplex::fromTopSimplices(gens);
}

int connectedComponentCount(const SimplicialComplex& K) {
    if (K.empty()) return 0;
    UnionFind uf(static_cast<std::size_t>(K.simplexCount(0)));
    if (K.dimension() >= 1) {
        for (Index e = 0; e < K.simplexCount(1); ++e) {
            const auto& ends = K.facetsOf(1)[static_cast<std::size_t>(e)];
            uf.unite(static_cast<std::size_t>(ends[0]), static_cast<std::size_t>(ends[1]));
        }
    }
    return uf.componentCount();
}

bool isSphere(const SimplicialComplex& K, int dim) {
    if (K.dimension() != dim) return false;
    switch (dim) {
        case 0:
            return K.simplexCount(0) == 2;
        case 1: {
            if (connectedComponentCount(K) != 1) return false;
            for (Index i = 0; i < K.simplexCount(0); ++i)
                if (K.cofacetsOf(0)[static_cast<std::size_t>(i)].size() != 2) return false;
            return true;
        }
        case 2: {
            const PseudomanifoldReport R = pseudomanifoldReport(K);
            return R.verdict && R.closed && K.eulerCharacteristic() == 2;
        }
        default:
            throw std::invalid_argument("sphere recognition is supported up to dimension 2");
    }
}

bool isBall(const SimplicialComplex& K, int dim) {
    if (K.dimension() != dim) return false;
    switch (dim) {
        case 0:
            return K.simplexCount(0) == 1;
        case 1: {
            if (connectedComponentCount(K) != 1) return false;
            int endpoints = 0;
            for (Index i = 0; i < K.simplexCount(0); ++i) {
                const std::size_t c = K.cofacetsOf(0)[static_cast<std::size_t>(i)].size();
                if (c == 1)
                    ++endpoints;
                else if (c != 2)
                    return false;
            }
            return endpoints == 2;
        }
        case 2: {
            const PseudomanifoldReport R = pseudomanifoldReport(K);
            if (!R.verdict || R.closed) return false;
            if (K.eulerCharacteristic() != 1) return false;
            return isSphere(boundarySubcomplex(K), 1);
        }
        default:
            throw std::invalid_argument("ball recognition is supported up to dimension 2");
    }
}

Embedding embeddingOf(const SimplicialComplex& K, const SimplicialComplex& L) {
    Embedding emb;
    emb.parentIndex.resize(static_cast<std::size_t>(L.dimension() + 1));
    for (int d = 0; d <= L.dimension(); ++d) {
        for (Index i = 0; i < L.simplexCount(d); ++i) {
            const auto idx = K.indexOf(L.simplex(d, i));
            if (!idx)
                throw std::invalid_argument("not a subcomplex: missing simplex {" +
                                            joinNames(L.simplex(d, i)) + "}");
            emb.parentIndex[static_cast<std::size_t>(d)].push_back(*idx);
        }
    }
    return emb;
}

Chain includeChain(const SimplicialComplex& K, const SimplicialComplex& L, const Embedding& emb,
                   const Chain& c) {
    if (c.degree < 0 || c.degree > L.dimension() ||
        c.coefficients.size() != L.simplexCount(c.degree))
        throw std::invalid_argument("chain does not match the subcomplex");
    Chain out = zeroChain(K, c.degree);
    const auto& map = emb.parentIndex[static_cast<std::size_t>(c.degree)];
    for (Index i = 0; i < c.coefficients.size(); ++i)
        if (c.coefficients[i].isSet()) out.coefficients[map[static_cast<std::size_t>(i)]] += Z2(1);
    return out;
}

}  // namespace ihom
