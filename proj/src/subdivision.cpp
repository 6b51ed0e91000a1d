#include "ihom/subdivision.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ihom {

namespace {

Vertex barycenterName(const VertexSet& base) {
    std::string name = base.front();
    for (std::size_t k = 1; k < base.size(); ++k) {
        name += '.';
        name += base[k];
    }
    return name;
}

}  // namespace

std::vector<SimplexRef> Subdivision::flagOf(int dim, Index i) const {
    const VertexSet& s = prime.simplex(dim, i);
    std::vector<SimplexRef> flag;
    flag.reserve(s.size());
    for (const Vertex& v : s) flag.push_back(baseOfVertex.at(v));
    std::sort(flag.begin(), flag.end());
    return flag;
}

Subdivision barycentricSubdivision(const SimplicialComplex& base) {
    if (base.empty()) throw std::invalid_argument("cannot subdivide an empty complex");

    Subdivision sd;
    std::map<VertexSet, Vertex> nameOfBase;
    for (int d = 0; d <= base.dimension(); ++d) {
        for (Index j = 0; j < base.simplexCount(d); ++j) {
            const VertexSet& s = base.simplex(d, j);
            Vertex name = barycenterName(s);
            auto inserted = sd.baseOfVertex.emplace(name, SimplexRef{d, j});
            if (!inserted.second)
                throw std::invalid_argument("barycenter name collision: '" + name +
                                            "' (vertex names may not embed '.' ambiguously)");
            nameOfBase.emplace(s, std::move(name));
        }
    }

    std::vector<VertexSet> primeTops;
    for (const VertexSet& top : base.topSimplices()) {
        VertexSet order = top;
        do {
            VertexSet flagSimplex;
            VertexSet prefix;
            for (const Vertex& v : order) {
                prefix.push_back(v);
                VertexSet sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                flagSimplex.push_back(nameOfBase.at(sorted));
            }
            primeTops.push_back(canonicalSimplex(flagSimplex));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    sd.prime = SimplicialComplex::fromTopSimplices(primeTops);

    sd.carrier.resize(std::size_t(sd.prime.dimension() + 1));
    for (int d = 0; d <= sd.prime.dimension(); ++d) {
        sd.carrier[std::size_t(d)].resize(std::size_t(sd.prime.simplexCount(d)));
        for (Index i = 0; i < sd.prime.simplexCount(d); ++i)
            sd.carrier[std::size_t(d)][std::size_t(i)] = sd.flagOf(d, i).back();
    }

    sd.chainColumns.resize(std::size_t(base.dimension() + 1));
    for (int d = 0; d <= base.dimension(); ++d) {
        sd.chainColumns[std::size_t(d)].resize(std::size_t(base.simplexCount(d)));
        for (Index i = 0; i < sd.prime.simplexCount(d); ++i) {
            const SimplexRef carrier = sd.carrier[std::size_t(d)][std::size_t(i)];
            if (carrier.first == d)
                sd.chainColumns[std::size_t(d)][std::size_t(carrier.second)].push_back(i);
        }
    }

    // The subdivision chain map must commute with the boundary operators.
    for (int d = 1; d <= base.dimension(); ++d) {
        const MatrixZ2& primeBoundary = sd.prime.boundaryMatrix(d);
        for (Index j = 0; j < base.simplexCount(d); ++j) {
            VectorZ2 image(sd.prime.simplexCount(d));
            image.setZero();
            for (Index i : sd.chainColumns[std::size_t(d)][std::size_t(j)]) image[i] = Z2(1);
            VectorZ2 boundaryOfImage = applyByColumns(primeBoundary, image);

            VectorZ2 imageOfBoundary(sd.prime.simplexCount(d - 1));
            imageOfBoundary.setZero();
            for (Index f : base.facetsOf(d)[std::size_t(j)])
                for (Index i : sd.chainColumns[std::size_t(d - 1)][std::size_t(f)])
                    imageOfBoundary[i] += Z2(1);

            if (boundaryOfImage != imageOfBoundary)
                throw std::logic_error("subdivision chain map fails to commute with the boundary");
        }
    }
    return sd;
}

Chain subdivideChain(const Subdivision& sd, const SimplicialComplex& base, const Chain& c) {
    if (c.degree < 0) return Chain{c.degree, VectorZ2(0)};
    if (c.degree > base.dimension())
        throw std::invalid_argument("chain degree exceeds the dimension of the base complex");
    if (c.coefficients.size() != base.simplexCount(c.degree))
        throw std::invalid_argument("chain length does not match the base complex");

    Chain out{c.degree, VectorZ2(sd.prime.simplexCount(c.degree))};
    out.coefficients.setZero();
    for (Index j = 0; j < c.coefficients.size(); ++j)
        if (c.coefficients[j].isSet())
            for (Index i : sd.chainColumns[std::size_t(c.degree)][std::size_t(j)])
                out.coefficients[i] = Z2(1);
    return out;
}

DualBlocks dualBlocks(const SimplicialComplex& base, const Subdivision& sd) {
    const PseudomanifoldReport report = pseudomanifoldReport(base);
    if (!report.pure) throw std::invalid_argument("dual blocks require a pure complex");

    const int n = base.dimension();
    DualBlocks blocks;
    blocks.cells.resize(std::size_t(n + 1));
    for (int d = 0; d <= n; ++d)
        blocks.cells[std::size_t(d)].resize(std::size_t(base.simplexCount(d)));

    for (int p = 0; p <= n; ++p) {
        const int d = n - p;
        for (Index i = 0; i < sd.prime.simplexCount(p); ++i) {
            const std::vector<SimplexRef> flag = sd.flagOf(p, i);
            if (flag.front().first == d && flag.back().first == n)
                blocks.cells[std::size_t(d)][std::size_t(flag.front().second)].push_back(i);
        }
    }

    // Boundary identity: the boundary of a block is the sum of the blocks dual
    // to the cofacets, up to simplices subdividing the boundary of the base.
    const SimplicialComplex rim = boundarySubcomplex(base);
    for (int d = 0; d < n; ++d) {
        const int p = n - d;
        const MatrixZ2& primeBoundary = sd.prime.boundaryMatrix(p);
        std::vector<bool> insideRim(std::size_t(sd.prime.simplexCount(p - 1)), false);
        if (!rim.empty()) {
            for (Index i = 0; i < sd.prime.simplexCount(p - 1); ++i) {
                const SimplexRef carrier = sd.carrier[std::size_t(p - 1)][std::size_t(i)];
                insideRim[std::size_t(i)] = rim.contains(base.simplex(carrier.first, carrier.second));
            }
        }
        for (Index j = 0; j < base.simplexCount(d); ++j) {
            VectorZ2 cells(sd.prime.simplexCount(p));
            cells.setZero();
            for (Index i : blocks.cells[std::size_t(d)][std::size_t(j)]) cells[i] = Z2(1);
            VectorZ2 residue = applyByColumns(primeBoundary, cells);
            for (Index c : base.cofacetsOf(d)[std::size_t(j)])
                for (Index i : blocks.cells[std::size_t(d + 1)][std::size_t(c)]) residue[i] += Z2(1);
            for (Index i = 0; i < residue.size(); ++i)
                if (residue[i].isSet() && !insideRim[std::size_t(i)])
                    throw std::logic_error("dual block boundary identity violated");
        }
    }
    return blocks;
}

Chain blockChain(const SimplicialComplex& base, const Subdivision& sd, const DualBlocks& blocks,
                 int baseDim, Index j) {
    VectorZ2 coefficients(base.simplexCount(baseDim));
    coefficients.setZero();
    if (j < 0 || j >= coefficients.size()) throw std::out_of_range("block index out of range");
    coefficients[j] = Z2(1);
    return blockCombinationChain(base, sd, blocks, baseDim, coefficients);
}

Chain blockCombinationChain(const SimplicialComplex& base, const Subdivision& sd,
                            const DualBlocks& blocks, int baseDim, const VectorZ2& coefficients) {
    if (baseDim < 0 || baseDim > base.dimension())
        throw std::out_of_range("block dimension out of range");
    if (coefficients.size() != base.simplexCount(baseDim))
        throw std::invalid_argument("block coefficient length does not match the base complex");

    const int degree = base.dimension() - baseDim;
    Chain out{degree, VectorZ2(sd.prime.simplexCount(degree))};
    out.coefficients.setZero();
    for (Index j = 0; j < coefficients.size(); ++j)
        if (coefficients[j].isSet())
            for (Index i : blocks.cells[std::size_t(baseDim)][std::size_t(j)])
                out.coefficients[i] = Z2(1);
    return out;
}

}  // namespace ihom
