#include "ihom/strata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ihom {

namespace {

void requireMatches(const SimplicialComplex& K, const Stratification& s) {
    if (static_cast<int>(s.stratumOf.size()) != K.dimension() + 1)
        throw std::invalid_argument("stratification does not match the complex");
    for (int d = 0; d <= K.dimension(); ++d)
        if (s.stratumOf[std::size_t(d)].size() != std::size_t(K.simplexCount(d)))
            throw std::invalid_argument("stratification does not match the complex");
}

/// Recomputes every stratum's dimension and codimension from the assignment.
void refreshDimensions(const SimplicialComplex& K, Stratification& s) {
    for (Stratum& st : s.strata) st.dim = -1;
    for (int d = 0; d <= K.dimension(); ++d)
        for (Index st : s.stratumOf[std::size_t(d)])
            s.strata[std::size_t(st)].dim = std::max(s.strata[std::size_t(st)].dim, d);
    for (Stratum& st : s.strata) st.codim = K.dimension() - st.dim;
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

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

Index Stratification::stratumIndex(int dim, Index i) const {
    return stratumOf.at(std::size_t(dim)).at(std::size_t(i));
}

const Stratum& Stratification::stratumOfSimplex(int dim, Index i) const {
    return strata.at(std::size_t(stratumIndex(dim, i)));
}

std::optional<Index> Stratification::stratumNamed(const std::string& name) const {
    for (std::size_t k = 0; k < strata.size(); ++k)
        if (strata[k].name == name) return Index(k);
    return std::nullopt;
}

Stratification trivialStratification(const SimplicialComplex& K) {
    if (K.empty()) throw std::invalid_argument("cannot stratify an empty complex");
    Stratification s;
    s.strata.push_back(Stratum{"main", K.dimension(), 0});
    s.stratumOf.resize(std::size_t(K.dimension() + 1));
    for (int d = 0; d <= K.dimension(); ++d)
        s.stratumOf[std::size_t(d)].assign(std::size_t(K.simplexCount(d)), 0);
    return s;
}

Stratification fromAssignment(const SimplicialComplex& K,
                              const std::map<VertexSet, std::string>& assigned,
                              const std::string& defaultName) {
    if (K.empty()) throw std::invalid_argument("cannot stratify an empty complex");

    std::set<std::string> names{defaultName};
    for (const auto& [simplex, name] : assigned) {
        if (!K.contains(simplex)) {
            VertexSet c = simplex;
            std::string joined;
            for (const Vertex& v : c) joined += (joined.empty() ? "" : " ") + v;
            throw std::invalid_argument("assigned simplex {" + joined + "} is not in the complex");
        }
        names.insert(name);
    }

    Stratification s;
    std::map<std::string, Index> indexOfName;
    for (const std::string& name : names) {
        indexOfName.emplace(name, Index(s.strata.size()));
        s.strata.push_back(Stratum{name, -1, 0});
    }

    const Index fallback = indexOfName.at(defaultName);
    s.stratumOf.resize(std::size_t(K.dimension() + 1));
    for (int d = 0; d <= K.dimension(); ++d)
        s.stratumOf[std::size_t(d)].assign(std::size_t(K.simplexCount(d)), fallback);
    for (const auto& [simplex, name] : assigned) {
        const VertexSet c = canonicalSimplex(simplex);
        const int d = int(c.size()) - 1;
        s.stratumOf[std::size_t(d)][std::size_t(*K.indexOf(c))] = indexOfName.at(name);
    }

    // The default stratum may end up empty when every simplex is assigned.
    refreshDimensions(K, s);
    if (s.strata[std::size_t(fallback)].dim < 0 && s.strata.size() > 1) {
        Stratification trimmed;
        std::vector<Index> remap(s.strata.size(), -1);
        for (std::size_t k = 0; k < s.strata.size(); ++k) {
            if (Index(k) == fallback) continue;
            remap[k] = Index(trimmed.strata.size());
            trimmed.strata.push_back(s.strata[k]);
        }
        trimmed.stratumOf = s.stratumOf;
        for (auto& row : trimmed.stratumOf)
            for (Index& st : row) st = remap[std::size_t(st)];
        return trimmed;
    }
    return s;
}

std::vector<std::string> frontierViolations(const SimplicialComplex& K, const Stratification& s) {
    requireMatches(K, s);
    std::set<std::pair<Index, Index>> seen;
    std::vector<std::string> out;
    for (int d = 1; d <= K.dimension(); ++d) {
        for (Index i = 0; i < K.simplexCount(d); ++i) {
            const Index si = s.stratumIndex(d, i);
            for (Index f : K.facetsOf(d)[std::size_t(i)]) {
                const Index ti = s.stratumIndex(d - 1, f);
                if (ti == si) continue;
                const Stratum& S = s.strata[std::size_t(si)];
                const Stratum& T = s.strata[std::size_t(ti)];
                if (T.dim < S.dim) continue;
                if (seen.emplace(si, ti).second)
                    out.push_back("stratum '" + T.name + "' meets the closure of stratum '" +
                                  S.name + "' without smaller dimension");
            }
        }
    }
    return out;
}

Stratification coneStratification(const SimplicialComplex& coneK, const SimplicialComplex& base,
                                  const Stratification& baseStrat, const Vertex& apex) {
    requireMatches(base, baseStrat);
    if (!coneK.hasVertex(apex)) throw std::invalid_argument("no vertex named " + apex);
    if (base.hasVertex(apex)) throw std::invalid_argument("apex belongs to the base");

    Stratification s;
    s.strata = baseStrat.strata;
    for (Stratum& st : s.strata) ++st.dim;  // every stratum absorbs its cone
    const Index apexStratum = Index(s.strata.size());
    const std::string apexName = "pt_" + apex;
    if (s.stratumNamed(apexName))
        throw std::invalid_argument("stratum name already in use: " + apexName);
    s.strata.push_back(Stratum{apexName, 0, 0});

    s.stratumOf.resize(std::size_t(coneK.dimension() + 1));
    for (int d = 0; d <= coneK.dimension(); ++d) {
        s.stratumOf[std::size_t(d)].assign(std::size_t(coneK.simplexCount(d)), -1);
        for (Index i = 0; i < coneK.simplexCount(d); ++i) {
            VertexSet t = coneK.simplex(d, i);
            const auto it = std::find(t.begin(), t.end(), apex);
            if (it != t.end()) t.erase(it);
            if (t.empty()) {
                s.stratumOf[std::size_t(d)][std::size_t(i)] = apexStratum;
                continue;
            }
            const auto idx = base.indexOf(t);
            if (!idx) throw std::invalid_argument("complex is not the cone of the given base");
            s.stratumOf[std::size_t(d)][std::size_t(i)] =
                baseStrat.stratumIndex(int(t.size()) - 1, *idx);
        }
    }
    refreshDimensions(coneK, s);
    return s;
}

Stratification suspensionStratification(const SimplicialComplex& suspK,
                                        const SimplicialComplex& base,
                                        const Stratification& baseStrat, const Vertex& north,
                                        const Vertex& south) {
    requireMatches(base, baseStrat);
    if (north == south) throw std::invalid_argument("suspension points must differ");
    for (const Vertex& pole : {north, south}) {
        if (!suspK.hasVertex(pole)) throw std::invalid_argument("no vertex named " + pole);
        if (base.hasVertex(pole)) throw std::invalid_argument("suspension point belongs to the base");
    }

    Stratification s;
    s.strata = baseStrat.strata;
    for (Stratum& st : s.strata) ++st.dim;
    std::map<Vertex, Index> poleStratum;
    for (const Vertex& pole : {north, south}) {
        const std::string name = "pt_" + pole;
        if (s.stratumNamed(name)) throw std::invalid_argument("stratum name already in use: " + name);
        poleStratum.emplace(pole, Index(s.strata.size()));
        s.strata.push_back(Stratum{name, 0, 0});
    }

    s.stratumOf.resize(std::size_t(suspK.dimension() + 1));
    for (int d = 0; d <= suspK.dimension(); ++d) {
        s.stratumOf[std::size_t(d)].assign(std::size_t(suspK.simplexCount(d)), -1);
        for (Index i = 0; i < suspK.simplexCount(d); ++i) {
            VertexSet t = suspK.simplex(d, i);
            std::optional<Vertex> pole;
            for (const Vertex& p : {north, south}) {
                const auto it = std::find(t.begin(), t.end(), p);
                if (it != t.end()) {
                    pole = p;
                    t.erase(it);
                }
            }
            if (t.empty()) {
                if (!pole) throw std::invalid_argument("complex is not the suspension of the base");
                s.stratumOf[std::size_t(d)][std::size_t(i)] = poleStratum.at(*pole);
                continue;
            }
            const auto idx = base.indexOf(t);
            if (!idx) throw std::invalid_argument("complex is not the suspension of the base");
            s.stratumOf[std::size_t(d)][std::size_t(i)] =
                baseStrat.stratumIndex(int(t.size()) - 1, *idx);
        }
    }
    refreshDimensions(suspK, s);
    return s;
}

Stratification markPoint(const SimplicialComplex& K, const Stratification& s, const Vertex& v) {
    requireMatches(K, s);
    if (!K.hasVertex(v)) throw std::invalid_argument("no vertex named " + v);
    const Index vi = *K.indexOf({v});
    if (s.stratumOfSimplex(0, vi).dim == 0)
        throw std::invalid_argument("vertex " + v + " is already in a point stratum");
    const std::string name = "pt_" + v;
    if (s.stratumNamed(name)) throw std::invalid_argument("stratum name already in use: " + name);

    Stratification out = s;
    const Index st = Index(out.strata.size());
    out.strata.push_back(Stratum{name, 0, K.dimension()});
    out.stratumOf[0][std::size_t(vi)] = st;
    refreshDimensions(K, out);
    return out;
}

Stratification restrictedTo(const SimplicialComplex& K, const Stratification& s,
                            const SimplicialComplex& L) {
    requireMatches(K, s);
    const Embedding emb = embeddingOf(K, L);
    if (L.empty()) throw std::invalid_argument("cannot stratify an empty complex");

    std::vector<bool> used(s.strata.size(), false);
    for (int d = 0; d <= L.dimension(); ++d)
        for (Index i : emb.parentIndex[std::size_t(d)])
            used[std::size_t(s.stratumIndex(d, i))] = true;

    // Surviving strata keep the parent's order.
    Stratification out;
    std::vector<Index> remap(s.strata.size(), -1);
    for (std::size_t k = 0; k < s.strata.size(); ++k) {
        if (!used[k]) continue;
        remap[k] = Index(out.strata.size());
        out.strata.push_back(s.strata[k]);
    }

    out.stratumOf.resize(std::size_t(L.dimension() + 1));
    for (int d = 0; d <= L.dimension(); ++d) {
        out.stratumOf[std::size_t(d)].resize(std::size_t(L.simplexCount(d)));
        for (Index i = 0; i < L.simplexCount(d); ++i) {
            const Index parent = s.stratumIndex(d, emb.parentIndex[std::size_t(d)][std::size_t(i)]);
            out.stratumOf[std::size_t(d)][std::size_t(i)] = remap[std::size_t(parent)];
        }
    }
    refreshDimensions(L, out);
    return out;
}

Stratification subdividedStratification(const SimplicialComplex& base, const Stratification& s,
                                        const Subdivision& sd) {
    requireMatches(base, s);
    Stratification out;
    out.strata = s.strata;
    out.stratumOf.resize(std::size_t(sd.prime.dimension() + 1));
    for (int d = 0; d <= sd.prime.dimension(); ++d) {
        out.stratumOf[std::size_t(d)].resize(std::size_t(sd.prime.simplexCount(d)));
        for (Index i = 0; i < sd.prime.simplexCount(d); ++i) {
            const SimplexRef carrier = sd.carrier[std::size_t(d)][std::size_t(i)];
            out.stratumOf[std::size_t(d)][std::size_t(i)] =
                s.stratumIndex(carrier.first, carrier.second);
        }
    }
    refreshDimensions(sd.prime, out);
    return out;
}

Stratification singularStratification(const SimplicialComplex& K) {
    if (K.empty()) throw std::invalid_argument("cannot stratify an empty complex");
    if (K.dimension() > 3)
        throw std::invalid_argument("singular stratification is supported up to dimension 3");

    // level[d][i]: deepest iterated singular set still containing the simplex.
    std::vector<std::vector<int>> level(std::size_t(K.dimension() + 1));
    for (int d = 0; d <= K.dimension(); ++d)
        level[std::size_t(d)].assign(std::size_t(K.simplexCount(d)), 0);

    SimplicialComplex current = K;
    for (int j = 1; !current.empty(); ++j) {
        std::vector<VertexSet> singular;
        const int m = current.dimension();
        for (int d = 0; d < m; ++d) {
            for (const VertexSet& t : current.simplices(d)) {
                const SimplicialComplex link = simplexLink(current, t);
                const int expected = m - d - 1;
                if (!isSphere(link, expected) && !isBall(link, expected)) singular.push_back(t);
            }
        }
        if (singular.empty()) break;
        current = SimplicialComplex::fromTopSimplices(singular);
        for (int d = 0; d <= current.dimension(); ++d)
            for (const VertexSet& t : current.simplices(d)) level[std::size_t(d)][std::size_t(*K.indexOf(t))] = j;
    }

    // Strata are the components of the level sets under the facet relation.
    std::vector<std::size_t> offset(std::size_t(K.dimension() + 2), 0);
    for (int d = 0; d <= K.dimension(); ++d)
        offset[std::size_t(d + 1)] = offset[std::size_t(d)] + std::size_t(K.simplexCount(d));
    UnionFind uf(offset.back());
    for (int d = 1; d <= K.dimension(); ++d)
        for (Index i = 0; i < K.simplexCount(d); ++i)
            for (Index f : K.facetsOf(d)[std::size_t(i)])
                if (level[std::size_t(d)][std::size_t(i)] == level[std::size_t(d - 1)][std::size_t(f)])
                    uf.unite(offset[std::size_t(d)] + std::size_t(i),
                             offset[std::size_t(d - 1)] + std::size_t(f));

    // Components keyed by root, ordered by (level, first member).
    std::map<std::size_t, Index> stratumOfRoot;
    std::vector<int> levelOfStratum;
    Stratification s;
    s.stratumOf.resize(std::size_t(K.dimension() + 1));
    for (int d = 0; d <= K.dimension(); ++d) {
        s.stratumOf[std::size_t(d)].resize(std::size_t(K.simplexCount(d)));
        for (Index i = 0; i < K.simplexCount(d); ++i) {
            const std::size_t root = uf.find(offset[std::size_t(d)] + std::size_t(i));
            auto it = stratumOfRoot.find(root);
            if (it == stratumOfRoot.end()) {
                it = stratumOfRoot.emplace(root, Index(s.strata.size())).first;
                s.strata.push_back(Stratum{"", -1, 0});
                levelOfStratum.push_back(level[std::size_t(d)][std::size_t(i)]);
            }
            s.stratumOf[std::size_t(d)][std::size_t(i)] = it->second;
        }
    }

    // Reorder by (level, discovery) and name.
    std::vector<std::size_t> order(s.strata.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return levelOfStratum[a] < levelOfStratum[b];
    });
    std::vector<Index> reorder(s.strata.size());
    for (std::size_t k = 0; k < order.size(); ++k) reorder[order[k]] = Index(k);
    for (auto& row : s.stratumOf)
        for (Index& st : row) st = reorder[std::size_t(st)];

    std::vector<int> levels(s.strata.size());
    std::map<int, int> levelSizes;
    for (std::size_t k = 0; k < order.size(); ++k) {
        levels[k] = levelOfStratum[order[k]];
        ++levelSizes[levels[k]];
    }
    std::vector<Stratum> strata(s.strata.size());
    std::map<int, int> counter;
    for (std::size_t k = 0; k < strata.size(); ++k) {
        const int lv = levels[k];
        const int idx = counter[lv]++;
        if (lv == 0)
            strata[k].name = levelSizes[0] == 1 ? "main" : "main." + std::to_string(idx);
        else
            strata[k].name = "s" + std::to_string(lv) + "." + std::to_string(idx);
    }
    s.strata = std::move(strata);

    refreshDimensions(K, s);
    return s;
}

SimplicialComplex chainSingularSet(const SimplicialComplex& K, const Chain& C) {
    if (C.degree > 3) throw std::invalid_argument("chain singular sets are supported up to degree 3");
    const std::vector<VertexSet> support = chainSupport(K, C);
    if (C.degree <= 0 || support.empty()) return SimplicialComplex();

    const SimplicialComplex body = SimplicialComplex::fromTopSimplices(support);
    std::vector<VertexSet> singular;
    for (int d = 0; d < C.degree; ++d)
        for (const VertexSet& t : body.simplices(d))
            if (!isSphere(simplexLink(body, t), C.degree - d - 1)) singular.push_back(t);
    return SimplicialComplex::fromTopSimplices(singular);
}

Perversity::Perversity(std::vector<int> byCodim) : byCodim_(std::move(byCodim)) {
    for (int v : byCodim_)
        if (v < 0) throw std::invalid_argument("perversity values must be nonnegative");
}

int Perversity::operator()(int codim) const {
    if (codim <= 0 || std::size_t(codim) > byCodim_.size()) return 0;
    return byCodim_[std::size_t(codim - 1)];
}

bool Perversity::growthValid() const {
    int prev = 0;
    for (int v : byCodim_) {
        if (v < prev || v > prev + 1) return false;
        prev = v;
    }
    return true;
}

std::vector<bool> allowableMask(const SimplicialComplex& K, const Stratification& s,
                                const Perversity& p, int degree) {
    requireMatches(K, s);
    if (degree < 0 || degree > K.dimension()) return {};

    // worst[d][i * stride + c]: largest dimension of a face of simplex (d, i)
    // lying in a stratum of codimension c (or -1).
    const std::size_t stride = std::size_t(K.dimension()) + 1;
    std::vector<std::vector<int>> worst(std::size_t(degree + 1));
    for (int d = 0; d <= degree; ++d) {
        worst[std::size_t(d)].assign(std::size_t(K.simplexCount(d)) * stride, -1);
        for (Index i = 0; i < K.simplexCount(d); ++i) {
            int* w = worst[std::size_t(d)].data() + std::size_t(i) * stride;
            const int c = s.stratumOfSimplex(d, i).codim;
            w[c] = std::max(w[c], d);
            if (d == 0) continue;
            for (Index f : K.facetsOf(d)[std::size_t(i)]) {
                const int* wf = worst[std::size_t(d - 1)].data() + std::size_t(f) * stride;
                for (std::size_t k = 0; k < stride; ++k) w[k] = std::max(w[k], wf[k]);
            }
        }
    }

    std::vector<bool> mask(std::size_t(K.simplexCount(degree)), true);
    for (Index i = 0; i < K.simplexCount(degree); ++i) {
        const int* w = worst[std::size_t(degree)].data() + std::size_t(i) * stride;
        for (int c = 1; c < int(stride); ++c)
            if (w[c] >= 0 && w[c] > degree - c + p(c)) mask[std::size_t(i)] = false;
    }
    return mask;
}

bool gmAllowable(const SimplicialComplex& K, const Stratification& s, const Perversity& p,
                 const Chain& C) {
    if (C.degree < 0) return true;
    if (C.degree > K.dimension() || C.coefficients.size() != K.simplexCount(C.degree))
        throw std::invalid_argument("chain does not match the complex");
    const std::vector<bool> mask = allowableMask(K, s, p, C.degree);
    for (Index i = 0; i < C.coefficients.size(); ++i)
        if (C.coefficients[i].isSet() && !mask[std::size_t(i)]) return false;
    return true;
}

bool realAllowable(const SimplicialComplex& K, const Stratification& s, const Chain& C) {
    if (C.degree < 0) return true;
    if (!gmAllowable(K, s, Perversity::zero(), C)) return false;

    const SimplicialComplex sing = chainSingularSet(K, C);
    for (int d = 0; d <= sing.dimension(); ++d) {
        for (const VertexSet& t : sing.simplices(d)) {
            const auto idx = K.indexOf(t);
            if (!idx) throw std::logic_error("chain singular set escapes the complex");
            if (s.stratumOfSimplex(d, *idx).codim == 1 && d > C.degree - 2) return false;
        }
    }
    return realAllowable(K, s, boundary(K, C));
}

}  // namespace ihom
