#include "ihom/models.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ihom/subdivision.hpp"

namespace ihom::models {

namespace {

SimplicialComplex circleComplex() {
    return SimplicialComplex::fromTopSimplices({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialComplex simplexBoundary(int dim) {
    static const std::vector<Vertex> names = {"a", "b", "c", "d", "e", "f"};
    VertexSet all(names.begin(), names.begin() + dim + 2);
    std::vector<VertexSet> tops;
    for (const Vertex& skip : all) {
        VertexSet face = all;
        std::erase(face, skip);
        tops.push_back(face);
    }
    return SimplicialComplex::fromTopSimplices(tops);
}

SimplicialComplex sevenVertexTorus() {
    auto v = [](int i) { return "v" + std::to_string(((i % 7) + 7) % 7); };
    std::vector<VertexSet> tops;
    for (int i = 0; i < 7; ++i) {
        tops.push_back({v(i), v(i + 1), v(i + 3)});
        tops.push_back({v(i), v(i + 2), v(i + 3)});
    }
    return SimplicialComplex::fromTopSimplices(tops);
}

SimplicialComplex sixVertexProjectivePlane() {
    const std::vector<std::string> faces = {"125", "126", "134", "136", "145",
                                            "234", "235", "246", "356", "456"};
    std::vector<VertexSet> tops;
    for (const std::string& f : faces) {
        VertexSet s;
        for (char digit : f) s.push_back(std::string("p") + digit);
        tops.push_back(s);
    }
    return SimplicialComplex::fromTopSimplices(tops);
}

SimplicialComplex sixteenVertexKleinBottle() {
    // A 4x4 grid of squares, each split into two triangles, with the
    // horizontal direction wrapped directly and the vertical wrap reflected.
    auto at = [](int x, int y) {
        x = ((x % 4) + 4) % 4;
        if (y == 4) {
            x = (4 - x) % 4;
            y = 0;
        }
        return "k" + std::to_string(x) + std::to_string(y);
    };
    std::vector<VertexSet> tops;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            tops.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
            tops.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
        }
    }
    return SimplicialComplex::fromTopSimplices(tops);
}

SimplicialComplex threePrismSolidTorus() {
    // A ring of three triangular prisms, each split into three tetrahedra
    // along a staircase of diagonals.
    auto v = [](char ring, int i) { return std::string(1, ring) + std::to_string(i % 3); };
    std::vector<VertexSet> tops;
    for (int i = 0; i < 3; ++i) {
        tops.push_back({v('a', i), v('b', i), v('c', i), v('c', i + 1)});
        tops.push_back({v('a', i), v('b', i), v('b', i + 1), v('c', i + 1)});
        tops.push_back({v('a', i), v('a', i + 1), v('b', i + 1), v('c', i + 1)});
    }
    return SimplicialComplex::fromTopSimplices(tops);
}

/// Subdivides K and identifies the barycenters of two simplices that share no
/// face and no coface, renaming the merged vertex.
SimplicialComplex pinchSubdivision(const SimplicialComplex& K, const VertexSet& s,
                                   const VertexSet& t, const Vertex& mergedName) {
    Subdivision sd = barycentricSubdivision(K);
    auto nameOf = [&](const VertexSet& simplex) {
        for (const auto& [vertex, ref] : sd.baseOfVertex)
            if (K.simplex(ref.first, ref.second) == simplex) return vertex;
        throw std::invalid_argument("pinch target is not a simplex of the base");
    };
    SimplicialComplex glued = identifyVertices(sd.prime, nameOf(s), nameOf(t));
    return renameVertex(glued, nameOf(s), mergedName);
}

void validate(const Model& m) {
    PseudomanifoldReport report = pseudomanifoldReport(m.complex);
    if (!report.pure || !report.stronglyConnected)
        throw std::logic_error("model '" + m.name + "' is not a pseudomanifold");
    if (m.pair == report.closed)
        throw std::logic_error("model '" + m.name + "' has the wrong boundary type");
}

Model makeClosed(std::string name, std::string description, SimplicialComplex K) {
    Model m;
    m.name = std::move(name);
    m.description = std::move(description);
    m.strat = trivialStratification(K);
    m.complex = std::move(K);
    return m;
}

Model makeSingular(std::string name, std::string description, SimplicialComplex K) {
    Model m;
    m.name = std::move(name);
    m.description = std::move(description);
    m.strat = singularStratification(K);
    m.complex = std::move(K);
    return m;
}

Model buildBundled(const std::string& name) {
    if (name == "sphere1")
        return makeClosed(name, "circle as the boundary of a triangle", simplexBoundary(1));
    if (name == "sphere2")
        return makeClosed(name, "2-sphere as the boundary of a tetrahedron", simplexBoundary(2));
    if (name == "sphere3")
        return makeClosed(name, "3-sphere as the boundary of a 4-simplex", simplexBoundary(3));
    if (name == "torus")
        return makeClosed(name, "7-vertex flat torus", sevenVertexTorus());
    if (name == "rp2")
        return makeClosed(name, "6-vertex projective plane", sixVertexProjectivePlane());
    if (name == "klein_bottle")
        return makeClosed(name, "16-vertex Klein bottle", sixteenVertexKleinBottle());
    if (name == "disk_pair") {
        Model m = makeClosed(name, "disk with its circle boundary", cone(circleComplex(), "apex"));
        m.pair = true;
        return m;
    }
    if (name == "solid_torus_pair") {
        Model m = makeClosed(name, "solid torus with its torus boundary", threePrismSolidTorus());
        m.pair = true;
        return m;
    }
    if (name == "nodal_sphere")
        return makeSingular(name, "2-sphere with two points identified",
                            pinchSubdivision(simplexBoundary(2), {"a", "b"}, {"c", "d"}, "node"));
    if (name == "pinched_torus")
        return makeSingular(name, "torus pinched along a meridian: suspended circle with the poles identified",
                            pinchSubdivision(suspension(circleComplex(), "n", "s"), {"n"}, {"s"}, "x0"));
    if (name == "pinched_rp2") {
        Model m = makeSingular(name, "projective plane with two points identified, plus a marked regular point",
                               pinchSubdivision(sixVertexProjectivePlane(), {"p1", "p2"},
                                                {"p3", "p4"}, "x0"));
        m.strat = markPoint(m.complex, m.strat, pinchedAuxiliaryPoint(m.complex, "x0"));
        return m;
    }
    throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace

const std::vector<std::string>& catalogue() {
    static const std::vector<std::string> names = {
        "sphere1",         "sphere2",      "sphere3",       "torus",
        "rp2",             "klein_bottle", "disk_pair",     "solid_torus_pair",
        "nodal_sphere",    "pinched_torus", "pinched_rp2",
    };
    return names;
}

Model build(const std::string& name) {
    const std::string conePrefix = "cone_of:";
    const std::string suspPrefix = "suspension_of:";
    Model m;
    if (name.rfind(conePrefix, 0) == 0) {
        Model base = build(name.substr(conePrefix.size()));
        if (base.pair)
            throw std::invalid_argument("cone_of requires a closed base model");
        m.name = name;
        m.description = "cone over " + base.name;
        m.complex = cone(base.complex, "apex");
        m.strat = coneStratification(m.complex, base.complex, base.strat, "apex");
        m.pair = true;
    } else if (name.rfind(suspPrefix, 0) == 0) {
        Model base = build(name.substr(suspPrefix.size()));
        if (base.pair)
            throw std::invalid_argument("suspension_of requires a closed base model");
        m.name = name;
        m.description = "suspension of " + base.name;
        m.complex = suspension(base.complex, "apex_n", "apex_s");
        m.strat = suspensionStratification(m.complex, base.complex, base.strat, "apex_n", "apex_s");
        m.pair = false;
    } else {
        m = buildBundled(name);
    }
    validate(m);
    return m;
}

Vertex pinchedAuxiliaryPoint(const SimplicialComplex& K, const Vertex& pinch) {
    if (!K.hasVertex(pinch)) throw std::invalid_argument("pinch vertex not in complex");
    const Index n = K.simplexCount(0);
    std::vector<std::vector<Index>> adjacent(n);
    for (Index e = 0; e < K.simplexCount(1); ++e) {
        const auto& faces = K.facetsOf(1)[e];
        adjacent[faces[0]].push_back(faces[1]);
        adjacent[faces[1]].push_back(faces[0]);
    }
    std::vector<int> distance(n, -1);
    std::deque<Index> queue;
    Index start = *K.indexOf({pinch});
    distance[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        Index here = queue.front();
        queue.pop_front();
        for (Index next : adjacent[here])
            if (distance[next] < 0) {
                distance[next] = distance[here] + 1;
                queue.push_back(next);
            }
    }
    const int farthest = *std::max_element(distance.begin(), distance.end());
    if (farthest <= 0) throw std::invalid_argument("complex has no vertex away from the pinch");
    Vertex best;
    for (Index i = 0; i < n; ++i)
        if (distance[i] == farthest) {
            const Vertex& candidate = *K.simplex(0, i).begin();
            if (best.empty() || candidate < best) best = candidate;
        }
    return best;
}

}  // namespace ihom::models
