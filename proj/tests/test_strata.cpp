#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>

#include "ihom/strata.hpp"
#include "testutil.hpp"

using namespace ihom;

namespace {

SimplicialComplex circle3() {
    return SimplicialComplex::fromTopSimplices({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialComplex sevenVertexTorus() {
    std::vector<VertexSet> tops;
    const auto name = [](int k) { return "v" + std::to_string(((k % 7) + 7) % 7); };
    for (int i = 0; i < 7; ++i) {
        tops.push_back({name(i), name(i + 1), name(i + 3)});
        tops.push_back({name(i), name(i + 2), name(i + 3)});
    }
    return SimplicialComplex::fromTopSimplices(tops);
}

SimplicialComplex pinchedTorus() {
    const SimplicialComplex sphere = suspension(circle3(), "n", "s");
    const Subdivision sd = barycentricSubdivision(sphere);
    return identifyVertices(sd.prime, "n", "s");
}

}  // namespace

TEST_CASE("trivial and assigned stratifications cover every simplex", "[strata]") {
    const SimplicialComplex T = sevenVertexTorus();
    const Stratification triv = trivialStratification(T);
    REQUIRE(triv.strata.size() == 1);
    CHECK(triv.strata[0].name == "main");
    CHECK(triv.strata[0].dim == 2);
    CHECK(triv.strata[0].codim == 0);
    CHECK(triv.stratumOfSimplex(1, 5).name == "main");

    const SimplicialComplex K = SimplicialComplex::fromTopSimplices({{"a", "b", "c"}, {"b", "c", "d"}});
    const Stratification s = fromAssignment(K, {{{"b", "c"}, "wall"}});
    REQUIRE(s.strata.size() == 2);
    CHECK(s.stratumNamed("wall").has_value());
    CHECK(s.stratumOfSimplex(1, *K.indexOf({"b", "c"})).name == "wall");
    CHECK(s.stratumOfSimplex(0, *K.indexOf({"b"})).name == "main");
    const Index wall = *s.stratumNamed("wall");
    CHECK(s.strata[std::size_t(wall)].dim == 1);
    CHECK(s.strata[std::size_t(wall)].codim == 1);

    CHECK_THROWS_AS(fromAssignment(K, {{{"x", "y"}, "w"}}), std::invalid_argument);

    // Assigning everything leaves no default stratum behind.
    std::map<VertexSet, std::string> all;
    for (int d = 0; d <= K.dimension(); ++d)
        for (const VertexSet& t : K.simplices(d)) all[t] = "only";
    const Stratification full = fromAssignment(K, all);
    CHECK(full.strata.size() == 1);
    CHECK(full.strata[0].name == "only");
}

TEST_CASE("frontier warnings flag faces in strata of equal or larger dimension", "[strata]") {
    const SimplicialComplex K = SimplicialComplex::fromTopSimplices({{"a", "b", "c"}});
    CHECK(frontierViolations(K, trivialStratification(K)).empty());

    // Assigning the top simplex alone is clean: the rest drops a dimension.
    const Stratification cell = fromAssignment(K, {{{"a", "b", "c"}, "cell"}});
    CHECK(frontierViolations(K, cell).empty());

    // Two triangles of equal dimension in different strata share an edge:
    // each stratum's closure meets the other without losing dimension.
    const SimplicialComplex square =
        SimplicialComplex::fromTopSimplices({{"a", "b", "c"}, {"b", "c", "d"}});
    const Stratification split = fromAssignment(square, {{{"a", "b", "c"}, "left"}});
    const auto warnings = frontierViolations(square, split);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("'main'") != std::string::npos);
    CHECK(warnings[0].find("'left'") != std::string::npos);

    const Stratification good = fromAssignment(K, {{{"a"}, "corner"}});
    CHECK(frontierViolations(K, good).empty());
}

TEST_CASE("cone stratifications keep codimensions and isolate the apex", "[strata]") {
    const SimplicialComplex base = circle3();
    const SimplicialComplex disk = cone(base, "o");
    const Stratification s = coneStratification(disk, base, trivialStratification(base), "o");

    REQUIRE(s.strata.size() == 2);
    CHECK(s.strata[0].name == "main");
    CHECK(s.strata[0].dim == 2);
    CHECK(s.strata[0].codim == 0);
    CHECK(s.strata[1].name == "pt_o");
    CHECK(s.strata[1].dim == 0);
    CHECK(s.strata[1].codim == 2);
    CHECK(s.stratumOfSimplex(0, *disk.indexOf({"o"})).name == "pt_o");
    CHECK(s.stratumOfSimplex(1, *disk.indexOf({"a", "o"})).name == "main");
    CHECK(frontierViolations(disk, s).empty());

    CHECK_THROWS_AS(coneStratification(disk, base, trivialStratification(base), "a"),
                    std::invalid_argument);

    const SimplicialComplex sphere = suspension(base, "n", "s");
    const Stratification susp =
        suspensionStratification(sphere, base, trivialStratification(base), "n", "s");
    REQUIRE(susp.strata.size() == 3);
    CHECK(susp.stratumOfSimplex(0, *sphere.indexOf({"n"})).name == "pt_n");
    CHECK(susp.stratumOfSimplex(0, *sphere.indexOf({"s"})).name == "pt_s");
    CHECK(susp.stratumOfSimplex(2, *sphere.indexOf({"a", "b", "n"})).name == "main");
}

TEST_CASE("marked points become their own strata exactly once", "[strata]") {
    const SimplicialComplex T = sevenVertexTorus();
    const Stratification s = markPoint(T, trivialStratification(T), "v0");
    REQUIRE(s.strata.size() == 2);
    CHECK(s.strata[1].name == "pt_v0");
    CHECK(s.strata[1].codim == 2);
    CHECK(s.stratumOfSimplex(0, *T.indexOf({"v0"})).name == "pt_v0");
    CHECK(s.stratumOfSimplex(0, *T.indexOf({"v1"})).name == "main");

    CHECK_THROWS_AS(markPoint(T, s, "v0"), std::invalid_argument);
    CHECK_THROWS_AS(markPoint(T, s, "nope"), std::invalid_argument);
}

TEST_CASE("restriction and subdivision carry stratifications along", "[strata]") {
    const SimplicialComplex base = circle3();
    const SimplicialComplex disk = cone(base, "o");
    const Stratification s = coneStratification(disk, base, trivialStratification(base), "o");

    const Stratification onBase = restrictedTo(disk, s, base);
    REQUIRE(onBase.strata.size() == 1);
    CHECK(onBase.strata[0].name == "main");
    CHECK(onBase.strata[0].dim == 1);
    CHECK(onBase.strata[0].codim == 0);

    const Subdivision sd = barycentricSubdivision(disk);
    const Stratification onPrime = subdividedStratification(disk, s, sd);
    CHECK(onPrime.strata.size() == 2);
    CHECK(onPrime.stratumOfSimplex(0, *sd.prime.indexOf({"o"})).name == "pt_o");
    CHECK(onPrime.stratumOfSimplex(0, *sd.prime.indexOf({"a.o"})).name == "main");
    CHECK(onPrime.stratumOfSimplex(1, *sd.prime.indexOf({"o", "a.o"})).name == "main");
    // Point strata stay points under subdivision.
    CHECK(onPrime.strata[1].dim == 0);
}

TEST_CASE("singular stratification finds pinch points and cone points", "[strata]") {
    // A sphere is regular everywhere.
    const SimplicialComplex sphere = suspension(circle3(), "n", "s");
    const Stratification s0 = singularStratification(sphere);
    REQUIRE(s0.strata.size() == 1);
    CHECK(s0.strata[0].name == "main");

    // Pinching two sphere points together creates one singular vertex.
    const SimplicialComplex pinched = pinchedTorus();
    const Stratification s1 = singularStratification(pinched);
    REQUIRE(s1.strata.size() == 2);
    CHECK(s1.strata[0].name == "main");
    CHECK(s1.strata[1].name == "s1.0");
    CHECK(s1.strata[1].dim == 0);
    CHECK(s1.strata[1].codim == 2);
    CHECK(s1.stratumOfSimplex(0, *pinched.indexOf({"n"})).name == "s1.0");

    // The cone on a torus is singular exactly at the apex, and the link of a
    // base triangle (a single point) counts as regular.
    const SimplicialComplex cT = cone(sevenVertexTorus(), "apex");
    const Stratification s2 = singularStratification(cT);
    REQUIRE(s2.strata.size() == 2);
    CHECK(s2.stratumOfSimplex(0, *cT.indexOf({"apex"})).name == "s1.0");
    CHECK(s2.strata[1].codim == 3);

    // A manifold with boundary stays unstratified: ball links are regular.
    const SimplicialComplex disk = cone(circle3(), "o");
    CHECK(singularStratification(disk).strata.size() == 1);

    CHECK_THROWS_AS(singularStratification(SimplicialComplex()), std::invalid_argument);
}

TEST_CASE("chain singular sets contain the boundary body", "[strata]") {
    const SimplicialComplex square =
        SimplicialComplex::fromTopSimplices({{"a", "b", "c"}, {"b", "c", "d"}});
    const Chain C = topChain(square);
    const SimplicialComplex sing = chainSingularSet(square, C);
    // The shared edge is regular inside the chain; the rim is singular.
    CHECK_FALSE(sing.contains({"b", "c"}));
    CHECK(sing.contains({"a", "b"}));
    CHECK(sing.contains({"a"}));
    CHECK(sing.contains({"d"}));

    std::mt19937_64 rng(11);
    const SimplicialComplex T = sevenVertexTorus();
    for (int trial = 0; trial < 30; ++trial) {
        Chain c = zeroChain(T, 2);
        for (Index i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] = Z2(int(rng() & 1));
        const SimplicialComplex sc = chainSingularSet(T, c);
        const Chain b = boundary(T, c);
        for (const VertexSet& t : chainSupport(T, b)) CHECK(sc.contains(t));
    }

    CHECK(chainSingularSet(T, zeroChain(T, 2)).empty());
    CHECK(chainSingularSet(T, fundamentalClass(T)).empty());
}

TEST_CASE("perversities validate values and growth", "[strata]") {
    const Perversity zero = Perversity::zero();
    CHECK(zero(1) == 0);
    CHECK(zero(5) == 0);
    CHECK(zero.growthValid());

    const Perversity p({0, 1, 1});
    CHECK(p(1) == 0);
    CHECK(p(2) == 1);
    CHECK(p(3) == 1);
    CHECK(p(4) == 0);
    CHECK(p.growthValid());

    CHECK_FALSE(Perversity({0, 2}).growthValid());
    CHECK_FALSE(Perversity({1, 0}).growthValid());
    CHECK_THROWS_AS(Perversity({-1}), std::invalid_argument);
}

TEST_CASE("allowability masks exclude chains that dip into small strata", "[strata]") {
    const SimplicialComplex base = circle3();
    const SimplicialComplex disk = cone(base, "o");
    const Stratification s = coneStratification(disk, base, trivialStratification(base), "o");
    const Perversity zero = Perversity::zero();

    // Degree 1: edges through the apex point stratum (codim 2) are barred.
    const std::vector<bool> deg1 = allowableMask(disk, s, zero, 1);
    CHECK_FALSE(deg1[std::size_t(*disk.indexOf({"a", "o"}))]);
    CHECK(deg1[std::size_t(*disk.indexOf({"a", "b"}))]);

    // Degree 2: triangles may reach a point of codimension 2.
    const std::vector<bool> deg2 = allowableMask(disk, s, zero, 2);
    CHECK(deg2[std::size_t(*disk.indexOf({"a", "b", "o"}))]);

    // Degree 0: points must avoid the apex.
    const std::vector<bool> deg0 = allowableMask(disk, s, zero, 0);
    CHECK_FALSE(deg0[std::size_t(*disk.indexOf({"o"}))]);
    CHECK(deg0[std::size_t(*disk.indexOf({"a"}))]);

    // A generous perversity readmits the apex edges.
    const std::vector<bool> loose = allowableMask(disk, s, Perversity({0, 1}), 1);
    CHECK(loose[std::size_t(*disk.indexOf({"a", "o"}))]);

    CHECK(gmAllowable(disk, s, zero, chainFrom(disk, 1, {{"a", "b"}})));
    CHECK_FALSE(gmAllowable(disk, s, zero, chainFrom(disk, 1, {{"a", "b"}, {"a", "o"}})));
    CHECK(gmAllowable(disk, s, zero, Chain{-1, VectorZ2(0)}));
}

TEST_CASE("allowable chains are closed under addition", "[strata][property]") {
    const SimplicialComplex T = sevenVertexTorus();
    const Stratification s = markPoint(T, trivialStratification(T), "v0");
    const Perversity zero = Perversity::zero();
    std::mt19937_64 rng(23);

    for (int degree = 0; degree <= 2; ++degree) {
        const std::vector<bool> mask = allowableMask(T, s, zero, degree);
        for (int trial = 0; trial < 60; ++trial) {
            Chain a = zeroChain(T, degree), b = zeroChain(T, degree);
            for (Index i = 0; i < a.coefficients.size(); ++i) {
                if (mask[std::size_t(i)]) {
                    a.coefficients[i] = Z2(int(rng() & 1));
                    b.coefficients[i] = Z2(int(rng() & 1));
                }
            }
            REQUIRE(gmAllowable(T, s, zero, a));
            REQUIRE(gmAllowable(T, s, zero, b));
            const Chain sum{degree, a.coefficients + b.coefficients};
            REQUIRE(gmAllowable(T, s, zero, sum));
        }
    }
}

TEST_CASE("real allowability sees the chain's own singular set", "[strata]") {
    // Four pages around a spine edge: the spine cancels out of the boundary,
    // so the chain and its boundary pass the support conditions, yet the spine
    // is singular inside the chain and sits in a codimension-1 stratum.
    const SimplicialComplex book = SimplicialComplex::fromTopSimplices(
        {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}, {"a", "b", "f"}});
    const Stratification s = fromAssignment(book, {{{"a", "b"}, "spine"}});
    REQUIRE(s.strata[std::size_t(*s.stratumNamed("spine"))].codim == 1);
    const Perversity zero = Perversity::zero();

    const Chain pages = topChain(book);
    CHECK(gmAllowable(book, s, zero, pages));
    CHECK(gmAllowable(book, s, zero, boundary(book, pages)));
    CHECK_FALSE(realAllowable(book, s, pages));

    // Two pages only: the spine is regular inside the chain and real
    // allowability goes through.
    const Chain two = chainFrom(book, 2, {{"a", "b", "c"}, {"a", "b", "d"}});
    CHECK(gmAllowable(book, s, zero, two));
    CHECK(realAllowable(book, s, two));

    // Without codimension-1 strata, real allowability reduces to the support
    // conditions on the chain and its iterated boundaries.
    const SimplicialComplex T = sevenVertexTorus();
    const Stratification marked = markPoint(T, trivialStratification(T), "v0");
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int degree = int(rng() % 3);
        Chain c = zeroChain(T, degree);
        for (Index i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] = Z2(int(rng() & 1));
        bool supportOnly = true;
        for (Chain walk = c; walk.degree >= 0; walk = boundary(T, walk))
            supportOnly = supportOnly && gmAllowable(T, marked, zero, walk);
        CHECK(realAllowable(T, marked, c) == supportOnly);
    }
}
