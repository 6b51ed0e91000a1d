// Acceptance gate: one self-contained check per shipped guarantee, one
// verdict line each.  Exit status 0 only when every criterion passes.
//
//   1. counterexample groups      IH/H betti numbers of pinched_rp2
//   2. forget map ranks           injective in degree 1, iso in 0 and 2
//   3. isolated-singularity duality   nonsingular stable pairings
//   4. obstruction pipeline       exact commutative ladder, duality fails
//   5. even-parity instances      (solid torus, T^2) and (cS^2, S^2)
//   6. nonsingular-case collapse  IH = H and duality factors through it
//   7. property suites            boundary^2, allowability, subdivision,
//                                 representative independence, dualize,
//                                 determinism against a golden report
//   8. oracle equivalence         betti numbers against brute-force
//                                 enumeration of all chains

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "complex_io.hpp"
#include "ihom/ih.hpp"
#include "ihom/models.hpp"
#include "ihom/pairing.hpp"
#include "ihom/sequences.hpp"
#include "report.hpp"
#include "testutil.hpp"

using namespace ihom;

namespace {

constexpr unsigned kSeed = 1737;

struct Gate {
    int failures = 0;
    std::vector<std::string> notes;

    void fail(const std::string& detail) { notes.push_back(detail); }
    bool flush(int index, const std::string& title) {
        const bool ok = notes.empty();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << title << "\n";
        for (const std::string& n : notes) std::cout << "       - " << n << "\n";
        if (!ok) ++failures;
        notes.clear();
        return ok;
    }
};

std::string bettiText(const std::vector<Index>& b) {
    std::string out = "(";
    for (std::size_t k = 0; k < b.size(); ++k) out += (k ? "," : "") + std::to_string(b[k]);
    return out + ")";
}

bool sameMatrix(const MatrixZ2& a, const MatrixZ2& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

void expect(Gate& g, bool ok, const std::string& what) {
    if (!ok) g.fail(what);
}

// --- 1 & 2: groups and the forget map of the counterexample ---------------

void criterionGroups(Gate& g) {
    const models::Model m = models::build("pinched_rp2");
    const GradedHomology ih = ihGroups(m.complex, m.strat, Perversity::zero());
    const GradedHomology h = homology(m.complex);
    expect(g, ih.betti() == std::vector<Index>{1, 1, 1},
           "IH betti " + bettiText(ih.betti()) + " != (1,1,1)");
    expect(g, ih.eulerCharacteristic() == 1,
           "i-euler " + std::to_string(ih.eulerCharacteristic()) + " != 1");
    expect(g, h.betti() == std::vector<Index>{1, 2, 1},
           "H betti " + bettiText(h.betti()) + " != (1,2,1)");
    expect(g, h.eulerCharacteristic() == 0,
           "euler " + std::to_string(h.eulerCharacteristic()) + " != 0");
}

void criterionForgetMap(Gate& g) {
    const models::Model m = models::build("pinched_rp2");
    const GradedHomology ih = ihGroups(m.complex, m.strat, Perversity::zero());
    const GradedHomology h = homology(m.complex);
    for (int d : {0, 2}) {
        const MatrixZ2 fm = forgetMap(ih, h, d);
        expect(g, nonsingular(fm), "degree " + std::to_string(d) + " is not an isomorphism");
    }
    const MatrixZ2 fm1 = forgetMap(ih, h, 1);
    expect(g, rank<Z2>(fm1) == 1, "degree 1 rank != 1");
    expect(g, rank<Z2>(fm1) == fm1.cols(), "degree 1 is not injective");
    expect(g, fm1.rows() == 2, "degree 1 target is not 2-dimensional");
}

// --- 3: pairing of the counterexample --------------------------------------

void criterionPairing(Gate& g) {
    models::Model m = models::build("pinched_rp2");
    DualityContext ctx(std::move(m.complex), std::move(m.strat), Perversity::zero());
    for (int d : {0, 1, 2}) {
        const MatrixZ2 p = pairingMatrix(ctx, d);
        expect(g, nonsingular(p),
               "IH_" + std::to_string(d) + " x IH_" + std::to_string(2 - d) + " is singular");
        expect(g, pairingIsStable(ctx, d, false, kSeed, 20),
               "degree " + std::to_string(d) + " trials disagree");
    }
}

// --- 4: the obstruction pipeline on the counterexample ---------------------

void criterionObstruction(Gate& g) {
    models::Model m = models::build("cone_of:pinched_rp2");
    auto [ambient, boundary] = pairContexts(m.complex, m.strat, Perversity::zero());
    const DualityLadder ladder = buildLadder(ambient, boundary);

    for (const std::string& f : exactnessFailures(ladder.top)) g.fail("top row: " + f);
    for (const std::string& f : exactnessFailures(ladder.bottom)) g.fail("bottom row: " + f);
    for (const std::string& f : commutationFailures(ladder)) g.fail(f);

    const std::vector<std::string> failing = failingVerticals(ladder);
    expect(g, !failing.empty(), "every vertical is invertible despite odd i-euler");
    const long iEuler = boundary.baseGroups().eulerCharacteristic();
    expect(g, iEuler % 2 != 0, "i-euler of the link is even");
    expect(g, iEuler % 2 == 0 || !failing.empty(), "odd i-euler did not force a failure");

    cli::RunOptions opts;
    opts.model = "pinched_rp2";
    const cli::Report report = cli::obstructionReport(opts);
    expect(g, report.doc["duality"] == "duality fails", "report does not say 'duality fails'");
    expect(g, report.pass, "a report self-check failed");
}

// --- 5: even-parity instances ----------------------------------------------

void evenInstance(Gate& g, const std::string& name, Index middleBetti) {
    models::Model m = models::build(name);
    auto [ambient, boundary] = pairContexts(m.complex, m.strat, Perversity::zero());
    const DualityLadder ladder = buildLadder(ambient, boundary);
    expect(g, failingVerticals(ladder).empty(), name + ": a vertical is not invertible");
    const ParityReport parity = parityAt(ladder, ladder.boundaryDimension / 2);
    expect(g, parity.middleBetti == middleBetti,
           name + ": middle betti " + std::to_string(parity.middleBetti) + " != " +
               std::to_string(middleBetti));
    expect(g, parity.middleBetti == 2 * parity.alphaKernel,
           name + ": betti is not twice the alpha kernel");
    expect(g, parity.verdict() == "even", name + ": verdict '" + parity.verdict() + "'");
}

void criterionEvenInstances(Gate& g) {
    evenInstance(g, "solid_torus_pair", 2);
    evenInstance(g, "cone_of:sphere2", 0);
}

// --- 6: trivially stratified manifolds collapse to ordinary duality --------

void criterionCollapse(Gate& g) {
    for (const std::string name : {"torus", "rp2"}) {
        models::Model m = models::build(name);
        const Stratification triv = trivialStratification(m.complex);
        const GradedHomology ih = ihGroups(m.complex, triv, Perversity::zero());
        const GradedHomology h = homology(m.complex);
        expect(g, ih.betti() == h.betti(),
               name + ": IH " + bettiText(ih.betti()) + " != H " + bettiText(h.betti()));
        DualityContext ctx(m.complex, triv, Perversity::zero());
        for (int i = 0; i <= m.complex.dimension(); ++i) {
            const MatrixZ2 fm = forgetMap(ih, h, i);
            const MatrixZ2 pd = pdHom(ctx, i);
            expect(g, sameMatrix(multiplyByColumns(fm, pd), pd),
                   name + ": degree " + std::to_string(i) +
                       " composition through IH differs from the duality map");
        }
    }
}

// --- 7: property suites -----------------------------------------------------

void propertyBoundarySquared(Gate& g) {
    for (const std::string& name : models::catalogue()) {
        const SimplicialComplex K = models::build(name).complex;
        for (int d = 1; d < K.dimension(); ++d) {
            const MatrixZ2 square = multiplyByColumns(K.boundaryMatrix(d), K.boundaryMatrix(d + 1));
            expect(g, isZero<Z2>(square), name + ": boundary^2 != 0 at degree " + std::to_string(d + 1));
        }
    }
}

void propertyAdditionClosure(Gate& g) {
    const Perversity zero = Perversity::zero();
    for (const std::string& name : models::catalogue()) {
        const models::Model m = models::build(name);
        std::mt19937_64 rng(kSeed);
        int tested = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int degree = trial % (m.complex.dimension() + 1);
            const std::vector<bool> mask = allowableMask(m.complex, m.strat, zero, degree);
            Chain a = zeroChain(m.complex, degree), b = zeroChain(m.complex, degree);
            for (Index i = 0; i < a.coefficients.size(); ++i)
                if (mask[std::size_t(i)]) {
                    a.coefficients[i] = Z2(int(rng() & 1));
                    b.coefficients[i] = Z2(int(rng() & 1));
                }
            const Chain sum{degree, a.coefficients + b.coefficients};
            if (!gmAllowable(m.complex, m.strat, zero, a) ||
                !gmAllowable(m.complex, m.strat, zero, b))
                continue;  // masked random chains may still have a bad boundary
            ++tested;
            if (!gmAllowable(m.complex, m.strat, zero, sum)) {
                g.fail(name + ": sum of allowable chains is not allowable (degree " +
                       std::to_string(degree) + ", trial " + std::to_string(trial) + ")");
                return;
            }
        }
        expect(g, tested > 0, name + ": no allowable pairs were generated");
    }
}

void propertySubdivisionInvariance(Gate& g) {
    const Perversity zero = Perversity::zero();
    for (const std::string& name : models::catalogue()) {
        const models::Model m = models::build(name);
        const Subdivision sd = barycentricSubdivision(m.complex);
        const Stratification fine = subdividedStratification(m.complex, m.strat, sd);
        const auto coarse = ihGroups(m.complex, m.strat, zero).betti();
        const auto refined = ihGroups(sd.prime, fine, zero).betti();
        expect(g, coarse == refined,
               name + ": IH betti " + bettiText(coarse) + " changed to " + bettiText(refined) +
                   " under subdivision");
    }
}

void propertyRepresentativeIndependence(Gate& g) {
    for (const std::string& name : models::catalogue()) {
        models::Model m = models::build(name);
        if (m.pair) continue;
        DualityContext ctx(std::move(m.complex), std::move(m.strat), Perversity::zero());
        for (int d = 0; d <= ctx.dimension(); ++d)
            expect(g, pairingIsStable(ctx, d, false, kSeed, 20),
                   name + ": degree " + std::to_string(d) + " pairing depends on representatives");
    }
}

void propertyDualizeExactness(Gate& g) {
    for (const std::string name :
         {"disk_pair", "solid_torus_pair", "cone_of:sphere2", "cone_of:pinched_rp2"}) {
        models::Model m = models::build(name);
        auto [ambient, boundary] = pairContexts(m.complex, m.strat, Perversity::zero());
        const MapSequence seq = pairSequence(ambient, boundary);
        expect(g, exactnessFailures(seq).empty(), name + ": the pair sequence is not exact");
        expect(g, exactnessFailures(dualize(seq)).empty(),
               name + ": dualizing broke exactness");
    }
}

void propertyDeterminism(Gate& g, const std::string& goldenPath) {
    cli::RunOptions onCounterexample;
    onCounterexample.model = "pinched_rp2";
    const cli::Report a = cli::obstructionReport(onCounterexample);
    const cli::Report b = cli::obstructionReport(onCounterexample);
    expect(g, a.doc.dump(2) == b.doc.dump(2), "two obstruction reports differ");

    cli::RunOptions opts;
    opts.model = "torus";
    opts.seed = kSeed;
    opts.trials = 20;
    expect(g, cli::pairingReport(opts).doc.dump(2) == cli::pairingReport(opts).doc.dump(2),
           "two pairing reports differ");

    std::ifstream in(goldenPath);
    if (!in) {
        g.fail("missing golden report " + goldenPath);
        return;
    }
    std::ostringstream golden;
    golden << in.rdbuf();
    expect(g, a.doc.dump(2) + "\n" == golden.str(),
           "obstruction report differs from " + goldenPath);
}

// --- 8: brute-force oracle ---------------------------------------------------

int log2OfPower(std::uint64_t n) {
    int k = 0;
    while (n > 1) {
        n >>= 1;
        ++k;
    }
    return k;
}

/// Betti numbers by enumerating every chain: count cycles directly and count
/// distinct boundaries of the degree above.  Exponential; inputs stay small.
std::vector<Index> bettiByEnumeration(const SimplicialComplex& K) {
    std::vector<Index> out;
    for (int d = 0; d <= K.dimension(); ++d) {
        const std::uint64_t cycles =
            d == 0 ? (std::uint64_t{1} << K.simplexCount(0))
                   : testutil::kernelSizeByEnumeration(K.boundaryMatrix(d));
        std::set<std::vector<std::uint8_t>> images;
        const Index above = d < K.dimension() ? K.simplexCount(d + 1) : 0;
        const MatrixZ2 bnd = d < K.dimension() ? K.boundaryMatrix(d + 1) : MatrixZ2(0, 0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << above); ++mask) {
            VectorZ2 acc = VectorZ2::Zero(K.simplexCount(d));
            for (Index j = 0; j < above; ++j)
                if ((mask >> j) & 1) acc += bnd.col(j);
            std::vector<std::uint8_t> key(std::size_t(acc.size()));
            for (Index i = 0; i < acc.size(); ++i) key[std::size_t(i)] = acc[i].v;
            images.insert(std::move(key));
        }
        out.push_back(log2OfPower(cycles) - log2OfPower(images.size()));
    }
    return out;
}

/// Intersection betti numbers the same way, restricted to chains whose
/// support and boundary support stay inside the allowable masks.
std::vector<Index> intersectionBettiByEnumeration(const SimplicialComplex& K,
                                                  const Stratification& s, const Perversity& p) {
    std::vector<Index> out;
    const auto allowableVectors = [&](int d) {
        const std::vector<bool> mask = allowableMask(K, s, p, d);
        const std::vector<bool> below = d > 0 ? allowableMask(K, s, p, d - 1) : std::vector<bool>();
        const MatrixZ2 bnd = d > 0 ? K.boundaryMatrix(d) : MatrixZ2(0, 0);
        std::vector<VectorZ2> chains;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << K.simplexCount(d)); ++bits) {
            VectorZ2 c = VectorZ2::Zero(K.simplexCount(d));
            bool supported = true;
            for (Index i = 0; i < c.size(); ++i)
                if ((bits >> i) & 1) {
                    c[i] = Z2(1);
                    supported = supported && mask[std::size_t(i)];
                }
            if (!supported) continue;
            if (d > 0) {
                const VectorZ2 dc = applyByColumns(bnd, c);
                bool ok = true;
                for (Index i = 0; i < dc.size(); ++i)
                    if (dc[i].isSet() && !below[std::size_t(i)]) ok = false;
                if (!ok) continue;
            }
            chains.push_back(std::move(c));
        }
        return chains;
    };

    for (int d = 0; d <= K.dimension(); ++d) {
        const MatrixZ2 bnd = d > 0 ? K.boundaryMatrix(d) : MatrixZ2(0, 0);
        std::uint64_t cycles = 0;
        for (const VectorZ2& c : allowableVectors(d)) {
            if (d == 0 || testutil::isZeroVector(applyByColumns(bnd, c))) ++cycles;
        }
        std::set<std::vector<std::uint8_t>> images;
        images.insert(std::vector<std::uint8_t>(std::size_t(K.simplexCount(d)), 0));
        if (d < K.dimension()) {
            const MatrixZ2 above = K.boundaryMatrix(d + 1);
            for (const VectorZ2& c : allowableVectors(d + 1)) {
                const VectorZ2 img = applyByColumns(above, c);
                std::vector<std::uint8_t> key(std::size_t(img.size()));
                for (Index i = 0; i < img.size(); ++i) key[std::size_t(i)] = img[i].v;
                images.insert(std::move(key));
            }
        }
        out.push_back(log2OfPower(cycles) - log2OfPower(images.size()));
    }
    return out;
}

void criterionOracle(Gate& g) {
    const std::vector<std::pair<std::string, std::string>> plain = {
        {"interval", "a b\nb c\n"},
        {"circle", "a b\nb c\na c\n"},
        {"two points", "a\nb\n"},
        {"triangle pair", "a b c\nb c d\n"},
        {"book", "a b c\na b d\na b e\na b f\n"},
        {"tetrahedron boundary", "a b c\na b d\na c d\nb c d\n"},
        {"wedge of circles", "a b\nb c\na c\na d\nd e\na e\n"},
    };
    for (const auto& [label, text] : plain) {
        const cli::ParsedInput in = cli::parseComplexText(text);
        const auto engine = homology(in.complex).betti();
        const auto oracle = bettiByEnumeration(in.complex);
        expect(g, engine == oracle,
               label + ": engine " + bettiText(engine) + " != oracle " + bettiText(oracle));
    }

    const std::vector<std::pair<std::string, std::string>> stratified = {
        {"two triangles pinched at x", "a b x\nc d x\n!mark x\n"},
        {"cone over a square", "a b t\nb c t\nc d t\na d t\n!mark t\n"},
        {"tagged spine", "a b c\na b d\na b @spine\n"},
    };
    for (const auto& [label, text] : stratified) {
        const cli::ParsedInput in = cli::parseComplexText(text);
        const auto engine = ihGroups(in.complex, in.strat, Perversity::zero()).betti();
        const auto oracle =
            intersectionBettiByEnumeration(in.complex, in.strat, Perversity::zero());
        expect(g, engine == oracle,
               label + ": engine IH " + bettiText(engine) + " != oracle " + bettiText(oracle));
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::string goldenPath =
        argc > 1 ? argv[1] : std::string(ACCEPTANCE_GOLDEN_DIR) + "/obstruction_pinched_rp2.json";
    Gate g;

    criterionGroups(g);
    g.flush(1, "counterexample groups: IH (1,1,1) with i-euler 1, H (1,2,1) with euler 0");

    criterionForgetMap(g);
    g.flush(2, "forget map: injective of rank 1 in degree 1, iso in degrees 0 and 2");

    criterionPairing(g);
    g.flush(3, "pairing: nonsingular in complementary degrees, 20 seeded trials agree");

    criterionObstruction(g);
    g.flush(4, "obstruction: exact commutative ladder, duality fails on pinched_rp2");

    criterionEvenInstances(g);
    g.flush(5, "even instances: (solid torus, T^2) and (cS^2, S^2) verdicts 'even'");

    criterionCollapse(g);
    g.flush(6, "trivial stratification: IH = H and duality factors through the forget map");

    propertyBoundarySquared(g);
    propertyAdditionClosure(g);
    propertySubdivisionInvariance(g);
    propertyRepresentativeIndependence(g);
    propertyDualizeExactness(g);
    propertyDeterminism(g, goldenPath);
    g.flush(7, "property suites: boundary^2, allowability, subdivision, stability, dualize, determinism");

    criterionOracle(g);
    g.flush(8, "oracle: betti numbers match brute-force chain enumeration");

    if (g.failures == 0) {
        std::cout << "acceptance: all 8 criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << g.failures << " criterion(s) failed\n";
    return 1;
}
