#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "complex_io.hpp"
#include "ihom/ih.hpp"
#include "ihom/models.hpp"
#include "ihom/pairing.hpp"
#include "ihom/sequences.hpp"

namespace ihom::cli {

namespace {

constexpr const char* kSchema = "ihom-report/1";

Json indexArray(const std::vector<Index>& values) {
    Json out = Json::array();
    for (Index v : values) out.push_back(v);
    return out;
}

Json matrixJson(const MatrixZ2& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        std::string row(std::size_t(m.cols()), '0');
        for (Index c = 0; c < m.cols(); ++c)
            if (m(r, c) == Z2(1)) row[std::size_t(c)] = '1';
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Tracks the pass/fail/not-applicable verdicts that decide the exit status.
struct Checks {
    Json doc = Json::object();
    bool pass = true;

    void check(const std::string& name, bool ok) {
        doc[name] = ok ? "pass" : "fail";
        pass = pass && ok;
    }
    void notApplicable(const std::string& name) { doc[name] = "not applicable"; }
};

struct ResolvedInput {
    std::string source;
    SimplicialComplex complex;
    Stratification strat;
};

ResolvedInput resolveInput(const RunOptions& opts) {
    if (opts.model.empty() == opts.file.empty())
        throw std::runtime_error("give exactly one of --model and --file");
    if (!opts.model.empty()) {
        models::Model m = models::build(opts.model);
        return {"model:" + opts.model, std::move(m.complex), std::move(m.strat)};
    }
    ParsedInput parsed = loadComplexFile(opts.file);
    return {"file:" + opts.file, std::move(parsed.complex), std::move(parsed.strat)};
}

Json inputBlock(const ResolvedInput& in) {
    Json out;
    out["source"] = in.source;
    out["digest"] = inputDigest(in.complex, in.strat);
    out["dimension"] = in.complex.dimension();
    out["f_vector"] = indexArray(in.complex.fVector());
    const PseudomanifoldReport pm = pseudomanifoldReport(in.complex);
    out["pseudomanifold"] = pm.verdict ? (pm.closed ? "closed" : "with boundary") : "no";
    Json strata = Json::array();
    for (const Stratum& st : in.strat.strata) {
        Json item;
        item["name"] = st.name;
        item["dim"] = st.dim;
        item["codim"] = st.codim;
        strata.push_back(std::move(item));
    }
    out["strata"] = std::move(strata);
    return out;
}

Json header(const std::string& command, const ResolvedInput& in) {
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["input"] = inputBlock(in);
    return doc;
}

Json sequenceJson(const MapSequence& seq, bool withMatrices) {
    Json out;
    Json nodes = Json::array();
    for (Index j = 0; j < seq.nodeCount(); ++j) {
        Json node;
        node["label"] = seq.labels[std::size_t(j)];
        node["dim"] = seq.dims[std::size_t(j)];
        nodes.push_back(std::move(node));
    }
    out["nodes"] = std::move(nodes);
    if (withMatrices) {
        Json maps = Json::array();
        for (std::size_t k = 0; k < seq.maps.size(); ++k) {
            Json entry;
            entry["from"] = seq.labels[k];
            entry["to"] = seq.labels[k + 1];
            entry["matrix"] = matrixJson(seq.maps[k]);
            maps.push_back(std::move(entry));
        }
        out["maps"] = std::move(maps);
    }
    Json junctions = Json::array();
    bool exact = true;
    for (const JunctionReport& r : junctionReports(seq)) {
        Json entry;
        entry["node"] = r.node;
        entry["image"] = r.image;
        entry["kernel"] = r.kernel;
        entry["exact"] = r.exact() ? "pass" : "fail";
        exact = exact && r.exact();
        junctions.push_back(std::move(entry));
    }
    out["junctions"] = std::move(junctions);
    out["exact"] = exact ? "pass" : "fail";
    return out;
}

bool sequenceIsExact(const MapSequence& seq) { return exactnessFailures(seq).empty(); }

/// The ladder inputs of a space: a pair keeps its own boundary, a closed
/// space is coned first (the cone is the open star of the apex, the input its
/// link).
struct PairSetup {
    DualityContext ambient;
    DualityContext boundary;
    std::string ambientDescription;
};

std::string freshApexName(const SimplicialComplex& K) {
    std::string name = "apex";
    for (int k = 0; K.hasVertex(name); ++k) name = "apex" + std::to_string(k);
    return name;
}

PairSetup makePair(const ResolvedInput& in, const Perversity& p) {
    if (boundarySubcomplex(in.complex).empty()) {
        const std::string apex = freshApexName(in.complex);
        SimplicialComplex coneK = cone(in.complex, apex);
        Stratification coneS = coneStratification(coneK, in.complex, in.strat, apex);
        auto [ambient, boundary] = pairContexts(coneK, coneS, p);
        return {std::move(ambient), std::move(boundary),
                "cone over the input (apex " + apex + ")"};
    }
    auto [ambient, boundary] = pairContexts(in.complex, in.strat, p);
    return {std::move(ambient), std::move(boundary), "the input complex"};
}

}  // namespace

Perversity parsePerversity(const std::string& text) {
    if (text == "zero") return Perversity::zero();
    const std::string prefix = "list:";
    if (text.rfind(prefix, 0) != 0)
        throw std::runtime_error("--perversity must be 'zero' or 'list:p1,p2,...'");
    std::vector<int> values;
    std::istringstream in(text.substr(prefix.size()));
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("bad perversity value '" + item + "'");
        }
        if (used != item.size()) throw std::runtime_error("bad perversity value '" + item + "'");
        values.push_back(value);
    }
    if (values.empty()) throw std::runtime_error("empty perversity list");
    return Perversity(values);
}

Report modelsReport() {
    Report report;
    report.doc["schema"] = kSchema;
    report.doc["command"] = "models";
    Json list = Json::array();
    for (const std::string& name : models::catalogue()) {
        models::Model m = models::build(name);
        Json item;
        item["name"] = m.name;
        item["description"] = m.description;
        item["dimension"] = m.complex.dimension();
        item["f_vector"] = indexArray(m.complex.fVector());
        item["kind"] = m.pair ? "pair" : "closed";
        item["digest"] = inputDigest(m.complex, m.strat);
        list.push_back(std::move(item));
    }
    report.doc["models"] = std::move(list);
    report.doc["constructors"] = Json::array({"cone_of:<name>", "suspension_of:<name>"});
    return report;
}

Report homologyReport(const RunOptions& opts) {
    const ResolvedInput in = resolveInput(opts);
    const GradedHomology h = homology(in.complex);

    Report report;
    report.doc = header("homology", in);
    report.doc["betti"] = indexArray(h.betti());
    report.doc["euler"] = h.eulerCharacteristic();

    Checks checks;
    checks.check("euler_matches_f_vector",
                 h.eulerCharacteristic() == in.complex.eulerCharacteristic());
    report.doc["checks"] = std::move(checks.doc);
    report.pass = checks.pass;
    return report;
}

Report ihReport(const RunOptions& opts) {
    const ResolvedInput in = resolveInput(opts);
    const Perversity p = parsePerversity(opts.perversity);
    const GradedHomology ih = ihGroups(in.complex, in.strat, p);
    const GradedHomology h = homology(in.complex);

    Report report;
    report.doc = header("ih", in);
    report.doc["perversity"] = opts.perversity;
    report.doc["betti_ih"] = indexArray(ih.betti());
    report.doc["i_euler"] = ih.eulerCharacteristic();
    report.doc["betti_h"] = indexArray(h.betti());
    report.doc["euler"] = h.eulerCharacteristic();
    Json ranks = Json::array();
    for (int d = 0; d <= in.complex.dimension(); ++d)
        ranks.push_back(rank<Z2>(forgetMap(ih, h, d)));
    report.doc["forget_map_ranks"] = std::move(ranks);

    Checks checks;
    checks.check("euler_matches_f_vector",
                 h.eulerCharacteristic() == in.complex.eulerCharacteristic());
    report.doc["checks"] = std::move(checks.doc);
    report.pass = checks.pass;
    return report;
}

Report pairingReport(const RunOptions& opts) {
    const ResolvedInput in = resolveInput(opts);
    const Perversity p = parsePerversity(opts.perversity);
    DualityContext ctx(in.complex, in.strat, p);
    const bool relative = !ctx.closed();
    const int n = ctx.dimension();
    if (opts.degree > n || (opts.degree < 0 && opts.degree != -1))
        throw std::runtime_error("--degree must lie between 0 and " + std::to_string(n));

    Report report;
    report.doc = header("pairing", in);
    report.doc["perversity"] = opts.perversity;
    report.doc["relative"] = relative;
    report.doc["seed"] = opts.seed;
    report.doc["trials"] = opts.trials;

    Checks checks;
    Json pairings = Json::array();
    std::vector<int> degrees;
    if (opts.degree >= 0)
        degrees.push_back(opts.degree);
    else
        for (int d = 0; d <= n; ++d) degrees.push_back(d);
    for (int d : degrees) {
        const MatrixZ2 m = relative ? relativePairingMatrix(ctx, d) : pairingMatrix(ctx, d);
        const bool stable =
            pairingIsStable(ctx, d, relative, static_cast<unsigned>(opts.seed), opts.trials);
        Json entry;
        entry["degree"] = d;
        entry["pairs_with"] = relative ? "IH_" + std::to_string(n - d) + "(K, bd K)"
                                       : "IH_" + std::to_string(n - d) + "(K)";
        entry["matrix"] = matrixJson(m);
        entry["nonsingular"] = nonsingular(m);
        entry["stable"] = stable ? "pass" : "fail";
        pairings.push_back(std::move(entry));
        checks.check("stability_degree_" + std::to_string(d), stable);
    }
    report.doc["pairings"] = std::move(pairings);
    report.doc["checks"] = std::move(checks.doc);
    report.pass = checks.pass;
    return report;
}

Report lesReport(const RunOptions& opts) {
    const ResolvedInput in = resolveInput(opts);
    const Perversity p = parsePerversity(opts.perversity);
    PairSetup setup = makePair(in, p);
    const MapSequence seq = pairSequence(setup.ambient, setup.boundary);

    Report report;
    report.doc = header("les", in);
    report.doc["perversity"] = opts.perversity;
    report.doc["ambient"] = setup.ambientDescription;
    Json betti;
    betti["boundary"] = indexArray(setup.boundary.baseGroups().betti());
    betti["ambient"] = indexArray(setup.ambient.baseGroups().betti());
    betti["relative"] = indexArray(setup.ambient.baseRelativeGroups().betti());
    report.doc["betti"] = std::move(betti);
    report.doc["sequence"] = sequenceJson(seq, true);

    Checks checks;
    checks.check("sequence_exact", sequenceIsExact(seq));
    report.doc["checks"] = std::move(checks.doc);
    report.pass = checks.pass;
    return report;
}

Report obstructionReport(const RunOptions& opts) {
    const ResolvedInput in = resolveInput(opts);
    const Perversity p = parsePerversity(opts.perversity);
    PairSetup setup = makePair(in, p);
    const DualityLadder ladder = buildLadder(setup.ambient, setup.boundary);
    const int n = ladder.boundaryDimension;

    Report report;
    report.doc = header("obstruction", in);
    report.doc["perversity"] = opts.perversity;
    report.doc["ambient"] = setup.ambientDescription;

    Json betti;
    betti["boundary"] = indexArray(setup.boundary.baseGroups().betti());
    betti["ambient"] = indexArray(setup.ambient.baseGroups().betti());
    betti["relative"] = indexArray(setup.ambient.baseRelativeGroups().betti());
    report.doc["betti"] = std::move(betti);

    const long iEuler = setup.boundary.baseGroups().eulerCharacteristic();
    Json euler;
    euler["boundary_i_euler"] = iEuler;
    euler["parity"] = iEuler % 2 == 0 ? "even" : "odd";
    report.doc["i_euler"] = std::move(euler);

    report.doc["sequence"] = sequenceJson(ladder.top, false);
    report.doc["dual_sequence"] = sequenceJson(ladder.bottom, false);

    const std::vector<std::string> squares = commutationFailures(ladder);
    Json ladderDoc;
    ladderDoc["commutes"] = squares.empty() ? "pass" : "fail";
    ladderDoc["failing_squares"] = Json(squares);
    Json verticals = Json::array();
    for (Index pos = 1; pos + 1 < ladder.top.nodeCount(); ++pos) {
        const MatrixZ2& v = ladder.verticals[std::size_t(pos)];
        Json entry;
        entry["over"] = ladder.top.labels[std::size_t(pos)];
        entry["under"] = ladder.bottom.labels[std::size_t(pos)];
        entry["matrix"] = matrixJson(v);
        entry["invertible"] = nonsingular(v);
        verticals.push_back(std::move(entry));
    }
    ladderDoc["verticals"] = std::move(verticals);
    report.doc["ladder"] = std::move(ladderDoc);

    const std::vector<std::string> failing = failingVerticals(ladder);
    report.doc["failing_verticals"] = Json(failing);
    report.doc["duality"] = failing.empty() ? "duality holds" : "duality fails";

    Checks checks;
    checks.check("sequence_exact", sequenceIsExact(ladder.top));
    checks.check("dual_sequence_exact", sequenceIsExact(ladder.bottom));
    checks.check("ladder_commutes", squares.empty());

    Json parityDoc;
    if (n % 2 == 0) {
        const ParityReport parity = parityAt(ladder, n / 2);
        parityDoc["degree"] = parity.degree;
        parityDoc["middle_betti"] = parity.middleBetti;
        parityDoc["alpha_kernel"] = parity.alphaKernel;
        parityDoc["failing_verticals"] = Json(parity.failingVerticals);
        parityDoc["verdict"] = parity.verdict();
        checks.check("parity_consistent", parity.verdict() != "violated");
    } else {
        parityDoc["verdict"] = "not applicable";
        parityDoc["reason"] = "the boundary dimension is odd";
        checks.notApplicable("parity_consistent");
    }
    report.doc["parity"] = std::move(parityDoc);

    if (iEuler % 2 != 0)
        checks.check("odd_i_euler_forces_failing_vertical", !failing.empty());
    else
        checks.notApplicable("odd_i_euler_forces_failing_vertical");

    report.doc["checks"] = std::move(checks.doc);
    report.pass = checks.pass;
    return report;
}

namespace {

bool isScalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string scalarText(const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

bool inlineArray(const Json& a) {
    return a.is_array() && std::all_of(a.begin(), a.end(), isScalar);
}

std::string inlineText(const Json& a) {
    std::string out = "[";
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k) out += ", ";
        out += scalarText(a[k]);
    }
    return out + "]";
}

bool flatObject(const Json& v) {
    return v.is_object() && std::all_of(v.begin(), v.end(), [](const Json& field) {
               return isScalar(field) || inlineArray(field);
           });
}

std::string flatText(const Json& v) {
    std::string out;
    for (const auto& [key, value] : v.items()) {
        if (!out.empty()) out += ", ";
        out += key + ": " + (value.is_array() ? inlineText(value) : scalarText(value));
    }
    return out;
}

void render(const Json& v, std::ostream& os, int indent) {
    const std::string pad(std::size_t(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (isScalar(value)) {
                os << pad << key << ": " << scalarText(value) << "\n";
            } else if (inlineArray(value)) {
                os << pad << key << ": " << inlineText(value) << "\n";
            } else {
                os << pad << key << ":\n";
                render(value, os, indent + 1);
            }
        }
        return;
    }
    if (v.is_array()) {
        for (const Json& item : v) {
            if (isScalar(item)) {
                os << pad << "- " << scalarText(item) << "\n";
            } else if (flatObject(item)) {
                os << pad << "- " << flatText(item) << "\n";
            } else {
                os << pad << "-\n";
                render(item, os, indent + 1);
            }
        }
        return;
    }
    os << pad << scalarText(v) << "\n";
}

}  // namespace

void printHuman(const Json& doc, std::ostream& os) { render(doc, os, 0); }

}  // namespace ihom::cli
