#include "complex_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ihom::cli {

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokensOf(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

}  // namespace

ParsedInput parseComplexText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineNumber = 0;

    std::vector<VertexSet> simplices;
    std::map<VertexSet, std::string> assigned;
    std::vector<std::pair<int, Vertex>> marks;

    while (std::getline(in, line)) {
        ++lineNumber;
        std::vector<std::string> tokens = tokensOf(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;

        if (tokens.front() == "!mark") {
            if (tokens.size() != 2) fail(lineNumber, "!mark needs exactly one vertex name");
            marks.emplace_back(lineNumber, tokens[1]);
            continue;
        }
        if (tokens.front().front() == '!')
            fail(lineNumber, "unknown directive " + tokens.front());

        std::string stratum;
        if (tokens.back().front() == '@') {
            stratum = tokens.back().substr(1);
            if (stratum.empty()) fail(lineNumber, "empty stratum name");
            tokens.pop_back();
        }
        if (tokens.empty()) fail(lineNumber, "a stratum tag needs a simplex in front of it");
        for (const std::string& t : tokens)
            if (t.front() == '@') fail(lineNumber, "'@stratum' must be the last token");

        VertexSet simplex(tokens.begin(), tokens.end());
        std::sort(simplex.begin(), simplex.end());
        if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
            fail(lineNumber, "repeated vertex in simplex");

        if (!stratum.empty()) {
            const auto [it, inserted] = assigned.emplace(simplex, stratum);
            if (!inserted && it->second != stratum)
                fail(lineNumber, "simplex already assigned to stratum " + it->second);
        }
        simplices.push_back(std::move(simplex));
    }
    if (simplices.empty()) throw std::runtime_error("no simplices in input");

    ParsedInput out;
    out.complex = SimplicialComplex::fromTopSimplices(simplices);
    out.strat = fromAssignment(out.complex, assigned);
    for (const auto& [line_, vertex] : marks) {
        if (!out.complex.hasVertex(vertex)) fail(line_, "no vertex named " + vertex);
        out.strat = markPoint(out.complex, out.strat, vertex);
    }
    return out;
}

ParsedInput loadComplexFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseComplexText(buffer.str());
}

std::string exportComplexText(const SimplicialComplex& K, const Stratification& s) {
    std::ostringstream out;
    const auto writeLine = [&](const VertexSet& simplex, const std::string& stratum) {
        for (std::size_t k = 0; k < simplex.size(); ++k)
            out << (k ? " " : "") << simplex[k];
        if (stratum != "main") out << " @" << stratum;
        out << "\n";
    };

    const std::vector<VertexSet> tops = K.topSimplices();
    const std::set<VertexSet> topSet(tops.begin(), tops.end());
    for (const VertexSet& t : tops)
        writeLine(t, s.stratumOfSimplex(int(t.size()) - 1, *K.indexOf(t)).name);
    for (int d = 0; d <= K.dimension(); ++d)
        for (Index i = 0; i < K.simplexCount(d); ++i) {
            const std::string& name = s.stratumOfSimplex(d, i).name;
            if (name == "main" || topSet.count(K.simplex(d, i))) continue;
            writeLine(K.simplex(d, i), name);
        }
    return out.str();
}

std::string inputDigest(const SimplicialComplex& K, const Stratification& s) {
    const std::string text = exportComplexText(K, s);
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[std::size_t(k)] = hex[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

}  // namespace ihom::cli
