#pragma once

#include <string>

#include "ihom/simplicial.hpp"
#include "ihom/strata.hpp"

namespace ihom::cli {

/// A parsed complex-file: the simplicial complex plus its stratification.
struct ParsedInput {
    SimplicialComplex complex;
    Stratification strat;
};

/// Parses the complex text format.
///
/// Grammar, one construct per line:
///   - lines whose first non-space character is '#' are comments;
///   - `!mark v` splits the vertex v into its own point stratum (applied
///     after all simplex lines, in file order);
///   - any other non-blank line is a simplex: whitespace-separated vertex
///     names, optionally followed by `@stratum-name`.
///
/// The complex is the closure of all listed simplices (lines that are faces
/// of other lines are legal). A tagged line assigns that one simplex to the
/// named stratum; every untagged simplex, including implied faces, falls into
/// the default stratum "main". Throws std::runtime_error with a line number
/// on malformed input.
ParsedInput parseComplexText(const std::string& text);

/// parseComplexText on the contents of a file.
ParsedInput loadComplexFile(const std::string& path);

/// Canonical text form: every top simplex, then every other simplex lying
/// outside the default stratum, each with its `@stratum` tag when not "main".
/// Reparsing yields an equal complex and stratification.
std::string exportComplexText(const SimplicialComplex& K, const Stratification& s);

/// FNV-1a (64-bit) digest of the canonical export, as 16 hex digits.
std::string inputDigest(const SimplicialComplex& K, const Stratification& s);

}  // namespace ihom::cli
