#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ihom/strata.hpp"

namespace ihom::cli {

using Json = nlohmann::ordered_json;

/// Options shared by the computing subcommands. Exactly one of `model` and
/// `file` names the input space (except for `models`, which needs neither).
struct RunOptions {
    std::string model;
    std::string file;
    std::string perversity = "zero";  ///< "zero" or "list:p1,p2,..."
    int degree = -1;                  ///< pairing only; -1 means every degree
    unsigned long seed = 1737;        ///< stability re-representation trials
    int trials = 20;
    bool json = false;
};

/// A machine-readable report plus the conjunction of its self-checks. `pass`
/// reflects internal consistency (exactness, commutativity, stability, parity
/// cross-checks) — a failed duality is a finding, not a failed check.
struct Report {
    Json doc;
    bool pass = true;
};

/// Parses "--perversity" syntax: "zero", or "list:p1,p2,..." giving the
/// values for codimensions 1, 2, ... in order.
Perversity parsePerversity(const std::string& text);

Report modelsReport();
Report homologyReport(const RunOptions& opts);
Report ihReport(const RunOptions& opts);
Report pairingReport(const RunOptions& opts);
Report lesReport(const RunOptions& opts);
Report obstructionReport(const RunOptions& opts);

/// Indented, human-readable rendering of a report document.
void printHuman(const Json& doc, std::ostream& os);

}  // namespace ihom::cli
