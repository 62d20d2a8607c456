#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "xsolve/formula.hpp"
#include <stdexcept>

namespace xsolve {

struct DimacsDocument {
    int numVars = 0;
    int declaredClauses = 0;
    std::vector<std::vector<int>> clauses; // signed 1-based variables
    bool countMismatch = false;
};

// Reads "p cnf <vars> <clauses>" followed by 0-terminated clauses.
// 'c' lines are comments. Throws std::runtime_error on malformed input.
DimacsDocument parseDimacs(std::istream& in);
DimacsDocument parseDimacsFile(const std::string& path);

void emitDimacs(std::ostream& out, const DimacsDocument& doc,
                const std::vector<std::string>& comments = {});

Formula toFormula(const DimacsDocument& doc);
DimacsDocument toDocument(const Formula& f);

// "v ..." value lines for a model, 1-based signed, 0-terminated.
std::string modelToDimacs(const Model& m);

} // namespace xsolve
