#include "xsolve/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace xsolve {

DimacsDocument parseDimacs(std::istream& in) {
    DimacsDocument doc;
    bool sawHeader = false;
    std::vector<int> current;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (!sawHeader) {
            std::string p, fmt;
            if (!(ls >> p) || p != "p")
                throw std::runtime_error("expected 'p cnf' header before clauses");
            if (!(ls >> fmt) || fmt != "cnf")
                throw std::runtime_error("unsupported format '" + fmt + "'");
            if (!(ls >> doc.numVars >> doc.declaredClauses) || doc.numVars < 0 ||
                doc.declaredClauses < 0)
                throw std::runtime_error("malformed 'p cnf' header");
            sawHeader = true;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                doc.clauses.push_back(current);
                current.clear();
            } else {
                int v = lit > 0 ? lit : -lit;
                if (v > doc.numVars)
                    throw std::runtime_error("literal " + std::to_string(lit) +
                                             " exceeds declared variable count");
                current.push_back(lit);
            }
        }
        if (!ls.eof()) {
            std::string junk;
            ls.clear();
            ls >> junk;
            throw std::runtime_error("unexpected token '" + junk + "'");
        }
    }
    if (!sawHeader)
        throw std::runtime_error("missing 'p cnf' header");
    if (!current.empty())
        throw std::runtime_error("last clause not terminated by 0");
    doc.countMismatch = (int)doc.clauses.size() != doc.declaredClauses;
    return doc;
}

DimacsDocument parseDimacsFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parseDimacs(in);
}

void emitDimacs(std::ostream& out, const DimacsDocument& doc,
                const std::vector<std::string>& comments) {
    for (const auto& c : comments)
        out << "c " << c << "\n";
    out << "p cnf " << doc.numVars << " " << doc.clauses.size() << "\n";
    for (const auto& cl : doc.clauses) {
        for (int l : cl)
            out << l << " ";
        out << "0\n";
    }
}

Formula toFormula(const DimacsDocument& doc) {
    std::vector<std::vector<Lit>> clauses;
    for (const auto& cl : doc.clauses) {
        std::vector<Lit> c;
        for (int l : cl)
            c.push_back(Lit::fromDimacs(l));
        clauses.push_back(std::move(c));
    }
    return fromClauses(clauses, doc.numVars);
}

DimacsDocument toDocument(const Formula& f) {
    DimacsDocument doc;
    doc.numVars = f.numVars();
    for (const auto& cl : f.original()) {
        std::vector<int> c;
        for (Lit l : cl)
            c.push_back(l.toDimacs());
        doc.clauses.push_back(std::move(c));
    }
    doc.declaredClauses = (int)doc.clauses.size();
    return doc;
}

std::string modelToDimacs(const Model& m) {
    std::ostringstream out;
    out << "v";
    for (size_t v = 0; v < m.size(); ++v)
        out << " " << (m[v] ? (int)(v + 1) : -(int)(v + 1));
    out << " 0";
    return out.str();
}

} // namespace xsolve
