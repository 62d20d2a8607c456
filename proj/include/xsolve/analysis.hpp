#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xsolve/stats.hpp"

namespace xsolve {

// Unique root beta > 1 of sum(beta^-t_i) = 1. A single-entry vector has
// root 1. Entries must be positive.
double tau(const std::vector<double>& t);

// One component of a symbolic branch vector:
//   c + cw*w + cd*d + ch*h + cwh*w*h + cdh*d*h      with d = 1 - w
struct BranchTerm {
    double c = 0, cw = 0, cd = 0, ch = 0, cwh = 0, cdh = 0;
    double value(double w, double h) const {
        double d = 1.0 - w;
        return c + cw * w + cd * d + ch * h + cwh * w * h + cdh * d * h;
    }
};

struct CatalogEntry {
    std::string name;
    std::vector<BranchTerm> terms;
    int hLo = 0, hHi = 0;            // inclusive; hLo > hHi means no h
    std::optional<double> expected;  // reference tau at w = 0.8823
};

// Catalog line grammar (one entry per line, '#' starts a comment):
//   name | expr ; expr ; ... | h-range | expected
// expr   := term (('+'|'-') term)*
// term   := number [ '*' factor ( '*' factor )* ]   factor in {w, d, h}
// h-range:= '-'            (entry has no h)
//         | 'h=' lo '..' hi
// expected := '-' or a decimal number
std::vector<CatalogEntry> parseCatalog(std::istream& in);
std::vector<CatalogEntry> parseCatalogText(const std::string& text);

struct CatalogRow {
    std::string name;
    double tauValue = 0;
    int hStar = 0;
    std::optional<double> expected;
};

struct CatalogEvalResult {
    double maxTau = 0;
    std::string maxName;
    std::vector<CatalogRow> rows;
};

// Evaluates every entry at weight w, maximizing over integer h in range.
CatalogEvalResult catalogEval(const std::vector<CatalogEntry>& entries, double w);

struct WeightSearchResult {
    double bestW = 0;       // midpoint of the minimizing plateau
    double bestTau = 0;
    std::vector<std::pair<double, double>> curve; // (w, max tau)
};

WeightSearchResult weightSearch(const std::vector<CatalogEntry>& entries,
                                double lo, double hi, double step);

// Records measure bookkeeping for one branch node. A child whose measure
// fails to drop below the parent's counts as a violation.
void recordBranch(SearchStats& stats, double parentMu,
                  const std::vector<double>& childMus);

} // namespace xsolve
