#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xsolve {

struct SearchStats {
    long nodes = 0;
    long leaves = 0;
    int maxDepth = 0;
    std::map<std::string, long> ruleFires; // keyed by line label, see README
    double muInitial = 0.0;
    double minBranchDrop = std::numeric_limits<double>::infinity();
    long measureViolations = 0;
    std::vector<std::pair<double, double>> branchDrops; // (parent mu, child mu)
};

} // namespace xsolve
