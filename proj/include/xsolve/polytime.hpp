#pragma once

#include <map>
#include <optional>
#include <vector>

#include "xsolve/formula.hpp"

namespace xsolve {

// Clause graph of a formula where every variable occurs at most twice and
// never in both polarities. Clauses are vertices; a variable spanning two
// clauses is an edge; a literal occurring exactly once is a pendant; a
// variable occurring twice inside one clause can never be true.
struct ClauseGraph {
    struct Edge {
        int u = -1, v = -1; // vertex indices, u < v
        Lit lit{};
    };

    std::vector<int> clauseIds;              // vertex index -> clause id
    std::vector<Edge> edges;
    std::map<int, std::vector<Lit>> pendants; // vertex index -> pendant literals
    std::vector<Lit> forced;                  // literals that must be 0
};

// Throws if some variable has degree > 2, occurs in both polarities, or a
// clause still carries constant tokens.
ClauseGraph buildClauseGraph(const Formula& f);

// Exact-one satisfiability via maximum matching on the clause graph.
// Returns an assignment over the live variables, or nullopt when
// unsatisfiable. Same preconditions as buildClauseGraph.
std::optional<std::map<Var, bool>> solveDeg2Partial(const Formula& f);

struct Deg2Result {
    bool sat = false;
    std::optional<Model> model; // total over the original variables
};

// Wrapper that extends the partial assignment through the trail.
Deg2Result solveDeg2(const Formula& f);

} // namespace xsolve
