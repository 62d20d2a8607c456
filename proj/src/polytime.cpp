#include "xsolve/polytime.hpp"

#include <algorithm>
#include <stdexcept>

#include "xsolve/matching.hpp"

namespace xsolve {

ClauseGraph buildClauseGraph(const Formula& f) {
    ClauseGraph g;
    std::map<int, int> vertexOf;
    for (const auto& [cid, c] : f.clauses()) {
        if (c.hasConstant())
            throw std::invalid_argument("clause graph wants constant-free clauses");
        vertexOf[cid] = (int)g.clauseIds.size();
        g.clauseIds.push_back(cid);
    }

    for (Var v : f.liveVars()) {
        int p = f.positiveOccurrences(v);
        int n = f.negativeOccurrences(v);
        if (p > 0 && n > 0)
            throw std::invalid_argument("variable occurs in both polarities");
        int total = p + n;
        if (total > 2)
            throw std::invalid_argument("variable degree exceeds 2");
        if (total == 0)
            continue;
        Lit l(v, n > 0);
        std::vector<int> ids = f.clausesWith(v);
        if (total == 1) {
            g.pendants[vertexOf.at(ids[0])].push_back(l);
        } else if (ids.size() == 2) {
            int a = vertexOf.at(ids[0]), b = vertexOf.at(ids[1]);
            g.edges.push_back({std::min(a, b), std::max(a, b), l});
        } else {
            g.forced.push_back(l); // twice inside one clause
        }
    }
    return g;
}

std::optional<std::map<Var, bool>> solveDeg2Partial(const Formula& f) {
    ClauseGraph g = buildClauseGraph(f);
    int nClauses = (int)g.clauseIds.size();

    // one helper vertex per clause that owns a pendant, a shared clique so
    // unused helpers can pair off, and a parity filler when the count is odd
    std::vector<int> aux(nClauses, -1);
    int next = nClauses;
    for (const auto& [vtx, lits] : g.pendants)
        aux[vtx] = next++;
    int nAux = next - nClauses;
    int dummy = -1;
    if ((nClauses + nAux) % 2 != 0)
        dummy = next++;
    int total = next;

    Matching m(total);
    std::map<std::pair<int, int>, Lit> edgeLit;
    for (const auto& e : g.edges) {
        if (e.u == e.v)
            continue;
        m.addEdge(e.u, e.v);
        edgeLit.emplace(std::make_pair(e.u, e.v), e.lit);
    }
    std::vector<int> auxList;
    for (int c = 0; c < nClauses; ++c)
        if (aux[c] >= 0) {
            m.addEdge(c, aux[c]);
            auxList.push_back(aux[c]);
        }
    for (size_t a = 0; a < auxList.size(); ++a)
        for (size_t b = a + 1; b < auxList.size(); ++b)
            m.addEdge(auxList[a], auxList[b]);
    if (dummy >= 0)
        for (int a : auxList)
            m.addEdge(dummy, a);

    int pairs = m.maximize();
    if (pairs * 2 != total)
        return std::nullopt;

    std::map<Var, bool> out;
    for (Var v : f.liveVars()) {
        bool negOnly = f.negativeOccurrences(v) > 0;
        out[v] = negOnly; // make the variable's literal false
    }
    const auto& mate = m.mate();
    for (int u = 0; u < nClauses; ++u) {
        int v = mate[u];
        if (v < nClauses) {
            if (u < v) {
                Lit l = edgeLit.at({u, v});
                out[l.var()] = !l.neg();
            }
        } else {
            const auto& lits = g.pendants.at(u);
            Lit l = *std::min_element(lits.begin(), lits.end());
            out[l.var()] = !l.neg();
        }
    }
    return out;
}

Deg2Result solveDeg2(const Formula& f) {
    Deg2Result r;
    auto partial = solveDeg2Partial(f);
    if (!partial)
        return r;
    r.sat = true;
    r.model = extendThroughTrail(f.trail(), *partial, f.numVars());
    return r;
}

} // namespace xsolve
