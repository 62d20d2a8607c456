#include "xsolve/measure.hpp"

#include <stdexcept>
#include <vector>

namespace xsolve {

namespace {

// all variables sharing a clause with x, x excluded
std::set<Var> neighbourhood(const Formula& f, Var x) {
    std::set<Var> out;
    for (int cid : f.clausesWith(x))
        for (Var v : f.clause(cid).varSet())
            if (v != x)
                out.insert(v);
    return out;
}

bool isPlain3Clause(const Clause& c) {
    return c.size() == 3 && !c.hasConstant() && c.varSet().size() == 3;
}

} // namespace

std::optional<Var> commonOutsideNeighbour(const Formula& f, int clauseId) {
    const Clause& c = f.clause(clauseId);
    if (!isPlain3Clause(c))
        throw std::invalid_argument("commonOutsideNeighbour wants a 3-literal clause");
    std::set<Var> inside = c.varSet();
    std::optional<std::set<Var>> common;
    for (Var v : inside) {
        std::set<Var> nb = neighbourhood(f, v);
        if (!common) {
            common = std::move(nb);
        } else {
            std::set<Var> keep;
            for (Var u : *common)
                if (nb.count(u))
                    keep.insert(u);
            common = std::move(keep);
        }
    }
    for (Var u : *common)
        if (!inside.count(u))
            return u;
    return std::nullopt;
}

double variableWeight(const Formula& f, Var x) {
    if (!f.isLive(x))
        throw std::invalid_argument("variableWeight on dead variable");
    for (int cid : f.clausesWith(x)) {
        const Clause& c = f.clause(cid);
        if (!isPlain3Clause(c))
            continue;
        if (!commonOutsideNeighbour(f, cid))
            return kWeight3;
    }
    return 1.0;
}

MeasureReport formulaMeasure(const Formula& f) {
    MeasureReport r;
    for (Var v : f.liveVars()) {
        double w = variableWeight(f, v);
        r.weights[v] = w;
        r.mu += w;
    }
    return r;
}

} // namespace xsolve
