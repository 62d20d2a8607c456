#include "xsolve/testkit.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace xsolve {

Formula generate(const GeneratorConfig& cfg) {
    if (cfg.numVars <= 0 || cfg.numClauses < 0)
        throw std::invalid_argument("generator wants positive sizes");
    if (cfg.lenMin < 1 || cfg.lenMax < cfg.lenMin)
        throw std::invalid_argument("bad clause length range");
    if (cfg.negProb < 0.0 || cfg.negProb > 1.0)
        throw std::invalid_argument("negProb outside [0, 1]");
    if (cfg.degreeCap < 0 && cfg.lenMax > cfg.numVars)
        throw std::invalid_argument("clause length exceeds variable count");

    SplitMix64 rng(cfg.seed);
    std::vector<int> capacity(cfg.numVars, cfg.degreeCap);
    std::vector<int> polarity(cfg.numVars, -1); // sticky sign under a cap

    std::vector<std::vector<Lit>> clauses;
    for (int ci = 0; ci < cfg.numClauses; ++ci) {
        int len = cfg.lenMin + (int)rng.below((uint64_t)(cfg.lenMax - cfg.lenMin + 1));
        std::vector<Lit> clause;
        std::set<Var> used;
        for (int k = 0; k < len; ++k) {
            Var v;
            if (cfg.degreeCap < 0) {
                do {
                    v = (Var)rng.below((uint64_t)cfg.numVars);
                } while (used.count(v));
            } else {
                std::vector<Var> avail;
                for (Var u = 0; u < cfg.numVars; ++u)
                    if (capacity[u] > 0 && !used.count(u))
                        avail.push_back(u);
                if (avail.empty())
                    throw std::runtime_error("generator ran out of variables");
                v = avail[rng.below(avail.size())];
                --capacity[v];
            }
            used.insert(v);
            bool negated;
            if (cfg.degreeCap < 0) {
                negated = rng.unit() < cfg.negProb;
            } else {
                if (polarity[v] < 0)
                    polarity[v] = rng.unit() < cfg.negProb ? 1 : 0;
                negated = polarity[v] == 1;
            }
            clause.emplace_back(v, negated);
        }
        clauses.push_back(std::move(clause));
    }
    return fromClauses(clauses, cfg.numVars);
}

OracleResult bruteForce(const Formula& f) {
    int n = f.numVars();
    if (n > 26)
        throw std::invalid_argument("brute force capped at 26 variables");

    const std::vector<std::vector<Lit>>& raw = f.original();

    // duplicate literals inside a clause break the popcount shortcut, so
    // keep the literal lists for those clauses
    std::vector<uint32_t> posMask(raw.size(), 0), negMask(raw.size(), 0);
    std::vector<int> plain(raw.size(), 1);
    for (size_t i = 0; i < raw.size(); ++i) {
        std::set<Lit> seen;
        for (Lit l : raw[i]) {
            if (!seen.insert(l).second)
                plain[i] = 0;
            if (l.neg())
                negMask[i] |= 1u << l.var();
            else
                posMask[i] |= 1u << l.var();
        }
    }

    OracleResult res;
    uint64_t space = 1ull << n;
    for (uint64_t a = 0; a < space; ++a) {
        bool ok = true;
        for (size_t i = 0; i < raw.size() && ok; ++i) {
            int t;
            if (plain[i]) {
                t = std::popcount((uint32_t)a & posMask[i]) +
                    std::popcount((uint32_t)~a & negMask[i]);
            } else {
                t = 0;
                for (Lit l : raw[i]) {
                    bool v = (a >> l.var()) & 1;
                    if (l.neg() ? !v : v)
                        ++t;
                }
            }
            if (t != 1)
                ok = false;
        }
        if (ok) {
            ++res.modelCount;
            if (!res.witness) {
                Model m(n, 0);
                for (int v = 0; v < n; ++v)
                    m[v] = (a >> v) & 1;
                res.witness = std::move(m);
            }
        }
    }
    res.sat = res.modelCount > 0;
    return res;
}

long forEachReducedModel(const Formula& f,
                         const std::function<bool(const std::map<Var, bool>&)>& cb) {
    std::vector<Var> vars(f.liveVars().begin(), f.liveVars().end());
    if (vars.size() > 26)
        throw std::invalid_argument("reduced enumeration capped at 26 variables");
    for (const auto& [cid, c] : f.clauses())
        if (c.hasConstant())
            throw std::invalid_argument("reduced enumeration wants constant-free clauses");

    std::map<Var, int> slot;
    for (size_t i = 0; i < vars.size(); ++i)
        slot[vars[i]] = (int)i;

    long count = 0;
    uint64_t space = 1ull << vars.size();
    for (uint64_t a = 0; a < space; ++a) {
        bool ok = true;
        for (const auto& [cid, c] : f.clauses()) {
            int t = 0;
            for (const Token& tok : c.tokens) {
                bool v = (a >> slot.at(tok.lit.var())) & 1;
                if (tok.lit.neg() ? !v : v)
                    ++t;
            }
            if (t != 1) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        ++count;
        std::map<Var, bool> m;
        for (size_t i = 0; i < vars.size(); ++i)
            m[vars[i]] = (a >> i) & 1;
        if (!cb(m))
            break;
    }
    return count;
}

} // namespace xsolve
