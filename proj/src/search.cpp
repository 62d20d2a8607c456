#include "xsolve/search.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "xsolve/analysis.hpp"
#include "xsolve/measure.hpp"
#include "xsolve/polytime.hpp"

namespace xsolve {

namespace {

bool isPlain3(const Clause& c) {
    return c.size() == 3 && !c.hasConstant() && c.varSet().size() == 3;
}

std::vector<int> plain3ClausesWith(const Formula& f, Var v) {
    std::vector<int> out;
    for (int cid : f.clausesWith(v))
        if (isPlain3(f.clause(cid)))
            out.push_back(cid);
    return out;
}

// ascending clause pairs sharing >= 2 variables
std::vector<std::pair<int, int>> overlapPairs(const Formula& f) {
    std::map<std::pair<int, int>, int> count;
    for (Var v : f.liveVars()) {
        std::vector<int> ids = f.clausesWith(v);
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b)
                ++count[{ids[a], ids[b]}];
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& [key, c] : count)
        if (c >= 2)
            out.push_back(key);
    return out;
}

Lit litOfVarIn(const Clause& c, Var v) {
    for (const Token& t : c.tokens)
        if (t.isLit() && t.lit.var() == v)
            return t.lit;
    throw std::invalid_argument("variable not in clause");
}

} // namespace

std::optional<Case21Pattern> detectCase21Overlap(const Formula& f, int c1, int c2) {
    std::set<Lit> s1 = f.clause(c1).literalSet();
    std::set<Lit> s2 = f.clause(c2).literalSet();
    std::set<Lit> left, right;
    for (Lit l : s1)
        if (!s2.count(l))
            left.insert(l);
    for (Lit l : s2)
        if (!s1.count(l))
            right.insert(l);
    std::set<Var> inside = f.clause(c1).varSet();
    for (Var v : f.clause(c2).varSet())
        inside.insert(v);

    for (Var s : f.liveVars()) {
        if (inside.count(s))
            continue;
        std::vector<int> threes = plain3ClausesWith(f, s);
        if (threes.size() != 2)
            continue;
        bool ok = true;
        for (int did : threes) {
            std::vector<Lit> others;
            for (Lit l : f.clause(did).literals())
                if (l.var() != s)
                    others.push_back(l);
            bool bridges = others.size() == 2 &&
                           ((left.count(others[0]) && right.count(others[1])) ||
                            (left.count(others[1]) && right.count(others[0])));
            if (!bridges) {
                ok = false;
                break;
            }
        }
        if (ok)
            return Case21Pattern{s, "overlap-2.1"};
    }
    return std::nullopt;
}

std::optional<Case21Pattern> detectCase21Heavy(const Formula& f, Var x) {
    std::vector<int> cs = f.clausesWith(x);
    std::set<Var> around;
    for (int cid : cs)
        for (Var v : f.clause(cid).varSet())
            around.insert(v);

    // which of x's clauses contains this exact literal
    auto hostOf = [&](Lit l) -> int {
        for (int cid : cs)
            if (f.clause(cid).contains(l))
                return cid;
        return -1;
    };

    for (Var s : f.liveVars()) {
        if (around.count(s))
            continue;
        std::vector<int> threes = plain3ClausesWith(f, s);
        if (threes.size() != 2)
            continue;

        std::vector<std::set<int>> spans;
        std::vector<std::vector<Lit>> bridgeLits;
        bool ok = true;
        for (int did : threes) {
            std::vector<Lit> others;
            for (Lit l : f.clause(did).literals())
                if (l.var() != s)
                    others.push_back(l);
            if (others.size() != 2) {
                ok = false;
                break;
            }
            int h0 = hostOf(others[0]);
            int h1 = hostOf(others[1]);
            if (h0 < 0 || h1 < 0 || h0 == h1) {
                ok = false;
                break;
            }
            spans.push_back({h0, h1});
            bridgeLits.push_back(others);
        }
        if (!ok)
            continue;

        if (spans[0] == spans[1])
            return Case21Pattern{s, "heavy-2.1"};

        std::vector<int> common;
        for (int cid : spans[0])
            if (spans[1].count(cid))
                common.push_back(cid);
        if (common.size() == 1) {
            // bridges hinge on one of x's clauses: branch the hinge literal
            // of the lower-numbered bridge clause
            for (Lit l : bridgeLits[0])
                if (hostOf(l) == common[0])
                    return Case21Pattern{l.var(), "heavy-2.1"};
        }
    }
    return std::nullopt;
}

BranchDecision chooseBranch(const Formula& f, const SolveOptions& opts) {
    if (f.clauses().empty())
        throw std::invalid_argument("chooseBranch on an empty formula");

    if (auto x = line10Variable(f)) {
        std::vector<int> threes = plain3ClausesWith(f, *x);
        for (size_t a = 0; a < threes.size(); ++a)
            for (size_t b = a + 1; b < threes.size(); ++b) {
                const Clause& ca = f.clause(threes[a]);
                const Clause& cb = f.clause(threes[b]);
                std::set<Var> va = ca.varSet(), shared;
                for (Var v : cb.varSet())
                    if (va.count(v))
                        shared.insert(v);
                if (shared.size() == 2) {
                    BranchDecision d;
                    d.kind = BranchDecision::Kind::Line10Simplify;
                    d.clause1 = threes[a];
                    d.clause2 = threes[b];
                    for (Var v : ca.varSet())
                        if (!shared.count(v))
                            d.linkA = litOfVarIn(ca, v);
                    for (Var v : cb.varSet())
                        if (!shared.count(v))
                            d.linkB = litOfVarIn(cb, v);
                    return d;
                }
            }
        BranchDecision d;
        d.kind = BranchDecision::Kind::Line10Var;
        d.var = *x;
        return d;
    }

    auto pairs = overlapPairs(f);
    if (!pairs.empty()) {
        auto [c1, c2] = pairs.front();
        if (opts.enableCase21)
            if (auto p = detectCase21Overlap(f, c1, c2)) {
                BranchDecision d;
                d.kind = BranchDecision::Kind::Case21Var;
                d.var = p->branchVar;
                d.clause1 = c1;
                d.clause2 = c2;
                d.detail = p->detail;
                return d;
            }
        BranchDecision d;
        d.kind = BranchDecision::Kind::Line12Sub;
        d.clause1 = c1;
        d.clause2 = c2;
        std::set<Lit> s2 = f.clause(c2).literalSet();
        for (Lit l : f.clause(c1).literalSet())
            if (s2.count(l))
                d.sub.push_back(l);
        return d;
    }

    Var heavy = -1;
    long bestKey0 = -1, bestKey1 = -1;
    for (Var v : f.liveVars()) {
        long deg = f.degree(v);
        if (deg < 3)
            continue;
        long sumLen = 0;
        for (int cid : f.clausesWith(v))
            sumLen += f.clause(cid).size();
        if (deg > bestKey0 || (deg == bestKey0 && sumLen > bestKey1)) {
            bestKey0 = deg;
            bestKey1 = sumLen;
            heavy = v;
        }
    }
    if (heavy >= 0) {
        if (opts.enableCase21)
            if (auto p = detectCase21Heavy(f, heavy)) {
                BranchDecision d;
                d.kind = BranchDecision::Kind::Case21Var;
                d.var = p->branchVar;
                d.detail = p->detail;
                return d;
            }
        BranchDecision d;
        d.kind = BranchDecision::Kind::Line13Var;
        d.var = heavy;
        return d;
    }

    BranchDecision d;
    d.kind = BranchDecision::Kind::PolyCase;
    return d;
}

std::pair<BranchChild, BranchChild> branchVariable(const Formula& f, Var x,
                                                   RuleCounter* fires) {
    if (!f.isLive(x))
        throw std::invalid_argument("branchVariable on dead variable");
    BranchChild one{f}, zero{f};
    one.formula.assign(pos(x), true);
    one.status = cascade(one.formula, fires);
    zero.formula.assign(pos(x), false);
    zero.status = cascade(zero.formula, fires);
    return {std::move(one), std::move(zero)};
}

std::pair<BranchChild, BranchChild> branchSubclause(const Formula& f,
                                                    const std::vector<Lit>& delta,
                                                    int c1, int c2,
                                                    RuleCounter* fires) {
    if (delta.size() < 2)
        throw std::invalid_argument("subclause branch wants |delta| >= 2");
    std::set<Lit> inDelta(delta.begin(), delta.end());
    std::set<Lit> others;
    for (Lit l : f.clause(c1).literalSet())
        if (!inDelta.count(l))
            others.insert(l);
    for (Lit l : f.clause(c2).literalSet())
        if (!inDelta.count(l))
            others.insert(l);

    BranchChild one{f}, zero{f};
    for (Lit l : others)
        one.formula.assign(l, false);
    one.status = cascade(one.formula, fires);
    for (Lit l : inDelta)
        zero.formula.assign(l, false);
    zero.status = cascade(zero.formula, fires);
    return {std::move(one), std::move(zero)};
}

namespace {

struct Driver {
    const SolveOptions& opts;
    SearchStats& stats;

    std::optional<Model> run(Formula& f, SimplifyStatus st, int depth) {
        ++stats.nodes;
        stats.maxDepth = std::max(stats.maxDepth, depth);

        for (;;) {
            if (st == SimplifyStatus::Unsat) {
                ++stats.leaves;
                return std::nullopt;
            }
            if (f.clauses().empty()) {
                ++stats.leaves;
                std::map<Var, bool> leaf;
                for (Var v : f.liveVars())
                    leaf[v] = false;
                return extendThroughTrail(f.trail(), leaf, f.numVars());
            }

            BranchDecision d = chooseBranch(f, opts);

            if (d.kind == BranchDecision::Kind::Line10Simplify) {
                ++stats.ruleFires["10s"];
                rewriteOneJ(f, d.clause1, d.clause2);
                st = cascade(f, &stats.ruleFires);
                continue;
            }

            if (d.kind == BranchDecision::Kind::PolyCase) {
                ++stats.leaves;
                ++stats.ruleFires["14"];
                auto partial = solveDeg2Partial(f);
                if (!partial)
                    return std::nullopt;
                return extendThroughTrail(f.trail(), *partial, f.numVars());
            }

            const char* label = "13";
            if (d.kind == BranchDecision::Kind::Line10Var)
                label = "10";
            else if (d.kind == BranchDecision::Kind::Line12Sub)
                label = "12";
            else if (d.kind == BranchDecision::Kind::Case21Var)
                label = d.detail == "overlap-2.1" ? "12/2.1" : "13/2.1";
            ++stats.ruleFires[label];

            double parentMu = 0;
            if (opts.trackMeasure)
                parentMu = formulaMeasure(f).mu;

            auto children = d.kind == BranchDecision::Kind::Line12Sub
                                ? branchSubclause(f, d.sub, d.clause1, d.clause2,
                                                  &stats.ruleFires)
                                : branchVariable(f, d.var, &stats.ruleFires);

            for (BranchChild* child : {&children.first, &children.second}) {
                if (opts.trackMeasure && child->status != SimplifyStatus::Unsat)
                    recordBranch(stats, parentMu,
                                 {formulaMeasure(child->formula).mu});
                auto m = run(child->formula, child->status, depth + 1);
                if (m)
                    return m;
            }
            return std::nullopt;
        }
    }
};

} // namespace

SolveResult solve(const Formula& f, const SolveOptions& opts) {
    SolveResult res;
    Formula root = f;
    if (opts.trackMeasure)
        res.stats.muInitial = formulaMeasure(root).mu;
    SimplifyStatus st = cascade(root, &res.stats.ruleFires);
    Driver drv{opts, res.stats};
    auto m = drv.run(root, st, 0);
    res.sat = m.has_value();
    res.model = std::move(m);
    return res;
}

} // namespace xsolve
