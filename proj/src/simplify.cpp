#include "xsolve/simplify.hpp"

#include <algorithm>
#include <stdexcept>

namespace xsolve {

namespace {

bool isPlain3(const Clause& c) {
    return c.size() == 3 && !c.hasConstant() && c.varSet().size() == 3;
}

// per-variable positive/negative token counts inside one clause
std::map<Var, std::pair<int, int>> localCounts(const Clause& c) {
    std::map<Var, std::pair<int, int>> m;
    for (const Token& t : c.tokens) {
        if (!t.isLit())
            continue;
        auto& pn = m[t.lit.var()];
        if (t.lit.neg())
            ++pn.second;
        else
            ++pn.first;
    }
    return m;
}

// Can some assignment of the clause's own variables make exactly one token
// true? Reachable true-counts tracked as a {0,1,2+} set.
bool exactOneReachable(const Clause& c) {
    unsigned reach = 1u << std::min(c.countOnes(), 2);
    for (const auto& [v, pn] : localCounts(c)) {
        unsigned next = 0;
        for (int s = 0; s <= 2; ++s) {
            if (!(reach & (1u << s)))
                continue;
            next |= 1u << std::min(s + std::min(pn.first, 2), 2);
            next |= 1u << std::min(s + std::min(pn.second, 2), 2);
        }
        reach = next;
    }
    return (reach & 2u) != 0;
}

// clause pairs sharing at least two variables, keyed ascending
std::map<std::pair<int, int>, std::vector<Var>> sharedPairs(const Formula& f) {
    std::map<std::pair<int, int>, std::vector<Var>> tmp;
    for (Var v : f.liveVars()) {
        std::vector<int> ids = f.clausesWith(v);
        for (size_t a = 0; a < ids.size(); ++a)
            for (size_t b = a + 1; b < ids.size(); ++b)
                tmp[{ids[a], ids[b]}].push_back(v);
    }
    std::map<std::pair<int, int>, std::vector<Var>> out;
    for (auto& [key, vars] : tmp)
        if (vars.size() >= 2)
            out.emplace(key, std::move(vars));
    return out;
}

// polarity of v inside clause c; requires a single occurrence polarity
bool occursNegated(const Formula& f, Var v, int cid) {
    const Clause& c = f.clause(cid);
    for (const Token& t : c.tokens)
        if (t.isLit() && t.lit.var() == v)
            return t.lit.neg();
    throw std::invalid_argument("variable not in clause");
}

} // namespace

const char* ruleName(RuleId r) {
    switch (r) {
    case RuleId::Unsat: return "1";
    case RuleId::DropSatisfied: return "2";
    case RuleId::StripZero: return "3";
    case RuleId::Unit: return "4";
    case RuleId::Pair: return "5";
    case RuleId::DupLiteral: return "6";
    case RuleId::MixedShare: return "7";
    case RuleId::DoubleFlip: return "8";
    case RuleId::Subset: return "9";
    case RuleId::Resolution: return "11";
    case RuleId::OneSideSingleton: return "12a";
    }
    return "?";
}

std::optional<Var> line10Variable(const Formula& f) {
    for (Var v : f.liveVars()) {
        int three = 0;
        for (int cid : f.clausesWith(v))
            if (isPlain3(f.clause(cid)))
                ++three;
        if (three >= 3)
            return v;
    }
    return std::nullopt;
}

std::optional<RuleApplication> findApplicable(const Formula& f) {
    const auto& cls = f.clauses();

    for (const auto& [id, c] : cls)
        if (!exactOneReachable(c))
            return RuleApplication{RuleId::Unsat, id};

    for (const auto& [id, c] : cls) {
        int ones = c.countOnes();
        if (ones == 1)
            return RuleApplication{RuleId::DropSatisfied, id};
        if (ones == 0) {
            for (const auto& [v, pn] : localCounts(c))
                if (pn.first > 0 && pn.second > 0)
                    return RuleApplication{RuleId::DropSatisfied, id, -1, v};
        }
    }

    for (const auto& [id, c] : cls)
        if (c.countZeros() > 0)
            return RuleApplication{RuleId::StripZero, id};

    for (const auto& [id, c] : cls)
        if (c.size() == 1 && c.tokens[0].isLit())
            return RuleApplication{RuleId::Unit, id, -1, -1, c.tokens[0].lit};

    for (const auto& [id, c] : cls)
        if (c.size() == 2 && c.tokens[0].isLit() && c.tokens[1].isLit())
            return RuleApplication{RuleId::Pair, id, -1, -1, c.tokens[0].lit, c.tokens[1].lit};

    for (const auto& [id, c] : cls)
        for (const auto& [v, pn] : localCounts(c)) {
            if (pn.first >= 2)
                return RuleApplication{RuleId::DupLiteral, id, -1, v, pos(v)};
            if (pn.second >= 2)
                return RuleApplication{RuleId::DupLiteral, id, -1, v, neg(v)};
        }

    auto pairs = sharedPairs(f);

    for (const auto& [key, vars] : pairs) {
        std::vector<Var> same, opp;
        for (Var v : vars) {
            bool n1 = occursNegated(f, v, key.first);
            bool n2 = occursNegated(f, v, key.second);
            (n1 == n2 ? same : opp).push_back(v);
        }
        if (!same.empty() && !opp.empty())
            return RuleApplication{RuleId::MixedShare, key.first, key.second, same[0],
                                   Lit(same[0], occursNegated(f, same[0], key.first))};
    }

    for (const auto& [key, vars] : pairs) {
        std::vector<Var> opp;
        for (Var v : vars)
            if (occursNegated(f, v, key.first) != occursNegated(f, v, key.second))
                opp.push_back(v);
        if (opp.size() >= 2)
            return RuleApplication{RuleId::DoubleFlip, key.first, key.second, -1,
                                   Lit(opp[0], occursNegated(f, opp[0], key.first)),
                                   Lit(opp[1], occursNegated(f, opp[1], key.first))};
    }

    for (const auto& [key, vars] : pairs) {
        std::set<Var> v1 = f.clause(key.first).varSet();
        std::set<Var> v2 = f.clause(key.second).varSet();
        if (vars.size() == std::min(v1.size(), v2.size())) {
            if (v1.size() <= v2.size())
                return RuleApplication{RuleId::Subset, key.first, key.second};
            return RuleApplication{RuleId::Subset, key.second, key.first};
        }
    }

    // resolution and the 1-j rewrite wait until no line-10 branch variable
    // remains; otherwise they can push the measure the wrong way
    if (line10Variable(f))
        return std::nullopt;

    for (Var v : f.liveVars()) {
        if (f.positiveOccurrences(v) > 0 && f.negativeOccurrences(v) > 0) {
            int c1 = -1, c2 = -1;
            for (int cid : f.clausesWith(v)) {
                bool hasPos = f.clause(cid).contains(pos(v));
                bool hasNeg = f.clause(cid).contains(neg(v));
                if (hasPos && c1 < 0)
                    c1 = cid;
                if (hasNeg && c2 < 0)
                    c2 = cid;
            }
            return RuleApplication{RuleId::Resolution, c1, c2, v};
        }
    }

    for (const auto& [key, vars] : pairs) {
        OverlapProfile p = f.overlapProfile(key.first, key.second);
        if (p.i == 1 || p.j == 1)
            return RuleApplication{RuleId::OneSideSingleton, key.first, key.second};
    }

    return std::nullopt;
}

void resolveRule(Formula& f, Var x, int c1, int c2) {
    const Clause& a = f.clause(c1);
    const Clause& b = f.clause(c2);
    if (!a.contains(pos(x)) || !b.contains(neg(x)))
        throw std::invalid_argument("resolveRule polarity mismatch");

    std::vector<Lit> whenPos, whenNeg;
    bool skipped = false;
    for (Lit l : b.literals()) {
        if (!skipped && l == neg(x)) {
            skipped = true;
            continue;
        }
        whenPos.push_back(l);
    }
    skipped = false;
    for (Lit l : a.literals()) {
        if (!skipped && l == pos(x)) {
            skipped = true;
            continue;
        }
        whenNeg.push_back(l);
    }

    f.resolveVariable(x, whenPos, whenNeg);

    std::set<Lit> sp(whenPos.begin(), whenPos.end());
    std::set<Lit> common;
    for (Lit l : whenNeg)
        if (sp.count(l))
            common.insert(l);
    for (Lit l : common)
        if (f.isLive(l.var()))
            f.assign(l, false);
}

void rewriteOneJ(Formula& f, int c1, int c2) {
    std::set<Lit> s1 = f.clause(c1).literalSet();
    std::set<Lit> s2 = f.clause(c2).literalSet();
    std::vector<Lit> only1, only2;
    for (Lit l : s1)
        if (!s2.count(l))
            only1.push_back(l);
    for (Lit l : s2)
        if (!s1.count(l))
            only2.push_back(l);

    if (only1.size() == 1 && only2.size() == 1) {
        f.dropClause(c2);
        f.linkLiterals(only1[0], only2[0]);
    } else if (only1.size() == 1) {
        std::vector<Token> fresh{Token::fromLit(~only1[0])};
        for (Lit l : only2)
            fresh.push_back(Token::fromLit(l));
        f.setClauseTokens(c2, std::move(fresh));
    } else if (only2.size() == 1) {
        std::vector<Token> fresh{Token::fromLit(~only2[0])};
        for (Lit l : only1)
            fresh.push_back(Token::fromLit(l));
        f.setClauseTokens(c1, std::move(fresh));
    } else {
        throw std::invalid_argument("rewriteOneJ needs a singleton side");
    }
}

SimplifyStatus applyRule(Formula& f, const RuleApplication& app) {
    switch (app.rule) {
    case RuleId::Unsat:
        return SimplifyStatus::Unsat;

    case RuleId::DropSatisfied: {
        Clause snap = f.clause(app.clause1);
        auto counts = localCounts(snap);
        f.dropClause(app.clause1);
        if (snap.countOnes() == 1) {
            for (const auto& [v, pn] : counts)
                f.assign(pn.first > 0 ? pos(v) : neg(v), false);
        } else {
            for (const auto& [v, pn] : counts) {
                if (v == app.var) {
                    if (pn.first > pn.second)
                        f.assign(pos(v), false);
                    else if (pn.second > pn.first)
                        f.assign(neg(v), false);
                } else {
                    f.assign(pn.first > 0 ? pos(v) : neg(v), false);
                }
            }
        }
        return SimplifyStatus::Progress;
    }

    case RuleId::StripZero: {
        const Clause& c = f.clause(app.clause1);
        std::vector<Token> fresh;
        bool skipped = false;
        for (const Token& t : c.tokens) {
            if (!skipped && t.isZero()) {
                skipped = true;
                continue;
            }
            fresh.push_back(t);
        }
        f.setClauseTokens(app.clause1, std::move(fresh));
        return SimplifyStatus::Progress;
    }

    case RuleId::Unit:
        f.dropClause(app.clause1);
        f.assign(app.a, true);
        return SimplifyStatus::Progress;

    case RuleId::Pair:
        f.dropClause(app.clause1);
        f.linkLiterals(app.a, ~app.b);
        return SimplifyStatus::Progress;

    case RuleId::DupLiteral:
    case RuleId::MixedShare:
        f.assign(app.a, false);
        return SimplifyStatus::Progress;

    case RuleId::DoubleFlip:
        f.linkLiterals(app.a, ~app.b);
        return SimplifyStatus::Progress;

    case RuleId::Subset: {
        std::set<Lit> sub = f.clause(app.clause1).literalSet();
        std::set<Lit> super = f.clause(app.clause2).literalSet();
        f.dropClause(app.clause2);
        for (Lit l : super)
            if (!sub.count(l))
                f.assign(l, false);
        return SimplifyStatus::Progress;
    }

    case RuleId::Resolution:
        resolveRule(f, app.var, app.clause1, app.clause2);
        return SimplifyStatus::Progress;

    case RuleId::OneSideSingleton:
        rewriteOneJ(f, app.clause1, app.clause2);
        return SimplifyStatus::Progress;
    }
    throw std::logic_error("unhandled rule");
}

SimplifyStatus cascade(Formula& f, RuleCounter* fires) {
    for (;;) {
        auto app = findApplicable(f);
        if (!app)
            return SimplifyStatus::FixedPoint;
        if (fires)
            ++(*fires)[ruleName(app->rule)];
        if (applyRule(f, *app) == SimplifyStatus::Unsat)
            return SimplifyStatus::Unsat;
    }
}

} // namespace xsolve
