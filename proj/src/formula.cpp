#include "xsolve/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace xsolve {

bool Clause::hasConstant() const {
    for (const Token& t : tokens)
        if (!t.isLit())
            return true;
    return false;
}

int Clause::countOnes() const {
    int n = 0;
    for (const Token& t : tokens)
        if (t.isOne())
            ++n;
    return n;
}

int Clause::countZeros() const {
    int n = 0;
    for (const Token& t : tokens)
        if (t.isZero())
            ++n;
    return n;
}

std::vector<Lit> Clause::literals() const {
    std::vector<Lit> out;
    for (const Token& t : tokens)
        if (t.isLit())
            out.push_back(t.lit);
    return out;
}

std::set<Lit> Clause::literalSet() const {
    std::set<Lit> out;
    for (const Token& t : tokens)
        if (t.isLit())
            out.insert(t.lit);
    return out;
}

std::set<Var> Clause::varSet() const {
    std::set<Var> out;
    for (const Token& t : tokens)
        if (t.isLit())
            out.insert(t.lit.var());
    return out;
}

bool Clause::contains(Lit l) const {
    for (const Token& t : tokens)
        if (t.isLit() && t.lit == l)
            return true;
    return false;
}

const Clause& Formula::clause(int id) const {
    auto it = clauses_.find(id);
    if (it == clauses_.end())
        throw std::invalid_argument("no clause with id " + std::to_string(id));
    return it->second;
}

int Formula::positiveOccurrences(Var x) const {
    auto it = occ_.find(x);
    if (it == occ_.end())
        return 0;
    int n = 0;
    for (const auto& [cid, pn] : it->second)
        n += pn.first;
    return n;
}

int Formula::negativeOccurrences(Var x) const {
    auto it = occ_.find(x);
    if (it == occ_.end())
        return 0;
    int n = 0;
    for (const auto& [cid, pn] : it->second)
        n += pn.second;
    return n;
}

std::vector<int> Formula::clausesWith(Var x) const {
    std::vector<int> out;
    auto it = occ_.find(x);
    if (it != occ_.end())
        for (const auto& [cid, pn] : it->second)
            out.push_back(cid);
    return out;
}

OverlapProfile Formula::overlapProfile(int c1, int c2) const {
    const Clause& a = clause(c1);
    const Clause& b = clause(c2);
    std::set<Var> va = a.varSet(), vb = b.varSet();
    OverlapProfile p;
    for (Var v : va) {
        if (vb.count(v))
            ++p.k;
        else
            ++p.i;
    }
    p.j = (int)vb.size() - p.k;
    for (const Token& t : a.tokens)
        if (t.isLit() && vb.count(t.lit.var()))
            p.shared.push_back(t.lit);
    return p;
}

void Formula::indexClause(const Clause& c) {
    for (const Token& t : c.tokens) {
        if (!t.isLit())
            continue;
        auto& pn = occ_[t.lit.var()][c.id];
        if (t.lit.neg())
            ++pn.second;
        else
            ++pn.first;
    }
}

void Formula::unindexClause(const Clause& c) {
    for (const Token& t : c.tokens) {
        if (!t.isLit())
            continue;
        auto vit = occ_.find(t.lit.var());
        if (vit == occ_.end())
            continue;
        auto cit = vit->second.find(c.id);
        if (cit == vit->second.end())
            continue;
        if (t.lit.neg())
            --cit->second.second;
        else
            --cit->second.first;
        if (cit->second.first <= 0 && cit->second.second <= 0)
            vit->second.erase(cit);
        if (vit->second.empty())
            occ_.erase(vit);
    }
}

void Formula::assign(Lit l, bool value) {
    Var x = l.var();
    if (!isLive(x))
        throw std::invalid_argument("assign on dead variable " + std::to_string(x));
    auto it = occ_.find(x);
    if (it != occ_.end()) {
        std::vector<int> ids;
        for (const auto& [cid, pn] : it->second)
            ids.push_back(cid);
        for (int cid : ids) {
            Clause& c = clauses_.at(cid);
            for (Token& t : c.tokens)
                if (t.isLit() && t.lit.var() == x)
                    t = Token::constant(t.lit == l ? value : !value);
        }
        occ_.erase(x);
    }
    trail_.push_back(TrailEntry{TrailEntry::Kind::Assign, x, l.neg() ? !value : value, Lit{}, {}});
    live_.erase(x);
}

void Formula::link(Var x, Lit def) {
    if (!isLive(x))
        throw std::invalid_argument("link on dead variable " + std::to_string(x));
    if (!isLive(def.var()))
        throw std::invalid_argument("link target is dead");
    if (x == def.var())
        throw std::invalid_argument("link of a variable to itself");
    auto it = occ_.find(x);
    if (it != occ_.end()) {
        std::vector<int> ids;
        for (const auto& [cid, pn] : it->second)
            ids.push_back(cid);
        for (int cid : ids) {
            Clause& c = clauses_.at(cid);
            unindexClause(c);
            for (Token& t : c.tokens)
                if (t.isLit() && t.lit.var() == x)
                    t.lit = t.lit.neg() ? ~def : def;
            indexClause(c);
        }
    }
    trail_.push_back(TrailEntry{TrailEntry::Kind::Link, x, false, def, {}});
    live_.erase(x);
}

void Formula::linkLiterals(Lit a, Lit b) {
    if (a.var() == b.var())
        throw std::invalid_argument("linkLiterals needs distinct variables");
    if (a.var() < b.var())
        link(b.var(), b.neg() ? ~a : a);
    else
        link(a.var(), a.neg() ? ~b : b);
}

void Formula::resolveVariable(Var x, const std::vector<Lit>& whenPositive,
                              const std::vector<Lit>& whenNegative) {
    if (!isLive(x))
        throw std::invalid_argument("resolveVariable on dead variable");
    for (Lit l : whenPositive)
        if (l.var() == x)
            throw std::invalid_argument("substitute set mentions the variable itself");
    for (Lit l : whenNegative)
        if (l.var() == x)
            throw std::invalid_argument("substitute set mentions the variable itself");
    trail_.push_back(TrailEntry{TrailEntry::Kind::Resolve, x, false, Lit{}, whenNegative});
    auto it = occ_.find(x);
    if (it != occ_.end()) {
        std::vector<int> ids;
        for (const auto& [cid, pn] : it->second)
            ids.push_back(cid);
        for (int cid : ids) {
            Clause& c = clauses_.at(cid);
            unindexClause(c);
            std::vector<Token> fresh;
            for (const Token& t : c.tokens) {
                if (t.isLit() && t.lit.var() == x) {
                    const auto& repl = t.lit.neg() ? whenNegative : whenPositive;
                    for (Lit l : repl)
                        fresh.push_back(Token::fromLit(l));
                } else {
                    fresh.push_back(t);
                }
            }
            c.tokens = std::move(fresh);
            indexClause(c);
        }
    }
    live_.erase(x);
}

void Formula::dropClause(int id) {
    auto it = clauses_.find(id);
    if (it == clauses_.end())
        throw std::invalid_argument("dropClause: no clause " + std::to_string(id));
    unindexClause(it->second);
    clauses_.erase(it);
}

void Formula::setClauseTokens(int id, std::vector<Token> tokens) {
    auto it = clauses_.find(id);
    if (it == clauses_.end())
        throw std::invalid_argument("setClauseTokens: no clause " + std::to_string(id));
    unindexClause(it->second);
    it->second.tokens = std::move(tokens);
    indexClause(it->second);
}

bool Formula::occurrenceIndexCoherent() const {
    std::map<Var, std::map<int, std::pair<int, int>>> want;
    for (const auto& [cid, c] : clauses_)
        for (const Token& t : c.tokens) {
            if (!t.isLit())
                continue;
            auto& pn = want[t.lit.var()][cid];
            if (t.lit.neg())
                ++pn.second;
            else
                ++pn.first;
        }
    if (want != occ_)
        return false;
    for (const auto& [v, m] : occ_)
        if (!live_.count(v))
            return false;
    return true;
}

Formula fromClauses(const std::vector<std::vector<Lit>>& clauses, int numVars) {
    Formula f;
    int maxVar = -1;
    for (const auto& cl : clauses)
        for (Lit l : cl)
            maxVar = std::max(maxVar, l.var());
    f.numVars_ = std::max(numVars, maxVar + 1);
    if (f.numVars_ < 0)
        f.numVars_ = 0;
    for (Var v = 0; v < f.numVars_; ++v)
        f.live_.insert(v);
    int id = 0;
    for (const auto& cl : clauses) {
        Clause c;
        c.id = id++;
        for (Lit l : cl)
            c.tokens.push_back(Token::fromLit(l));
        f.indexClause(c);
        f.clauses_.emplace(c.id, std::move(c));
    }
    f.original_ = clauses;
    return f;
}

bool checkModel(const Formula& f, const Model& m) {
    if ((int)m.size() != f.numVars())
        throw std::invalid_argument("model size does not match variable count");
    for (const auto& cl : f.original()) {
        int trueCount = 0;
        for (Lit l : cl) {
            bool v = m[l.var()] != 0;
            if (l.neg() ? !v : v)
                ++trueCount;
        }
        if (trueCount != 1)
            return false;
    }
    return true;
}

Model extendThroughTrail(const std::vector<TrailEntry>& trail,
                         const std::map<Var, bool>& leafAssignment, int numVars) {
    std::vector<int> val(numVars, -1);
    for (const auto& [v, b] : leafAssignment) {
        if (v < 0 || v >= numVars)
            throw std::invalid_argument("leaf assignment variable out of range");
        val[v] = b ? 1 : 0;
    }
    auto litValue = [&](Lit l) {
        if (val[l.var()] < 0)
            throw std::runtime_error("trail references an undefined variable");
        bool b = val[l.var()] != 0;
        return l.neg() ? !b : b;
    };
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        switch (it->kind) {
        case TrailEntry::Kind::Assign:
            val[it->var] = it->bit ? 1 : 0;
            break;
        case TrailEntry::Kind::Link:
            val[it->var] = litValue(it->def) ? 1 : 0;
            break;
        case TrailEntry::Kind::Resolve: {
            bool allZero = true;
            for (Lit l : it->partner)
                if (litValue(l))
                    allZero = false;
            val[it->var] = allZero ? 1 : 0;
            break;
        }
        }
    }
    Model m(numVars, 0);
    for (int v = 0; v < numVars; ++v) {
        if (val[v] < 0)
            throw std::runtime_error("variable " + std::to_string(v) + " left undefined");
        m[v] = (uint8_t)val[v];
    }
    return m;
}

} // namespace xsolve
