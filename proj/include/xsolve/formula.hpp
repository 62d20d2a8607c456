#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "xsolve/literal.hpp"

namespace xsolve {

// A clause position holds either a literal or a constant left behind by
// an assignment. Constants stay in place until a simplification removes them.
struct Token {
    enum class Kind { Literal, Zero, One };

    Kind kind = Kind::Zero;
    Lit lit{};

    static Token fromLit(Lit l) { return Token{Kind::Literal, l}; }
    static Token constant(bool b) { return Token{b ? Kind::One : Kind::Zero, Lit{}}; }

    bool isLit() const { return kind == Kind::Literal; }
    bool isZero() const { return kind == Kind::Zero; }
    bool isOne() const { return kind == Kind::One; }
};

struct Clause {
    int id = -1;
    std::vector<Token> tokens;

    int size() const { return (int)tokens.size(); }
    bool hasConstant() const;
    int countOnes() const;
    int countZeros() const;
    std::vector<Lit> literals() const;    // in token order
    std::set<Lit> literalSet() const;
    std::set<Var> varSet() const;
    bool contains(Lit l) const;
};

// Variable-set overlap of two clauses. `shared` carries the literals of the
// first clause over the shared variables.
struct OverlapProfile {
    int k = 0; // |vars(c1) n vars(c2)|
    int i = 0; // |vars(c1) - vars(c2)|
    int j = 0; // |vars(c2) - vars(c1)|
    std::vector<Lit> shared;
};

// One eliminated variable per entry. Replayed in reverse to rebuild a total
// model from a leaf assignment.
struct TrailEntry {
    enum class Kind { Assign, Link, Resolve };

    Kind kind = Kind::Assign;
    Var var = -1;
    bool bit = false;          // Assign: var := bit
    Lit def{};                 // Link:   var := value of def
    std::vector<Lit> partner;  // Resolve: var := 1 iff every partner literal is 0
};

using Model = std::vector<uint8_t>; // indexed by original variable id

class Formula {
public:
    Formula() = default;

    const std::map<int, Clause>& clauses() const { return clauses_; }
    const Clause& clause(int id) const;
    bool hasClause(int id) const { return clauses_.count(id) != 0; }
    const std::set<Var>& liveVars() const { return live_; }
    bool isLive(Var x) const { return live_.count(x) != 0; }
    const std::vector<TrailEntry>& trail() const { return trail_; }
    const std::vector<std::vector<Lit>>& original() const { return original_; }
    int numVars() const { return numVars_; }

    int positiveOccurrences(Var x) const;
    int negativeOccurrences(Var x) const;
    int degree(Var x) const { return positiveOccurrences(x) + negativeOccurrences(x); }
    bool isHeavy(Var x) const { return degree(x) >= 3; }
    std::vector<int> clausesWith(Var x) const; // ascending clause ids

    OverlapProfile overlapProfile(int c1, int c2) const;

    // Substitute literal l by `value` everywhere; eliminates l's variable.
    void assign(Lit l, bool value);
    // Substitute variable x by the literal def; eliminates x.
    void link(Var x, Lit def);
    // Enforce a == b, eliminating the larger-numbered variable.
    void linkLiterals(Lit a, Lit b);
    // Substitute x -> whenPositive and ~x -> whenNegative token-wise.
    // Records x := 1 iff all of whenNegative are 0.
    void resolveVariable(Var x, const std::vector<Lit>& whenPositive,
                         const std::vector<Lit>& whenNegative);

    void dropClause(int id);
    void setClauseTokens(int id, std::vector<Token> tokens);

    bool occurrenceIndexCoherent() const; // test hook

private:
    friend Formula fromClauses(const std::vector<std::vector<Lit>>& clauses, int numVars);

    void indexClause(const Clause& c);
    void unindexClause(const Clause& c);

    std::map<int, Clause> clauses_;
    // var -> clause id -> (positive count, negative count)
    std::map<Var, std::map<int, std::pair<int, int>>> occ_;
    std::set<Var> live_;
    std::vector<TrailEntry> trail_;
    std::vector<std::vector<Lit>> original_;
    int numVars_ = 0;
};

// Builds a formula over variables 0..numVars-1 (deduced from the clauses when
// numVars < 0). Clause ids are assigned in input order starting at 0.
Formula fromClauses(const std::vector<std::vector<Lit>>& clauses, int numVars = -1);

// True iff every original clause has exactly one true literal under m.
// m must be total over the original variables.
bool checkModel(const Formula& f, const Model& m);

// Replays the trail in reverse on top of a leaf assignment, producing a
// total model over numVars variables. Throws if a value is missing.
Model extendThroughTrail(const std::vector<TrailEntry>& trail,
                         const std::map<Var, bool>& leafAssignment, int numVars);

} // namespace xsolve
