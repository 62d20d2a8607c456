#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xsolve/formula.hpp"
#include "xsolve/simplify.hpp"
#include "xsolve/stats.hpp"

namespace xsolve {

struct SolveOptions {
    bool enableCase21 = true;  // refined pattern branches on an outside variable
    bool trackMeasure = true;  // per-branch measure bookkeeping
};

struct BranchDecision {
    enum class Kind {
        Line10Var,      // variable in three 3-literal clauses: branch on it
        Line10Simplify, // two of those clauses share 2 vars: link, no branch
        Line12Sub,      // k >= 2 overlap: branch on the shared subclause
        Line13Var,      // heaviest variable
        Case21Var,      // outside variable from a detected pattern
        PolyCase,       // every variable has degree <= 2: matching, no branch
    };

    Kind kind = Kind::PolyCase;
    Var var = -1;
    int clause1 = -1, clause2 = -1;
    std::vector<Lit> sub; // shared literals for Line12Sub
    Lit linkA{}, linkB{}; // Line10Simplify: enforce linkA == linkB
    std::string detail;
};

struct Case21Pattern {
    Var branchVar = -1;
    std::string detail;
};

// Outside variable s on exactly two 3-literal clauses, each holding one
// literal private to c1 and one private to c2.
std::optional<Case21Pattern> detectCase21Overlap(const Formula& f, int c1, int c2);

// Outside variable s on exactly two 3-literal clauses whose other literals
// all sit in x's clauses. Branches on s when both bridge clauses span the
// same pair (and a clause of length >= 4 is involved), or on the hinge
// literal when they span different pairs.
std::optional<Case21Pattern> detectCase21Heavy(const Formula& f, Var x);

// Next action for a formula at simplification fixed point with clauses left.
BranchDecision chooseBranch(const Formula& f, const SolveOptions& opts = {});

struct BranchChild {
    Formula formula;
    SimplifyStatus status = SimplifyStatus::FixedPoint;
};

// x := 1 child first, each cascaded to fixed point or refutation.
std::pair<BranchChild, BranchChild> branchVariable(const Formula& f, Var x,
                                                   RuleCounter* fires = nullptr);

// delta := 1 child first (all other literals of the two clauses set to 0),
// then the delta := 0 child.
std::pair<BranchChild, BranchChild> branchSubclause(const Formula& f,
                                                    const std::vector<Lit>& delta,
                                                    int c1, int c2,
                                                    RuleCounter* fires = nullptr);

struct SolveResult {
    bool sat = false;
    std::optional<Model> model;
    SearchStats stats;
};

SolveResult solve(const Formula& f, const SolveOptions& opts = {});

} // namespace xsolve
