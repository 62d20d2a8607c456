#pragma once

#include <map>
#include <optional>
#include <string>

#include "xsolve/formula.hpp"

namespace xsolve {

// Simplification rules, in strict priority order. The numbering mirrors the
// branching lines 10/12/13 that live in the search module, which is why 10
// is skipped here and 12a sits after 11: resolution and the 1-j rewrite only
// run when no variable qualifies for the line-10 branch.
enum class RuleId {
    Unsat = 1,        // some clause cannot have exactly one true token
    DropSatisfied,    // clause already owns its single One
    StripZero,        // remove a constant-0 token
    Unit,             // single-literal clause
    Pair,             // two-literal clause: link l = ~l'
    DupLiteral,       // repeated literal inside a clause must be 0
    MixedShare,       // shared vars both same- and opposite-signed
    DoubleFlip,       // two opposite-signed shared vars: link x = ~y
    Subset,           // clause contained in another
    Resolution,       // eliminate a both-polarity variable
    OneSideSingleton, // |C1-C2| = 1 rewrite / link
};

const char* ruleName(RuleId r); // "1".."9", "11", "12a"

struct RuleApplication {
    RuleId rule;
    int clause1 = -1;
    int clause2 = -1;
    Var var = -1;
    Lit a{};
    Lit b{};
};

enum class SimplifyStatus { Progress, FixedPoint, Unsat };

using RuleCounter = std::map<std::string, long>;

// Highest-priority applicable rule, or nullopt at a fixed point.
// Deterministic: scans clauses and pairs in ascending id order.
std::optional<RuleApplication> findApplicable(const Formula& f);

// Applies one rule. Returns Unsat only for RuleId::Unsat.
SimplifyStatus applyRule(Formula& f, const RuleApplication& app);

// Applies rules until fixed point or refutation, counting fires per rule.
SimplifyStatus cascade(Formula& f, RuleCounter* fires = nullptr);

// Smallest variable occurring in >= 3 distinct plain 3-literal clauses.
// While such a variable exists, resolution and the 1-j rewrite are held back.
std::optional<Var> line10Variable(const Formula& f);

// Exposed pieces of the two guarded rules, usable directly in tests.
// resolveRule: c1 contains x positively, c2 contains ~x.
void resolveRule(Formula& f, Var x, int c1, int c2);
// rewriteOneJ: |vars(c1)-vars(c2)| == 1 or symmetric; applies the
// singleton-side rewrite (or the two-singleton link + drop).
void rewriteOneJ(Formula& f, int c1, int c2);

} // namespace xsolve
