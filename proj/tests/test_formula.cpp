#include <doctest.h>

#include "xsolve/formula.hpp"
#include <stdexcept>

using namespace xsolve;

TEST_CASE("literal encoding") {
    Lit a = pos(3);
    CHECK(a.var() == 3);
    CHECK(!a.neg());
    CHECK((~a).neg());
    CHECK((~a).var() == 3);
    CHECK(~~a == a);
    CHECK(Lit::fromDimacs(4) == pos(3));
    CHECK(Lit::fromDimacs(-4) == neg(3));
    CHECK(pos(3).toDimacs() == 4);
    CHECK(neg(3).toDimacs() == -4);
    CHECK(pos(0) < neg(0));
    CHECK(neg(0) < pos(1));
}

TEST_CASE("construction and occurrence index") {
    Formula f = fromClauses({{pos(0), pos(1), neg(2)}, {pos(0), neg(1), pos(3)}});
    CHECK(f.numVars() == 4);
    CHECK(f.liveVars().size() == 4);
    CHECK(f.clauses().size() == 2);
    CHECK(f.degree(0) == 2);
    CHECK(f.positiveOccurrences(0) == 2);
    CHECK(f.positiveOccurrences(1) == 1);
    CHECK(f.negativeOccurrences(1) == 1);
    CHECK(f.degree(3) == 1);
    CHECK(f.clausesWith(0) == std::vector<int>{0, 1});
    CHECK(f.occurrenceIndexCoherent());

    OverlapProfile p = f.overlapProfile(0, 1);
    CHECK(p.k == 2);
    CHECK(p.i == 1);
    CHECK(p.j == 1);
    CHECK(p.shared == std::vector<Lit>{pos(0), pos(1)});
}

TEST_CASE("declared variable count wins when larger") {
    Formula f = fromClauses({{pos(0)}}, 5);
    CHECK(f.numVars() == 5);
    CHECK(f.liveVars().size() == 5);
    CHECK(f.degree(4) == 0);
}

TEST_CASE("assign replaces both polarities with constants") {
    Formula f = fromClauses({{pos(0), pos(1)}, {neg(0), pos(2)}});
    f.assign(pos(0), true);
    CHECK(!f.isLive(0));
    CHECK(f.degree(0) == 0);
    CHECK(f.clause(0).tokens[0].isOne());
    CHECK(f.clause(1).tokens[0].isZero());
    CHECK(f.trail().size() == 1);
    CHECK(f.trail()[0].kind == TrailEntry::Kind::Assign);
    CHECK(f.trail()[0].var == 0);
    CHECK(f.trail()[0].bit);
    CHECK(f.occurrenceIndexCoherent());

    // assigning a negated literal stores the variable's value
    Formula g = fromClauses({{neg(3), pos(1)}});
    g.assign(neg(3), true);
    CHECK(!g.trail()[0].bit);
    CHECK(g.clause(0).tokens[0].isOne());
    CHECK_THROWS_AS(g.assign(neg(3), false), std::invalid_argument);
}

TEST_CASE("link substitutes a definition") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}, {neg(1), pos(3)}});
    f.link(1, neg(2));
    CHECK(!f.isLive(1));
    CHECK(f.clause(0).contains(neg(2)));
    CHECK(f.clause(1).contains(pos(2)));
    CHECK(f.degree(2) == 3);
    CHECK(f.occurrenceIndexCoherent());
    CHECK(f.trail().back().kind == TrailEntry::Kind::Link);
    CHECK(f.trail().back().def == neg(2));
}

TEST_CASE("linkLiterals keeps the smaller variable") {
    Formula f = fromClauses({{pos(0), pos(4)}, {neg(4), pos(2)}});
    f.linkLiterals(neg(4), pos(2)); // enforce ~x4 == x2, so x4 := ~x2
    CHECK(!f.isLive(4));
    CHECK(f.isLive(2));
    CHECK(f.clause(0).contains(neg(2)));
    CHECK(f.clause(1).contains(pos(2)));
    CHECK(f.occurrenceIndexCoherent());
    CHECK_THROWS_AS(f.linkLiterals(pos(0), neg(0)), std::invalid_argument);
}

TEST_CASE("resolveVariable splices substitute literals") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}, {neg(0), pos(3), pos(4)}});
    f.resolveVariable(0, {pos(3), pos(4)}, {pos(1), pos(2)});
    CHECK(!f.isLive(0));
    CHECK(f.clause(0).literalSet() == std::set<Lit>{pos(1), pos(2), pos(3), pos(4)});
    CHECK(f.clause(1).literalSet() == std::set<Lit>{pos(1), pos(2), pos(3), pos(4)});
    CHECK(f.occurrenceIndexCoherent());
    const TrailEntry& e = f.trail().back();
    CHECK(e.kind == TrailEntry::Kind::Resolve);
    CHECK(e.var == 0);
    CHECK(e.partner == std::vector<Lit>{pos(1), pos(2)});
}

TEST_CASE("clause editing keeps the index coherent") {
    Formula f = fromClauses({{pos(0), pos(1)}, {pos(1), pos(2)}});
    f.dropClause(0);
    CHECK(f.degree(1) == 1);
    CHECK(f.degree(0) == 0);
    f.setClauseTokens(1, {Token::fromLit(pos(2))});
    CHECK(f.degree(1) == 0);
    CHECK(f.degree(2) == 1);
    CHECK(f.occurrenceIndexCoherent());
    CHECK_THROWS_AS(f.dropClause(0), std::invalid_argument);
}

TEST_CASE("checkModel counts exactly one true literal per clause") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}});
    CHECK(checkModel(f, {1, 0, 0}));
    CHECK(checkModel(f, {0, 1, 0}));
    CHECK(!checkModel(f, {1, 1, 0}));
    CHECK(!checkModel(f, {0, 0, 0}));
    CHECK_THROWS_AS(checkModel(f, {1, 0}), std::invalid_argument);

    Formula g = fromClauses({{neg(0), pos(1)}});
    CHECK(checkModel(g, {0, 0}));
    CHECK(!checkModel(g, {0, 1}));
}

TEST_CASE("extendThroughTrail replays in reverse") {
    std::vector<TrailEntry> trail;
    trail.push_back({TrailEntry::Kind::Assign, 0, true, Lit{}, {}});
    trail.push_back({TrailEntry::Kind::Link, 1, false, pos(2), {}});
    trail.push_back({TrailEntry::Kind::Resolve, 3, false, Lit{}, {neg(2)}});
    Model m = extendThroughTrail(trail, {{2, false}}, 4);
    CHECK(m == Model{1, 0, 0, 0}); // ~x2 is true, so x3 = 0

    Model m2 = extendThroughTrail(trail, {{2, true}}, 4);
    CHECK(m2 == Model{1, 1, 1, 1});

    CHECK_THROWS_AS(extendThroughTrail(trail, {}, 4), std::runtime_error);
}
