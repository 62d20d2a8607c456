#include <doctest.h>

#include <set>

#include "xsolve/measure.hpp"
#include "xsolve/simplify.hpp"
#include "xsolve/testkit.hpp"

using namespace xsolve;

TEST_CASE("refutation detection") {
    // empty clause
    CHECK(findApplicable(fromClauses({{}}))->rule == RuleId::Unsat);
    // a repeated literal alone can yield 0 or 2 true, never 1
    CHECK(findApplicable(fromClauses({{pos(0), pos(0)}}))->rule == RuleId::Unsat);
    CHECK(findApplicable(fromClauses({{pos(0), neg(0), pos(0), neg(0)}}))->rule ==
          RuleId::Unsat);
    // two satisfied positions
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}});
    f.assign(pos(0), true);
    f.assign(pos(1), true);
    CHECK(findApplicable(f)->rule == RuleId::Unsat);
    CHECK(cascade(f) == SimplifyStatus::Unsat);
}

TEST_CASE("satisfied clause drops and zeroes its tail") {
    Formula f = fromClauses({{pos(0), neg(1), pos(2)}, {pos(2), pos(3)}});
    f.assign(pos(0), true);
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::DropSatisfied);
    applyRule(f, *app);
    CHECK(!f.hasClause(0));
    CHECK(!f.isLive(1)); // ~x1 := 0, so x1 = 1
    CHECK(!f.isLive(2));
    Model m = extendThroughTrail(f.trail(), {{3, true}}, 4);
    CHECK(m == Model{1, 1, 0, 1});
}

TEST_CASE("complementary pair releases the clause") {
    // (x0 v ~x0 v x1): always exactly one of the pair, forcing x1 = 0
    Formula f = fromClauses({{pos(0), neg(0), pos(1)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::DropSatisfied);
    CHECK(cascade(f) == SimplifyStatus::FixedPoint);
    CHECK(f.clauses().empty());
    CHECK(f.isLive(0));
    CHECK(!f.isLive(1));
}

TEST_CASE("pair with a surplus occurrence pins the variable") {
    // (x0 v x0 v ~x0): one true iff x0 = 0
    Formula f = fromClauses({{pos(0), pos(0), neg(0)}});
    CHECK(cascade(f) == SimplifyStatus::FixedPoint);
    Model m = extendThroughTrail(f.trail(), {}, 1);
    CHECK(m == Model{0});
}

TEST_CASE("unit and two-literal clauses") {
    Formula f = fromClauses({{pos(0)}, {pos(1), neg(2)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::Unit);
    CHECK(cascade(f) == SimplifyStatus::FixedPoint);
    CHECK(f.clauses().empty());
    // x0 = 1; x1 = ~~x2 complement: exactly one of x1, ~x2
    Model m = extendThroughTrail(f.trail(), {{1, false}}, 3);
    CHECK(m[0] == 1);
    CHECK(m[1] == 0);
    CHECK(m[2] == 0); // ~x2 must be the true one
}

TEST_CASE("duplicate literal is forced to zero") {
    Formula f = fromClauses({{pos(0), pos(0), pos(1)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::DupLiteral);
    CHECK(cascade(f) == SimplifyStatus::FixedPoint);
    CHECK(f.clauses().empty());
    Model m = extendThroughTrail(f.trail(), {}, 2);
    CHECK(m == Model{0, 1});
}

TEST_CASE("mixed sharing forces the same-signed variable") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2), pos(5)},
                             {pos(3), pos(1), neg(2), pos(6)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::MixedShare);
    CHECK(app->a == pos(1));
    applyRule(f, *app);
    CHECK(!f.isLive(1));
}

TEST_CASE("two flipped shares become a link") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2), pos(5)},
                             {pos(3), pos(4), neg(1), neg(2)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::DoubleFlip);
    applyRule(f, *app);
    // x1 = ~x2 afterwards; the smaller variable survives
    CHECK(f.isLive(1));
    CHECK(!f.isLive(2));
    CHECK(f.clause(0).contains(neg(1)));
    CHECK(f.clause(1).contains(pos(1)));
}

TEST_CASE("subset clause empties the rest of its superset") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)},
                             {pos(0), pos(1), pos(2), pos(3), neg(4)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::Subset);
    applyRule(f, *app);
    CHECK(!f.hasClause(1));
    CHECK(!f.isLive(3));
    CHECK(!f.isLive(4));
    Model m = extendThroughTrail(f.trail(), {{0, true}, {1, false}, {2, false}}, 5);
    CHECK(m == Model{1, 0, 0, 0, 1}); // ~x4 := 0
}

TEST_CASE("identical clauses merge") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}, {pos(2), pos(0), pos(1)}});
    CHECK(cascade(f) == SimplifyStatus::FixedPoint);
    CHECK(f.clauses().size() == 1);
}

TEST_CASE("resolution waits for the line-10 branch variable") {
    std::vector<std::vector<Lit>> base = {
        {pos(0), pos(1), pos(2)},
        {pos(0), pos(3), pos(4)},
        {pos(0), pos(5), pos(6)},
        {neg(0), pos(7), pos(8)},
    };
    Formula f = fromClauses(base);
    REQUIRE(line10Variable(f).has_value());
    CHECK(*line10Variable(f) == 0);
    CHECK(!findApplicable(f).has_value()); // held back

    // with only two 3-literal clauses on x0, resolution goes ahead
    Formula g = fromClauses({base[0], base[1], {neg(0), pos(7), pos(8), pos(9)}});
    CHECK(!line10Variable(g).has_value());
    auto app = findApplicable(g);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::Resolution);
    CHECK(app->var == 0);
}

TEST_CASE("resolution substitutes both sides") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}, {neg(0), pos(3), pos(4)}});
    resolveRule(f, 0, 0, 1);
    CHECK(!f.isLive(0));
    std::set<Lit> want{pos(1), pos(2), pos(3), pos(4)};
    CHECK(f.clause(0).literalSet() == want);
    CHECK(f.clause(1).literalSet() == want);
    CHECK(f.trail().back().partner == std::vector<Lit>{pos(1), pos(2)});
}

TEST_CASE("resolution zeroes the shared part") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}, {neg(0), pos(1), pos(3)}});
    resolveRule(f, 0, 0, 1);
    CHECK(!f.isLive(0));
    CHECK(!f.isLive(1)); // x1 sat on both sides, so x1 := 0
}

TEST_CASE("singleton-side rewrite") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2), pos(3)},
                             {pos(1), pos(2), pos(3), pos(4), pos(5)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::OneSideSingleton);
    applyRule(f, *app);
    CHECK(f.clause(1).literalSet() == std::set<Lit>{neg(0), pos(4), pos(5)});
    CHECK(f.clause(0).literalSet() ==
          std::set<Lit>{pos(0), pos(1), pos(2), pos(3)});
}

TEST_CASE("two singleton sides become a link") {
    Formula f = fromClauses({{pos(0), pos(1), pos(2)}, {pos(1), pos(2), pos(3)}});
    auto app = findApplicable(f);
    REQUIRE(app.has_value());
    CHECK(app->rule == RuleId::OneSideSingleton);
    applyRule(f, *app);
    CHECK(!f.hasClause(1));
    CHECK(!f.isLive(3)); // linked to x0
    CHECK(f.isLive(0));
}

TEST_CASE("cascade preserves the model set") {
    long unsatSeen = 0, satSeen = 0;
    for (uint64_t seed = 1; seed <= 300; ++seed) {
        SplitMix64 rng(seed * 977);
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.numVars = 4 + (int)rng.below(7);
        cfg.numClauses = 2 + (int)rng.below(7);
        cfg.lenMin = 2;
        cfg.lenMax = std::min(4, cfg.numVars);
        cfg.negProb = 0.4;
        Formula f = generate(cfg);

        OracleResult oracle = bruteForce(f);
        Formula g = f;
        SimplifyStatus st = cascade(g);
        if (st == SimplifyStatus::Unsat) {
            ++unsatSeen;
            CHECK(oracle.modelCount == 0);
            continue;
        }
        CHECK(!findApplicable(g).has_value());
        CHECK(g.occurrenceIndexCoherent());

        // every eliminated variable has exactly one trail entry
        std::map<Var, int> entries;
        for (const auto& e : g.trail())
            ++entries[e.var];
        for (Var v = 0; v < g.numVars(); ++v)
            CHECK((g.isLive(v) ? 0 : 1) == (entries.count(v) ? entries[v] : 0));

        std::set<Model> models;
        forEachReducedModel(g, [&](const std::map<Var, bool>& leaf) {
            Model m = extendThroughTrail(g.trail(), leaf, g.numVars());
            CHECK(checkModel(f, m));
            models.insert(m);
            return true;
        });
        CHECK((long)models.size() == oracle.modelCount);
        if (oracle.modelCount > 0)
            ++satSeen;
    }
    CHECK(unsatSeen > 10);
    CHECK(satSeen > 10);
}

TEST_CASE("cascade never raises the measure") {
    for (uint64_t seed = 1; seed <= 150; ++seed) {
        SplitMix64 rng(seed * 131 + 7);
        GeneratorConfig cfg;
        cfg.seed = seed + 5000;
        cfg.numVars = 5 + (int)rng.below(8);
        cfg.numClauses = 3 + (int)rng.below(8);
        cfg.lenMin = 3;
        cfg.lenMax = std::min(5, cfg.numVars);
        cfg.negProb = 0.3;
        Formula f = generate(cfg);
        double before = formulaMeasure(f).mu;
        if (cascade(f) == SimplifyStatus::Unsat)
            continue;
        CHECK(formulaMeasure(f).mu <= before + 1e-9);
    }
}
