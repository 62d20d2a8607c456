#include <doctest.h>

#include <cmath>
#include <set>

#include "xsolve/analysis.hpp"
#include "xsolve/catalog_default.hpp"
#include <stdexcept>

using namespace xsolve;

TEST_CASE("tau basics") {
    CHECK(tau({1, 1}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(tau({2, 2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(tau({7}) == doctest::Approx(1.0));
    CHECK(tau({1, 2}) == doctest::Approx(1.6180339887).epsilon(1e-9));
    CHECK(tau({5, 4}) == doctest::Approx(1.167304).epsilon(1e-6));
    CHECK(tau({1, 1, 1, 1}) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(tau({}), std::invalid_argument);
    CHECK_THROWS_AS(tau({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(tau({3, -1}), std::invalid_argument);
}

TEST_CASE("tau shrinks as drops grow") {
    CHECK(tau({6, 5}) < tau({5, 4}));
    CHECK(tau({5, 5}) < tau({5, 4}));
    double t = tau({5.5, 3.25});
    double sum = std::pow(t, -5.5) + std::pow(t, -3.25);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("branch expressions") {
    auto entries = parseCatalogText(
        "a | 3 - 2*h + 3*w*h ; 2 + 2*w | h=1..2 | 1.5\n"
        "# comment\n"
        "b | 7*w ; 4*w - 3*d | - | -\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "a");
    CHECK(entries[0].terms[0].value(0.8823, 2.0) ==
          doctest::Approx(3 - 4 + 6 * 0.8823));
    CHECK(entries[0].hLo == 1);
    CHECK(entries[0].hHi == 2);
    REQUIRE(entries[0].expected.has_value());
    CHECK(*entries[0].expected == doctest::Approx(1.5));
    CHECK(!entries[1].expected.has_value());
    CHECK(entries[1].terms[1].value(0.8823, 0.0) ==
          doctest::Approx(4 * 0.8823 - 3 * 0.1177));

    CHECK_THROWS_AS(parseCatalogText("x | 1 ; 2 | -\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseCatalogText("x | 1 ; 2*q | - | -\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseCatalogText("x | 1 | - | -\n"), std::invalid_argument);
    CHECK_THROWS_AS(parseCatalogText("x | 1 ; 2 | h=3..1 | -\n"), std::invalid_argument);
}

TEST_CASE("default catalog is well formed") {
    auto entries = parseCatalogText(defaultCatalogText());
    CHECK(entries.size() == 50);
    std::set<std::string> names;
    for (const auto& e : entries) {
        CHECK(names.insert(e.name).second);
        CHECK(e.terms.size() >= 2);
        REQUIRE(e.expected.has_value());
        CHECK(*e.expected > 1.0);
        CHECK(*e.expected < 1.2);
    }
}

TEST_CASE("catalog evaluation at the tuned weight") {
    auto entries = parseCatalogText(defaultCatalogText());
    CatalogEvalResult r = catalogEval(entries, 0.8823);
    CHECK(r.maxTau == doctest::Approx(1.1673039).epsilon(1e-5));
    CHECK(r.maxName == "L12/k2/p4");
    CHECK(r.rows.size() == entries.size());

    double heavyMax = 0;
    for (const auto& row : r.rows)
        if (row.name.rfind("L13/", 0) == 0)
            heavyMax = std::max(heavyMax, row.tauValue);
    CHECK(heavyMax == doctest::Approx(1.1667219).epsilon(1e-5));
}

TEST_CASE("case parameter is maximized") {
    auto entries =
        parseCatalogText("x | 5 - 2*h + 3*w*h ; 2 + 2*w | h=1..2 | -\n");
    CatalogEvalResult r = catalogEval(entries, 0.8823);
    CHECK(r.rows[0].hStar == 1); // the shallower drop is the worse case
    double t1 = tau({5 - 2 + 3 * 0.8823, 2 + 2 * 0.8823});
    CHECK(r.rows[0].tauValue == doctest::Approx(t1).epsilon(1e-12));
}

TEST_CASE("weight search lands near the tuned weight") {
    auto entries = parseCatalogText(defaultCatalogText());
    WeightSearchResult r = weightSearch(entries, 0.85, 0.92, 1e-3);
    CHECK(r.curve.size() == 71);
    CHECK(std::abs(r.bestW - 0.8823) < 0.01);
    CHECK(r.bestTau == doctest::Approx(1.1673).epsilon(1e-3));
    CHECK_THROWS_AS(weightSearch(entries, 0.9, 0.8, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(weightSearch(entries, 0.8, 0.9, 0.0), std::invalid_argument);
}

TEST_CASE("branch bookkeeping flags non-decreasing children") {
    SearchStats s;
    recordBranch(s, 5.0, {4.0, 3.5});
    CHECK(s.measureViolations == 0);
    CHECK(s.minBranchDrop == doctest::Approx(1.0));
    recordBranch(s, 5.0, {5.0});
    CHECK(s.measureViolations == 1);
    recordBranch(s, 5.0, {5.2});
    CHECK(s.measureViolations == 2);
    CHECK(s.branchDrops.size() == 4);
}
