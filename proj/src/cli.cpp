#include "xsolve/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xsolve/analysis.hpp"
#include "xsolve/catalog_default.hpp"
#include "xsolve/dimacs.hpp"
#include "xsolve/search.hpp"
#include "xsolve/testkit.hpp"
#include <stdexcept>

namespace xsolve {

namespace {

std::vector<CatalogEntry> loadCatalog(const std::string& pathFlag) {
    std::string path = pathFlag;
    if (path.empty())
        if (const char* env = std::getenv("XSOLVE_CATALOG"))
            path = env;
    if (path.empty())
        return parseCatalogText(defaultCatalogText());
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open catalog " + path);
    return parseCatalog(in);
}

void writeStats(const std::string& path, const SearchStats& s) {
    nlohmann::json j;
    j["nodes"] = s.nodes;
    j["leaves"] = s.leaves;
    j["maxDepth"] = s.maxDepth;
    j["ruleFires"] = s.ruleFires;
    j["muInitial"] = s.muInitial;
    if (s.branchDrops.empty())
        j["minBranchDrop"] = nullptr;
    else
        j["minBranchDrop"] = s.minBranchDrop;
    j["measureViolations"] = s.measureViolations;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace

int runMain(int argc, const char* const* argv) {
    CLI::App app{"exact satisfiability toolkit"};
    app.require_subcommand(1);

    // solve
    std::string solveFile, statsPath;
    bool printModel = false, noCase21 = false, noMeasure = false;
    auto* solveCmd = app.add_subcommand("solve", "decide a DIMACS instance");
    solveCmd->add_option("file", solveFile, "DIMACS input")->required();
    solveCmd->add_flag("--model", printModel, "print a model when satisfiable");
    solveCmd->add_option("--stats-json", statsPath, "write search statistics");
    solveCmd->add_flag("--no-case21", noCase21, "disable the pattern branches");
    solveCmd->add_flag("--no-measure", noMeasure, "skip measure bookkeeping");

    // oracle
    std::string oracleFile;
    auto* oracleCmd = app.add_subcommand("oracle", "exhaustive check, <= 26 variables");
    oracleCmd->add_option("file", oracleFile, "DIMACS input")->required();

    // gen
    GeneratorConfig cfg;
    std::string genOut;
    auto* genCmd = app.add_subcommand("gen", "generate a reproducible instance");
    genCmd->add_option("--seed", cfg.seed, "PRNG seed")->required();
    genCmd->add_option("--vars", cfg.numVars, "variable count")->required();
    genCmd->add_option("--clauses", cfg.numClauses, "clause count")->required();
    genCmd->add_option("--len-min", cfg.lenMin, "minimum clause length");
    genCmd->add_option("--len-max", cfg.lenMax, "maximum clause length");
    genCmd->add_option("--neg-prob", cfg.negProb, "negation probability");
    genCmd->add_option("--degree-cap", cfg.degreeCap, "per-variable occurrence cap");
    genCmd->add_option("--out", genOut, "output file (default stdout)");

    // tau
    std::vector<double> tauArgs;
    auto* tauCmd = app.add_subcommand("tau", "branching factor of a vector");
    tauCmd->add_option("t", tauArgs, "positive drops")->required()->expected(-1);

    // catalog-eval
    double evalW = 0.8823;
    std::string catalogPath;
    auto* evalCmd = app.add_subcommand("catalog-eval", "evaluate the branch catalog");
    evalCmd->add_option("--w", evalW, "weight of 3-literal-clause variables");
    evalCmd->add_option("--catalog", catalogPath, "catalog file");

    // weight-search
    double wsLo = 0.5, wsHi = 1.0, wsStep = 1e-4;
    std::string wsCatalog;
    auto* wsCmd = app.add_subcommand("weight-search", "grid-minimize the max branching factor");
    wsCmd->add_option("--lo", wsLo, "lower bound");
    wsCmd->add_option("--hi", wsHi, "upper bound");
    wsCmd->add_option("--step", wsStep, "grid step");
    wsCmd->add_option("--catalog", wsCatalog, "catalog file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solveCmd->parsed()) {
            Formula f = toFormula(parseDimacsFile(solveFile));
            SolveOptions opts;
            opts.enableCase21 = !noCase21;
            opts.trackMeasure = !noMeasure;
            SolveResult r = solve(f, opts);
            if (!statsPath.empty())
                writeStats(statsPath, r.stats);
            if (r.sat) {
                std::cout << "s SATISFIABLE" << std::endl;
                if (printModel)
                    std::cout << modelToDimacs(*r.model) << std::endl;
                return 10;
            }
            std::cout << "s UNSATISFIABLE" << std::endl;
            return 20;
        }

        if (oracleCmd->parsed()) {
            Formula f = toFormula(parseDimacsFile(oracleFile));
            OracleResult r = bruteForce(f);
            std::cout << (r.sat ? "s SATISFIABLE" : "s UNSATISFIABLE") << std::endl;
            std::cout << "c models " << r.modelCount << std::endl;
            return r.sat ? 10 : 20;
        }

        if (genCmd->parsed()) {
            Formula f = generate(cfg);
            DimacsDocument doc = toDocument(f);
            std::vector<std::string> comments{
                "seed " + std::to_string(cfg.seed)};
            if (genOut.empty()) {
                emitDimacs(std::cout, doc, comments);
            } else {
                std::ofstream out(genOut);
                if (!out)
                    throw std::runtime_error("cannot write " + genOut);
                emitDimacs(out, doc, comments);
            }
            return 0;
        }

        if (tauCmd->parsed()) {
            std::cout << std::fixed << std::setprecision(6) << tau(tauArgs)
                      << std::endl;
            return 0;
        }

        if (evalCmd->parsed()) {
            auto entries = loadCatalog(catalogPath);
            CatalogEvalResult r = catalogEval(entries, evalW);
            std::cout << std::fixed << std::setprecision(6);
            for (const auto& row : r.rows) {
                std::cout << row.name << "  tau " << row.tauValue;
                if (row.hStar > 0)
                    std::cout << "  h " << row.hStar;
                if (row.expected)
                    std::cout << "  expected " << std::setprecision(4)
                              << *row.expected << std::setprecision(6);
                std::cout << "\n";
            }
            std::cout << "max " << r.maxTau << " (" << r.maxName << ")"
                      << std::endl;
            return 0;
        }

        if (wsCmd->parsed()) {
            auto entries = loadCatalog(wsCatalog);
            WeightSearchResult r = weightSearch(entries, wsLo, wsHi, wsStep);
            std::cout << std::fixed << std::setprecision(6);
            std::cout << "best w " << r.bestW << "\n";
            std::cout << "max tau " << r.bestTau << std::endl;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 1;
}

} // namespace xsolve
