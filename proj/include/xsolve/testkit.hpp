#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "xsolve/formula.hpp"

namespace xsolve {

// Pinned PRNG so generated instances are reproducible everywhere.
// next(): state += 0x9E3779B97F4A7C15;
//         z = state;
//         z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//         z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
//         return z ^ (z >> 31);
// unit(): (next() >> 11) * 2^-53
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double unit() { return (double)(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }
};

struct GeneratorConfig {
    uint64_t seed = 1;
    int numVars = 10;
    int numClauses = 10;
    int lenMin = 3;
    int lenMax = 3;
    double negProb = 0.0;
    // cap every variable at this many occurrences, with one polarity per
    // variable (drawn on first use); < 0 disables the cap
    int degreeCap = -1;
};

// Deterministic instance generator. For each clause a length is drawn
// uniformly from [lenMin, lenMax], then distinct variables one at a time:
// uncapped, by rejection sampling below(numVars); capped, by index into the
// ascending list of variables with remaining capacity not yet in the clause.
// Signs: uncapped, each literal is negated iff unit() < negProb; capped, the
// variable's sticky polarity is drawn the same way on first use.
// Throws when a clause cannot be filled.
Formula generate(const GeneratorConfig& cfg);

struct OracleResult {
    bool sat = false;
    long modelCount = 0;
    std::optional<Model> witness; // lexicographically first model
};

// Exhaustive exact-one check over the original clauses. numVars <= 26.
OracleResult bruteForce(const Formula& f);

// Enumerates assignments of the live variables under which every current
// clause has exactly one true token. Clauses must be constant-free.
// Stops early if the callback returns false. Live variable count <= 26.
long forEachReducedModel(const Formula& f,
                         const std::function<bool(const std::map<Var, bool>&)>& cb);

} // namespace xsolve
