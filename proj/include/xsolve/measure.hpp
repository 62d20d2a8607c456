#pragma once

#include <map>
#include <optional>

#include "xsolve/formula.hpp"

namespace xsolve {

// Reduced weight for variables sitting on an isolated-ish 3-literal clause,
// and its complement. The branching analysis is tuned around this value.
inline constexpr double kWeight3 = 0.8823;
inline constexpr double kWeightDrop = 1.0 - kWeight3; // 0.1177

struct MeasureReport {
    std::map<Var, double> weights;
    double mu = 0.0;
};

// Smallest variable outside the 3-literal clause `clauseId` that shares a
// clause with each of its three variables. Polarity is ignored.
std::optional<Var> commonOutsideNeighbour(const Formula& f, int clauseId);

// kWeight3 when x lies on some 3-literal clause without a common outside
// neighbour, 1 otherwise. Zero-occurrence live variables weigh 1.
double variableWeight(const Formula& f, Var x);

// Sum of weights over the live variables.
MeasureReport formulaMeasure(const Formula& f);

} // namespace xsolve
