#pragma once

#include <optional>

#include "marm/core/props.hpp"
#include "marm/induction/example_sets.hpp"

namespace marm {

// Minimal consistent automaton identification is NP-complete (Gold 1978), so
// the exhaustive check stays capped; 5 covers every machine this project
// learns.
inline constexpr int kOracleDefaultMaxStates = 5;

// Exhaustive verification oracle: enumerates canonical partial transition
// functions over the merged prefix tree of all example traces and returns the
// smallest state count (2..n_max) admitting a consistent machine, or nullopt.
std::optional<int> oracle_minimal(const PropSpace& props, const ExampleSets& ex,
                                  int n_max = kOracleDefaultMaxStates);

}  // namespace marm
