#pragma once

#include "duplexasr/solvers.hpp"

namespace duplexasr {

struct OracleConfig {
    // Grid resolution per dimension; 0 picks a per-strategy default
    // (200 for HD-UPA, 1000 for FD-UPA, 12 for the NUPA simplices).
    int resolution = 0;
    int refine_halvings = 2;          // local refinement passes around the incumbent
    long long max_grid_points = 40'000'000;  // dimensionality cap
};

/// Exhaustive grid search over the strategy's independent variables
/// (energy shares on the simplex, plus t1 for HD), evaluating the exact rate
/// function, followed by a local refinement pass that halves the step
/// refine_halvings times around the incumbent. Deterministic; near-ties
/// resolve toward the symmetric/uniform allocation. Throws when the grid
/// would exceed max_grid_points (reduce K or the resolution).
StrategyResult exhaustive_search(Strategy strategy, const SystemParams& params,
                                 const ChannelRealization& ch,
                                 const OracleConfig& cfg = {});

struct GapReport {
    double asr_solver = 0.0;
    double asr_oracle = 0.0;
    double relative_gap = 0.0;  // (oracle - solver) / oracle; 0 when both are 0
    bool solver_feasible = false;
    bool oracle_feasible = false;
};

GapReport compare(Strategy strategy, const SystemParams& params,
                  const ChannelRealization& ch, const SolverConfig& solver_cfg = {},
                  const OracleConfig& oracle_cfg = {});

}  // namespace duplexasr
