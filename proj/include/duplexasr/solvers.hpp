#pragma once

#include <string>
#include <variant>

#include "duplexasr/numerics.hpp"
#include "duplexasr/rates.hpp"
#include "duplexasr/types.hpp"

namespace duplexasr {

enum class Strategy { HdUpa, HdNupa, FdUpa, FdNupa };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& name);  // accepts "hd-upa", "fd-nupa", ...

struct SolverConfig {
    NewtonConfig newton{};
    double time_grid_step = 1e-3;     // xi for the HD-NUPA t1 grid
    double energy_tol_factor = 1e-6;  // delta_E = factor * E
    double symmetry_tol = 1e-9;       // p1 ~ p2 degeneracy / channel symmetry

    // typical-conditions predicate knobs
    double typical_noise_fraction = 0.01;
    double typical_min_sinr_db = 10.0;

    // FD-NUPA outer search: bracket-then-bisect by default; the paper's pure
    // forward grid scan on lambda is kept behind this flag for fidelity runs.
    bool exact_grid_lambda = false;
    int lambda_grid_points = 1000;
};

using AllocationVariant =
    std::variant<HdUpaAllocation, HdNupaAllocation, FdUpaAllocation, FdNupaAllocation>;

struct StrategyResult {
    Strategy strategy = Strategy::HdUpa;
    AllocationVariant allocation;
    RateBreakdown rates;
    SolverReport report;

    double t1() const;      // 1.0 for FD strategies
    double t2() const;
    double total_eps1() const;  // summed over subcarriers, joules
    double total_eps2() const;
};

struct TypicalConditions {
    bool holds = false;
    bool noise_below_interference = false;
    bool sinr_high = false;
    bool symmetric = false;
    double noise_fraction = 0.0;   // (gamma_e+1)N / min interference-plus-EVM power
    double min_sinr_db = 0.0;      // at the uniform split
    double max_asymmetry = 0.0;    // relative, across mirrored quantities
};

/// Thermal noise far below the interference-plus-EVM floor, SINR well above
/// 0 dB at the uniform split, and an elementwise-symmetric channel.
TypicalConditions check_typical_conditions(const SystemParams& params,
                                           const ChannelRealization& ch,
                                           const SolverConfig& cfg = {});

StrategyResult solve_hd_upa(const SystemParams& params, const ChannelRealization& ch,
                            const SolverConfig& cfg = {});
StrategyResult solve_hd_nupa(const SystemParams& params, const ChannelRealization& ch,
                             const SolverConfig& cfg = {});
StrategyResult solve_fd_upa(const SystemParams& params, const ChannelRealization& ch,
                            const SolverConfig& cfg = {});
StrategyResult solve_fd_nupa(const SystemParams& params, const ChannelRealization& ch,
                             const SolverConfig& cfg = {});

StrategyResult solve(Strategy strategy, const SystemParams& params,
                     const ChannelRealization& ch, const SolverConfig& cfg = {});

}  // namespace duplexasr
