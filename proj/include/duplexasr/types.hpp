#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace duplexasr {

using cdouble = std::complex<double>;

/// Scalar physical/system constants. The frame duration is normalized to 1,
/// so total_energy in joules and average two-node power in watts are
/// numerically interchangeable; we store energy.
struct SystemParams {
    double gamma_e = 1000.0;     // linear signal-to-EVM power ratio
    double n1 = 0.0;             // per-subcarrier thermal noise power at node 1, W
    double n2 = 0.0;             // per-subcarrier thermal noise power at node 2, W
    double total_energy = 0.0;   // two-node energy budget over the unit frame, J
    int num_subcarriers = 1;

    // raw link-budget inputs retained for provenance
    double bandwidth_hz = 10e6;
    double carrier_hz = 2e9;
    double distance_m = 30.0;
    double noise_figure_db = 10.0;
    double evm_dbc = -30.0;
    double antenna_gain_db = 0.0;
    double noise_density_dbm_hz = -174.0;

    void validate() const;  // throws std::invalid_argument on violated invariants
};

/// Per-subcarrier complex gains for the four links plus the baseband SI
/// cancellation factors. h11/h22 are the equivalent residual-SI gains after
/// the antenna/RF stages.
struct ChannelRealization {
    std::vector<cdouble> h21, h12;  // forward (1->2), backward (2->1)
    std::vector<cdouble> h11, h22;  // residual SI at node 1, node 2
    std::vector<double> beta1, beta2;

    std::size_t size() const { return h21.size(); }
    void validate(int num_subcarriers) const;
};

struct HdUpaAllocation {
    double t1 = 0.5, t2 = 0.5;   // time shares, t1 + t2 = 1
    double eps1 = 0.0, eps2 = 0.0;  // joules per subcarrier
};

struct HdNupaAllocation {
    double t1 = 0.5, t2 = 0.5;
    std::vector<double> eps1, eps2;  // joules, length K
};

struct FdUpaAllocation {
    double eps1 = 0.0, eps2 = 0.0;  // joules per subcarrier
};

struct FdNupaAllocation {
    std::vector<double> eps1, eps2;  // joules, length K
};

/// Spectral efficiencies in bits/s/Hz, averaged over the K subcarriers.
struct RateBreakdown {
    double r1 = 0.0;
    double r2 = 0.0;
    double sum = 0.0;
};

/// The per-subcarrier constants A_ki, B_ki, C_ki of the HD rate expressions.
struct AbcCoefficients {
    std::vector<double> a1, b1, c1;  // forward link (towards node 2)
    std::vector<double> a2, b2, c2;  // backward link (towards node 1)
};

// Allocation invariant checks; throw std::invalid_argument with the violated
// constraint. energy_tol is the absolute budget tolerance (delta_E).
void validate_allocation(const HdUpaAllocation& a, const SystemParams& p, double energy_tol);
void validate_allocation(const HdNupaAllocation& a, const SystemParams& p, double energy_tol);
void validate_allocation(const FdUpaAllocation& a, const SystemParams& p, double energy_tol);
void validate_allocation(const FdNupaAllocation& a, const SystemParams& p, double energy_tol);

}  // namespace duplexasr
