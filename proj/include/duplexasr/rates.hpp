#pragma once

#include <utility>

#include "duplexasr/types.hpp"

namespace duplexasr {

/// dBc EVM level to linear signal-to-EVM power ratio: 10^(-evm_dbc/10).
double ser_from_evm_dbc(double evm_dbc);

/// Per-subcarrier thermal noise power in watts from the raw Table-style
/// inputs stored in params (density + noise figure over B/K).
double noise_power_per_subcarrier(const SystemParams& params);

/// Fills gamma_e and n1 = n2 from the raw link-budget fields of `raw`.
SystemParams make_system_params(SystemParams raw, double total_energy);

/// A_ki = gamma_e |h|^2, B_ki = |h|^2, C_ki = (gamma_e + 1) N.
/// Rejects zero-magnitude transmission gains (they would violate A_ki > 0).
AbcCoefficients abc_coefficients(const SystemParams& params, const ChannelRealization& ch);

RateBreakdown hd_upa_rates(const SystemParams& params, const ChannelRealization& ch,
                           const HdUpaAllocation& alloc);
RateBreakdown hd_nupa_rates(const SystemParams& params, const ChannelRealization& ch,
                            const HdNupaAllocation& alloc);
RateBreakdown fd_upa_rates(const SystemParams& params, const ChannelRealization& ch,
                           const FdUpaAllocation& alloc);
RateBreakdown fd_nupa_rates(const SystemParams& params, const ChannelRealization& ch,
                            const FdNupaAllocation& alloc);

struct HdUpaGradients {
    double d_eps1 = 0.0, d_eps2 = 0.0;  // dr/d eps_i
    double d_t1 = 0.0, d_t2 = 0.0;      // dr/d t_i
};

/// Closed-form sum-rate derivatives of the HD-UPA rate at an interior point
/// (t1, t2, eps1, eps2 all > 0).
HdUpaGradients hd_upa_gradients(const SystemParams& params, const ChannelRealization& ch,
                                const HdUpaAllocation& alloc);

struct HdNupaGradients {
    std::vector<double> d_eps1, d_eps2;  // dr/d eps_i[k], well-defined at eps = 0
    double d_t1 = 0.0, d_t2 = 0.0;       // dr1/dt1 and dr2/dt2
};

HdNupaGradients hd_nupa_gradients(const SystemParams& params, const ChannelRealization& ch,
                                  const HdNupaAllocation& alloc);

/// Stationarity residuals of the HD-UPA partial Lagrangian in the
/// per-subcarrier powers p_i = eps_i/t_i. f1 equalizes the energy marginals,
/// f2 the time marginals with the f1 = 0 substitution applied.
std::pair<double, double> residual_system_hd_upa(const SystemParams& params,
                                                 const ChannelRealization& ch,
                                                 double p1, double p2);

/// Jacobian of residual_system_hd_upa, row-major [df1/dp1, df1/dp2, df2/dp1, df2/dp2].
std::array<double, 4> residual_jacobian_hd_upa(const SystemParams& params,
                                               const ChannelRealization& ch,
                                               double p1, double p2);

/// FD sum-rate marginals for one subcarrier pair: (dr/d eps1[k], dr/d eps2[k]).
/// Includes the cross terms through the other direction's interference.
std::pair<double, double> fd_pair_gradients(const SystemParams& params,
                                            const ChannelRealization& ch,
                                            std::size_t k, double e1, double e2);

/// Second derivatives of the FD sum rate w.r.t. one subcarrier pair,
/// row-major [d2r/de1^2, d2r/de1de2, d2r/de2de1, d2r/de2^2].
std::array<double, 4> fd_pair_hessian(const SystemParams& params,
                                      const ChannelRealization& ch,
                                      std::size_t k, double e1, double e2);

}  // namespace duplexasr
