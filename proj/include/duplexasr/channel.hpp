#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "duplexasr/types.hpp"

namespace duplexasr {

struct TapProfile {
    std::vector<double> delays_ns;       // strictly increasing
    std::vector<cdouble> amplitudes;     // complex tap weights
    std::string label;

    void validate() const;
};

/// Outdoor LOS path loss, 103.8 + 20.9 log10(d/1000) dB. Rejects d <= 0.
double path_loss_db(double distance_m);

/// All links flat across subcarriers: transmission gain from the path-loss
/// model, SI gain 10^(si_atten_db/10), beta amplitude 10^(beta_db/20).
ChannelRealization flat_channel(const SystemParams& params, double si_atten_db,
                                double beta_db);

/// 4-tap exponential SI profile, amplitudes proportional to exp(-t) at
/// symbol-spaced delays t = 0..3, scaled so the total power is
/// 10^(atten_db/10).
TapProfile si_tap_profile(double atten_db, double sample_period_ns = 100.0);

/// H[k] = sum_l a_l exp(-j 2 pi f_k tau_l), f_k = k (bandwidth/K), k = 0..K-1.
std::vector<cdouble> frequency_response(const TapProfile& taps, int num_subcarriers,
                                        double bandwidth_hz);

/// Symmetric frequency-selective channel: ITU outdoor model A taps with
/// seeded uniform random phases for the transmission link (h12 = h21,
/// h11 = h22), SI from si_tap_profile. Average transmission power is
/// normalized to the path-loss target, SI power to 10^(si_atten_db/10).
ChannelRealization itu_a_channel(const SystemParams& params, double si_atten_db,
                                 double beta_db, std::uint64_t rng_seed);

/// Asymmetric frequency-selective channel from the fixed tabulated complex
/// taps (no randomness). With raw_taps = false each link is renormalized to
/// the flat-channel PL target (transmission) or si_atten_db (SI); raw mode
/// keeps the tabulated weights as-is.
ChannelRealization asymmetric_channel(const SystemParams& params, double si_atten_db,
                                      double beta_db, bool raw_taps = false);

// CSV schema: k,h21_re,h21_im,h12_re,h12_im,h11_re,h11_im,h22_re,h22_im,beta1,beta2
void write_channel_csv(std::ostream& out, const ChannelRealization& ch);
ChannelRealization read_channel_csv(std::istream& in);
ChannelRealization read_channel_csv_file(const std::string& path);

}  // namespace duplexasr
