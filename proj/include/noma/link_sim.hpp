#ifndef NOMA_LINK_SIM_HPP
#define NOMA_LINK_SIM_HPP

#include "noma/model.hpp"
#include "noma/rng.hpp"

#include <complex>
#include <cstdint>
#include <variant>

namespace noma {

/// Fixed real channel gain |h| (AWGN-only runs).
struct AwgnFixedGain {
    double gain;
};

/// Flat Rayleigh fading with E[|h|^2] = mean_power; a fresh h per symbol.
struct RayleighFlat {
    double mean_power;
};

using ChannelModel = std::variant<AwgnFixedGain, RayleighFlat>;

/// One-sided noise spectral density N0; per-quadrature variance N0/2.
struct NoiseModel {
    double n0;
};

struct SimConfig {
    std::uint64_t trials;
    std::uint64_t seed;
    std::uint64_t batch_size;    // trials per independent RNG substream
    unsigned worker_count = 1;   // never affects results
};

struct BerEstimate {
    std::uint64_t bit_errors;
    std::uint64_t bits_tested;
    double ber;
    double std_error;
};

struct TrialOutcome {
    bool fu_bit_error_at_fu;
    unsigned nu_bit_errors;             // 0..2
    bool fu_detected_correctly_at_nu;   // class membership
};

struct SimResult {
    BerEstimate fu;
    BerEstimate nu;
    BerEstimate nu_class1;  // NU bit errors on trials with correct FU decision
    BerEstimate nu_class2;  // NU bit errors on trials with erroneous FU decision
};

/// Fixed gain for AwgnFixedGain; circularly symmetric complex Gaussian with
/// E[|h|^2] = mean_power for RayleighFlat.
std::complex<double> draw_channel(const ChannelModel& model, SplitMix64& rng);

/// map_symbol as a complex baseband sample.
std::complex<double> transmit(BitTriple bits, const PowerAllocation& alloc);

/// h*x + w, w circularly symmetric complex Gaussian, per-quadrature
/// variance N0/2.
std::complex<double> add_channel_and_noise(std::complex<double> x,
                                           std::complex<double> h,
                                           const NoiseModel& noise,
                                           SplitMix64& rng);

/// Far-user ML detector: rotate by conj(h)/|h|, threshold in-phase at 0.
/// Positive -> bit 1; exact zero ties break to bit 0.
std::uint8_t detect_fu(std::complex<double> y, std::complex<double> h,
                       const PowerAllocation& alloc);

struct NuDecision {
    std::uint8_t in_phase_bit;
    std::uint8_t quadrature_bit;
    std::uint8_t fu_bit_hat;  // intermediate FU decision during SIC
};

/// Near-user SIC detector: detect the FU bit, subtract h * (+-sqrt(eps2)),
/// then slice the residual with the map_symbol sign conventions inverted.
NuDecision detect_nu_sic(std::complex<double> y, std::complex<double> h,
                         const PowerAllocation& alloc);

/// Runs config.trials independent trials with genie CSI at both receivers.
/// FU BER counts detect_fu errors (1 bit/trial); NU BER counts detect_nu_sic
/// errors (2 bits/trial); the class estimates partition NU errors by the
/// intermediate FU decision, both normalized by total NU bits so that
/// nu_class1.ber + nu_class2.ber == nu.ber exactly. Deterministic for fixed
/// (trials, seed, batch_size), independent of worker_count.
SimResult simulate_ber(const PowerAllocation& alloc,
                       const ChannelModel& channel, const NoiseModel& noise,
                       const SimConfig& config);

/// Per-user channel statistics (each user sees its own fade of the same
/// transmitted symbol).
SimResult simulate_ber(const PowerAllocation& alloc,
                       const ChannelModel& channel_fu,
                       const ChannelModel& channel_nu,
                       const NoiseModel& noise, const SimConfig& config);

/// Serial reference path, no OpenMP; must produce counts identical to
/// simulate_ber for any worker_count.
SimResult simulate_ber_serial(const PowerAllocation& alloc,
                              const ChannelModel& channel_fu,
                              const ChannelModel& channel_nu,
                              const NoiseModel& noise,
                              const SimConfig& config);

}  // namespace noma

#endif
