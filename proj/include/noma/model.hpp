#ifndef NOMA_MODEL_HPP
#define NOMA_MODEL_HPP

#include <array>
#include <cstdint>

namespace noma {

/// Two-user power split: eps1 = alpha * total_power goes to the near user
/// (QPSK), eps2 = total_power - eps1 to the far user (BPSK). The far user
/// always gets the larger share (alpha < 0.5).
struct PowerAllocation {
    double alpha;
    double total_power;
    double eps1;
    double eps2;
};

/// Builds a PowerAllocation, rejecting alpha outside (0, 0.5) and
/// non-positive power.
PowerAllocation allocate_power(double alpha, double total_power);

/// Same arithmetic but only requires constellation validity (alpha < 2/3).
/// For degenerate-alpha regression runs; not part of the normal API surface.
PowerAllocation allocate_power_unchecked(double alpha, double total_power);

/// One superposed symbol's worth of bits. in_phase_bit and quadrature_bit
/// belong to the near user's QPSK symbol, fu_bit to the far user's BPSK
/// symbol. Symbol labels print as (q i, f) with the quadrature bit first.
struct BitTriple {
    std::uint8_t in_phase_bit;
    std::uint8_t quadrature_bit;
    std::uint8_t fu_bit;
};

/// All 8 bit triples in label order 0..7 (fu in the LSB, then in-phase, then
/// quadrature).
std::array<BitTriple, 8> all_bit_triples();

struct ConstellationPoint {
    double in_phase;
    double quadrature;
};

/// Maps a bit triple onto the 8-point superposed constellation:
///   in_phase   = (fu_bit ? +1 : -1) * sqrt(eps2)
///              + (in_phase_bit ? -1 : +1) * sqrt(eps1 / 2)
///   quadrature = (quadrature_bit ? -1 : +1) * sqrt(eps1 / 2)
ConstellationPoint map_symbol(BitTriple bits, const PowerAllocation& alloc);

/// The seven effective SNR parameters. Instantaneous (built from |h|^2) or
/// mean values (built from E[|h|^2]); same formulas either way.
struct EffectiveSnrSet {
    double gamma_a;
    double gamma_b;
    double gamma_c;
    double gamma_d;
    double gamma_e;
    double gamma_f;
    double gamma_g;
};

/// gamma_a = (sqrt(eps2) - sqrt(eps1/2))^2 |h|^2 / (N0/2)
/// gamma_b = (sqrt(eps2) + sqrt(eps1/2))^2 |h|^2 / (N0/2)
/// gamma_c = eps1 |h|^2 / N0
/// gamma_d = gamma_b, gamma_e = gamma_a (same amplitudes, near-user channel)
/// gamma_f = (2 sqrt(eps2) + sqrt(eps1/2))^2 |h|^2 / (N0/2)
/// gamma_g = (2 sqrt(eps2) - sqrt(eps1/2))^2 |h|^2 / (N0/2)
EffectiveSnrSet effective_snrs(const PowerAllocation& alloc,
                               double channel_power, double n0);

/// Mean effective SNRs: |h|^2 replaced by E[|h|^2]. Each gamma is a fixed
/// multiple of |h|^2, so it is exponential with this mean under Rayleigh
/// fading.
EffectiveSnrSet mean_effective_snrs(const PowerAllocation& alloc,
                                    double mean_channel_power, double n0);

}  // namespace noma

#endif
