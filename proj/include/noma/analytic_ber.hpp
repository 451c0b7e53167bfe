#ifndef NOMA_ANALYTIC_BER_HPP
#define NOMA_ANALYTIC_BER_HPP

#include "noma/model.hpp"

namespace noma {

/// The four in-phase level pairs of the superposed constellation, as seen by
/// the far-user detector. Inner levels sit at distance sqrt(eps2)-sqrt(eps1/2)
/// from the decision boundary, outer levels at sqrt(eps2)+sqrt(eps1/2).
enum class SymbolClass {
    InnerNegative,  // (10,0), (00,0)
    OuterNegative,  // (01,0), (11,0)
    InnerPositive,  // (01,1), (11,1)
    OuterPositive,  // (00,1), (10,1)
};

SymbolClass classify_symbol(BitTriple bits);

/// Far-user bit error probability conditioned on the transmitted level pair:
/// Q(sqrt(gamma_a)) for inner levels, Q(sqrt(gamma_b)) for outer levels.
double fu_conditional_error(SymbolClass cls, const EffectiveSnrSet& snrs);

/// Far-user BER at fixed channel gain:
/// 0.5 * [Q(sqrt(gamma_a)) + Q(sqrt(gamma_b))].
double fu_ber_awgn(const EffectiveSnrSet& snrs);

/// Far-user BER averaged over Rayleigh fading, from mean effective SNRs:
/// 0.25 * [(1 - sqrt(ga/(ga+2))) + (1 - sqrt(gb/(gb+2)))].
double fu_ber_rayleigh(const EffectiveSnrSet& mean_snrs);

/// Near-user BER split by whether the far-user bit was detected correctly
/// during interference cancellation (class I) or not (class II).
struct NuBerBreakdown {
    double correct_fu;
    double error_fu;
    double total;
};

/// Class I: 0.25 * [Q(sqrt(gc)) * (4 - Q(sqrt(gd)) - Q(sqrt(ge))) - Q(sqrt(gd))].
double nu_ber_awgn_correct_fu(const EffectiveSnrSet& snrs);

/// Class II: 0.25 * [Q(sqrt(gf)) + Q(sqrt(ge)) - Q(sqrt(gg))
///                   + Q(sqrt(gc)) * (Q(sqrt(gd)) + Q(sqrt(ge)))].
double nu_ber_awgn_error_fu(const EffectiveSnrSet& snrs);

/// Combined near-user BER at fixed channel gain. The cross products
/// Q(gc)*Q(gd) and Q(gc)*Q(ge) cancel between the two classes, leaving
/// total = Q(sqrt(gc)) + 0.25 * [Q(sqrt(gf)) + Q(sqrt(ge))
///                               - Q(sqrt(gd)) - Q(sqrt(gg))].
NuBerBreakdown nu_ber_awgn(const EffectiveSnrSet& snrs);

/// Near-user BER averaged over Rayleigh fading, from mean effective SNRs:
/// 0.5 * (1 - sqrt(gc/(gc+2)))
/// + 0.125 * [sqrt(gd/(gd+2)) + sqrt(gg/(gg+2))
///            - sqrt(ge/(ge+2)) - sqrt(gf/(gf+2))].
double nu_ber_rayleigh(const EffectiveSnrSet& mean_snrs);

}  // namespace noma

#endif
