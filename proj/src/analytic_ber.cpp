#include "noma/analytic_ber.hpp"

#include "noma/special_math.hpp"

#include <cassert>
#include <cmath>

namespace noma {

namespace {

double q_sqrt(double gamma) { return q_func(std::sqrt(gamma)); }

double rq(double gamma_bar) { return rayleigh_q_average({gamma_bar}); }

}  // namespace

SymbolClass classify_symbol(BitTriple bits) {
    if (bits.fu_bit == 0) {
        return bits.in_phase_bit == 0 ? SymbolClass::InnerNegative
                                      : SymbolClass::OuterNegative;
    }
    return bits.in_phase_bit == 1 ? SymbolClass::InnerPositive
                                  : SymbolClass::OuterPositive;
}

double fu_conditional_error(SymbolClass cls, const EffectiveSnrSet& snrs) {
    switch (cls) {
        case SymbolClass::InnerNegative:
        case SymbolClass::InnerPositive:
            return q_sqrt(snrs.gamma_a);
        case SymbolClass::OuterNegative:
        case SymbolClass::OuterPositive:
            return q_sqrt(snrs.gamma_b);
    }
    return 0.0;  // unreachable
}

double fu_ber_awgn(const EffectiveSnrSet& snrs) {
    return 0.5 * (q_sqrt(snrs.gamma_a) + q_sqrt(snrs.gamma_b));
}

double fu_ber_rayleigh(const EffectiveSnrSet& mean_snrs) {
    return 0.5 * (rq(mean_snrs.gamma_a) + rq(mean_snrs.gamma_b));
}

double nu_ber_awgn_correct_fu(const EffectiveSnrSet& snrs) {
    const double qc = q_sqrt(snrs.gamma_c);
    const double qd = q_sqrt(snrs.gamma_d);
    const double qe = q_sqrt(snrs.gamma_e);
    return 0.25 * (qc * (4.0 - qd - qe) - qd);
}

double nu_ber_awgn_error_fu(const EffectiveSnrSet& snrs) {
    const double qc = q_sqrt(snrs.gamma_c);
    const double qd = q_sqrt(snrs.gamma_d);
    const double qe = q_sqrt(snrs.gamma_e);
    const double qf = q_sqrt(snrs.gamma_f);
    const double qg = q_sqrt(snrs.gamma_g);
    return 0.25 * (qf + qe - qg + qc * (qd + qe));
}

NuBerBreakdown nu_ber_awgn(const EffectiveSnrSet& snrs) {
    NuBerBreakdown b;
    b.correct_fu = nu_ber_awgn_correct_fu(snrs);
    b.error_fu = nu_ber_awgn_error_fu(snrs);
    b.total = q_sqrt(snrs.gamma_c) +
              0.25 * (q_sqrt(snrs.gamma_f) + q_sqrt(snrs.gamma_e) -
                      q_sqrt(snrs.gamma_d) - q_sqrt(snrs.gamma_g));
    // The Q(gc)Q(gd) and Q(gc)Q(ge) cross terms cancel between the classes.
    assert(std::abs(b.total - (b.correct_fu + b.error_fu)) <= 1e-12);
    return b;
}

double nu_ber_rayleigh(const EffectiveSnrSet& mean_snrs) {
    auto s = [](double gb) { return std::sqrt(gb / (gb + 2.0)); };
    return 0.5 * (1.0 - s(mean_snrs.gamma_c)) +
           0.125 * (s(mean_snrs.gamma_d) + s(mean_snrs.gamma_g) -
                    s(mean_snrs.gamma_e) - s(mean_snrs.gamma_f));
}

}  // namespace noma
