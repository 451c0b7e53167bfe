#include "noma/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace noma {

namespace {

PowerAllocation build(double alpha, double total_power) {
    if (!(total_power > 0.0) || !std::isfinite(total_power)) {
        throw std::domain_error("total_power must be positive and finite");
    }
    PowerAllocation a;
    a.alpha = alpha;
    a.total_power = total_power;
    a.eps1 = alpha * total_power;
    a.eps2 = total_power - a.eps1;  // exact conservation
    return a;
}

}  // namespace

PowerAllocation allocate_power(double alpha, double total_power) {
    if (!(alpha > 0.0 && alpha < 0.5)) {
        std::ostringstream msg;
        msg << "alpha must be in (0, 0.5) so the far user gets the larger "
               "power share; got "
            << alpha;
        throw std::domain_error(msg.str());
    }
    return build(alpha, total_power);
}

PowerAllocation allocate_power_unchecked(double alpha, double total_power) {
    if (!(alpha > 0.0 && alpha < 2.0 / 3.0)) {
        std::ostringstream msg;
        msg << "alpha must be in (0, 2/3) for a valid constellation; got "
            << alpha;
        throw std::domain_error(msg.str());
    }
    return build(alpha, total_power);
}

std::array<BitTriple, 8> all_bit_triples() {
    std::array<BitTriple, 8> out;
    for (int i = 0; i < 8; ++i) {
        out[i].fu_bit = static_cast<std::uint8_t>(i & 1);
        out[i].in_phase_bit = static_cast<std::uint8_t>((i >> 1) & 1);
        out[i].quadrature_bit = static_cast<std::uint8_t>((i >> 2) & 1);
    }
    return out;
}

ConstellationPoint map_symbol(BitTriple bits, const PowerAllocation& alloc) {
    const double fu_amp = std::sqrt(alloc.eps2);
    const double nu_amp = std::sqrt(alloc.eps1 / 2.0);
    ConstellationPoint p;
    p.in_phase = (bits.fu_bit ? fu_amp : -fu_amp) +
                 (bits.in_phase_bit ? -nu_amp : nu_amp);
    p.quadrature = bits.quadrature_bit ? -nu_amp : nu_amp;
    return p;
}

EffectiveSnrSet effective_snrs(const PowerAllocation& alloc,
                               double channel_power, double n0) {
    if (!(n0 > 0.0)) {
        throw std::domain_error("n0 must be positive");
    }
    if (!(channel_power >= 0.0)) {
        throw std::domain_error("channel_power must be non-negative");
    }
    const double fu_amp = std::sqrt(alloc.eps2);
    const double nu_amp = std::sqrt(alloc.eps1 / 2.0);
    const double scale = channel_power / (n0 / 2.0);
    auto g = [&](double amp) { return amp * amp * scale; };

    EffectiveSnrSet s;
    s.gamma_a = g(fu_amp - nu_amp);
    s.gamma_b = g(fu_amp + nu_amp);
    s.gamma_c = alloc.eps1 * channel_power / n0;
    s.gamma_d = g(fu_amp + nu_amp);
    s.gamma_e = g(fu_amp - nu_amp);
    s.gamma_f = g(2.0 * fu_amp + nu_amp);
    s.gamma_g = g(2.0 * fu_amp - nu_amp);
    return s;
}

EffectiveSnrSet mean_effective_snrs(const PowerAllocation& alloc,
                                    double mean_channel_power, double n0) {
    if (!(mean_channel_power > 0.0)) {
        throw std::domain_error("mean_channel_power must be positive");
    }
    return effective_snrs(alloc, mean_channel_power, n0);
}

}  // namespace noma
