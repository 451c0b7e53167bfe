#include "noma/link_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace noma {

namespace {

struct Counts {
    std::uint64_t fu_errors = 0;
    std::uint64_t nu_errors = 0;
    std::uint64_t nu_class1_errors = 0;
    std::uint64_t nu_class2_errors = 0;
};

BerEstimate make_estimate(std::uint64_t errors, std::uint64_t bits) {
    BerEstimate e;
    e.bit_errors = errors;
    e.bits_tested = bits;
    e.ber = static_cast<double>(errors) / static_cast<double>(bits);
    e.std_error = std::sqrt(e.ber * (1.0 - e.ber) / static_cast<double>(bits));
    return e;
}

// Draw order per trial is fixed: bits, h_fu, h_nu, w_fu, w_nu.
Counts run_batch(const PowerAllocation& alloc, const ChannelModel& channel_fu,
                 const ChannelModel& channel_nu, const NoiseModel& noise,
                 std::uint64_t seed, std::uint64_t batch_index,
                 std::uint64_t batch_trials) {
    SplitMix64 rng(seed, batch_index);
    Counts c;
    for (std::uint64_t t = 0; t < batch_trials; ++t) {
        const std::uint64_t word = rng.next_u64();
        BitTriple bits;
        bits.fu_bit = static_cast<std::uint8_t>(word & 1);
        bits.in_phase_bit = static_cast<std::uint8_t>((word >> 1) & 1);
        bits.quadrature_bit = static_cast<std::uint8_t>((word >> 2) & 1);

        const std::complex<double> x = transmit(bits, alloc);
        const std::complex<double> h_fu = draw_channel(channel_fu, rng);
        const std::complex<double> h_nu = draw_channel(channel_nu, rng);
        const std::complex<double> y_fu =
            add_channel_and_noise(x, h_fu, noise, rng);
        const std::complex<double> y_nu =
            add_channel_and_noise(x, h_nu, noise, rng);

        if (detect_fu(y_fu, h_fu, alloc) != bits.fu_bit) {
            ++c.fu_errors;
        }
        const NuDecision d = detect_nu_sic(y_nu, h_nu, alloc);
        const unsigned nu_err = (d.in_phase_bit != bits.in_phase_bit ? 1u : 0u) +
                                (d.quadrature_bit != bits.quadrature_bit ? 1u : 0u);
        c.nu_errors += nu_err;
        if (d.fu_bit_hat == bits.fu_bit) {
            c.nu_class1_errors += nu_err;
        } else {
            c.nu_class2_errors += nu_err;
        }
    }
    return c;
}

SimResult finalize(const Counts& c, std::uint64_t trials) {
    SimResult r;
    r.fu = make_estimate(c.fu_errors, trials);
    r.nu = make_estimate(c.nu_errors, 2 * trials);
    r.nu_class1 = make_estimate(c.nu_class1_errors, 2 * trials);
    r.nu_class2 = make_estimate(c.nu_class2_errors, 2 * trials);
    return r;
}

void check_config(const SimConfig& config) {
    if (config.trials == 0) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (config.batch_size == 0 || config.batch_size > config.trials) {
        throw std::invalid_argument("batch_size must be in [1, trials]");
    }
}

}  // namespace

std::complex<double> draw_channel(const ChannelModel& model, SplitMix64& rng) {
    if (const auto* awgn = std::get_if<AwgnFixedGain>(&model)) {
        if (!(awgn->gain >= 0.0)) {
            throw std::domain_error("AwgnFixedGain.gain must be >= 0");
        }
        return {awgn->gain, 0.0};
    }
    const auto& ray = std::get<RayleighFlat>(model);
    if (!(ray.mean_power > 0.0)) {
        throw std::domain_error("RayleighFlat.mean_power must be > 0");
    }
    const auto [z1, z2] = rng.next_normal_pair();
    const double s = std::sqrt(ray.mean_power / 2.0);
    return {s * z1, s * z2};
}

std::complex<double> transmit(BitTriple bits, const PowerAllocation& alloc) {
    const ConstellationPoint p = map_symbol(bits, alloc);
    return {p.in_phase, p.quadrature};
}

std::complex<double> add_channel_and_noise(std::complex<double> x,
                                           std::complex<double> h,
                                           const NoiseModel& noise,
                                           SplitMix64& rng) {
    if (!(noise.n0 > 0.0)) {
        throw std::domain_error("n0 must be positive");
    }
    const auto [z1, z2] = rng.next_normal_pair();
    const double s = std::sqrt(noise.n0 / 2.0);
    return h * x + std::complex<double>(s * z1, s * z2);
}

std::uint8_t detect_fu(std::complex<double> y, std::complex<double> h,
                       const PowerAllocation& alloc) {
    (void)alloc;  // threshold at 0 needs no amplitude knowledge
    const double habs = std::abs(h);
    if (habs == 0.0) {
        throw std::domain_error("detect_fu: channel gain is zero");
    }
    const std::complex<double> r = y * std::conj(h) / habs;
    return r.real() > 0.0 ? 1 : 0;
}

NuDecision detect_nu_sic(std::complex<double> y, std::complex<double> h,
                         const PowerAllocation& alloc) {
    const double habs = std::abs(h);
    if (habs == 0.0) {
        throw std::domain_error("detect_nu_sic: channel gain is zero");
    }
    NuDecision d;
    d.fu_bit_hat = detect_fu(y, h, alloc);
    const double fu_amp = std::sqrt(alloc.eps2);
    const std::complex<double> residual =
        y - h * std::complex<double>(d.fu_bit_hat ? fu_amp : -fu_amp, 0.0);
    const std::complex<double> r = residual * std::conj(h) / habs;
    // map_symbol puts bit 0 on the positive side of both residual axes
    d.in_phase_bit = r.real() > 0.0 ? 0 : 1;
    d.quadrature_bit = r.imag() > 0.0 ? 0 : 1;
    return d;
}

SimResult simulate_ber(const PowerAllocation& alloc,
                       const ChannelModel& channel_fu,
                       const ChannelModel& channel_nu,
                       const NoiseModel& noise, const SimConfig& config) {
    check_config(config);
    const std::uint64_t n_batches =
        (config.trials + config.batch_size - 1) / config.batch_size;

    std::uint64_t fu_errors = 0;
    std::uint64_t nu_errors = 0;
    std::uint64_t c1_errors = 0;
    std::uint64_t c2_errors = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    num_threads(static_cast<int>(config.worker_count)) \
    reduction(+ : fu_errors, nu_errors, c1_errors, c2_errors)
#endif
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(n_batches); ++b) {
        const std::uint64_t start = static_cast<std::uint64_t>(b) * config.batch_size;
        const std::uint64_t batch_trials =
            std::min(config.batch_size, config.trials - start);
        const Counts c = run_batch(alloc, channel_fu, channel_nu, noise,
                                   config.seed, static_cast<std::uint64_t>(b),
                                   batch_trials);
        fu_errors += c.fu_errors;
        nu_errors += c.nu_errors;
        c1_errors += c.nu_class1_errors;
        c2_errors += c.nu_class2_errors;
    }
    return finalize({fu_errors, nu_errors, c1_errors, c2_errors}, config.trials);
}

SimResult simulate_ber(const PowerAllocation& alloc,
                       const ChannelModel& channel, const NoiseModel& noise,
                       const SimConfig& config) {
    return simulate_ber(alloc, channel, channel, noise, config);
}

SimResult simulate_ber_serial(const PowerAllocation& alloc,
                              const ChannelModel& channel_fu,
                              const ChannelModel& channel_nu,
                              const NoiseModel& noise,
                              const SimConfig& config) {
    check_config(config);
    const std::uint64_t n_batches =
        (config.trials + config.batch_size - 1) / config.batch_size;
    Counts total;
    for (std::uint64_t b = 0; b < n_batches; ++b) {
        const std::uint64_t start = b * config.batch_size;
        const std::uint64_t batch_trials =
            std::min(config.batch_size, config.trials - start);
        const Counts c = run_batch(alloc, channel_fu, channel_nu, noise,
                                   config.seed, b, batch_trials);
        total.fu_errors += c.fu_errors;
        total.nu_errors += c.nu_errors;
        total.nu_class1_errors += c.nu_class1_errors;
        total.nu_class2_errors += c.nu_class2_errors;
    }
    return finalize(total, config.trials);
}

}  // namespace noma
