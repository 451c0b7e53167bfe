// noma-ber: closed-form BER curves for a two-user downlink NOMA link
// (far user BPSK, near user QPSK with SIC) cross-checked against a seeded
// Monte Carlo simulator.

#include "noma/analytic_ber.hpp"
#include "noma/link_sim.hpp"
#include "noma/model.hpp"
#include "noma/special_math.hpp"
#include "noma/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

namespace {

struct CommonOpts {
    noma::SweepSpec spec;
    std::string channel_name = "rayleigh";
    std::string format_name = "csv";
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--alpha", o.spec.alpha, "Power allocation factor, (0, 0.5)");
    cmd->add_option("--power", o.spec.total_power, "Total transmit power P_s (linear)");
    cmd->add_option("--channel", o.channel_name, "Channel model")
        ->check(CLI::IsMember({"awgn", "rayleigh"}));
    cmd->add_option("--gain", o.spec.fixed_gain, "Fixed |h| (awgn only)");
    cmd->add_option("--mean-power-nu", o.spec.mean_power_nu,
                    "E[|h|^2] for the near user (rayleigh only)");
    cmd->add_option("--mean-power-fu", o.spec.mean_power_fu,
                    "E[|h|^2] for the far user (rayleigh only)");
    cmd->add_option("--trials", o.spec.trials, "Monte Carlo trials per point");
    cmd->add_option("--seed", o.spec.seed, "RNG seed");
    cmd->add_option("--workers", o.spec.workers, "Simulation threads");
    cmd->add_flag("--allow-degenerate-alpha", o.spec.allow_degenerate_alpha)
        ->group("");  // test-only bypass, hidden from --help
}

int run_sweep_cmd(CommonOpts& o) {
    o.spec.channel = o.channel_name == "awgn" ? noma::ChannelKind::Awgn
                                              : noma::ChannelKind::Rayleigh;
    o.spec.format = o.format_name == "json" ? noma::OutputFormat::Json
                                            : noma::OutputFormat::Csv;
    const auto errors = noma::validate_spec(o.spec);
    if (!errors.empty()) {
        for (const auto& e : errors) {
            std::cerr << "error: " << e << "\n";
        }
        return 1;
    }
    const auto rows = noma::run_sweep(o.spec);
    if (o.spec.output_path.empty()) {
        std::cout << (o.spec.format == noma::OutputFormat::Csv
                          ? noma::format_rows_csv(rows)
                          : noma::format_rows_json(rows, o.spec));
    } else {
        noma::write_output(rows, o.spec);
    }
    return 0;
}

int run_point_cmd(CommonOpts& o, double snr_db) {
    o.spec.channel = o.channel_name == "awgn" ? noma::ChannelKind::Awgn
                                              : noma::ChannelKind::Rayleigh;
    o.spec.snr_db_start = o.spec.snr_db_stop = snr_db;
    o.spec.snr_db_step = 1.0;
    const auto errors = noma::validate_spec(o.spec);
    if (!errors.empty()) {
        for (const auto& e : errors) {
            std::cerr << "error: " << e << "\n";
        }
        return 1;
    }

    const noma::PowerAllocation alloc =
        o.spec.allow_degenerate_alpha
            ? noma::allocate_power_unchecked(o.spec.alpha, o.spec.total_power)
            : noma::allocate_power(o.spec.alpha, o.spec.total_power);
    const double n0 = o.spec.total_power / std::pow(10.0, snr_db / 10.0);

    std::cout << "alpha=" << alloc.alpha << " P_s=" << alloc.total_power
              << " eps1=" << alloc.eps1 << " eps2=" << alloc.eps2
              << " N0=" << n0 << "\n";

    const bool awgn = o.spec.channel == noma::ChannelKind::Awgn;
    const double ch_fu =
        awgn ? o.spec.fixed_gain * o.spec.fixed_gain : o.spec.mean_power_fu;
    const double ch_nu =
        awgn ? o.spec.fixed_gain * o.spec.fixed_gain : o.spec.mean_power_nu;
    const noma::EffectiveSnrSet s_fu = noma::effective_snrs(alloc, ch_fu, n0);
    const noma::EffectiveSnrSet s_nu = noma::effective_snrs(alloc, ch_nu, n0);

    std::cout << (awgn ? "effective SNRs" : "mean effective SNRs")
              << " (FU channel): gamma_a=" << s_fu.gamma_a
              << " gamma_b=" << s_fu.gamma_b << "\n"
              << (awgn ? "effective SNRs" : "mean effective SNRs")
              << " (NU channel): gamma_c=" << s_nu.gamma_c
              << " gamma_d=" << s_nu.gamma_d << " gamma_e=" << s_nu.gamma_e
              << " gamma_f=" << s_nu.gamma_f << " gamma_g=" << s_nu.gamma_g
              << "\n";

    double fu_analytic;
    double nu_analytic;
    if (awgn) {
        fu_analytic = noma::fu_ber_awgn(s_fu);
        const noma::NuBerBreakdown b = noma::nu_ber_awgn(s_nu);
        nu_analytic = b.total;
        std::cout << "analytic NU breakdown: class1=" << b.correct_fu
                  << " class2=" << b.error_fu << "\n";
    } else {
        fu_analytic = noma::fu_ber_rayleigh(s_fu);
        nu_analytic = noma::nu_ber_rayleigh(s_nu);
    }
    std::cout << "analytic: fu_ber=" << fu_analytic
              << " nu_ber=" << nu_analytic << "\n";

    noma::ChannelModel channel_fu{noma::AwgnFixedGain{o.spec.fixed_gain}};
    noma::ChannelModel channel_nu{noma::AwgnFixedGain{o.spec.fixed_gain}};
    if (!awgn) {
        channel_fu = noma::RayleighFlat{o.spec.mean_power_fu};
        channel_nu = noma::RayleighFlat{o.spec.mean_power_nu};
    }
    noma::SimConfig config{o.spec.trials, o.spec.seed,
                           std::min<std::uint64_t>(o.spec.batch_size, o.spec.trials),
                           o.spec.workers};
    const noma::SimResult sim =
        noma::simulate_ber(alloc, channel_fu, channel_nu, {n0}, config);
    std::cout << "simulated: fu_ber=" << sim.fu.ber << " (+-" << sim.fu.std_error
              << ") nu_ber=" << sim.nu.ber << " (+-" << sim.nu.std_error
              << ") nu_class1=" << sim.nu_class1.ber
              << " nu_class2=" << sim.nu_class2.ber << "\n";
    return 0;
}

int run_verify_cmd(unsigned workers) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) {
            ++failures;
        }
    };

    // Closed-form Rayleigh average vs quadrature.
    {
        bool ok = true;
        for (double gb : {0.01, 0.1, 1.0, 2.0, 10.0, 100.0, 1e4}) {
            const double closed = noma::rayleigh_q_average({gb});
            const double quad = noma::quadrature_expectation(
                [](double g) { return noma::q_func(std::sqrt(g)); }, {gb});
            ok = ok && std::abs(closed - quad) <= 1e-9;
        }
        check(ok, "rayleigh_q_average vs quadrature");
    }

    // Antiderivative identity against its own derivative structure.
    {
        bool ok = true;
        for (double alpha : {0.25, 1.0, 4.0}) {
            const double definite = noma::erfc_exp_antiderivative(1e308, alpha) -
                                    noma::erfc_exp_antiderivative(0.0, alpha);
            const double expected =
                alpha * (1.0 - std::sqrt(alpha / (alpha + 1.0)));
            ok = ok && std::abs(definite - expected) <= 1e-12;
        }
        check(ok, "erfc antiderivative limits");
    }

    // Degenerate reduction to BPSK.
    {
        const auto alloc = noma::allocate_power_unchecked(1e-9, 1.0);
        bool ok = true;
        for (double snr_db = 0.0; snr_db <= 30.0; snr_db += 5.0) {
            const double n0 = std::pow(10.0, -snr_db / 10.0);
            const double got =
                noma::fu_ber_rayleigh(noma::mean_effective_snrs(alloc, 1.0, n0));
            const double gb = 2.0 * alloc.eps2 / n0;
            const double want = 0.5 * (1.0 - std::sqrt(gb / (gb + 2.0)));
            ok = ok && std::abs(got - want) <= 1e-6;
        }
        check(ok, "BPSK degenerate reduction");
    }

    // Monte Carlo vs closed forms, fixed seeds.
    {
        const auto alloc = noma::allocate_power(0.2, 1.0);
        bool ok = true;
        for (double snr_db : {0.0, 6.0, 12.0}) {
            const double n0 = std::pow(10.0, -snr_db / 10.0);
            noma::SimConfig config{1000000, 9001, 65536, workers};
            const auto sim = noma::simulate_ber(
                alloc, noma::ChannelModel{noma::AwgnFixedGain{1.0}}, {n0},
                config);
            const auto snrs = noma::effective_snrs(alloc, 1.0, n0);
            ok = ok && std::abs(sim.fu.ber - noma::fu_ber_awgn(snrs)) <=
                           3.0 * sim.fu.std_error;
            ok = ok && std::abs(sim.nu.ber - noma::nu_ber_awgn(snrs).total) <=
                           3.0 * sim.nu.std_error;
        }
        check(ok, "AWGN Monte Carlo vs analytic");
    }
    {
        const auto alloc = noma::allocate_power(0.2, 1.0);
        bool ok = true;
        for (double snr_db : {5.0, 15.0}) {
            const double n0 = std::pow(10.0, -snr_db / 10.0);
            noma::SimConfig config{1000000, 777, 65536, workers};
            const auto sim = noma::simulate_ber(
                alloc, noma::ChannelModel{noma::RayleighFlat{1.0}}, {n0},
                config);
            const auto means = noma::mean_effective_snrs(alloc, 1.0, n0);
            ok = ok && std::abs(sim.fu.ber - noma::fu_ber_rayleigh(means)) <=
                           3.0 * sim.fu.std_error;
            ok = ok && std::abs(sim.nu.ber - noma::nu_ber_rayleigh(means)) <=
                           3.0 * sim.nu.std_error;
        }
        check(ok, "Rayleigh Monte Carlo vs analytic");
    }

    if (failures != 0) {
        std::cerr << failures << " verification check(s) failed\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-user downlink NOMA BER: closed forms vs Monte Carlo"};
    app.require_subcommand(1);

    CommonOpts sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "BER vs SNR sweep");
    add_common_flags(sweep, sweep_opts);
    sweep->add_option("--snr-start", sweep_opts.spec.snr_db_start, "P_s/N0 start (dB)");
    sweep->add_option("--snr-stop", sweep_opts.spec.snr_db_stop, "P_s/N0 stop (dB)");
    sweep->add_option("--snr-step", sweep_opts.spec.snr_db_step, "Step (dB)");
    sweep->add_option("--out", sweep_opts.spec.output_path, "Output file (stdout if omitted)");
    sweep->add_option("--format", sweep_opts.format_name, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CommonOpts point_opts;
    double point_snr_db = 10.0;
    CLI::App* point = app.add_subcommand(
        "point", "Single operating point with full breakdown");
    add_common_flags(point, point_opts);
    point->add_option("--snr", point_snr_db, "P_s/N0 (dB)");

    unsigned verify_workers = 1;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the oracle suite (closed forms vs quadrature and Monte Carlo)");
    verify->add_option("--workers", verify_workers, "Simulation threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            return run_sweep_cmd(sweep_opts);
        }
        if (point->parsed()) {
            return run_point_cmd(point_opts, point_snr_db);
        }
        return run_verify_cmd(verify_workers);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
