#include "noma/sweep.hpp"

#include "noma/analytic_ber.hpp"
#include "noma/link_sim.hpp"
#include "noma/model.hpp"
#include "noma/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace noma {

namespace {

std::string format_double(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double agreement_sigma(double analytic, double sim, double stderr_) {
    if (stderr_ == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::abs(analytic - sim) / stderr_;
}

nlohmann::json number_or_inf(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

}  // namespace

std::vector<std::string> validate_spec(const SweepSpec& spec) {
    std::vector<std::string> errors;
    auto fail = [&](const std::string& msg) { errors.push_back(msg); };

    if (!spec.allow_degenerate_alpha &&
        !(spec.alpha > 0.0 && spec.alpha < 0.5)) {
        std::ostringstream msg;
        msg << "alpha must be in (0, 0.5); got " << spec.alpha;
        fail(msg.str());
    }
    if (spec.allow_degenerate_alpha &&
        !(spec.alpha > 0.0 && spec.alpha < 2.0 / 3.0)) {
        std::ostringstream msg;
        msg << "alpha must be in (0, 2/3) even with the degenerate bypass; got "
            << spec.alpha;
        fail(msg.str());
    }
    if (!(spec.total_power > 0.0)) {
        std::ostringstream msg;
        msg << "power must be > 0; got " << spec.total_power;
        fail(msg.str());
    }
    if (!(spec.snr_db_step > 0.0)) {
        std::ostringstream msg;
        msg << "snr-step must be > 0; got " << spec.snr_db_step;
        fail(msg.str());
    }
    if (!(spec.snr_db_stop >= spec.snr_db_start)) {
        std::ostringstream msg;
        msg << "snr-stop must be >= snr-start; got [" << spec.snr_db_start
            << ", " << spec.snr_db_stop << "]";
        fail(msg.str());
    }
    if (spec.trials < 1000) {
        std::ostringstream msg;
        msg << "trials must be >= 1000; got " << spec.trials;
        fail(msg.str());
    }
    if (spec.channel == ChannelKind::Awgn && !(spec.fixed_gain > 0.0)) {
        std::ostringstream msg;
        msg << "gain must be > 0; got " << spec.fixed_gain;
        fail(msg.str());
    }
    if (spec.channel == ChannelKind::Rayleigh) {
        if (!(spec.mean_power_nu > 0.0)) {
            std::ostringstream msg;
            msg << "mean-power-nu must be > 0; got " << spec.mean_power_nu;
            fail(msg.str());
        }
        if (!(spec.mean_power_fu > 0.0)) {
            std::ostringstream msg;
            msg << "mean-power-fu must be > 0; got " << spec.mean_power_fu;
            fail(msg.str());
        }
    }
    if (spec.workers < 1) {
        fail("workers must be >= 1");
    }
    return errors;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const PowerAllocation alloc =
        spec.allow_degenerate_alpha
            ? allocate_power_unchecked(spec.alpha, spec.total_power)
            : allocate_power(spec.alpha, spec.total_power);

    const std::size_t n_points = static_cast<std::size_t>(
        std::floor((spec.snr_db_stop - spec.snr_db_start) / spec.snr_db_step +
                   1e-9)) + 1;

    std::vector<SweepRow> rows;
    rows.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double snr_db = spec.snr_db_start + static_cast<double>(i) * spec.snr_db_step;
        const double n0 = spec.total_power / std::pow(10.0, snr_db / 10.0);

        double fu_analytic = 0.0;
        double nu_analytic = 0.0;
        ChannelModel channel_fu{AwgnFixedGain{spec.fixed_gain}};
        ChannelModel channel_nu{AwgnFixedGain{spec.fixed_gain}};
        if (spec.channel == ChannelKind::Awgn) {
            const EffectiveSnrSet snrs = effective_snrs(
                alloc, spec.fixed_gain * spec.fixed_gain, n0);
            fu_analytic = fu_ber_awgn(snrs);
            nu_analytic = nu_ber_awgn(snrs).total;
        } else {
            fu_analytic = fu_ber_rayleigh(
                mean_effective_snrs(alloc, spec.mean_power_fu, n0));
            nu_analytic = nu_ber_rayleigh(
                mean_effective_snrs(alloc, spec.mean_power_nu, n0));
            channel_fu = RayleighFlat{spec.mean_power_fu};
            channel_nu = RayleighFlat{spec.mean_power_nu};
        }

        SimConfig config;
        config.trials = spec.trials;
        config.seed = SplitMix64(spec.seed, static_cast<std::uint64_t>(i)).next_u64();
        config.batch_size = std::min<std::uint64_t>(spec.batch_size, spec.trials);
        config.worker_count = spec.workers;
        const SimResult sim =
            simulate_ber(alloc, channel_fu, channel_nu, {n0}, config);

        SweepRow row;
        row.snr_db = snr_db;
        row.ber_fu_analytic = fu_analytic;
        row.ber_fu_sim = sim.fu.ber;
        row.ber_fu_sim_stderr = sim.fu.std_error;
        row.ber_nu_analytic = nu_analytic;
        row.ber_nu_sim = sim.nu.ber;
        row.ber_nu_sim_stderr = sim.nu.std_error;
        row.ber_nu_class1_sim = sim.nu_class1.ber;
        row.ber_nu_class2_sim = sim.nu_class2.ber;
        row.agreement_sigma_fu =
            agreement_sigma(fu_analytic, sim.fu.ber, sim.fu.std_error);
        row.agreement_sigma_nu =
            agreement_sigma(nu_analytic, sim.nu.ber, sim.nu.std_error);
        rows.push_back(row);
    }
    return rows;
}

std::string format_rows_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "snr_db,ber_fu_analytic,ber_fu_sim,ber_fu_sim_stderr,ber_nu_analytic,"
        "ber_nu_sim,ber_nu_sim_stderr,ber_nu_class1_sim,ber_nu_class2_sim,"
        "agreement_sigma_fu,agreement_sigma_nu\n";
    for (const SweepRow& r : rows) {
        out += format_double(r.snr_db) + ',' + format_double(r.ber_fu_analytic) +
               ',' + format_double(r.ber_fu_sim) + ',' +
               format_double(r.ber_fu_sim_stderr) + ',' +
               format_double(r.ber_nu_analytic) + ',' +
               format_double(r.ber_nu_sim) + ',' +
               format_double(r.ber_nu_sim_stderr) + ',' +
               format_double(r.ber_nu_class1_sim) + ',' +
               format_double(r.ber_nu_class2_sim) + ',' +
               format_double(r.agreement_sigma_fu) + ',' +
               format_double(r.agreement_sigma_nu) + '\n';
    }
    return out;
}

std::string format_rows_json(const std::vector<SweepRow>& rows,
                             const SweepSpec& spec) {
    nlohmann::json j;
    j["spec"] = {
        {"alpha", spec.alpha},
        {"total_power", spec.total_power},
        {"snr_db_start", spec.snr_db_start},
        {"snr_db_stop", spec.snr_db_stop},
        {"snr_db_step", spec.snr_db_step},
        {"channel", spec.channel == ChannelKind::Awgn ? "awgn" : "rayleigh"},
        {"fixed_gain", spec.fixed_gain},
        {"mean_power_nu", spec.mean_power_nu},
        {"mean_power_fu", spec.mean_power_fu},
        {"trials", spec.trials},
        {"seed", spec.seed},
        {"batch_size", spec.batch_size},
    };
    nlohmann::json jrows = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        jrows.push_back({
            {"snr_db", r.snr_db},
            {"ber_fu_analytic", r.ber_fu_analytic},
            {"ber_fu_sim", r.ber_fu_sim},
            {"ber_fu_sim_stderr", r.ber_fu_sim_stderr},
            {"ber_nu_analytic", r.ber_nu_analytic},
            {"ber_nu_sim", r.ber_nu_sim},
            {"ber_nu_sim_stderr", r.ber_nu_sim_stderr},
            {"ber_nu_class1_sim", r.ber_nu_class1_sim},
            {"ber_nu_class2_sim", r.ber_nu_class2_sim},
            {"agreement_sigma_fu", number_or_inf(r.agreement_sigma_fu)},
            {"agreement_sigma_nu", number_or_inf(r.agreement_sigma_nu)},
        });
    }
    j["rows"] = std::move(jrows);
    return j.dump(2) + "\n";
}

void write_output(const std::vector<SweepRow>& rows, const SweepSpec& spec) {
    if (rows.empty()) {
        throw std::invalid_argument("write_output: no rows");
    }
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + spec.output_path);
    }
    out << (spec.format == OutputFormat::Csv ? format_rows_csv(rows)
                                             : format_rows_json(rows, spec));
    if (!out) {
        throw std::runtime_error("write failed: " + spec.output_path);
    }
}

}  // namespace noma
