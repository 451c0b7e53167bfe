#ifndef NOMA_SWEEP_HPP
#define NOMA_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace noma {

enum class ChannelKind { Awgn, Rayleigh };
enum class OutputFormat { Csv, Json };

struct SweepSpec {
    double alpha = 0.2;
    double total_power = 1.0;
    double snr_db_start = 0.0;
    double snr_db_stop = 20.0;
    double snr_db_step = 2.0;
    ChannelKind channel = ChannelKind::Rayleigh;
    double fixed_gain = 1.0;      // awgn only
    double mean_power_nu = 1.0;   // rayleigh only
    double mean_power_fu = 1.0;   // rayleigh only
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::uint64_t batch_size = 65536;
    unsigned workers = 1;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    bool allow_degenerate_alpha = false;  // test-only bypass of alpha < 0.5
};

struct SweepRow {
    double snr_db;
    double ber_fu_analytic;
    double ber_fu_sim;
    double ber_fu_sim_stderr;
    double ber_nu_analytic;
    double ber_nu_sim;
    double ber_nu_sim_stderr;
    double ber_nu_class1_sim;
    double ber_nu_class2_sim;
    double agreement_sigma_fu;  // |analytic - sim| / stderr; inf when stderr = 0
    double agreement_sigma_nu;
};

/// Returns every violation at once; an empty list means the spec is valid.
std::vector<std::string> validate_spec(const SweepSpec& spec);

/// One row per SNR point, ascending. N0 = total_power / 10^(snr_db/10); the
/// simulator seed for each point derives from (spec.seed, point index).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string format_rows_csv(const std::vector<SweepRow>& rows);
std::string format_rows_json(const std::vector<SweepRow>& rows,
                             const SweepSpec& spec);

/// Writes rows to spec.output_path in spec.format.
void write_output(const std::vector<SweepRow>& rows, const SweepSpec& spec);

}  // namespace noma

#endif
