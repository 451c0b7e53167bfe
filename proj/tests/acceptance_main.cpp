// Acceptance suite: every check prints one PASS/FAIL line; exit code is the
// number of failed criteria. argv[1] is the noma-ber CLI binary, argv[2] a
// writable scratch directory (both needed by the determinism criterion).

#include "noma/analytic_ber.hpp"
#include "noma/link_sim.hpp"
#include "noma/model.hpp"
#include "noma/rng.hpp"
#include "noma/special_math.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace noma;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << criterion << ": "
              << detail << "\n";
    if (!ok) {
        ++g_failures;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr std::uint64_t kTrials = 10000000;
constexpr std::uint64_t kBatch = 65536;

// 1. Closed-form Rayleigh average vs quadrature, <= 1e-9.
void criterion_1() {
    double worst = 0.0;
    for (double gb : {0.01, 0.1, 1.0, 2.0, 10.0, 100.0, 1e4}) {
        const double closed = rayleigh_q_average({gb});
        const double quad = quadrature_expectation(
            [](double g) { return q_func(std::sqrt(g)); }, {gb});
        worst = std::max(worst, std::abs(closed - quad));
    }
    std::ostringstream d;
    d << "rayleigh_q_average vs quadrature, worst |diff| = " << worst;
    report(1, worst <= 1e-9, d.str());
}

// 2. Antiderivative identity vs adaptive quadrature on a 5x5 (X, alpha) grid.
void criterion_2() {
    double worst = 0.0;
    for (double X : {0.25, 1.0, 2.0, 5.0, 20.0}) {
        for (double alpha : {0.2, 0.5, 1.0, 2.0, 8.0}) {
            const double closed = erfc_exp_antiderivative(X, alpha) -
                                  erfc_exp_antiderivative(0.0, alpha);
            // adaptive Simpson, independent of the closed form
            auto f = [alpha](double x) {
                return std::erfc(std::sqrt(x)) * std::exp(-x / alpha);
            };
            std::function<double(double, double, double, double, double, double)>
                simpson = [&](double a, double b, double fa, double fb,
                              double fm, double whole) -> double {
                const double m = 0.5 * (a + b);
                const double lm = 0.5 * (a + m);
                const double rm = 0.5 * (m + b);
                const double flm = f(lm);
                const double frm = f(rm);
                const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
                const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
                if (std::abs(left + right - whole) <= 1e-11) {
                    return left + right;
                }
                return simpson(a, m, fa, fm, flm, left) +
                       simpson(m, b, fm, fb, frm, right);
            };
            const double fa = f(0.0);
            const double fb = f(X);
            const double fm = f(0.5 * X);
            const double whole = X / 6.0 * (fa + 4.0 * fm + fb);
            const double quad = simpson(0.0, X, fa, fb, fm, whole);
            worst = std::max(worst, std::abs(closed - quad));
        }
    }
    std::ostringstream d;
    d << "erfc-exp antiderivative vs quadrature on 5x5 grid, worst |diff| = "
      << worst;
    report(2, worst <= 1e-8, d.str());
}

// 3 and 4 share the fixed-channel Monte Carlo grid.
void criteria_3_4() {
    bool fu_ok = true;
    bool nu_ok = true;
    std::vector<std::string> class_deviations;
    for (double alpha : {0.1, 0.2, 0.3}) {
        const auto alloc = allocate_power(alpha, 1.0);
        for (double snr_db : {0.0, 4.0, 8.0, 12.0}) {
            const double n0 = std::pow(10.0, -snr_db / 10.0);
            const auto snrs = effective_snrs(alloc, 1.0, n0);
            const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(
                alpha * 100.0 + snr_db);
            const SimResult sim =
                simulate_ber(alloc, ChannelModel{AwgnFixedGain{1.0}}, {n0},
                             {kTrials, seed, kBatch, 1});

            const double fu = fu_ber_awgn(snrs);
            if (fu >= 1e-5 &&
                std::abs(fu - sim.fu.ber) > 3.0 * sim.fu.std_error) {
                fu_ok = false;
            }
            const NuBerBreakdown b = nu_ber_awgn(snrs);
            if (b.total >= 1e-5 &&
                std::abs(b.total - sim.nu.ber) > 3.0 * sim.nu.std_error) {
                nu_ok = false;
            }
            // per-class comparison is reported, not asserted
            auto class_check = [&](const char* name, double analytic,
                                   const BerEstimate& est) {
                if (est.std_error > 0.0 &&
                    std::abs(analytic - est.ber) > 3.0 * est.std_error) {
                    std::ostringstream m;
                    m << name << " deviates at alpha=" << alpha
                      << " snr=" << snr_db << " dB: analytic=" << analytic
                      << " sim=" << est.ber << " ("
                      << std::abs(analytic - est.ber) / est.std_error
                      << " sigma)";
                    class_deviations.push_back(m.str());
                }
            };
            class_check("nu-class1", nu_ber_awgn_correct_fu(snrs), sim.nu_class1);
            class_check("nu-class2", nu_ber_awgn_error_fu(snrs), sim.nu_class2);
        }
    }
    report(3, fu_ok, "FU AWGN closed form within 3 sigma of fixed-h Monte "
                     "Carlo on the 3x4 (alpha, SNR) grid, 1e7 trials");
    for (const auto& m : class_deviations) {
        std::cout << "REPORT criterion-4 (non-fatal): " << m << "\n";
    }
    report(4, nu_ok, "NU AWGN combined closed form within 3 sigma of full-SIC "
                     "Monte Carlo on the same grid");
}

// 5. Rayleigh closed forms vs fading Monte Carlo.
void criterion_5() {
    const auto alloc = allocate_power(0.2, 1.0);
    bool ok = true;
    for (double snr_db : {0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0}) {
        const double n0 = std::pow(10.0, -snr_db / 10.0);
        const auto means = mean_effective_snrs(alloc, 1.0, n0);
        const SimResult sim =
            simulate_ber(alloc, ChannelModel{RayleighFlat{1.0}}, {n0},
                         {kTrials, 500 + static_cast<std::uint64_t>(snr_db),
                          kBatch, 1});
        if (sim.fu.ber >= 1e-4 &&
            std::abs(fu_ber_rayleigh(means) - sim.fu.ber) >
                3.0 * sim.fu.std_error) {
            ok = false;
        }
        if (sim.nu.ber >= 1e-4 &&
            std::abs(nu_ber_rayleigh(means) - sim.nu.ber) >
                3.0 * sim.nu.std_error) {
            ok = false;
        }
    }
    report(5, ok, "Rayleigh closed forms within 3 sigma of fading Monte Carlo, "
                  "0-30 dB, 1e7 trials");
}

// 6. Degenerate reduction to classic Rayleigh BPSK at alpha = 1e-9.
void criterion_6() {
    const auto alloc = allocate_power_unchecked(1e-9, 1.0);
    double worst = 0.0;
    for (double snr_db = 0.0; snr_db <= 30.0; snr_db += 1.0) {
        const double n0 = std::pow(10.0, -snr_db / 10.0);
        const double got = fu_ber_rayleigh(mean_effective_snrs(alloc, 1.0, n0));
        const double gb = 2.0 * alloc.eps2 / n0;
        const double bpsk = 0.5 * (1.0 - std::sqrt(gb / (gb + 2.0)));
        worst = std::max(worst, std::abs(got - bpsk));
    }
    std::ostringstream d;
    d << "alpha=1e-9 reduction to Rayleigh BPSK, worst |diff| = " << worst;
    report(6, worst <= 1e-6, d.str());
}

// 7. Class decomposition identity, analytic and simulated.
void criterion_7() {
    SplitMix64 rng(20240601, 0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double alpha = 1e-3 + 0.497 * rng.next_unit();
        const double power = 0.2 + 4.0 * rng.next_unit();
        const double hp = 0.01 + 4.0 * rng.next_unit();
        const double n0 = 0.01 + 3.0 * rng.next_unit();
        const auto snrs = effective_snrs(allocate_power(alpha, power), hp, n0);
        const NuBerBreakdown b = nu_ber_awgn(snrs);
        worst = std::max(worst, std::abs(b.total - (b.correct_fu + b.error_fu)));
    }
    const auto alloc = allocate_power(0.2, 1.0);
    const SimResult sim = simulate_ber(
        alloc, ChannelModel{AwgnFixedGain{1.0}}, {0.3}, {1000000, 3, kBatch, 1});
    const bool counts_ok =
        sim.nu_class1.bit_errors + sim.nu_class2.bit_errors == sim.nu.bit_errors;
    std::ostringstream d;
    d << "class decomposition: worst analytic |diff| = " << worst
      << ", simulated partition " << (counts_ok ? "sums exactly" : "mismatch");
    report(7, worst <= 1e-12 && counts_ok, d.str());
}

// 8. Byte-identical sweep output, invariant to --workers.
void criterion_8(const std::string& cli, const std::string& tmpdir) {
    auto run = [&](const std::string& out, unsigned workers) {
        std::ostringstream cmd;
        cmd << '"' << cli << '"'
            << " sweep --alpha 0.2 --channel rayleigh --snr-start 0"
               " --snr-stop 10 --snr-step 5 --trials 100000 --seed 7"
               " --workers " << workers << " --out " << out;
        return std::system(cmd.str().c_str()) == 0;
    };
    const std::string f1 = tmpdir + "/sweep_a.csv";
    const std::string f2 = tmpdir + "/sweep_b.csv";
    const std::string f4 = tmpdir + "/sweep_w4.csv";
    const std::string f8 = tmpdir + "/sweep_w8.csv";
    bool ok = run(f1, 1) && run(f2, 1) && run(f4, 4) && run(f8, 8);
    if (ok) {
        const std::string a = read_file(f1);
        ok = !a.empty() && a == read_file(f2) && a == read_file(f4) &&
             a == read_file(f8);
    }
    report(8, ok, "sweep output byte-identical across reruns and "
                  "--workers {1,4,8}");
}

// 9. Noiseless exhaustive detection.
void criterion_9() {
    bool ok = true;
    SplitMix64 rng(5, 0);
    for (double alpha : {0.05, 0.2, 0.4}) {
        const auto alloc = allocate_power(alpha, 1.0);
        const std::complex<double> h(0.6, 0.8);
        for (const BitTriple& bits : all_bit_triples()) {
            const auto y = add_channel_and_noise(transmit(bits, alloc), h,
                                                 {1e-30}, rng);
            if (detect_fu(y, h, alloc) != bits.fu_bit) {
                ok = false;
            }
            const NuDecision d = detect_nu_sic(y, h, alloc);
            if (d.in_phase_bit != bits.in_phase_bit ||
                d.quadrature_bit != bits.quadrature_bit ||
                d.fu_bit_hat != bits.fu_bit) {
                ok = false;
            }
        }
    }
    report(9, ok, "all 8 bit triples recovered noiselessly for alpha in "
                  "{0.05, 0.2, 0.4}");
}

// 10. Throughput: >= 1e6 full trials per second per worker.
void criterion_10() {
    const auto alloc = allocate_power(0.2, 1.0);
    const std::uint64_t trials = 2000000;
    const auto t0 = std::chrono::steady_clock::now();
    const SimResult sim =
        simulate_ber(alloc, ChannelModel{RayleighFlat{1.0}}, {0.1},
                     {trials, 77, kBatch, 1});
    const auto t1 = std::chrono::steady_clock::now();
    (void)sim;
    const double seconds = std::chrono::duration<double>(t1 - t0).count();
    const double rate = static_cast<double>(trials) / seconds;
    std::ostringstream d;
    d << "single-worker throughput " << rate << " trials/s";
    report(10, rate >= 1e6, d.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance_tests <noma-ber-binary> <tmpdir>\n";
        return 64;
    }
    criterion_1();
    criterion_2();
    criteria_3_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(argv[1], argv[2]);
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
    }
    return g_failures;
}
