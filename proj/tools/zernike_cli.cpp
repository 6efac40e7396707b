// Command-line surface for the radial polynomial library: evaluation,
// exact coefficient tables, oracle verification, flop accounting and the
// running-time benchmark.
//
// Exit codes: 0 success, 1 domain/verification failure, 2 usage error.

#include "zernike/zernike.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

namespace {

using namespace zernike;

// Shortest round-trip formatting; falls back to 17 significant digits.
std::string format_value(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec == std::errc{}) {
        return std::string(buf, res.ptr);
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<AlgoId> parse_algorithms(const std::string& csv)
{
    std::vector<AlgoId> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto id = parse_algo_id(item);
        if (!id) {
            throw CLI::ValidationError("unknown algorithm: " + item);
        }
        out.push_back(*id);
    }
    if (out.empty()) {
        throw CLI::ValidationError("no algorithms selected");
    }
    return out;
}

int cmd_eval(int n, int m, double rho, const std::string& algorithm)
{
    const auto id = parse_algo_id(algorithm);
    if (!id) {
        std::cerr << "unknown algorithm: " << algorithm << "\n";
        return 2;
    }
    const RadialIndex idx = make_index(n, m);
    std::cout << format_value(eval_by_id(*id, idx, rho)) << "\n";
    return 0;
}

int cmd_coeffs(int n, int m)
{
    const CoefficientPoly poly = coefficients(make_index(n, m));
    for (size_t s = 0; s < poly.coeffs.size(); ++s) {
        std::cout << s << ',' << poly.index.n - 2 * static_cast<int>(s) << ','
                  << to_string(poly.coeffs[s]) << "\n";
    }
    return 0;
}

struct VerifyOutcome {
    double max_dev = 0.0;
    int worst_n = -1, worst_m = -1;
    double worst_rho = 0.0;
    int skipped = 0;
};

int cmd_verify(int n_max, double tolerance, int legacy_diff_cap, std::uint64_t node_budget)
{
    const std::vector<AlgoId> algos = {
        AlgoId::Bbtia,          AlgoId::Bbtra,          AlgoId::Kintner,
        AlgoId::PrataRuschOriginal, AlgoId::PrataRuschBeta,
        AlgoId::ShakibaeiOriginal,  AlgoId::ShakibaeiBeta,
    };
    std::map<AlgoId, VerifyOutcome> outcomes;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = n % 2; m <= n; m += 2) {
            const RadialIndex idx = make_index(n, m);
            for (int r = 0; r <= 10; ++r) {
                const double rho = 0.1 * r;
                const double ref = eval_reference(idx, rho);
                for (const AlgoId id : algos) {
                    VerifyOutcome& oc = outcomes[id];
                    const bool tree_recursion =
                        id == AlgoId::PrataRuschOriginal || id == AlgoId::PrataRuschBeta ||
                        id == AlgoId::ShakibaeiOriginal || id == AlgoId::ShakibaeiBeta;
                    if (tree_recursion && n - m > legacy_diff_cap) {
                        ++oc.skipped;
                        continue;
                    }
                    double value;
                    try {
                        value = eval_by_id(id, idx, rho, node_budget);
                    } catch (const RecursionBudgetExceeded&) {
                        ++oc.skipped;
                        continue;
                    }
                    const double dev = std::abs(value - ref);
                    if (dev > oc.max_dev) {
                        oc = VerifyOutcome{dev, n, m, rho, oc.skipped};
                    }
                }
            }
        }
    }
    bool ok = true;
    const AlgoId* worst_algo = nullptr;
    double worst_dev = -1.0;
    for (const auto& [id, oc] : outcomes) {
        std::cout << to_string(id) << ": max |dev| = " << format_value(oc.max_dev);
        if (oc.skipped > 0) {
            std::cout << "  (" << oc.skipped
                      << " points skipped by the n-m cap or node budget)";
        }
        std::cout << "\n";
        if (oc.max_dev > tolerance) {
            ok = false;
            if (oc.max_dev > worst_dev) {
                worst_dev = oc.max_dev;
                worst_algo = &id;
            }
        }
    }
    if (!ok) {
        const VerifyOutcome& oc = outcomes[*worst_algo];
        std::cerr << "verification failed: worst " << to_string(*worst_algo) << " at (n="
                  << oc.worst_n << ", m=" << oc.worst_m << ", rho=" << format_value(oc.worst_rho)
                  << "), |dev| = " << format_value(oc.max_dev) << " > tolerance "
                  << format_value(tolerance) << "\n";
        return 1;
    }
    return 0;
}

int cmd_flops(int n, int m, const std::string& algorithm)
{
    const RadialIndex idx = make_index(n, m);
    if (algorithm == "bbtra") {
        const FlopProfile prof = profile_bbtra(idx);
        const FlopVector pred = predict_flops(FlopAlgorithm::BBTRA, idx);
        std::printf("%-10s %12s %12s %12s\n", "bbtra", "mults", "adds", "total");
        std::printf("%-10s %12llu %12llu %12llu\n", "measured",
                    (unsigned long long)prof.model.mults, (unsigned long long)prof.model.adds,
                    (unsigned long long)prof.model.total());
        std::printf("%-10s %12llu %12llu %12llu\n", "predicted",
                    (unsigned long long)pred.mults, (unsigned long long)pred.adds,
                    (unsigned long long)pred.total());
        std::printf("nodes visited: %llu, literal pow mults: %llu\n",
                    (unsigned long long)prof.nodes, (unsigned long long)prof.actual_pow_mults);
        return prof.model == pred ? 0 : 1;
    }
    if (algorithm == "bbtia") {
        const FlopVector measured = count_flops_bbtia(idx);
        const FlopVector pred = predict_flops(FlopAlgorithm::BBTIA, idx);
        std::printf("%-10s %12s %12s %12s\n", "bbtia", "mults", "adds", "total");
        std::printf("%-10s %12llu %12llu %12llu\n", "measured",
                    (unsigned long long)measured.mults, (unsigned long long)measured.adds,
                    (unsigned long long)measured.total());
        std::printf("%-10s %12llu %12llu %12llu\n", "predicted",
                    (unsigned long long)pred.mults, (unsigned long long)pred.adds,
                    (unsigned long long)pred.total());
        return measured.adds == pred.adds ? 0 : 1;
    }
    std::cerr << "unknown flop algorithm: " << algorithm << " (expected bbtra or bbtia)\n";
    return 2;
}

int cmd_bench(const std::string& n_list, double rho, int reps, const std::string& algo_csv,
              const std::string& out_path, const std::string& plot_path, double budget_s)
{
    BenchConfig config;
    config.n_values.clear();
    std::stringstream ss(n_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        config.n_values.push_back(std::stoi(item));
    }
    config.rho = rho;
    config.repetitions = reps;
    config.algorithms = parse_algorithms(algo_csv);
    config.time_budget_per_point_s = budget_s;

    const std::vector<BenchRecord> records = run_benchmark(config);
    emit_csv(records, out_path);
    std::cout << "wrote " << records.size() << " records to " << out_path << "\n";

    for (const int n : config.n_values) {
        std::vector<BenchRecord> subset;
        for (const BenchRecord& r : records) {
            if (r.n == n) {
                subset.push_back(r);
            }
        }
        const auto series = semilog_series(subset);
        if (!plot_path.empty()) {
            const std::string path = config.n_values.size() == 1
                                         ? plot_path
                                         : plot_path + "." + std::to_string(n);
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                throw IoError("cannot open " + path + " for writing");
            }
            emit_semilog_gnuplot(series, out);
            std::cout << "wrote plot data for n=" << n << " to " << path << "\n";
        }
        // Ordering summary at the largest difference every algorithm completed.
        std::cout << "n=" << n << " ordering (fastest first at largest measured n-m):\n";
        std::vector<std::pair<double, AlgoId>> order;
        for (const auto& [id, points] : series) {
            if (!points.empty()) {
                order.emplace_back(points.back().log10_mean_time_ns, id);
            }
        }
        std::sort(order.begin(), order.end());
        for (const auto& [logt, id] : order) {
            std::cout << "  " << to_string(id) << "  log10(ns) = " << format_value(logt) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zernike radial polynomial evaluation toolkit"};
    app.require_subcommand(1);

    int n = 0, m = 0;
    double rho = 0.0;
    std::string algorithm = "bbtia";

    auto* eval = app.add_subcommand("eval", "evaluate R_n^m(rho)");
    eval->add_option("n", n, "radial degree")->required();
    eval->add_option("m", m, "azimuthal order")->required();
    eval->add_option("rho", rho, "radius")->required();
    eval->add_option("--algorithm", algorithm, "evaluation scheme")->capture_default_str();

    auto* coeffs = app.add_subcommand("coeffs", "print the exact coefficient table");
    coeffs->add_option("n", n, "radial degree")->required();
    coeffs->add_option("m", m, "azimuthal order")->required();

    int n_max = 30;
    double tolerance = 1e-9;
    int legacy_cap = 20;
    std::uint64_t node_budget = std::uint64_t{1} << 25;
    auto* verify = app.add_subcommand("verify", "sweep every scheme against the exact oracle");
    verify->add_option("--n-max", n_max, "largest radial degree")->capture_default_str();
    verify->add_option("--tolerance", tolerance, "allowed absolute deviation")
        ->capture_default_str();
    verify->add_option("--legacy-diff-cap", legacy_cap,
                       "n-m cap for the tree recursions")->capture_default_str();
    verify->add_option("--node-budget", node_budget,
                       "per-evaluation node cap for the tree recursions")->capture_default_str();

    std::string flop_algorithm = "bbtra";
    auto* flops = app.add_subcommand("flops", "measured vs predicted operation counts");
    flops->add_option("n", n, "radial degree")->required();
    flops->add_option("m", m, "azimuthal order")->required();
    flops->add_option("--algorithm", flop_algorithm, "bbtra or bbtia")->capture_default_str();

    std::string n_list = "28,29";
    double bench_rho = 0.5;
    int reps = 10;
    std::string algo_csv =
        "bbtia,bbtra,prata_rusch_original,prata_rusch_beta,shakibaei_original,"
        "shakibaei_beta,kintner,reference";
    std::string out_path = "bench.csv";
    std::string plot_path;
    double budget_s = 120.0;
    auto* bench = app.add_subcommand("bench", "running-time comparison over an (n, m) sweep");
    bench->add_option("--n", n_list, "comma-separated radial degrees")->capture_default_str();
    bench->add_option("--rho", bench_rho, "radius")->capture_default_str();
    bench->add_option("--reps", reps, "repetitions per point")->capture_default_str();
    bench->add_option("--algorithms", algo_csv, "comma-separated scheme ids")
        ->capture_default_str();
    bench->add_option("--out", out_path, "CSV output path")->capture_default_str();
    bench->add_option("--plot-out", plot_path, "gnuplot data output path");
    bench->add_option("--budget", budget_s, "per-point time budget in seconds")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(n, m, rho, algorithm);
        }
        if (coeffs->parsed()) {
            return cmd_coeffs(n, m);
        }
        if (verify->parsed()) {
            return cmd_verify(n_max, tolerance, legacy_cap, node_budget);
        }
        if (flops->parsed()) {
            return cmd_flops(n, m, flop_algorithm);
        }
        if (bench->parsed()) {
            return cmd_bench(n_list, bench_rho, reps, algo_csv, out_path, plot_path, budget_s);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
