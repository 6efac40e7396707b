#ifndef ZERNIKE_BENCH_HPP
#define ZERNIKE_BENCH_HPP

#include "zernike/radial_index.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zernike {

enum class AlgoId {
    Bbtia,
    Bbtra,
    PrataRuschOriginal,
    PrataRuschBeta,
    ShakibaeiOriginal,
    ShakibaeiBeta,
    Kintner,
    Reference,
};

std::string to_string(AlgoId id);
std::optional<AlgoId> parse_algo_id(const std::string& name);
const std::vector<AlgoId>& all_algo_ids();

/// Evaluates R_n^m(rho) with the selected scheme.  The tree recursions
/// run with an unlimited node budget here; use `budget` to cap them.
double eval_by_id(AlgoId id, const RadialIndex& idx, double rho,
                  std::uint64_t budget = UINT64_MAX);

struct BenchConfig {
    std::vector<int> n_values{28, 29};
    double rho = 0.5;
    int repetitions = 10;
    std::vector<AlgoId> algorithms = all_algo_ids();
    double time_budget_per_point_s = 120.0;
};

struct BenchRecord {
    enum class Status { Ok, TimedOut };

    AlgoId algorithm;
    int n;
    int m;
    double rho;
    int repetitions;
    double mean_time_ns; // meaningful only when status == Ok
    Status status;

    bool operator==(const BenchRecord&) const = default;
};

/// Times `repetitions` evaluations around one monotonic-clock read.
/// Sub-millisecond calls are auto-multiplied inside the timed block so
/// clock granularity cannot dominate; the multiplier is divided out.
/// A point whose elapsed time exceeds budget_s is marked TimedOut.
BenchRecord measure_point(AlgoId id, const RadialIndex& idx, double rho,
                          int repetitions, double budget_s);

/// Full sweep: for each n, m runs over {n, n-2, ...} down to 0 or 1
/// (i.e. n - m ascending), for each selected algorithm.  Once a point
/// times out the larger differences of that algorithm are skipped.
std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

/// CSV with the fixed header
///   algorithm,n,m,rho,repetitions,mean_time_ns,status
/// `.` decimals, LF line endings; TimedOut rows leave mean_time_ns empty.
void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out);
void emit_csv(const std::vector<BenchRecord>& records, const std::string& path);

struct SemilogPoint {
    int diff; // n - m
    double log10_mean_time_ns;
};

/// Per-algorithm series of (n - m, log10 mean time), diff ascending,
/// timed-out points omitted.  Records must come from a single n.
/// Throws EmptySeries when every point timed out.
std::map<AlgoId, std::vector<SemilogPoint>> semilog_series(
    const std::vector<BenchRecord>& records);

void emit_semilog_csv(const std::map<AlgoId, std::vector<SemilogPoint>>& series,
                      std::ostream& out);

/// Gnuplot-style data blocks: one indexed block per algorithm, separated
/// by two blank lines.
void emit_semilog_gnuplot(const std::map<AlgoId, std::vector<SemilogPoint>>& series,
                          std::ostream& out);

/// Least-squares slope of y over x.  Used for the growth-class checks
/// (log2 time against (n - m)/2 is ~1 for an exponential-cost scheme).
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace zernike

#endif
