#include "zernike/bench.hpp"

#include "zernike/bbt.hpp"
#include "zernike/legacy.hpp"
#include "zernike/reference.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <locale>
#include <ostream>
#include <set>
#include <sstream>

namespace zernike {

namespace {

constexpr const char* kAlgoNames[] = {
    "bbtia",
    "bbtra",
    "prata_rusch_original",
    "prata_rusch_beta",
    "shakibaei_original",
    "shakibaei_beta",
    "kintner",
    "reference",
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

std::string to_string(AlgoId id)
{
    return kAlgoNames[static_cast<int>(id)];
}

std::optional<AlgoId> parse_algo_id(const std::string& name)
{
    for (const AlgoId id : all_algo_ids()) {
        if (name == to_string(id)) {
            return id;
        }
    }
    return std::nullopt;
}

const std::vector<AlgoId>& all_algo_ids()
{
    static const std::vector<AlgoId> ids = {
        AlgoId::Bbtia,         AlgoId::Bbtra,
        AlgoId::PrataRuschOriginal, AlgoId::PrataRuschBeta,
        AlgoId::ShakibaeiOriginal,  AlgoId::ShakibaeiBeta,
        AlgoId::Kintner,       AlgoId::Reference,
    };
    return ids;
}

double eval_by_id(AlgoId id, const RadialIndex& idx, double rho, std::uint64_t budget)
{
    switch (id) {
    case AlgoId::Bbtia:
        return eval_bbtia(idx, rho).value;
    case AlgoId::Bbtra:
        return eval_bbtra(idx, rho);
    case AlgoId::PrataRuschOriginal:
        return eval_prata_rusch(idx, rho, Stopping::Original, budget);
    case AlgoId::PrataRuschBeta:
        return eval_prata_rusch(idx, rho, Stopping::Beta, budget);
    case AlgoId::ShakibaeiOriginal:
        return eval_shakibaei(idx, rho, Stopping::Original, budget);
    case AlgoId::ShakibaeiBeta:
        return eval_shakibaei(idx, rho, Stopping::Beta, budget);
    case AlgoId::Kintner:
        return eval_kintner(idx, rho);
    case AlgoId::Reference:
        return eval_reference(idx, rho);
    }
    throw InvalidParameter("unknown algorithm id");
}

BenchRecord measure_point(AlgoId id, const RadialIndex& idx, double rho,
                          int repetitions, double budget_s)
{
    BenchRecord rec{id, idx.n, idx.m, rho, repetitions, 0.0, BenchRecord::Status::Ok};
    volatile double sink = 0.0;

    // Warmup doubles as the calibration probe.
    const auto start = Clock::now();
    sink = sink + eval_by_id(id, idx, rho);
    const double first_s = seconds_since(start);
    if (first_s > budget_s) {
        rec.status = BenchRecord::Status::TimedOut;
        return rec;
    }

    // Inner multiplier: make each timed block last >= 1 ms.
    std::uint64_t inner = 1;
    if (first_s < 1e-3) {
        inner = static_cast<std::uint64_t>(1e-3 / std::max(first_s, 1e-9)) + 1;
    }

    double total_s = 0.0;
    int done = 0;
    for (int r = 0; r < repetitions; ++r) {
        const auto t0 = Clock::now();
        for (std::uint64_t j = 0; j < inner; ++j) {
            sink = sink + eval_by_id(id, idx, rho);
        }
        total_s += seconds_since(t0);
        ++done;
        if (total_s + first_s > budget_s) {
            break; // keep the mean over the completed repetitions
        }
    }
    (void)sink;
    rec.mean_time_ns = total_s * 1e9 / (static_cast<double>(done) * static_cast<double>(inner));
    return rec;
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& config)
{
    if (config.repetitions < 1 || config.n_values.empty() || config.algorithms.empty()) {
        throw InvalidParameter("benchmark config needs n values, algorithms and repetitions >= 1");
    }
    std::vector<BenchRecord> records;
    for (const int n : config.n_values) {
        std::set<AlgoId> timed_out;
        for (int m = n; m >= 0; m -= 2) { // n - m ascending
            const RadialIndex idx = make_index(n, m);
            for (const AlgoId id : config.algorithms) {
                if (timed_out.contains(id)) {
                    records.push_back(BenchRecord{id, n, m, config.rho, config.repetitions,
                                                  0.0, BenchRecord::Status::TimedOut});
                    continue;
                }
                BenchRecord rec = measure_point(id, idx, config.rho, config.repetitions,
                                                config.time_budget_per_point_s);
                if (rec.status == BenchRecord::Status::TimedOut) {
                    timed_out.insert(id);
                }
                records.push_back(rec);
            }
        }
    }
    return records;
}

namespace {

std::string format_double(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out)
{
    if (records.empty()) {
        throw InvalidParameter("no benchmark records to write");
    }
    out << "algorithm,n,m,rho,repetitions,mean_time_ns,status\n";
    for (const BenchRecord& r : records) {
        out << to_string(r.algorithm) << ',' << r.n << ',' << r.m << ','
            << format_double(r.rho) << ',' << r.repetitions << ',';
        if (r.status == BenchRecord::Status::Ok) {
            out << format_double(r.mean_time_ns);
        }
        out << ',' << (r.status == BenchRecord::Status::Ok ? "OK" : "TimedOut") << '\n';
    }
    if (!out) {
        throw IoError("failed to write benchmark CSV");
    }
}

void emit_csv(const std::vector<BenchRecord>& records, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    emit_csv(records, out);
}

std::map<AlgoId, std::vector<SemilogPoint>> semilog_series(
    const std::vector<BenchRecord>& records)
{
    std::map<AlgoId, std::vector<SemilogPoint>> series;
    for (const BenchRecord& r : records) {
        if (r.status != BenchRecord::Status::Ok) {
            continue;
        }
        series[r.algorithm].push_back(SemilogPoint{r.n - r.m, std::log10(r.mean_time_ns)});
    }
    if (series.empty()) {
        throw EmptySeries("all benchmark points timed out");
    }
    for (auto& [id, points] : series) {
        std::sort(points.begin(), points.end(),
                  [](const SemilogPoint& a, const SemilogPoint& b) { return a.diff < b.diff; });
    }
    return series;
}

void emit_semilog_csv(const std::map<AlgoId, std::vector<SemilogPoint>>& series,
                      std::ostream& out)
{
    out << "algorithm,n_minus_m,log10_mean_time_ns\n";
    for (const auto& [id, points] : series) {
        for (const SemilogPoint& p : points) {
            out << to_string(id) << ',' << p.diff << ',' << format_double(p.log10_mean_time_ns)
                << '\n';
        }
    }
    if (!out) {
        throw IoError("failed to write semilog CSV");
    }
}

void emit_semilog_gnuplot(const std::map<AlgoId, std::vector<SemilogPoint>>& series,
                          std::ostream& out)
{
    bool first = true;
    for (const auto& [id, points] : series) {
        if (!first) {
            out << "\n\n";
        }
        first = false;
        out << "# " << to_string(id) << '\n';
        for (const SemilogPoint& p : points) {
            out << p.diff << ' ' << format_double(p.log10_mean_time_ns) << '\n';
        }
    }
    if (!out) {
        throw IoError("failed to write gnuplot data");
    }
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidParameter("slope fit needs at least two matching points");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace zernike
