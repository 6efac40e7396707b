#include "zernike/bench.hpp"
#include "zernike/reference.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

using namespace zernike;

namespace {

// Minimal CSV reader for the benchmark schema, used as the round-trip oracle.
std::vector<BenchRecord> parse_csv(const std::string& text)
{
    std::vector<BenchRecord> out;
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "algorithm,n,m,rho,repetitions,mean_time_ns,status");
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string field;
        BenchRecord rec{};
        std::getline(row, field, ',');
        rec.algorithm = *parse_algo_id(field);
        std::getline(row, field, ',');
        rec.n = std::stoi(field);
        std::getline(row, field, ',');
        rec.m = std::stoi(field);
        std::getline(row, field, ',');
        rec.rho = std::stod(field);
        std::getline(row, field, ',');
        rec.repetitions = std::stoi(field);
        std::getline(row, field, ',');
        rec.mean_time_ns = field.empty() ? 0.0 : std::stod(field);
        std::getline(row, field, ',');
        rec.status = field == "OK" ? BenchRecord::Status::Ok : BenchRecord::Status::TimedOut;
        out.push_back(rec);
    }
    return out;
}

} // namespace

TEST_CASE("algorithm id round trip")
{
    for (const AlgoId id : all_algo_ids()) {
        CHECK(parse_algo_id(to_string(id)) == id);
    }
    CHECK(!parse_algo_id("nope").has_value());
}

TEST_CASE("eval_by_id dispatches every scheme to the same value")
{
    const RadialIndex idx = make_index(12, 4);
    const double ref = eval_reference(idx, 0.6);
    for (const AlgoId id : all_algo_ids()) {
        CHECK(std::abs(eval_by_id(id, idx, 0.6) - ref) <= 1e-9);
    }
}

TEST_CASE("benchmark sweep shape")
{
    BenchConfig config;
    config.n_values = {28};
    config.algorithms = {AlgoId::Bbtia};
    config.repetitions = 1;
    const auto records = run_benchmark(config);
    REQUIRE(records.size() == 15); // m in {28, 26, ..., 0}
    int expected_m = 28;
    for (const BenchRecord& r : records) {
        CHECK(r.m == expected_m);
        CHECK(r.n == 28);
        CHECK(r.status == BenchRecord::Status::Ok);
        CHECK(r.mean_time_ns > 0.0);
        CHECK_NOTHROW(make_index(r.n, r.m));
        expected_m -= 2;
    }

    // Same config twice gives an identically shaped record set.
    const auto again = run_benchmark(config);
    REQUIRE(again.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(again[i].algorithm == records[i].algorithm);
        CHECK(again[i].n == records[i].n);
        CHECK(again[i].m == records[i].m);
    }
}

TEST_CASE("invalid configs are rejected")
{
    BenchConfig config;
    config.n_values.clear();
    CHECK_THROWS_AS(run_benchmark(config), InvalidParameter);
    config = BenchConfig{};
    config.repetitions = 0;
    CHECK_THROWS_AS(run_benchmark(config), InvalidParameter);
    config = BenchConfig{};
    config.algorithms.clear();
    CHECK_THROWS_AS(run_benchmark(config), InvalidParameter);
}

TEST_CASE("CSV emission and round trip")
{
    std::vector<BenchRecord> records = {
        {AlgoId::Bbtia, 10, 2, 0.5, 10, 1234.5, BenchRecord::Status::Ok},
        {AlgoId::ShakibaeiOriginal, 10, 0, 0.5, 10, 0.0, BenchRecord::Status::TimedOut},
    };
    std::ostringstream out;
    emit_csv(records, out);
    const std::string text = out.str();
    CHECK(text.find("\r") == std::string::npos);
    CHECK(text.find("shakibaei_original,10,0,0.5,10,,TimedOut\n") != std::string::npos);
    const auto parsed = parse_csv(text);
    REQUIRE(parsed.size() == records.size());
    CHECK(parsed[0] == records[0]);
    CHECK(parsed[1] == records[1]);

    CHECK_THROWS_AS(emit_csv(std::vector<BenchRecord>{}, out), InvalidParameter);
}

TEST_CASE("semilog series grouping and failure mode")
{
    std::vector<BenchRecord> records = {
        {AlgoId::Bbtia, 10, 6, 0.5, 1, 100.0, BenchRecord::Status::Ok},
        {AlgoId::Bbtia, 10, 2, 0.5, 1, 1000.0, BenchRecord::Status::Ok},
        {AlgoId::Bbtra, 10, 4, 0.5, 1, 0.0, BenchRecord::Status::TimedOut},
    };
    const auto series = semilog_series(records);
    REQUIRE(series.size() == 1);
    const auto& points = series.at(AlgoId::Bbtia);
    REQUIRE(points.size() == 2);
    CHECK(points[0].diff == 4);
    CHECK(points[0].log10_mean_time_ns == doctest::Approx(2.0));
    CHECK(points[1].diff == 8);
    CHECK(points[1].log10_mean_time_ns == doctest::Approx(3.0));

    std::ostringstream csv;
    emit_semilog_csv(series, csv);
    CHECK(csv.str().rfind("algorithm,n_minus_m,log10_mean_time_ns\n", 0) == 0);
    std::ostringstream gp;
    emit_semilog_gnuplot(series, gp);
    CHECK(gp.str().rfind("# bbtia\n", 0) == 0);

    std::vector<BenchRecord> dead = {
        {AlgoId::Bbtra, 10, 4, 0.5, 1, 0.0, BenchRecord::Status::TimedOut},
    };
    CHECK_THROWS_AS(semilog_series(dead), EmptySeries);
}

TEST_CASE("least squares slope")
{
    CHECK(least_squares_slope({0, 1, 2, 3}, {1, 3, 5, 7}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(least_squares_slope({1.0}, {1.0}), InvalidParameter);
}
