#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trustres/bench.hpp"

using namespace trustres;

namespace {

// Synthetic records with elapsed = coeff * size^exponent.
std::vector<BenchRecord> power_law(double exponent, double coeff = 1e-6) {
    std::vector<BenchRecord> records;
    for (std::size_t n : {100, 300, 1000, 3000, 10000}) {
        BenchRecord r;
        r.suite = "ra";
        r.family = "cycles";
        r.n_users = n;
        r.trials = 1;
        r.elapsed_mean_s = coeff * std::pow(static_cast<double>(n), exponent);
        r.elapsed_min_s = r.elapsed_mean_s;
        r.elapsed_max_s = r.elapsed_mean_s;
        records.push_back(r);
    }
    return records;
}

}  // namespace

TEST_CASE("scaling fit recovers analytic exponents") {
    CHECK(fit_scaling_exponent(power_law(2.0)).exponent == doctest::Approx(2.0));
    CHECK(fit_scaling_exponent(power_law(1.0)).exponent == doctest::Approx(1.0));
    CHECK(fit_scaling_exponent(power_law(0.0)).exponent == doctest::Approx(0.0));
    CHECK(fit_scaling_exponent(power_law(2.0)).r_squared == doctest::Approx(1.0));
    CHECK(fit_scaling_exponent(power_law(0.0)).r_squared == doctest::Approx(1.0));
}

TEST_CASE("scaling fit rejects insufficient or unordered data") {
    auto records = power_law(1.0);
    records.resize(3);
    CHECK_THROWS_AS(static_cast<void>(fit_scaling_exponent(records)), InsufficientData);

    records = power_law(1.0);
    std::swap(records[1], records[2]);
    CHECK_THROWS_AS(static_cast<void>(fit_scaling_exponent(records)), InsufficientData);
}

TEST_CASE("record size prefers objects over network elements") {
    BenchRecord r;
    r.n_users = 10;
    r.n_mappings = 5;
    CHECK(r.size() == 15.0);
    r.n_objects = 1000;
    CHECK(r.size() == 1000.0);
}

TEST_CASE("suite names round trip") {
    for (BenchSuite s : {BenchSuite::Ra, BenchSuite::Oracle, BenchSuite::Bulk}) {
        CHECK(bench_suite_from_string(to_string(s)) == s);
    }
    CHECK_THROWS_AS(static_cast<void>(bench_suite_from_string("unknown")), Error);
}

TEST_CASE("bench CSV round trips exactly") {
    auto records = power_law(1.37, 3.14159e-7);
    records[0].suite = "bulk";
    records[0].n_objects = 12345;
    records[0].conflict_fraction = 0.125;
    std::string csv = bench_to_csv(records);
    auto back = bench_from_csv(csv);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].suite == records[i].suite);
        CHECK(back[i].family == records[i].family);
        CHECK(back[i].n_users == records[i].n_users);
        CHECK(back[i].n_objects == records[i].n_objects);
        CHECK(back[i].conflict_fraction == records[i].conflict_fraction);
        CHECK(back[i].elapsed_mean_s == records[i].elapsed_mean_s);
        CHECK(back[i].elapsed_min_s == records[i].elapsed_min_s);
        CHECK(back[i].elapsed_max_s == records[i].elapsed_max_s);
    }
    CHECK(bench_to_csv(back) == csv);
}

TEST_CASE("bench CSV parsing rejects malformed input") {
    CHECK_THROWS_AS(static_cast<void>(bench_from_csv("wrong,header\n")), ParseError);
    CHECK_THROWS_AS(static_cast<void>(bench_from_csv("")), ParseError);
    std::string good = bench_to_csv(power_law(1.0));
    CHECK_THROWS_AS(static_cast<void>(bench_from_csv(good + "ra,cycles,1,2\n")), ParseError);
    CHECK_THROWS_AS(
        static_cast<void>(bench_from_csv(good + "ra,cycles,x,0,0,0,1,1,1,1\n")), ParseError);
}

TEST_CASE("SVG output is a complete chart") {
    auto records = power_law(2.0);
    auto bulk = power_law(1.0);
    for (auto& r : bulk) r.suite = "bulk";
    records.insert(records.end(), bulk.begin(), bulk.end());

    std::string svg = bench_to_svg(records);
    CHECK(svg.find("<?xml") == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("#1f77b4") != std::string::npos);  // ra series
    CHECK(svg.find("#2ca02c") != std::string::npos);  // bulk series
    CHECK(svg.find(">ra<") != std::string::npos);
    CHECK(svg.find(">bulk<") != std::string::npos);
}

TEST_CASE("run_benchmark produces one record per spec with sane timings") {
    std::vector<BenchSpec> specs;
    for (std::size_t s : {2, 4}) {
        BenchSpec spec;
        spec.family = "cycles";
        spec.size_param = s;
        spec.seed = 1;
        specs.push_back(spec);
    }
    auto records = run_benchmark(BenchSuite::Ra, specs, 3);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        CHECK(r.suite == "ra");
        CHECK(r.trials == 3);
        CHECK(r.elapsed_min_s > 0.0);
        CHECK(r.elapsed_min_s <= r.elapsed_mean_s);
        CHECK(r.elapsed_mean_s <= r.elapsed_max_s);
    }
    CHECK(records[0].n_users == 8);
    CHECK(records[1].n_users == 16);

    CHECK_THROWS_AS(static_cast<void>(run_benchmark(BenchSuite::Ra, {}, 3)), Error);
    CHECK_THROWS_AS(static_cast<void>(run_benchmark(BenchSuite::Ra, specs, 0)), Error);
}

TEST_CASE("oracle and bulk suites run end to end") {
    BenchSpec oracle_spec;
    oracle_spec.family = "cycles";
    oracle_spec.size_param = 2;
    oracle_spec.value_pool = 2;
    auto oracle_records = run_benchmark(BenchSuite::Oracle, {oracle_spec}, 2);
    REQUIRE(oracle_records.size() == 1);
    CHECK(oracle_records[0].suite == "oracle");

    BenchSpec bulk_spec;
    bulk_spec.family = "bulk";
    bulk_spec.size_param = 100;
    bulk_spec.conflict_fraction = 0.5;
    auto bulk_records = run_benchmark(BenchSuite::Bulk, {bulk_spec}, 2);
    REQUIRE(bulk_records.size() == 1);
    CHECK(bulk_records[0].n_objects == 100);
    CHECK(bulk_records[0].conflict_fraction == 0.5);
}
