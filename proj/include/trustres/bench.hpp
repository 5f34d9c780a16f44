#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustres/errors.hpp"

namespace trustres {

enum class BenchSuite { Ra, Oracle, Bulk };

std::string to_string(BenchSuite s);
BenchSuite bench_suite_from_string(const std::string& s);

// One benchmark point: a generated workload and its timing over `trials`
// runs (after one discarded warm-up), generation excluded.
struct BenchSpec {
    std::string family;  // cycles | scalefree | nested | bulk
    std::uint64_t seed = 1;
    // cycles: n_clusters; scalefree: n_nodes; nested: n_users; bulk: n_objects
    std::size_t size_param = 0;
    double conflict_fraction = 0.0;  // bulk only
    std::size_t value_pool = 10;     // cycles only
    std::size_t edges_per_node = 2;  // scalefree only
    unsigned max_choice_atoms = 64;  // oracle only
};

struct BenchRecord {
    std::string suite;
    std::string family;
    std::size_t n_users = 0;
    std::size_t n_mappings = 0;
    std::size_t n_objects = 0;
    double conflict_fraction = 0.0;
    unsigned trials = 0;
    double elapsed_mean_s = 0.0;
    double elapsed_min_s = 0.0;
    double elapsed_max_s = 0.0;

    // Network elements for ra/oracle suites, objects for bulk.
    double size() const;
};

std::vector<BenchRecord> run_benchmark(BenchSuite suite, const std::vector<BenchSpec>& specs,
                                       unsigned trials = 20);

struct ScalingFit {
    double exponent = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log(elapsed_mean) vs log(size). Needs >= 4 records
// with strictly increasing size; throws InsufficientData otherwise.
ScalingFit fit_scaling_exponent(const std::vector<BenchRecord>& records);

// CSV header:
// suite,family,n_users,n_mappings,n_objects,conflict_fraction,trials,elapsed_mean_s,elapsed_min_s,elapsed_max_s
std::string bench_to_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> bench_from_csv(const std::string& text);
void emit_csv(const std::vector<BenchRecord>& records, const std::string& path);

// Self-contained log-log SVG line chart, one polyline per suite.
std::string bench_to_svg(const std::vector<BenchRecord>& records);
void emit_svg(const std::vector<BenchRecord>& records, const std::string& path);

}  // namespace trustres
