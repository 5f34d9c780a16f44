#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustres/network.hpp"

namespace trustres {

struct VerifyReport {
    std::size_t instances = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> samples;  // first few mismatching instances
};

// Checks resolve() against oracle_resolve() field-for-field on one instance;
// returns true when they agree.
bool check_instance(const TrustNetwork& net, const std::string& key);

// The equivalence sweep behind `verify`: a systematic topology/priority/
// belief grid over 1-5 users with 2 values, plus `random_instances` seeded
// random networks with up to 6 users and 3 values.
VerifyReport verify_equivalence(std::size_t random_instances = 1000, std::uint64_t seed = 1,
                                bool include_grid = true);

}  // namespace trustres
