#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustres/network.hpp"

namespace trustres {

// Possible and certain values for one key. `users` lists every network user
// in sorted order; `values` is the key's active domain in sorted order.
// possible[i] holds sorted indices into `values` for users[i]; certain[i]
// is a value index or -1. When the instance has no stable solution,
// `no_stable_solution` is set, every possible set is empty and no certain
// value exists.
struct ResolutionResult {
    std::string key;
    std::vector<std::string> users;
    std::vector<std::string> values;
    std::vector<std::vector<std::int32_t>> possible;
    std::vector<std::int32_t> certain;
    bool no_stable_solution = false;

    bool operator==(const ResolutionResult&) const = default;

    std::vector<std::string> possible_values(const std::string& user) const;
    // Empty string when the user has no certain value.
    std::string certain_value(const std::string& user) const;
};

// CSV export: optional leading `# no_stable_solution` comment line, then
// header `user,key,value,certain` and one row per (user, possible value),
// sorted by (user, value). `certain` is `true` on the row carrying the
// user's certain value.
std::string result_to_csv(const ResolutionResult& res);

// The polynomial conflict-resolution algorithm. Extensionally equal to
// oracle_resolve on every instance; worst case O((|users|+|mappings|)^2),
// near-linear when the active domain is bounded.
//
// Outline: users that can reach an explicit belief for the key through
// trust edges must carry a value in every stable solution, so which users
// hold values is instance-determined. Each such user draws from the
// highest-priority level of its value-carrying sources; a stable solution
// exists iff every such user is derivable from believers through those
// top-level edges alone, and a value v is possible for a user iff the user
// is derivable from the v-believers.
ResolutionResult resolve(const TrustNetwork& net, const std::string& key);

// One result per key appearing in net.beliefs, in sorted key order.
std::vector<ResolutionResult> resolve_all_keys(const TrustNetwork& net);

// Strongly connected components of the trust graph (edge source -> target),
// in topological order: for every mapping, the source's component does not
// come after the target's. Users inside a component are sorted.
struct Condensation {
    std::vector<std::vector<std::string>> components;

    bool operator==(const Condensation&) const = default;
};

Condensation condense(const TrustNetwork& net);

}  // namespace trustres
