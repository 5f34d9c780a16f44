#pragma once

#include <cstdint>
#include <string>

#include "trustres/network.hpp"
#include "trustres/poss.hpp"

namespace trustres {

// All generators are pure functions of (parameters, seed). Randomness comes
// from std::mt19937_64 with bounds taken by multiply-shift reduction, so a
// given seed reproduces the same bytes on every platform.

// `n_clusters` disconnected 4-user clusters sharing the key "k". Each
// cluster has two believers with distinct values drawn from a pool of
// `value_pool` values, and two belief-free users in a mutual trust cycle,
// each also trusting one believer, all at equal priority; every cluster
// instance admits at least two stable solutions.
TrustNetwork gen_cycle_clusters(std::size_t n_clusters, std::uint64_t seed,
                                std::size_t value_pool = 10);

// Preferential-attachment digraph: each new node trusts `edges_per_node`
// existing nodes chosen proportionally to their current in-trust degree,
// with priorities uniform in [1, 10]. A `belief_fraction` share of users
// receives an explicit belief on key "k" with a value from a pool of 10.
TrustNetwork gen_scale_free(std::size_t n_nodes, std::size_t edges_per_node,
                            std::uint64_t seed, double belief_fraction = 0.5);

// Keeps floor(fraction * |mappings|) uniformly sampled mappings plus both
// endpoints of every kept mapping; beliefs of surviving users are kept.
TrustNetwork sample_edges(const TrustNetwork& net, double fraction, std::uint64_t seed);

// Worst-case family: three concentric trust cycles over a shared spine of
// believers, one distinct value per spine column, all priorities equal.
// Every ring user can adopt every spine value, so resolution cost grows
// quadratically in n_users. Requires n_users >= 8; rounds down to a
// multiple of 4.
TrustNetwork gen_nested_cycles(std::size_t n_users, std::uint64_t seed);

// The fixed topology used for bulk experiments: 7 users, 12 mappings,
// no beliefs. Users "u1" and "u2" are the designated believers; "u3"
// trusts both at equal priority, every other user resolves conflicts
// through strict priorities.
TrustNetwork bulk_topology();

// Beliefs of the two designated users over `n_objects` keys. Exactly
// floor(conflict_fraction * n_objects) keys (a random subset) get distinct
// values; the rest agree. Values come from a pool of 10.
PossTable gen_bulk_workload(std::size_t n_objects, double conflict_fraction,
                            std::uint64_t seed);

}  // namespace trustres
