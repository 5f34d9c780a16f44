#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustres/network.hpp"
#include "trustres/program.hpp"

namespace trustres {

// Logic-program translation of one (network, key) instance.
//
// Rule schema. Let D be the key's active domain. Users holding an explicit
// belief (u, key, b) contribute the unconditional fact
//     val(u,b).
// and nothing else (explicit beliefs are never overridden). Every other
// user u whose trusted sources can carry values gets, for each priority
// level p among its mappings and each value v in D:
//     offer(u,p,v) :- val(s,v).          for each source s trusted at p
//     sup(u,p)     :- offer(u,p,v).
//     blocked(u,p) :- sup(u,q).          for each level q > p
//     val(u,v)     :- offer(u,p,v), not blocked(u,p),
//                     not val(u,v') ...  for each v' != v
// so u adopts exactly one value offered at its highest non-empty priority
// level, and the Gelfond-Lifschitz condition makes adopted values founded
// in explicit beliefs. Atoms that no rule can ever derive are not created.
//
// Stable models correspond one-to-one to the stable solutions of the
// instance; each model carries at most one val(u, .) atom per user.

struct TranslatedInstance {
    GroundProgram program;
    std::vector<std::string> users;   // net.users(), sorted
    std::vector<std::string> domain;  // active domain, sorted
    // Per user: index into domain for an explicit belief, or -1.
    std::vector<std::int32_t> belief_value;
    // val_atom[u][v] is the atom id of val(users[u], domain[v]), or -1 when
    // the atom cannot be derived and was not created.
    std::vector<std::vector<AtomId>> val_atom;
    // Number of val atoms belonging to users without an explicit belief;
    // bounds the oracle's search space at 2^choice_atom_count.
    std::size_t choice_atom_count = 0;
};

inline constexpr unsigned kDefaultOracleLimit = 24;

// Throws DomainTooLarge when choice_atom_count would exceed `max_choice_atoms`.
TranslatedInstance translate_to_program(const TrustNetwork& net, const std::string& key,
                                        unsigned max_choice_atoms = kDefaultOracleLimit);

}  // namespace trustres
