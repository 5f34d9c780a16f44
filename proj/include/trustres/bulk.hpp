#pragma once

#include "trustres/network.hpp"
#include "trustres/poss.hpp"

namespace trustres {

// Resolves every key of a POSS belief table over one trust topology.
// `topology` carries users and mappings only (beliefs must be empty).
// The output holds one row per (user, key, possible value), sorted by
// (key, user, value), and equals per-key resolution row-for-row.
//
// The value-flow structure (which users carry values, which edges they draw
// from, which users each believer reaches) depends only on the set of
// believing users, not on the believed values, so it is computed once per
// believer pattern and shared across keys. That makes the cost linear in
// the number of objects and independent of how many of them conflict.
//
// Throws ValidationError: NonEmptyTopologyBeliefs, UnknownUser,
// DuplicateBelief.
PossTable bulk_resolve(const TrustNetwork& topology, const PossTable& beliefs);

}  // namespace trustres
