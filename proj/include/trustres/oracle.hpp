#pragma once

#include <cstdint>

#include "trustres/resolution.hpp"
#include "trustres/translate.hpp"

namespace trustres {

struct OracleOptions {
    unsigned max_choice_atoms = kDefaultOracleLimit;
    // Skip candidates that fail the local offered-at-top-level condition
    // before the full stability check. Disabled only by tests that validate
    // the pruning against the unpruned search.
    bool prune = true;
};

struct OracleOutcome {
    ResolutionResult result;
    std::uint64_t model_count = 0;
};

// Ground-truth semantics: translates the instance, enumerates the stable
// models of the program by exhaustive search over candidate value
// assignments (intentionally exponential), and reads off brave (possible)
// and cautious (certain) values. Throws DomainTooLarge via translation.
OracleOutcome oracle_resolve(const TrustNetwork& net, const std::string& key,
                             const OracleOptions& options = {});

}  // namespace trustres
