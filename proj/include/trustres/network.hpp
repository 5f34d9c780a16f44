#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "trustres/errors.hpp"

namespace trustres {

// A directed trust edge: `target` trusts `source` with the given priority.
// Larger priority means more trusted; equal priorities into one target are
// allowed and model ambiguity.
struct TrustMapping {
    std::string target;
    std::string source;
    std::uint32_t priority = 0;

    auto operator<=>(const TrustMapping&) const = default;
};

// An explicit (user, key, value) assertion. At most one per (user, key).
struct Belief {
    std::string user;
    std::string key;
    std::string value;

    auto operator<=>(const Belief&) const = default;
};

// Immutable, validated trust network. Users, mappings and beliefs are held
// in canonical sorted order, so value equality is set equality. All edit
// operations return a new network.
class TrustNetwork {
public:
    TrustNetwork() = default;

    // Validates raw input and builds the canonical form.
    // Throws ValidationError: UnknownUser, SelfTrust, DuplicateMapping,
    // DuplicateBelief, InvalidToken.
    static TrustNetwork build(std::vector<std::string> users,
                              std::vector<TrustMapping> mappings,
                              std::vector<Belief> beliefs);

    const std::vector<std::string>& users() const { return users_; }
    const std::vector<TrustMapping>& mappings() const { return mappings_; }
    const std::vector<Belief>& beliefs() const { return beliefs_; }

    bool has_user(const std::string& id) const;

    // Adds a belief, replacing any existing belief for the same (user, key).
    TrustNetwork insert_belief(const Belief& b) const;

    // Removes the (user, key) belief; silent no-op if absent.
    TrustNetwork revoke_belief(const std::string& user, const std::string& key) const;

    // Adds a mapping, replacing the priority of an existing (target, source).
    TrustNetwork add_mapping(const TrustMapping& m) const;

    // Removes the (target, source) mapping; silent no-op if absent.
    TrustNetwork revoke_mapping(const std::string& target, const std::string& source) const;

    // Sorted distinct values believed for `key`.
    std::vector<std::string> active_domain(const std::string& key) const;

    // Sorted distinct keys appearing in beliefs.
    std::vector<std::string> keys() const;

    // Component-wise union of networks with disjoint user sets.
    // Throws ValidationError(UserOverlap).
    static TrustNetwork disjoint_union(const TrustNetwork& a, const TrustNetwork& b);

    // Network size as used for scaling: |users| + |mappings|.
    std::size_t size() const { return users_.size() + mappings_.size(); }

    bool operator==(const TrustNetwork&) const = default;

private:
    std::vector<std::string> users_;
    std::vector<TrustMapping> mappings_;
    std::vector<Belief> beliefs_;
};

}  // namespace trustres
