#pragma once

#include <string>
#include <vector>

#include "trustres/network.hpp"

namespace trustres {

// One row of the POSS(X,K,V) relation: X = user, K = key, V = value.
struct PossRow {
    std::string user;
    std::string key;
    std::string value;

    auto operator<=>(const PossRow&) const = default;
};

// Flat (user, key, value) relation. Input tables hold explicit beliefs
// (at most one row per (user, key)); output tables hold possible values.
struct PossTable {
    std::vector<PossRow> rows;

    bool operator==(const PossTable&) const = default;

    // Sorts rows by (key, user, value).
    void canonicalize();

    // Throws ValidationError(DuplicateBelief) when a (user, key) pair
    // repeats, or InvalidToken on empty fields.
    void validate_as_beliefs() const;
};

// CSV contract: header exactly `X,K,V`, comma-separated, fields containing
// commas or quotes double-quoted with internal quotes doubled, '\n' line
// endings. Same format for input beliefs and output possible values.
std::string poss_to_csv(const PossTable& table);
PossTable poss_from_csv(const std::string& text);

void write_poss(const PossTable& table, const std::string& path);
PossTable load_poss(const std::string& path);

}  // namespace trustres
