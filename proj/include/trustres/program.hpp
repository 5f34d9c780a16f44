#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "trustres/errors.hpp"

namespace trustres {

// Atoms are interned strings; AtomId indexes the program's atom table.
using AtomId = std::int32_t;

struct GroundRule {
    AtomId head = -1;
    std::vector<AtomId> positive_body;
    std::vector<AtomId> negative_body;

    bool operator==(const GroundRule&) const = default;
};

// A set of atoms, stored as sorted atom ids over one program's atom table.
struct Interpretation {
    std::vector<AtomId> true_atoms;  // sorted ascending

    bool operator==(const Interpretation&) const = default;
    bool contains(AtomId a) const;
};

// Ground normal logic program over an interned atom universe.
class GroundProgram {
public:
    AtomId intern(const std::string& name);
    AtomId find(const std::string& name) const;  // -1 if absent
    const std::string& atom_name(AtomId id) const { return atoms_[static_cast<std::size_t>(id)]; }
    std::size_t atom_count() const { return atoms_.size(); }

    void add_fact(AtomId head);
    void add_rule(AtomId head, std::vector<AtomId> positive, std::vector<AtomId> negative);

    const std::vector<GroundRule>& rules() const { return rules_; }

    // Text dump, one rule per line: `head :- p1, ..., not n1, ... .`
    // Facts print as `head.`. Rules in insertion order.
    std::string dump() const;

private:
    std::vector<std::string> atoms_;
    std::unordered_map<std::string, AtomId> index_;
    std::vector<GroundRule> rules_;
};

// Gelfond-Lifschitz reduct: drop rules whose negative body intersects m,
// strip negative bodies from the rest. Shares m's atom table semantics
// (same program universe).
GroundProgram reduct(const GroundProgram& program, const Interpretation& m);

// Least model of a definite program. Throws NotDefinite if any rule still
// carries a negative body.
Interpretation minimal_model(const GroundProgram& definite);

// True iff minimal_model(reduct(program, m)) == m.
bool is_stable_model(const GroundProgram& program, const Interpretation& m);

// Exhaustive stable-model enumeration. Guesses truth values for atoms that
// occur in negative bodies (the rest is determined by the least fixpoint);
// throws DomainTooLarge if more than `max_guess_atoms` such atoms exist.
// Result is in canonical order: lexicographic by sorted atom-name list.
std::vector<Interpretation> enumerate_stable_models(const GroundProgram& program,
                                                    unsigned max_guess_atoms = 24);

}  // namespace trustres
