#include "trustres/program.hpp"

#include <algorithm>
#include <sstream>

#include "trustres/detail/bitset.hpp"

namespace trustres {

bool Interpretation::contains(AtomId a) const {
    return std::binary_search(true_atoms.begin(), true_atoms.end(), a);
}

AtomId GroundProgram::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    AtomId id = static_cast<AtomId>(atoms_.size());
    atoms_.push_back(name);
    index_.emplace(name, id);
    return id;
}

AtomId GroundProgram::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

void GroundProgram::add_fact(AtomId head) { add_rule(head, {}, {}); }

void GroundProgram::add_rule(AtomId head, std::vector<AtomId> positive,
                             std::vector<AtomId> negative) {
    std::sort(positive.begin(), positive.end());
    std::sort(negative.begin(), negative.end());
    rules_.push_back({head, std::move(positive), std::move(negative)});
}

std::string GroundProgram::dump() const {
    std::ostringstream out;
    for (const auto& r : rules_) {
        out << atom_name(r.head);
        if (!r.positive_body.empty() || !r.negative_body.empty()) {
            out << " :- ";
            bool first = true;
            for (AtomId a : r.positive_body) {
                if (!first) out << ", ";
                out << atom_name(a);
                first = false;
            }
            for (AtomId a : r.negative_body) {
                if (!first) out << ", ";
                out << "not " << atom_name(a);
                first = false;
            }
        }
        out << ".\n";
    }
    return out.str();
}

namespace {

using detail::Bitset;

Bitset to_bits(const Interpretation& m, std::size_t n) {
    Bitset b(n);
    for (AtomId a : m.true_atoms) b.set(static_cast<std::size_t>(a));
    return b;
}

Interpretation from_bits(const Bitset& b) {
    Interpretation m;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b.test(i)) m.true_atoms.push_back(static_cast<AtomId>(i));
    }
    return m;
}

// Dowling-Gallier style least-model computation over the rules for which
// `survives` is true, ignoring negative bodies.
Bitset least_model_bits(const GroundProgram& p, const std::vector<char>& survives) {
    const auto& rules = p.rules();
    std::vector<std::uint32_t> missing(rules.size(), 0);
    std::vector<std::vector<std::uint32_t>> watchers(p.atom_count());
    Bitset model(p.atom_count());
    std::vector<AtomId> queue;

    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (!survives[i]) continue;
        missing[i] = static_cast<std::uint32_t>(rules[i].positive_body.size());
        for (AtomId a : rules[i].positive_body) {
            watchers[static_cast<std::size_t>(a)].push_back(static_cast<std::uint32_t>(i));
        }
        if (missing[i] == 0 && !model.test(static_cast<std::size_t>(rules[i].head))) {
            model.set(static_cast<std::size_t>(rules[i].head));
            queue.push_back(rules[i].head);
        }
    }
    while (!queue.empty()) {
        AtomId a = queue.back();
        queue.pop_back();
        for (std::uint32_t ri : watchers[static_cast<std::size_t>(a)]) {
            if (--missing[ri] == 0) {
                AtomId h = rules[ri].head;
                if (!model.test(static_cast<std::size_t>(h))) {
                    model.set(static_cast<std::size_t>(h));
                    queue.push_back(h);
                }
            }
        }
    }
    return model;
}

std::vector<char> surviving_rules(const GroundProgram& p, const Bitset& m) {
    const auto& rules = p.rules();
    std::vector<char> survives(rules.size(), 1);
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (AtomId a : rules[i].negative_body) {
            if (m.test(static_cast<std::size_t>(a))) {
                survives[i] = 0;
                break;
            }
        }
    }
    return survives;
}

}  // namespace

GroundProgram reduct(const GroundProgram& program, const Interpretation& m) {
    Bitset bits = to_bits(m, program.atom_count());
    GroundProgram out;
    // Preserve the full atom universe so ids stay aligned.
    for (std::size_t i = 0; i < program.atom_count(); ++i) {
        out.intern(program.atom_name(static_cast<AtomId>(i)));
    }
    for (const auto& r : program.rules()) {
        bool dropped = false;
        for (AtomId a : r.negative_body) {
            if (bits.test(static_cast<std::size_t>(a))) {
                dropped = true;
                break;
            }
        }
        if (!dropped) out.add_rule(r.head, r.positive_body, {});
    }
    return out;
}

Interpretation minimal_model(const GroundProgram& definite) {
    for (const auto& r : definite.rules()) {
        if (!r.negative_body.empty()) {
            throw NotDefinite("rule for '" + definite.atom_name(r.head) +
                              "' has a negative body");
        }
    }
    std::vector<char> all(definite.rules().size(), 1);
    return from_bits(least_model_bits(definite, all));
}

bool is_stable_model(const GroundProgram& program, const Interpretation& m) {
    Bitset bits = to_bits(m, program.atom_count());
    return least_model_bits(program, surviving_rules(program, bits)) == bits;
}

std::vector<Interpretation> enumerate_stable_models(const GroundProgram& program,
                                                    unsigned max_guess_atoms) {
    // Stable models are determined by their restriction to atoms that occur
    // negatively: the reduct depends only on those, and the model is the
    // reduct's least model.
    std::vector<char> occurs_neg(program.atom_count(), 0);
    for (const auto& r : program.rules()) {
        for (AtomId a : r.negative_body) occurs_neg[static_cast<std::size_t>(a)] = 1;
    }
    std::vector<AtomId> guess_atoms;
    for (std::size_t i = 0; i < occurs_neg.size(); ++i) {
        if (occurs_neg[i]) guess_atoms.push_back(static_cast<AtomId>(i));
    }
    if (guess_atoms.size() > max_guess_atoms) {
        throw DomainTooLarge("enumeration over " + std::to_string(guess_atoms.size()) +
                             " negatively-occurring atoms exceeds the limit of " +
                             std::to_string(max_guess_atoms));
    }

    const auto& rules = program.rules();
    std::vector<Interpretation> models;
    Bitset guess(program.atom_count());
    std::vector<char> survives(rules.size(), 1);
    const std::uint64_t total = std::uint64_t(1) << guess_atoms.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        guess.clear();
        for (std::size_t j = 0; j < guess_atoms.size(); ++j) {
            if (mask & (std::uint64_t(1) << j)) guess.set(static_cast<std::size_t>(guess_atoms[j]));
        }
        for (std::size_t i = 0; i < rules.size(); ++i) {
            survives[i] = 1;
            for (AtomId a : rules[i].negative_body) {
                if (guess.test(static_cast<std::size_t>(a))) {
                    survives[i] = 0;
                    break;
                }
            }
        }
        Bitset lm = least_model_bits(program, survives);
        // The candidate is consistent iff the least model agrees with the guess
        // on every guessed atom.
        bool consistent = true;
        for (AtomId a : guess_atoms) {
            if (lm.test(static_cast<std::size_t>(a)) != guess.test(static_cast<std::size_t>(a))) {
                consistent = false;
                break;
            }
        }
        if (consistent) models.push_back(from_bits(lm));
    }

    std::sort(models.begin(), models.end(), [&](const Interpretation& a, const Interpretation& b) {
        std::vector<std::string> an, bn;
        for (AtomId x : a.true_atoms) an.push_back(program.atom_name(x));
        for (AtomId x : b.true_atoms) bn.push_back(program.atom_name(x));
        std::sort(an.begin(), an.end());
        std::sort(bn.begin(), bn.end());
        return an < bn;
    });
    models.erase(std::unique(models.begin(), models.end()), models.end());
    return models;
}

}  // namespace trustres
