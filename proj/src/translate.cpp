#include "trustres/translate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace trustres {

namespace {

std::string val_name(const std::string& u, const std::string& v) {
    return "val(" + u + "," + v + ")";
}

std::string level_name(const char* tag, const std::string& u, std::uint32_t p) {
    return std::string(tag) + "(" + u + "," + std::to_string(p) + ")";
}

}  // namespace

TranslatedInstance translate_to_program(const TrustNetwork& net, const std::string& key,
                                        unsigned max_choice_atoms) {
    TranslatedInstance inst;
    inst.users = net.users();
    inst.domain = net.active_domain(key);
    const std::size_t n = inst.users.size();
    const std::size_t nd = inst.domain.size();

    std::unordered_map<std::string, std::size_t> uidx;
    for (std::size_t i = 0; i < n; ++i) uidx.emplace(inst.users[i], i);
    std::unordered_map<std::string, std::int32_t> vidx;
    for (std::size_t i = 0; i < nd; ++i) vidx.emplace(inst.domain[i], static_cast<std::int32_t>(i));

    inst.belief_value.assign(n, -1);
    for (const auto& b : net.beliefs()) {
        if (b.key == key) inst.belief_value[uidx.at(b.user)] = vidx.at(b.value);
    }

    // In-mappings grouped per user.
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> in(n);
    for (const auto& m : net.mappings()) {
        in[uidx.at(m.target)].push_back({uidx.at(m.source), m.priority});
    }

    // A user can carry values iff it believes, or some trusted source can.
    std::vector<char> carries(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> queue;
    for (std::size_t u = 0; u < n; ++u) {
        if (inst.belief_value[u] >= 0) {
            carries[u] = 1;
            queue.push_back(u);
        }
        for (auto [s, p] : in[u]) out[s].push_back(u);
    }
    while (!queue.empty()) {
        std::size_t s = queue.back();
        queue.pop_back();
        for (std::size_t t : out[s]) {
            if (!carries[t] && inst.belief_value[t] < 0) {
                carries[t] = 1;
                queue.push_back(t);
            }
        }
    }

    inst.choice_atom_count = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (carries[u] && inst.belief_value[u] < 0) inst.choice_atom_count += nd;
    }
    if (inst.choice_atom_count > max_choice_atoms) {
        throw DomainTooLarge("instance needs " + std::to_string(inst.choice_atom_count) +
                             " choice atoms, limit is " + std::to_string(max_choice_atoms));
    }

    GroundProgram& prog = inst.program;
    inst.val_atom.assign(n, std::vector<AtomId>(nd, -1));
    for (std::size_t u = 0; u < n; ++u) {
        if (!carries[u]) continue;
        if (inst.belief_value[u] >= 0) {
            auto v = static_cast<std::size_t>(inst.belief_value[u]);
            inst.val_atom[u][v] = prog.intern(val_name(inst.users[u], inst.domain[v]));
        } else {
            for (std::size_t v = 0; v < nd; ++v) {
                inst.val_atom[u][v] = prog.intern(val_name(inst.users[u], inst.domain[v]));
            }
        }
    }

    // Facts for explicit beliefs.
    for (std::size_t u = 0; u < n; ++u) {
        if (inst.belief_value[u] >= 0) {
            prog.add_fact(inst.val_atom[u][static_cast<std::size_t>(inst.belief_value[u])]);
        }
    }

    // Trust rules for value-carrying users without a belief.
    for (std::size_t u = 0; u < n; ++u) {
        if (!carries[u] || inst.belief_value[u] >= 0) continue;

        // Group sources by priority level, ascending.
        std::map<std::uint32_t, std::vector<std::size_t>> levels;
        for (auto [s, p] : in[u]) {
            if (carries[s]) levels[p].push_back(s);
        }

        // offer/sup atoms per level, only where a source can supply the value.
        std::map<std::uint32_t, std::vector<AtomId>> offer;
        std::map<std::uint32_t, AtomId> sup;
        for (const auto& [p, sources] : levels) {
            std::vector<AtomId> offers(nd, -1);
            bool any = false;
            for (std::size_t v = 0; v < nd; ++v) {
                for (std::size_t s : sources) {
                    if (inst.val_atom[s][v] < 0) continue;
                    if (offers[v] < 0) {
                        offers[v] = prog.intern("offer(" + inst.users[u] + "," +
                                                std::to_string(p) + "," + inst.domain[v] + ")");
                        any = true;
                    }
                    prog.add_rule(offers[v], {inst.val_atom[s][v]}, {});
                }
            }
            if (!any) continue;
            AtomId s_atom = prog.intern(level_name("sup", inst.users[u], p));
            for (std::size_t v = 0; v < nd; ++v) {
                if (offers[v] >= 0) prog.add_rule(s_atom, {offers[v]}, {});
            }
            sup[p] = s_atom;
            offer[p] = std::move(offers);
        }

        // blocked(u,p) holds when a strictly higher level has an offer.
        std::map<std::uint32_t, AtomId> blocked;
        for (const auto& [p, offers] : offer) {
            AtomId b_atom = -1;
            for (const auto& [q, s_atom] : sup) {
                if (q <= p) continue;
                if (b_atom < 0) b_atom = prog.intern(level_name("blocked", inst.users[u], p));
                prog.add_rule(b_atom, {s_atom}, {});
            }
            if (b_atom >= 0) blocked[p] = b_atom;
        }

        for (const auto& [p, offers] : offer) {
            for (std::size_t v = 0; v < nd; ++v) {
                if (offers[v] < 0) continue;
                std::vector<AtomId> neg;
                auto bit = blocked.find(p);
                if (bit != blocked.end()) neg.push_back(bit->second);
                for (std::size_t w = 0; w < nd; ++w) {
                    if (w != v && inst.val_atom[u][w] >= 0) neg.push_back(inst.val_atom[u][w]);
                }
                prog.add_rule(inst.val_atom[u][v], {offers[v]}, std::move(neg));
            }
        }
    }

    return inst;
}

}  // namespace trustres
