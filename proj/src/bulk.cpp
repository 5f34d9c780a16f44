#include "trustres/bulk.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace trustres {

namespace {

using UserIdx = std::int32_t;

struct FlowStructure {
    bool solvable = true;  // false: keys with this believer pattern have no stable solution
    std::vector<std::vector<UserIdx>> eff_out;
    std::vector<char> defined;
    // Users reached from a given seed subset of the believers, sorted.
    std::map<std::vector<UserIdx>, std::vector<UserIdx>> reach_cache;
};

struct Topology {
    std::vector<std::string> users;
    std::unordered_map<std::string, UserIdx> index;
    std::vector<std::vector<std::pair<UserIdx, std::uint32_t>>> in;
    std::vector<std::vector<UserIdx>> out;
};

FlowStructure build_structure(const Topology& topo, const std::vector<UserIdx>& believers) {
    const std::size_t n = topo.users.size();
    FlowStructure fs;
    fs.defined.assign(n, 0);
    std::vector<char> is_believer(n, 0);
    std::vector<UserIdx> queue;
    for (UserIdx b : believers) {
        is_believer[static_cast<std::size_t>(b)] = 1;
        fs.defined[static_cast<std::size_t>(b)] = 1;
        queue.push_back(b);
    }
    while (!queue.empty()) {
        UserIdx s = queue.back();
        queue.pop_back();
        for (UserIdx t : topo.out[static_cast<std::size_t>(s)]) {
            auto tu = static_cast<std::size_t>(t);
            if (!fs.defined[tu] && !is_believer[tu]) {
                fs.defined[tu] = 1;
                queue.push_back(t);
            }
        }
    }

    fs.eff_out.assign(n, {});
    for (std::size_t u = 0; u < n; ++u) {
        if (is_believer[u] || !fs.defined[u]) continue;
        std::uint32_t top = 0;
        for (auto [s, p] : topo.in[u]) {
            if (fs.defined[static_cast<std::size_t>(s)] && p > top) top = p;
        }
        for (auto [s, p] : topo.in[u]) {
            if (fs.defined[static_cast<std::size_t>(s)] && p == top) {
                fs.eff_out[static_cast<std::size_t>(s)].push_back(static_cast<UserIdx>(u));
            }
        }
    }

    std::vector<char> derivable(n, 0);
    std::size_t derived = 0, defined_count = 0;
    for (UserIdx b : believers) {
        derivable[static_cast<std::size_t>(b)] = 1;
        ++derived;
        queue.push_back(b);
    }
    while (!queue.empty()) {
        UserIdx s = queue.back();
        queue.pop_back();
        for (UserIdx t : fs.eff_out[static_cast<std::size_t>(s)]) {
            auto tu = static_cast<std::size_t>(t);
            if (!derivable[tu]) {
                derivable[tu] = 1;
                ++derived;
                queue.push_back(t);
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) defined_count += fs.defined[u] ? 1 : 0;
    fs.solvable = (derived == defined_count);
    return fs;
}

const std::vector<UserIdx>& reach(FlowStructure& fs, const std::vector<UserIdx>& seeds) {
    auto it = fs.reach_cache.find(seeds);
    if (it != fs.reach_cache.end()) return it->second;

    std::vector<char> seen(fs.eff_out.size(), 0);
    std::vector<UserIdx> queue = seeds;
    std::vector<UserIdx> reached;
    for (UserIdx s : seeds) seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
        UserIdx s = queue.back();
        queue.pop_back();
        reached.push_back(s);
        for (UserIdx t : fs.eff_out[static_cast<std::size_t>(s)]) {
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                queue.push_back(t);
            }
        }
    }
    std::sort(reached.begin(), reached.end());
    return fs.reach_cache.emplace(seeds, std::move(reached)).first->second;
}

}  // namespace

PossTable bulk_resolve(const TrustNetwork& topology, const PossTable& beliefs) {
    if (!topology.beliefs().empty()) {
        throw ValidationError(ValidationKind::NonEmptyTopologyBeliefs,
                              "bulk topology must not carry beliefs");
    }
    beliefs.validate_as_beliefs();

    Topology topo;
    topo.users = topology.users();
    for (std::size_t i = 0; i < topo.users.size(); ++i) {
        topo.index.emplace(topo.users[i], static_cast<UserIdx>(i));
    }
    topo.in.assign(topo.users.size(), {});
    topo.out.assign(topo.users.size(), {});
    for (const auto& m : topology.mappings()) {
        UserIdx t = topo.index.at(m.target);
        UserIdx s = topo.index.at(m.source);
        topo.in[static_cast<std::size_t>(t)].push_back({s, m.priority});
        topo.out[static_cast<std::size_t>(s)].push_back(t);
    }

    PossTable input = beliefs;
    for (const auto& r : input.rows) {
        if (!topo.index.count(r.user)) {
            throw ValidationError(ValidationKind::UnknownUser,
                                  "belief references unknown user '" + r.user + "'");
        }
    }
    input.canonicalize();

    std::map<std::vector<UserIdx>, FlowStructure> structures;
    PossTable output;

    std::size_t i = 0;
    std::vector<std::pair<UserIdx, const std::string*>> group;  // (user, value)
    std::vector<UserIdx> believer_set;
    std::vector<std::pair<std::string, std::string>> out_pairs;  // (user, value)
    while (i < input.rows.size()) {
        const std::string& key = input.rows[i].key;
        group.clear();
        believer_set.clear();
        while (i < input.rows.size() && input.rows[i].key == key) {
            group.push_back({topo.index.at(input.rows[i].user), &input.rows[i].value});
            believer_set.push_back(group.back().first);
            ++i;
        }
        std::sort(believer_set.begin(), believer_set.end());

        auto [sit, inserted] = structures.try_emplace(believer_set);
        FlowStructure& fs = sit->second;
        if (inserted) fs = build_structure(topo, believer_set);
        if (!fs.solvable) continue;  // no stable solution: empty possible sets

        out_pairs.clear();
        // Group believers by value; each value's possible set is the reach of
        // its believer subset through the effective edges.
        std::map<std::string, std::vector<UserIdx>> by_value;
        for (auto [u, v] : group) by_value[*v].push_back(u);
        for (auto& [value, seeds] : by_value) {
            std::sort(seeds.begin(), seeds.end());
            for (UserIdx u : reach(fs, seeds)) {
                out_pairs.push_back({topo.users[static_cast<std::size_t>(u)], value});
            }
        }
        std::sort(out_pairs.begin(), out_pairs.end());
        for (auto& [user, value] : out_pairs) {
            output.rows.push_back({user, key, value});
        }
    }
    return output;
}

}  // namespace trustres
