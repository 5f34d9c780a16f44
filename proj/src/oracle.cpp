#include "trustres/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace trustres {

namespace {

struct Search {
    const TranslatedInstance& inst;
    const OracleOptions& opts;
    std::size_t n;
    std::size_t nd;

    // In-mappings restricted to value-carrying sources.
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> in;
    std::vector<char> carries;

    std::vector<std::size_t> order;                 // choice users, DFS order
    std::vector<std::vector<std::size_t>> checks_at;  // local checks per depth
    std::vector<std::int32_t> assign;               // value idx, -1 = no value

    // Leaf evaluation scratch.
    std::vector<char> is_val_rule;
    std::vector<AtomId> candidate;

    // Accumulated answers.
    std::uint64_t model_count = 0;
    std::vector<std::vector<char>> possible_mark;
    std::vector<std::int32_t> cert_val;  // -2 unset, -3 contradicted
    bool cert_init = false;

    Search(const TranslatedInstance& i, const TrustNetwork& net, const OracleOptions& o)
        : inst(i), opts(o), n(i.users.size()), nd(i.domain.size()) {
        carries.assign(n, 0);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < nd; ++v) {
                if (inst.val_atom[u][v] >= 0) carries[u] = 1;
            }
        }
        std::unordered_map<std::string, std::size_t> uidx;
        for (std::size_t u = 0; u < n; ++u) uidx.emplace(inst.users[u], u);
        in.assign(n, {});
        std::vector<std::vector<std::size_t>> out(n);
        for (const auto& m : net.mappings()) {
            std::size_t t = uidx.at(m.target);
            std::size_t s = uidx.at(m.source);
            if (carries[s]) in[t].push_back({s, m.priority});
            out[s].push_back(t);
        }

        // Choice users ordered by BFS distance from the believers, so local
        // checks become decidable early.
        std::vector<int> dist(n, -1);
        std::deque<std::size_t> bfs;
        for (std::size_t u = 0; u < n; ++u) {
            if (inst.belief_value[u] >= 0) {
                dist[u] = 0;
                bfs.push_back(u);
            }
        }
        while (!bfs.empty()) {
            std::size_t s = bfs.front();
            bfs.pop_front();
            for (std::size_t t : out[s]) {
                if (dist[t] < 0) {
                    dist[t] = dist[s] + 1;
                    bfs.push_back(t);
                }
            }
        }
        for (std::size_t u = 0; u < n; ++u) {
            if (carries[u] && inst.belief_value[u] < 0) order.push_back(u);
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

        // A user's local condition is checkable once it and all its carrying
        // sources are assigned; attach it to the latest such depth.
        std::vector<std::size_t> depth_of(n, 0);
        std::vector<char> is_choice(n, 0);
        for (std::size_t d = 0; d < order.size(); ++d) {
            depth_of[order[d]] = d;
            is_choice[order[d]] = 1;
        }
        checks_at.assign(order.size(), {});
        if (opts.prune) {
            for (std::size_t u = 0; u < n; ++u) {
                if (!carries[u] || inst.belief_value[u] >= 0) continue;
                std::size_t last = depth_of[u];
                for (auto [s, p] : in[u]) {
                    if (is_choice[s]) last = std::max(last, depth_of[s]);
                }
                checks_at[last].push_back(u);
            }
        }

        assign.assign(n, -1);
        for (std::size_t u = 0; u < n; ++u) assign[u] = inst.belief_value[u];

        is_val_rule.assign(inst.program.rules().size(), 0);
        std::vector<char> is_val_atom(inst.program.atom_count(), 0);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < nd; ++v) {
                if (inst.val_atom[u][v] >= 0) {
                    is_val_atom[static_cast<std::size_t>(inst.val_atom[u][v])] = 1;
                }
            }
        }
        const auto& rules = inst.program.rules();
        for (std::size_t r = 0; r < rules.size(); ++r) {
            is_val_rule[r] = is_val_atom[static_cast<std::size_t>(rules[r].head)];
        }

        possible_mark.assign(n, std::vector<char>(nd, 0));
        cert_val.assign(n, -2);
    }

    // Necessary stability condition for user u under a full assignment of u
    // and its sources: u holds a value iff some source does, and that value
    // must be offered at the highest-priority level holding any value.
    bool locally_stable(std::size_t u) const {
        std::uint32_t top = 0;
        bool any = false;
        for (auto [s, p] : in[u]) {
            if (assign[s] >= 0 && (!any || p > top)) {
                top = p;
                any = true;
            }
        }
        if (!any) return assign[u] < 0;
        if (assign[u] < 0) return false;
        for (auto [s, p] : in[u]) {
            if (p == top && assign[s] == assign[u]) return true;
        }
        return false;
    }

    void check_leaf() {
        // Complete the candidate: chosen val atoms plus the deterministic
        // closure of the aux rules, then run the authoritative GL check.
        candidate.clear();
        for (std::size_t u = 0; u < n; ++u) {
            if (assign[u] >= 0) {
                candidate.push_back(inst.val_atom[u][static_cast<std::size_t>(assign[u])]);
            }
        }
        const auto& prog = inst.program;
        const auto& rules = prog.rules();
        std::vector<char> truth(prog.atom_count(), 0);
        for (AtomId a : candidate) truth[static_cast<std::size_t>(a)] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t r = 0; r < rules.size(); ++r) {
                if (is_val_rule[r] || truth[static_cast<std::size_t>(rules[r].head)]) continue;
                bool body = true;
                for (AtomId a : rules[r].positive_body) {
                    if (!truth[static_cast<std::size_t>(a)]) {
                        body = false;
                        break;
                    }
                }
                if (body) {
                    truth[static_cast<std::size_t>(rules[r].head)] = 1;
                    changed = true;
                }
            }
        }
        Interpretation m;
        for (std::size_t a = 0; a < truth.size(); ++a) {
            if (truth[a]) m.true_atoms.push_back(static_cast<AtomId>(a));
        }
        if (!is_stable_model(prog, m)) return;

        ++model_count;
        for (std::size_t u = 0; u < n; ++u) {
            if (assign[u] >= 0) possible_mark[u][static_cast<std::size_t>(assign[u])] = 1;
        }
        if (!cert_init) {
            for (std::size_t u = 0; u < n; ++u) cert_val[u] = assign[u];
            cert_init = true;
        } else {
            for (std::size_t u = 0; u < n; ++u) {
                if (cert_val[u] != assign[u]) cert_val[u] = -3;
            }
        }
    }

    void dfs(std::size_t depth) {
        if (depth == order.size()) {
            check_leaf();
            return;
        }
        std::size_t u = order[depth];
        for (std::int32_t choice = -1; choice < static_cast<std::int32_t>(nd); ++choice) {
            assign[u] = choice;
            bool ok = true;
            for (std::size_t w : checks_at[depth]) {
                if (!locally_stable(w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(depth + 1);
        }
        assign[u] = -1;
    }
};

}  // namespace

OracleOutcome oracle_resolve(const TrustNetwork& net, const std::string& key,
                             const OracleOptions& options) {
    TranslatedInstance inst = translate_to_program(net, key, options.max_choice_atoms);
    Search search(inst, net, options);
    search.dfs(0);

    OracleOutcome out;
    out.model_count = search.model_count;
    ResolutionResult& res = out.result;
    res.key = key;
    res.users = inst.users;
    res.values = inst.domain;
    res.possible.assign(res.users.size(), {});
    res.certain.assign(res.users.size(), -1);
    if (search.model_count == 0) {
        res.no_stable_solution = true;
        return out;
    }
    for (std::size_t u = 0; u < res.users.size(); ++u) {
        for (std::size_t v = 0; v < res.values.size(); ++v) {
            if (search.possible_mark[u][v]) {
                res.possible[u].push_back(static_cast<std::int32_t>(v));
            }
        }
        if (search.cert_val[u] >= 0) res.certain[u] = search.cert_val[u];
    }
    return out;
}

}  // namespace trustres
