#include "trustres/resolution.hpp"

#include <algorithm>
#include <unordered_map>

#include "trustres/detail/csv.hpp"

namespace trustres {

std::vector<std::string> ResolutionResult::possible_values(const std::string& user) const {
    auto it = std::lower_bound(users.begin(), users.end(), user);
    std::vector<std::string> out;
    if (it == users.end() || *it != user) return out;
    for (std::int32_t v : possible[static_cast<std::size_t>(it - users.begin())]) {
        out.push_back(values[static_cast<std::size_t>(v)]);
    }
    return out;
}

std::string ResolutionResult::certain_value(const std::string& user) const {
    auto it = std::lower_bound(users.begin(), users.end(), user);
    if (it == users.end() || *it != user) return {};
    std::int32_t c = certain[static_cast<std::size_t>(it - users.begin())];
    return c < 0 ? std::string{} : values[static_cast<std::size_t>(c)];
}

std::string result_to_csv(const ResolutionResult& res) {
    std::string out;
    if (res.no_stable_solution) out += "# no_stable_solution\n";
    out += "user,key,value,certain\n";
    for (std::size_t i = 0; i < res.users.size(); ++i) {
        for (std::int32_t v : res.possible[i]) {
            bool cert = res.certain[i] == v;
            out += detail::csv_line({res.users[i], res.key,
                                     res.values[static_cast<std::size_t>(v)],
                                     cert ? "true" : "false"});
        }
    }
    return out;
}

namespace {

struct Graph {
    std::unordered_map<std::string, std::int32_t> index;
    // out[s] lists (target, priority) for every mapping target<-source s.
    std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> out;
    std::vector<std::vector<std::pair<std::int32_t, std::uint32_t>>> in;
};

Graph build_graph(const TrustNetwork& net) {
    Graph g;
    const auto& users = net.users();
    g.index.reserve(users.size());
    for (std::size_t i = 0; i < users.size(); ++i) {
        g.index.emplace(users[i], static_cast<std::int32_t>(i));
    }
    g.out.resize(users.size());
    g.in.resize(users.size());
    for (const auto& m : net.mappings()) {
        std::int32_t t = g.index.at(m.target);
        std::int32_t s = g.index.at(m.source);
        g.out[static_cast<std::size_t>(s)].push_back({t, m.priority});
        g.in[static_cast<std::size_t>(t)].push_back({s, m.priority});
    }
    return g;
}

}  // namespace

ResolutionResult resolve(const TrustNetwork& net, const std::string& key) {
    const auto& users = net.users();
    const std::size_t n = users.size();
    Graph g = build_graph(net);

    ResolutionResult res;
    res.key = key;
    res.users = users;
    res.values = net.active_domain(key);
    res.possible.assign(n, {});
    res.certain.assign(n, -1);

    std::unordered_map<std::string, std::int32_t> value_index;
    for (std::size_t i = 0; i < res.values.size(); ++i) {
        value_index.emplace(res.values[i], static_cast<std::int32_t>(i));
    }
    std::vector<std::int32_t> belief(n, -1);
    for (const auto& b : net.beliefs()) {
        if (b.key == key) belief[static_cast<std::size_t>(g.index.at(b.user))] = value_index.at(b.value);
    }

    // Which users carry a value: exactly those that can reach a believer
    // against the trust direction (same in every stable solution).
    std::vector<char> defined(n, 0);
    std::vector<std::int32_t> queue;
    for (std::size_t u = 0; u < n; ++u) {
        if (belief[u] >= 0) {
            defined[u] = 1;
            queue.push_back(static_cast<std::int32_t>(u));
        }
    }
    while (!queue.empty()) {
        std::int32_t s = queue.back();
        queue.pop_back();
        for (auto [t, p] : g.out[static_cast<std::size_t>(s)]) {
            auto tu = static_cast<std::size_t>(t);
            if (!defined[tu] && belief[tu] < 0) {
                defined[tu] = 1;
                queue.push_back(t);
            }
        }
    }

    // Effective edges: each valueless-belief user draws only from the
    // highest-priority level among its value-carrying sources.
    std::vector<std::vector<std::int32_t>> eff_out(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (belief[u] >= 0 || !defined[u]) continue;
        std::uint32_t top = 0;
        for (auto [s, p] : g.in[u]) {
            if (defined[static_cast<std::size_t>(s)] && p > top) top = p;
        }
        for (auto [s, p] : g.in[u]) {
            if (defined[static_cast<std::size_t>(s)] && p == top) {
                eff_out[static_cast<std::size_t>(s)].push_back(static_cast<std::int32_t>(u));
            }
        }
    }

    // Foundedness: every value-carrying user must be derivable from the
    // believers through effective edges, otherwise no stable solution exists.
    std::vector<char> derivable(n, 0);
    std::size_t derived_count = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (belief[u] >= 0) {
            derivable[u] = 1;
            ++derived_count;
            queue.push_back(static_cast<std::int32_t>(u));
        }
    }
    while (!queue.empty()) {
        std::int32_t s = queue.back();
        queue.pop_back();
        for (std::int32_t t : eff_out[static_cast<std::size_t>(s)]) {
            auto tu = static_cast<std::size_t>(t);
            if (!derivable[tu]) {
                derivable[tu] = 1;
                ++derived_count;
                queue.push_back(t);
            }
        }
    }
    std::size_t defined_count = 0;
    for (std::size_t u = 0; u < n; ++u) defined_count += defined[u] ? 1 : 0;
    if (derived_count != defined_count) {
        res.no_stable_solution = true;
        return res;
    }

    // Per-value reachability over effective edges gives the possible sets.
    std::vector<std::int32_t> seen(n, -1);
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(res.values.size()); ++v) {
        for (std::size_t u = 0; u < n; ++u) {
            if (belief[u] == v) {
                seen[u] = v;
                queue.push_back(static_cast<std::int32_t>(u));
            }
        }
        while (!queue.empty()) {
            std::int32_t s = queue.back();
            queue.pop_back();
            res.possible[static_cast<std::size_t>(s)].push_back(v);
            for (std::int32_t t : eff_out[static_cast<std::size_t>(s)]) {
                if (seen[static_cast<std::size_t>(t)] != v) {
                    seen[static_cast<std::size_t>(t)] = v;
                    queue.push_back(t);
                }
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (res.possible[u].size() == 1) res.certain[u] = res.possible[u][0];
    }
    return res;
}

std::vector<ResolutionResult> resolve_all_keys(const TrustNetwork& net) {
    std::vector<ResolutionResult> out;
    for (const auto& k : net.keys()) out.push_back(resolve(net, k));
    return out;
}

Condensation condense(const TrustNetwork& net) {
    const auto& users = net.users();
    const std::size_t n = users.size();
    Graph g = build_graph(net);

    // Iterative Tarjan; components pop in reverse topological order.
    std::vector<std::int32_t> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<std::int32_t> stack;
    std::vector<std::vector<std::int32_t>> comps;
    std::int32_t next_index = 0;

    struct Frame {
        std::int32_t node;
        std::size_t edge = 0;
    };
    std::vector<Frame> frames;

    for (std::size_t start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        frames.push_back({static_cast<std::int32_t>(start)});
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto u = static_cast<std::size_t>(f.node);
            if (f.edge == 0) {
                index[u] = low[u] = next_index++;
                stack.push_back(f.node);
                on_stack[u] = 1;
            }
            bool descended = false;
            while (f.edge < g.out[u].size()) {
                std::int32_t w = g.out[u][f.edge].first;
                ++f.edge;
                auto wu = static_cast<std::size_t>(w);
                if (index[wu] == -1) {
                    frames.push_back({w});
                    descended = true;
                    break;
                }
                if (on_stack[wu]) low[u] = std::min(low[u], index[wu]);
            }
            if (descended) continue;
            if (low[u] == index[u]) {
                std::vector<std::int32_t> c;
                for (;;) {
                    std::int32_t w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] =
                        static_cast<std::int32_t>(comps.size());
                    c.push_back(w);
                    if (w == f.node) break;
                }
                comps.push_back(std::move(c));
            }
            frames.pop_back();
            if (!frames.empty()) {
                auto pu = static_cast<std::size_t>(frames.back().node);
                low[pu] = std::min(low[pu], low[u]);
            }
        }
    }

    Condensation cond;
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
        std::vector<std::string> names;
        for (std::int32_t u : *it) names.push_back(users[static_cast<std::size_t>(u)]);
        std::sort(names.begin(), names.end());
        cond.components.push_back(std::move(names));
    }
    return cond;
}

}  // namespace trustres
