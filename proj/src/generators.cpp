#include "trustres/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace trustres {

namespace {

// mt19937_64 output reduced by multiply-shift; avoids the
// implementation-defined behavior of std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

private:
    std::mt19937_64 engine_;
};

std::string user_name(std::size_t i) { return "u" + std::to_string(i + 1); }
std::string value_name(std::size_t i) { return "v" + std::to_string(i + 1); }

}  // namespace

TrustNetwork gen_cycle_clusters(std::size_t n_clusters, std::uint64_t seed,
                                std::size_t value_pool) {
    if (n_clusters < 1) throw Error("n_clusters must be >= 1");
    if (value_pool < 2) throw Error("value_pool must be >= 2");
    Rng rng(seed);

    std::vector<std::string> users;
    std::vector<TrustMapping> mappings;
    std::vector<Belief> beliefs;
    for (std::size_t c = 0; c < n_clusters; ++c) {
        std::size_t base = 4 * c;
        std::string b1 = user_name(base), b2 = user_name(base + 1);
        std::string x = user_name(base + 2), y = user_name(base + 3);
        users.insert(users.end(), {b1, b2, x, y});

        std::size_t v1 = rng.below(value_pool);
        std::size_t v2 = (v1 + 1 + rng.below(value_pool - 1)) % value_pool;
        beliefs.push_back({b1, "k", value_name(v1)});
        beliefs.push_back({b2, "k", value_name(v2)});

        mappings.push_back({x, y, 1});
        mappings.push_back({y, x, 1});
        mappings.push_back({x, b1, 1});
        mappings.push_back({y, b2, 1});
    }
    return TrustNetwork::build(std::move(users), std::move(mappings), std::move(beliefs));
}

TrustNetwork gen_scale_free(std::size_t n_nodes, std::size_t edges_per_node,
                            std::uint64_t seed, double belief_fraction) {
    if (n_nodes < 2) throw Error("n_nodes must be >= 2");
    if (edges_per_node < 1) throw Error("edges_per_node must be >= 1");
    if (belief_fraction < 0.0 || belief_fraction > 1.0) {
        throw Error("belief_fraction must be in [0, 1]");
    }
    Rng rng(seed);

    std::vector<std::string> users;
    for (std::size_t i = 0; i < n_nodes; ++i) users.push_back(user_name(i));

    // Preferential attachment via the repeated-endpoint list: every chosen
    // source is appended, so selection weight tracks in-trust degree.
    std::vector<std::size_t> endpoints;
    std::vector<TrustMapping> mappings;
    std::set<std::pair<std::size_t, std::size_t>> edge_set;  // (target, source)
    std::size_t start = std::min(edges_per_node + 1, n_nodes);
    for (std::size_t i = 0; i < start; ++i) endpoints.push_back(i);
    for (std::size_t i = 1; i < start; ++i) {
        mappings.push_back({user_name(i), user_name(i - 1),
                            static_cast<std::uint32_t>(rng.between(1, 10))});
        edge_set.insert({i, i - 1});
        endpoints.push_back(i - 1);
    }
    for (std::size_t t = start; t < n_nodes; ++t) {
        std::size_t added = 0, attempts = 0;
        while (added < edges_per_node && attempts < 16 * edges_per_node) {
            ++attempts;
            std::size_t s = endpoints[rng.below(endpoints.size())];
            if (s == t || edge_set.count({t, s})) continue;
            edge_set.insert({t, s});
            mappings.push_back({user_name(t), user_name(s),
                                static_cast<std::uint32_t>(rng.between(1, 10))});
            endpoints.push_back(s);
            ++added;
        }
        endpoints.push_back(t);
    }

    std::vector<Belief> beliefs;
    auto want = static_cast<std::size_t>(belief_fraction * static_cast<double>(n_nodes));
    // Sample `want` believers without replacement via a partial shuffle.
    std::vector<std::size_t> ids(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) ids[i] = i;
    for (std::size_t i = 0; i < want && i < n_nodes; ++i) {
        std::size_t j = i + rng.below(n_nodes - i);
        std::swap(ids[i], ids[j]);
        beliefs.push_back({user_name(ids[i]), "k", value_name(rng.below(10))});
    }
    return TrustNetwork::build(std::move(users), std::move(mappings), std::move(beliefs));
}

TrustNetwork sample_edges(const TrustNetwork& net, double fraction, std::uint64_t seed) {
    if (fraction <= 0.0 || fraction > 1.0) throw Error("fraction must be in (0, 1]");
    Rng rng(seed);

    std::vector<TrustMapping> mappings = net.mappings();
    auto keep = static_cast<std::size_t>(fraction * static_cast<double>(mappings.size()));
    for (std::size_t i = 0; i < keep; ++i) {
        std::size_t j = i + rng.below(mappings.size() - i);
        std::swap(mappings[i], mappings[j]);
    }
    mappings.resize(keep);

    std::set<std::string> kept_users;
    for (const auto& m : mappings) {
        kept_users.insert(m.target);
        kept_users.insert(m.source);
    }
    if (fraction == 1.0) {
        for (const auto& u : net.users()) kept_users.insert(u);
    }
    std::vector<Belief> beliefs;
    for (const auto& b : net.beliefs()) {
        if (kept_users.count(b.user)) beliefs.push_back(b);
    }
    return TrustNetwork::build({kept_users.begin(), kept_users.end()}, std::move(mappings),
                               std::move(beliefs));
}

TrustNetwork gen_nested_cycles(std::size_t n_users, std::uint64_t /*seed*/) {
    if (n_users < 8) throw Error("n_users must be >= 8");
    std::size_t m = n_users / 4;  // spine columns

    std::vector<std::string> users;
    std::vector<TrustMapping> mappings;
    std::vector<Belief> beliefs;
    auto spine = [&](std::size_t i) { return "s" + std::to_string(i); };
    auto ring = [&](std::size_t r, std::size_t i) {
        return "r" + std::to_string(r) + "_" + std::to_string(i);
    };
    for (std::size_t i = 0; i < m; ++i) {
        users.push_back(spine(i));
        beliefs.push_back({spine(i), "k", value_name(i)});
        for (std::size_t r = 1; r <= 3; ++r) users.push_back(ring(r, i));
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t prev = (i + m - 1) % m;
        // Each ring is a cycle; each column feeds outward from the spine.
        mappings.push_back({ring(1, i), spine(i), 1});
        for (std::size_t r = 1; r <= 3; ++r) {
            mappings.push_back({ring(r, i), ring(r, prev), 1});
            if (r < 3) mappings.push_back({ring(r + 1, i), ring(r, i), 1});
        }
    }
    return TrustNetwork::build(std::move(users), std::move(mappings), std::move(beliefs));
}

TrustNetwork bulk_topology() {
    std::vector<std::string> users = {"u1", "u2", "u3", "u4", "u5", "u6", "u7"};
    std::vector<TrustMapping> mappings = {
        {"u3", "u1", 1}, {"u3", "u2", 1},                   // the one tie
        {"u4", "u1", 2}, {"u4", "u2", 1}, {"u4", "u3", 1},
        {"u5", "u2", 2}, {"u5", "u1", 1},
        {"u6", "u4", 2}, {"u6", "u5", 1}, {"u6", "u7", 1},
        {"u7", "u5", 2}, {"u7", "u6", 1},
    };
    return TrustNetwork::build(std::move(users), std::move(mappings), {});
}

PossTable gen_bulk_workload(std::size_t n_objects, double conflict_fraction,
                            std::uint64_t seed) {
    if (conflict_fraction < 0.0 || conflict_fraction > 1.0) {
        throw Error("conflict_fraction must be in [0, 1]");
    }
    Rng rng(seed);

    auto conflicts = static_cast<std::size_t>(conflict_fraction * static_cast<double>(n_objects));
    std::vector<char> in_conflict(n_objects, 0);
    std::vector<std::size_t> ids(n_objects);
    for (std::size_t i = 0; i < n_objects; ++i) ids[i] = i;
    for (std::size_t i = 0; i < conflicts; ++i) {
        std::size_t j = i + rng.below(n_objects - i);
        std::swap(ids[i], ids[j]);
        in_conflict[ids[i]] = 1;
    }

    PossTable table;
    for (std::size_t i = 0; i < n_objects; ++i) {
        std::string key = "k" + std::to_string(i + 1);
        std::size_t v1 = rng.below(10);
        std::size_t v2 = v1;
        if (in_conflict[i]) v2 = (v1 + 1 + rng.below(9)) % 10;
        table.rows.push_back({"u1", key, value_name(v1)});
        table.rows.push_back({"u2", key, value_name(v2)});
    }
    table.canonicalize();
    return table;
}

}  // namespace trustres
