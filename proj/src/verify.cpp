#include "trustres/verify.hpp"

#include <random>

#include "trustres/network_json.hpp"
#include "trustres/oracle.hpp"
#include "trustres/resolution.hpp"

namespace trustres {

bool check_instance(const TrustNetwork& net, const std::string& key) {
    ResolutionResult fast = resolve(net, key);
    ResolutionResult slow = oracle_resolve(net, key).result;
    return fast == slow;
}

namespace {

struct Sweep {
    VerifyReport report;

    void run(const TrustNetwork& net) {
        ++report.instances;
        if (!check_instance(net, "k")) {
            ++report.mismatches;
            if (report.samples.size() < 5) report.samples.push_back(network_to_json(net));
        }
    }

    // Tries to build; silently skips raw combinations that violate network
    // invariants (the grid enumerates raw slots, not valid networks).
    void try_run(std::vector<std::string> users, std::vector<TrustMapping> mappings,
                 std::vector<Belief> beliefs) {
        TrustNetwork net;
        try {
            net = TrustNetwork::build(std::move(users), std::move(mappings), std::move(beliefs));
        } catch (const ValidationError&) {
            return;
        }
        run(net);
    }
};

const char* kValues2[] = {"a", "b"};

// Exhaustive grid over n users: every ordered pair absent or present at
// priority 1 or 2, every user believing nothing, a or b.
void grid_exhaustive(Sweep& sweep, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) slots.push_back({i, j});
        }
    }
    std::vector<std::string> users;
    for (std::size_t i = 0; i < n; ++i) users.push_back("u" + std::to_string(i + 1));

    std::size_t edge_combos = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) edge_combos *= 3;
    std::size_t belief_combos = 1;
    for (std::size_t s = 0; s < n; ++s) belief_combos *= 3;

    for (std::size_t e = 0; e < edge_combos; ++e) {
        std::vector<TrustMapping> mappings;
        std::size_t code = e;
        for (auto [t, s] : slots) {
            std::size_t opt = code % 3;
            code /= 3;
            if (opt > 0) {
                mappings.push_back({users[t], users[s], static_cast<std::uint32_t>(opt)});
            }
        }
        for (std::size_t b = 0; b < belief_combos; ++b) {
            std::vector<Belief> beliefs;
            std::size_t bc = b;
            for (std::size_t u = 0; u < n; ++u) {
                std::size_t opt = bc % 3;
                bc /= 3;
                if (opt > 0) beliefs.push_back({users[u], "k", kValues2[opt - 1]});
            }
            sweep.try_run(users, mappings, beliefs);
        }
    }
}

// 4 users: ring plus cross chords, each slot toggled, under a flat and an
// alternating priority scheme, all belief patterns.
void grid_four(Sweep& sweep) {
    std::vector<std::string> users = {"u1", "u2", "u3", "u4"};
    const std::pair<std::size_t, std::size_t> slots[8] = {
        {1, 0}, {2, 1}, {3, 2}, {0, 3}, {2, 0}, {3, 1}, {0, 2}, {1, 3}};
    for (int scheme = 0; scheme < 2; ++scheme) {
        for (std::size_t mask = 0; mask < 256; ++mask) {
            std::vector<TrustMapping> mappings;
            for (std::size_t s = 0; s < 8; ++s) {
                if (!(mask & (std::size_t(1) << s))) continue;
                std::uint32_t pr = scheme == 0 ? 1 : static_cast<std::uint32_t>(1 + s % 2);
                mappings.push_back({users[slots[s].first], users[slots[s].second], pr});
            }
            for (std::size_t b = 0; b < 81; ++b) {
                std::vector<Belief> beliefs;
                std::size_t bc = b;
                for (std::size_t u = 0; u < 4; ++u) {
                    std::size_t opt = bc % 3;
                    bc /= 3;
                    if (opt > 0) beliefs.push_back({users[u], "k", kValues2[opt - 1]});
                }
                sweep.try_run(users, mappings, beliefs);
            }
        }
    }
}

// 5 users: the 4-user cycle cluster plus a fifth user attached every way.
void grid_five(Sweep& sweep) {
    std::vector<std::string> users = {"b1", "b2", "w", "x", "y"};
    std::vector<TrustMapping> base = {
        {"x", "y", 1}, {"y", "x", 1}, {"x", "b1", 1}, {"y", "b2", 1}};
    std::vector<Belief> base_beliefs = {{"b1", "k", "a"}, {"b2", "k", "b"}};
    const char* anchors[4] = {"b1", "b2", "x", "y"};

    for (std::size_t mask = 0; mask < 16; ++mask) {
        for (std::uint32_t pr = 1; pr <= 2; ++pr) {
            for (int rev = 0; rev < 2; ++rev) {
                for (int wb = 0; wb < 3; ++wb) {
                    auto mappings = base;
                    for (std::size_t s = 0; s < 4; ++s) {
                        if (mask & (std::size_t(1) << s)) {
                            mappings.push_back({"w", anchors[s], pr});
                        }
                    }
                    if (rev) mappings.push_back({"x", "w", 2});
                    auto beliefs = base_beliefs;
                    if (wb > 0) beliefs.push_back({"w", "k", kValues2[wb - 1]});
                    sweep.try_run(users, mappings, beliefs);
                }
            }
        }
    }
}

}  // namespace

VerifyReport verify_equivalence(std::size_t random_instances, std::uint64_t seed,
                                bool include_grid) {
    Sweep sweep;
    if (include_grid) {
        grid_exhaustive(sweep, 1);
        grid_exhaustive(sweep, 2);
        grid_exhaustive(sweep, 3);
        grid_four(sweep);
        grid_five(sweep);
    }

    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
    };
    const char* values3[] = {"a", "b", "c"};
    for (std::size_t i = 0; i < random_instances; ++i) {
        std::size_t n = 1 + below(6);
        std::vector<std::string> users;
        for (std::size_t u = 0; u < n; ++u) users.push_back("u" + std::to_string(u + 1));
        std::vector<TrustMapping> mappings;
        for (std::size_t t = 0; t < n; ++t) {
            for (std::size_t s = 0; s < n; ++s) {
                if (t != s && below(4) == 0) {
                    mappings.push_back({users[t], users[s],
                                        static_cast<std::uint32_t>(1 + below(3))});
                }
            }
        }
        std::vector<Belief> beliefs;
        for (std::size_t u = 0; u < n; ++u) {
            if (below(5) < 2) beliefs.push_back({users[u], "k", values3[below(3)]});
        }
        sweep.run(TrustNetwork::build(std::move(users), std::move(mappings), std::move(beliefs)));
    }
    return sweep.report;
}

}  // namespace trustres
