#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "trustres/oracle.hpp"
#include "trustres/resolution.hpp"
#include "trustres/verify.hpp"

using namespace trustres;

namespace {

TrustNetwork chooser(std::uint32_t hi, std::uint32_t lo) {
    return TrustNetwork::build({"u1", "u2", "u3"},
                               {{"u3", "u1", hi}, {"u3", "u2", lo}},
                               {{"u1", "k", "a"}, {"u2", "k", "b"}});
}

TrustNetwork random_net(std::mt19937_64& rng, std::size_t max_users) {
    std::size_t n = 1 + rng() % max_users;
    std::vector<std::string> users;
    for (std::size_t u = 0; u < n; ++u) users.push_back("u" + std::to_string(u + 1));
    std::vector<TrustMapping> mappings;
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t s = 0; s < n; ++s) {
            if (t != s && rng() % 3 == 0) {
                mappings.push_back(
                    {users[t], users[s], static_cast<std::uint32_t>(1 + rng() % 3)});
            }
        }
    }
    const char* values[] = {"a", "b", "c"};
    std::vector<Belief> beliefs;
    for (std::size_t u = 0; u < n; ++u) {
        if (rng() % 2 == 0) beliefs.push_back({users[u], "k", values[rng() % 3]});
    }
    return TrustNetwork::build(users, mappings, beliefs);
}

}  // namespace

TEST_CASE("strict priority: the stronger source wins everywhere") {
    ResolutionResult r = resolve(chooser(2, 1), "k");
    CHECK(r.users == std::vector<std::string>{"u1", "u2", "u3"});
    CHECK(r.values == std::vector<std::string>{"a", "b"});
    CHECK(r.possible_values("u3") == std::vector<std::string>{"a"});
    CHECK(r.certain_value("u3") == "a");
    CHECK(r.certain_value("u2") == "b");
    CHECK(result_to_csv(r) ==
          "user,key,value,certain\n"
          "u1,k,a,true\n"
          "u2,k,b,true\n"
          "u3,k,a,true\n");
}

TEST_CASE("priority tie: both values possible, neither certain") {
    ResolutionResult r = resolve(chooser(1, 1), "k");
    CHECK(r.possible_values("u3") == std::vector<std::string>{"a", "b"});
    CHECK(r.certain_value("u3").empty());
    CHECK(result_to_csv(r) ==
          "user,key,value,certain\n"
          "u1,k,a,true\n"
          "u2,k,b,true\n"
          "u3,k,a,false\n"
          "u3,k,b,false\n");
}

TEST_CASE("unfounded top-level dependency reports no stable solution") {
    TrustNetwork net = TrustNetwork::build(
        {"u1", "u3", "u4"}, {{"u3", "u1", 1}, {"u3", "u4", 2}, {"u4", "u3", 1}},
        {{"u1", "k", "a"}});
    ResolutionResult r = resolve(net, "k");
    CHECK(r.no_stable_solution);
    for (const auto& p : r.possible) CHECK(p.empty());
    for (std::int32_t c : r.certain) CHECK(c == -1);
    CHECK(result_to_csv(r) == "# no_stable_solution\nuser,key,value,certain\n");
}

TEST_CASE("values flow transitively through chains") {
    TrustNetwork net = TrustNetwork::build(
        {"u1", "u2", "u3", "u4"},
        {{"u2", "u1", 1}, {"u3", "u2", 1}, {"u4", "u3", 1}}, {{"u1", "k", "a"}});
    ResolutionResult r = resolve(net, "k");
    for (const auto& u : net.users()) CHECK(r.certain_value(u) == "a");
}

TEST_CASE("a missing key yields an empty result") {
    ResolutionResult r = resolve(chooser(2, 1), "missing");
    CHECK(r.values.empty());
    CHECK(!r.no_stable_solution);
    CHECK(result_to_csv(r) == "user,key,value,certain\n");
}

TEST_CASE("resolve_all_keys covers each belief key in order") {
    TrustNetwork net = TrustNetwork::build(
        {"u1", "u2"}, {{"u2", "u1", 1}}, {{"u1", "kb", "x"}, {"u1", "ka", "y"}});
    auto all = resolve_all_keys(net);
    REQUIRE(all.size() == 2);
    CHECK(all[0].key == "ka");
    CHECK(all[1].key == "kb");
    CHECK(all[0] == resolve(net, "ka"));
    CHECK(all[1] == resolve(net, "kb"));
}

TEST_CASE("resolution equals the oracle on a random sweep") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        TrustNetwork net = random_net(rng, 5);
        CHECK(check_instance(net, "k"));
    }
}

TEST_CASE("condensation of a known graph") {
    // u1 -> {u2, u3} (mutual cycle) -> u4, plus an isolated u5.
    TrustNetwork net = TrustNetwork::build(
        {"u1", "u2", "u3", "u4", "u5"},
        {{"u2", "u1", 1}, {"u3", "u2", 1}, {"u2", "u3", 1}, {"u4", "u3", 1}}, {});
    Condensation c = condense(net);
    REQUIRE(c.components.size() == 4);
    auto pos = [&](const std::string& u) {
        for (std::size_t i = 0; i < c.components.size(); ++i) {
            if (std::find(c.components[i].begin(), c.components[i].end(), u) !=
                c.components[i].end()) {
                return i;
            }
        }
        FAIL("user not in any component: " << u);
        return std::size_t(0);
    };
    CHECK(c.components[pos("u2")] == std::vector<std::string>{"u2", "u3"});
    CHECK(pos("u1") < pos("u2"));
    CHECK(pos("u2") < pos("u4"));
    CHECK(c.components[pos("u5")] == std::vector<std::string>{"u5"});
}

TEST_CASE("condensation properties on random graphs") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        TrustNetwork net = random_net(rng, 6);
        Condensation c = condense(net);

        // Components partition the user set.
        std::vector<std::string> all;
        for (const auto& comp : c.components) {
            CHECK(std::is_sorted(comp.begin(), comp.end()));
            all.insert(all.end(), comp.begin(), comp.end());
        }
        std::sort(all.begin(), all.end());
        CHECK(all == net.users());

        std::map<std::string, std::size_t> comp_of;
        for (std::size_t i = 0; i < c.components.size(); ++i) {
            for (const auto& u : c.components[i]) comp_of[u] = i;
        }

        // Edges flow from earlier components to later ones.
        for (const auto& m : net.mappings()) {
            CHECK(comp_of[m.source] <= comp_of[m.target]);
        }

        // Same component iff mutually reachable (brute-force transitive
        // closure over source -> target edges).
        const auto& users = net.users();
        std::size_t n = users.size();
        auto idx = [&](const std::string& u) {
            return static_cast<std::size_t>(
                std::find(users.begin(), users.end(), u) - users.begin());
        };
        std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;
        for (const auto& m : net.mappings()) reach[idx(m.source)][idx(m.target)] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                bool same = comp_of[users[i]] == comp_of[users[j]];
                CHECK(same == (reach[i][j] && reach[j][i]));
            }
        }
    }
}
