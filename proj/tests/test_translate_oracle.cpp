#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trustres/oracle.hpp"
#include "trustres/translate.hpp"

using namespace trustres;

namespace {

// u3 trusts u1 (priority hi) and u2 (priority lo); u1 says a, u2 says b.
TrustNetwork chooser(std::uint32_t hi, std::uint32_t lo) {
    return TrustNetwork::build({"u1", "u2", "u3"},
                               {{"u3", "u1", hi}, {"u3", "u2", lo}},
                               {{"u1", "k", "a"}, {"u2", "k", "b"}});
}

// One 4-user cluster: x and y trust each other and one believer each.
TrustNetwork cluster() {
    return TrustNetwork::build(
        {"b1", "b2", "x", "y"},
        {{"x", "y", 1}, {"y", "x", 1}, {"x", "b1", 1}, {"y", "b2", 1}},
        {{"b1", "k", "a"}, {"b2", "k", "b"}});
}

// u3 is forced to draw from u4, which can only draw from u3: no founded
// assignment exists even though both users can reach a belief.
TrustNetwork unfounded() {
    return TrustNetwork::build({"u1", "u3", "u4"},
                               {{"u3", "u1", 1}, {"u3", "u4", 2}, {"u4", "u3", 1}},
                               {{"u1", "k", "a"}});
}

}  // namespace

TEST_CASE("translation emits the documented rule schema") {
    TranslatedInstance inst = translate_to_program(chooser(2, 1), "k");
    CHECK(inst.domain == std::vector<std::string>{"a", "b"});
    CHECK(inst.choice_atom_count == 2);
    CHECK(inst.program.dump() ==
          "val(u1,a).\n"
          "val(u2,b).\n"
          "offer(u3,1,b) :- val(u2,b).\n"
          "sup(u3,1) :- offer(u3,1,b).\n"
          "offer(u3,2,a) :- val(u1,a).\n"
          "sup(u3,2) :- offer(u3,2,a).\n"
          "blocked(u3,1) :- sup(u3,2).\n"
          "val(u3,b) :- offer(u3,1,b), not val(u3,a), not blocked(u3,1).\n"
          "val(u3,a) :- offer(u3,2,a), not val(u3,b).\n");
}

TEST_CASE("believers contribute only their own fact") {
    // u1 is a believer, so the mapping into it is semantically inert.
    TrustNetwork net = TrustNetwork::build({"u1", "u2"}, {{"u1", "u2", 1}},
                                           {{"u1", "k", "a"}, {"u2", "k", "b"}});
    TranslatedInstance inst = translate_to_program(net, "k");
    CHECK(inst.program.dump() == "val(u1,a).\nval(u2,b).\n");
    CHECK(inst.choice_atom_count == 0);
}

TEST_CASE("users that cannot reach a belief get no atoms") {
    TrustNetwork net = TrustNetwork::build({"u1", "u2", "u3"}, {{"u3", "u2", 1}},
                                           {{"u1", "k", "a"}});
    TranslatedInstance inst = translate_to_program(net, "k");
    CHECK(inst.val_atom[1][0] == -1);  // u2
    CHECK(inst.val_atom[2][0] == -1);  // u3
    CHECK(inst.choice_atom_count == 0);
}

TEST_CASE("choice-atom limit guards translation") {
    TrustNetwork net = cluster();
    CHECK_THROWS_AS(static_cast<void>(translate_to_program(net, "k", 3)), DomainTooLarge);
    CHECK(translate_to_program(net, "k", 4).choice_atom_count == 4);
}

TEST_CASE("oracle: strict priority yields a certain value") {
    OracleOutcome o = oracle_resolve(chooser(2, 1), "k");
    CHECK(o.model_count == 1);
    CHECK(o.result.possible_values("u3") == std::vector<std::string>{"a"});
    CHECK(o.result.certain_value("u3") == "a");
    CHECK(!o.result.no_stable_solution);
}

TEST_CASE("oracle: priority tie yields two possible values and no certain one") {
    OracleOutcome o = oracle_resolve(chooser(1, 1), "k");
    CHECK(o.model_count == 2);
    CHECK(o.result.possible_values("u3") == std::vector<std::string>{"a", "b"});
    CHECK(o.result.certain_value("u3").empty());
}

TEST_CASE("oracle: one cluster has exactly three stable models") {
    OracleOutcome o = oracle_resolve(cluster(), "k");
    CHECK(o.model_count == 3);
    CHECK(o.result.possible_values("x") == std::vector<std::string>{"a", "b"});
    CHECK(o.result.possible_values("y") == std::vector<std::string>{"a", "b"});
    CHECK(o.result.certain_value("b1") == "a");
}

TEST_CASE("oracle: unfounded dependency means no stable solution") {
    OracleOutcome o = oracle_resolve(unfounded(), "k");
    CHECK(o.model_count == 0);
    CHECK(o.result.no_stable_solution);
    CHECK(o.result.possible_values("u3").empty());
    CHECK(o.result.possible_values("u1").empty());
}

TEST_CASE("oracle: missing key resolves to an empty domain") {
    OracleOutcome o = oracle_resolve(chooser(2, 1), "other");
    CHECK(o.model_count == 1);  // the empty assignment
    CHECK(o.result.values.empty());
    CHECK(!o.result.no_stable_solution);
}

TEST_CASE("pruned search equals the unpruned search") {
    std::mt19937_64 rng(23);
    OracleOptions pruned, unpruned;
    unpruned.prune = false;
    const char* values[] = {"a", "b", "c"};
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng() % 5;
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
        std::vector<Belief> beliefs;
        for (std::size_t u = 0; u < n; ++u) {
            if (rng() % 2 == 0) beliefs.push_back({users[u], "k", values[rng() % 3]});
        }
        TrustNetwork net = TrustNetwork::build(users, mappings, beliefs);
        OracleOutcome fast = oracle_resolve(net, "k", pruned);
        OracleOutcome slow = oracle_resolve(net, "k", unpruned);
        CHECK(fast.result == slow.result);
        CHECK(fast.model_count == slow.model_count);
    }
}

TEST_CASE("oracle respects the configured atom limit") {
    OracleOptions tight;
    tight.max_choice_atoms = 3;
    CHECK_THROWS_AS(static_cast<void>(oracle_resolve(cluster(), "k", tight)), DomainTooLarge);
}
