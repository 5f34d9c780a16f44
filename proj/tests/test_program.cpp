#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "trustres/program.hpp"

using namespace trustres;

namespace {

// a :- not b.  b :- not a.
GroundProgram even_loop() {
    GroundProgram p;
    AtomId a = p.intern("a"), b = p.intern("b");
    p.add_rule(a, {}, {b});
    p.add_rule(b, {}, {a});
    return p;
}

bool subset(const Interpretation& x, const Interpretation& y) {
    return std::includes(y.true_atoms.begin(), y.true_atoms.end(), x.true_atoms.begin(),
                         x.true_atoms.end());
}

}  // namespace

TEST_CASE("even negative loop has exactly the two classical models") {
    GroundProgram p = even_loop();
    auto models = enumerate_stable_models(p);
    REQUIRE(models.size() == 2);
    CHECK(models[0].true_atoms == std::vector<AtomId>{p.find("a")});
    CHECK(models[1].true_atoms == std::vector<AtomId>{p.find("b")});
}

TEST_CASE("odd negative loop has no stable model") {
    GroundProgram p;
    AtomId a = p.intern("a");
    p.add_rule(a, {}, {a});
    CHECK(enumerate_stable_models(p).empty());
}

TEST_CASE("definite programs have exactly their least model") {
    GroundProgram p;
    AtomId a = p.intern("a"), b = p.intern("b"), c = p.intern("c"), d = p.intern("d");
    p.add_fact(a);
    p.add_rule(b, {a}, {});
    p.add_rule(c, {b, a}, {});
    p.add_rule(d, {d}, {});  // unfounded self-support stays false

    Interpretation least = minimal_model(p);
    CHECK(least.true_atoms == std::vector<AtomId>{a, b, c});

    auto models = enumerate_stable_models(p);
    REQUIRE(models.size() == 1);
    CHECK(models[0] == least);
}

TEST_CASE("reduct drops blocked rules and strips negation") {
    GroundProgram p = even_loop();
    Interpretation m;
    m.true_atoms = {p.find("a")};
    GroundProgram r = reduct(p, m);
    REQUIRE(r.rules().size() == 1);
    CHECK(r.rules()[0].head == p.find("a"));
    CHECK(r.rules()[0].positive_body.empty());
    CHECK(r.rules()[0].negative_body.empty());
}

TEST_CASE("minimal_model refuses rules with negation") {
    GroundProgram p = even_loop();
    CHECK_THROWS_AS(static_cast<void>(minimal_model(p)), NotDefinite);
}

TEST_CASE("is_stable_model matches enumeration") {
    GroundProgram p = even_loop();
    Interpretation a{{p.find("a")}}, b{{p.find("b")}}, both{{p.find("a"), p.find("b")}};
    Interpretation none{};
    CHECK(is_stable_model(p, a));
    CHECK(is_stable_model(p, b));
    CHECK(!is_stable_model(p, both));
    CHECK(!is_stable_model(p, none));
}

TEST_CASE("stable models are subset-incomparable") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        GroundProgram p;
        std::size_t n_atoms = 2 + rng() % 5;
        for (std::size_t i = 0; i < n_atoms; ++i) p.intern("x" + std::to_string(i));
        std::size_t n_rules = 1 + rng() % 8;
        for (std::size_t r = 0; r < n_rules; ++r) {
            AtomId head = static_cast<AtomId>(rng() % n_atoms);
            std::vector<AtomId> pos, neg;
            for (AtomId a = 0; a < static_cast<AtomId>(n_atoms); ++a) {
                std::size_t roll = rng() % 6;
                if (roll == 0) pos.push_back(a);
                if (roll == 1) neg.push_back(a);
            }
            p.add_rule(head, std::move(pos), std::move(neg));
        }
        auto models = enumerate_stable_models(p);
        for (std::size_t i = 0; i < models.size(); ++i) {
            CHECK(is_stable_model(p, models[i]));
            for (std::size_t j = 0; j < models.size(); ++j) {
                if (i != j) CHECK(!subset(models[i], models[j]));
            }
        }
    }
}

TEST_CASE("disjoint unions multiply model counts") {
    GroundProgram p;
    // Three independent even loops: 2 * 2 * 2 = 8 models.
    for (int k = 0; k < 3; ++k) {
        AtomId a = p.intern("a" + std::to_string(k));
        AtomId b = p.intern("b" + std::to_string(k));
        p.add_rule(a, {}, {b});
        p.add_rule(b, {}, {a});
    }
    CHECK(enumerate_stable_models(p).size() == 8);
}

TEST_CASE("enumeration output is sorted lexicographically by atom names") {
    GroundProgram p;
    AtomId z = p.intern("z"), m = p.intern("m");
    p.add_rule(z, {}, {m});
    p.add_rule(m, {}, {z});
    auto models = enumerate_stable_models(p);
    REQUIRE(models.size() == 2);
    CHECK(p.atom_name(models[0].true_atoms[0]) == "m");
    CHECK(p.atom_name(models[1].true_atoms[0]) == "z");
}

TEST_CASE("guess-atom limit is enforced") {
    GroundProgram p;
    for (int k = 0; k < 5; ++k) {
        AtomId a = p.intern("a" + std::to_string(k));
        AtomId b = p.intern("b" + std::to_string(k));
        p.add_rule(a, {}, {b});
        p.add_rule(b, {}, {a});
    }
    CHECK_THROWS_AS(static_cast<void>(enumerate_stable_models(p, 9)), DomainTooLarge);
    CHECK(enumerate_stable_models(p, 10).size() == 32);
}

TEST_CASE("dump prints rules in insertion order") {
    GroundProgram p;
    AtomId a = p.intern("a"), b = p.intern("b"), c = p.intern("c");
    p.add_fact(a);
    p.add_rule(b, {a}, {c});
    CHECK(p.dump() == "a.\nb :- a, not c.\n");
}
