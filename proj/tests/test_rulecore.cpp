#include "catch_amalgamated.hpp"

#include <random>
#include <sstream>

#include "hypca/rulecore.hpp"

using namespace hypca;

namespace {

Context brute_min(const Context& c) {
    Context best = c;
    for (std::size_t r = 1; r < c.size(); ++r) best = std::min(best, c.substr(r) + c.substr(0, r));
    return best;
}

Context random_context(std::mt19937& g, int p) {
    std::bernoulli_distribution coin(0.35);
    Context c;
    for (int i = 0; i < p; ++i) c.push_back(coin(g) ? 'B' : 'W');
    return c;
}

}  // namespace

TEST_CASE("canonical form is the least rotation") {
    std::mt19937 g(7);
    for (int p : {7, 13, 17, 23})
        for (int i = 0; i < 2000; ++i) {
            Context c = random_context(g, p);
            REQUIRE(canonical_form(c) == brute_min(c));
        }
    // every word of length 8
    for (int m = 0; m < 256; ++m) {
        Context c;
        for (int i = 0; i < 8; ++i) c.push_back(m >> i & 1 ? 'B' : 'W');
        REQUIRE(canonical_form(c) == brute_min(c));
    }
    CHECK(canonical_form("WWBWB") == "BWBWW");
    CHECK(canonical_form("") == "");
}

TEST_CASE("expand and condense round trip") {
    CHECK(*expand("BBWBWBW^7") == "BBWBWBWWWWWWW");
    CHECK(condense("BBWBWBWWWWWWW") == "BBWBWBW^7");
    CHECK(condense("BBBW") == "B^3W");
    CHECK_FALSE(expand("BX").has_value());
    CHECK_FALSE(expand("B^").has_value());
    CHECK_FALSE(expand("W^0").has_value());
    std::mt19937 g(3);
    for (int i = 0; i < 500; ++i) {
        Context c = random_context(g, 13);
        CHECK(*expand(condense(c)) == c);
    }
}

TEST_CASE("rule file grammar") {
    std::istringstream ok("# comment\np=7\nW BBBWWWW -> B  # first\n\nB BBBWWWW -> B\n");
    auto pr = parse_rule_lines(ok);
    CHECK(pr.p == 7);
    REQUIRE(pr.rules.size() == 2);
    CHECK(pr.rules[0].provenance == "first");
    CHECK(pr.rules[1].provenance == "line 5");

    std::istringstream noheader("W BBBWWWW -> B\n");
    CHECK_THROWS_AS(parse_rule_lines(noheader), RuleSyntaxError);
    std::istringstream arrow("p=7\nW BBBWWWW => B\n");
    CHECK_THROWS_AS(parse_rule_lines(arrow), RuleSyntaxError);
    std::istringstream badstate("p=7\nX BBBWWWW -> B\n");
    CHECK_THROWS_AS(parse_rule_lines(badstate), RuleSyntaxError);
    std::istringstream len("p=7\nW BBBWW -> B\n");
    try {
        parse_rule_lines(len);
        FAIL("expected RuleLengthError");
    } catch (const RuleLengthError& e) {
        CHECK(e.line == 2);
    }
    std::istringstream twice("p=7\np=7\n");
    CHECK_THROWS_AS(parse_rule_lines(twice), RuleSyntaxError);
}

TEST_CASE("table stores rotations once and reports conflicts") {
    RuleTable t(7);
    t.insert({State::W, "BBBWWWW", State::B, "r1"});
    t.insert({State::W, "WBBBWWW", State::B, "r2"});  // rotation, same outcome
    CHECK(t.size() == 1);
    auto c = t.try_insert({State::W, "WWBBBWW", State::W, "r3"});
    REQUIRE(c.has_value());
    CHECK(c->key == "WBBBWWWW");
    CHECK(c->text().find("r1") != std::string::npos);
    CHECK(c->text().find("r3") != std::string::npos);
    CHECK_THROWS_AS(t.insert({State::W, "WWBBBWW", State::W, "r3"}), RuleConflict);
    CHECK_THROWS_AS(t.insert({State::W, "WWBB", State::W, ""}), std::invalid_argument);
    // different current state is a different rule
    t.insert({State::B, "BBBWWWW", State::W, "r4"});
    CHECK(t.size() == 2);
}

TEST_CASE("lookup falls back to conservative defaults") {
    RuleTable t(7);
    CHECK(t.lookup(State::W, "WWWWWWW") == State::W);
    CHECK(t.lookup(State::B, "BWWWWWW") == State::B);
    CHECK(t.lookup(State::W, "BWBWWWW") == State::W);
    CHECK_THROWS_AS(t.lookup(State::W, "BWBWBWW"), MissingRule);
    try {
        t.lookup(State::W, "WBWBWBW");
    } catch (const MissingRule& m) {
        CHECK(m.canonical == "BWBWBWW");
        CHECK(m.current == State::W);
    }
}

TEST_CASE("every rotation of a stored context gives the stored outcome") {
    std::mt19937 g(11);
    RuleTable t(13);
    std::vector<Rule> stored;
    while (stored.size() < 300) {
        Rule r{g() % 2 ? State::B : State::W, random_context(g, 13), g() % 2 ? State::B : State::W, ""};
        if (!t.try_insert(r)) stored.push_back(r);
    }
    for (const auto& r : stored)
        for (int k = 0; k < 13; ++k) {
            Context rot = r.context.substr(k) + r.context.substr(0, k);
            REQUIRE(t.find(r.current, rot) == t.find(r.current, r.context));
        }
}

TEST_CASE("write and re-read rules") {
    std::vector<Rule> rs = {{State::W, "BBWBWBWWWWWWW", State::B, "a"}, {State::B, "BBWBWBWWWWWWW", State::W, ""}};
    std::ostringstream os;
    write_rules(os, 13, rs);
    std::istringstream in(os.str());
    auto pr = parse_rule_lines(in);
    REQUIRE(pr.rules.size() == 2);
    CHECK(pr.rules[0].context == rs[0].context);
    CHECK(pr.rules[0].provenance == "a");
    CHECK(pr.rules[1].next == State::W);
    RuleTable t = parse_rules(os.str());
    std::ostringstream dump;
    t.dump(dump);
    CHECK(dump.str().rfind("p=13\n", 0) == 0);
}
