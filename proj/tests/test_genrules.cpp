#include "catch_amalgamated.hpp"

#include <set>
#include <sstream>

#include "hypca/circuits.hpp"
#include "hypca/genrules.hpp"

using namespace hypca;

TEST_CASE("shipped p=13 transcription loads without conflicts") {
    std::istringstream in(embedded_text("rules/p13.rules"));
    auto pr = parse_rule_lines(in);
    CHECK(pr.p == 13);
    CHECK(check_rules(pr).empty());
    // 272 listed lines reduce to 177 distinct minimal rotated forms
    CHECK(pr.rules.size() == 272);
    CHECK(p13_rules().size() == 177);
}

TEST_CASE("the p=13 loader rejects other tables") {
    std::istringstream in("p=7\nW BBBWWWW -> B\n");
    CHECK_THROWS_AS(load_p13_ruleset(in), UnsupportedP);
}

TEST_CASE("track words at p=17") {
    auto word = [](const char* pat) { return RuleTemplate{State::W, pat, State::W, ""}.context(17); };
    const auto& pats = track_patterns(17);
    std::map<std::string, Context> by;
    for (const auto& t : pats) by[t.name] = word(t.pattern);
    CHECK(by["ordinary"] == *expand("BWWBWWWBW^9"));
    CHECK(by["ordinary-reverse"] == *expand("BWWBW^9BWWW"));
    CHECK(by["corner"] == *expand("BBWWWBW^8BWW"));
    CHECK(by["corner-reverse"] == *expand("BBWWBW^8BWWW"));
}

TEST_CASE("symbolic exponents") {
    RuleTemplate t{State::W, "BW^kB^a W", State::W, ""};
    CHECK_THROWS(t.context(17));
    RuleTemplate u{State::W, "BBW^k'BW^aB^b", State::W, ""};
    // 2 + (p-9) + 1 + a + b
    CHECK(u.context(17, 4, 2) == "BB" + std::string(8, 'W') + "B" + "WWWW" + "BB");
    RuleTemplate v{State::W, "BW^k", State::W, ""};
    CHECK_THROWS_AS(v.context(17), std::logic_error);
}

TEST_CASE("parametric families need p >= 17") {
    for (int p : {7, 8, 12, 13, 14, 15, 16}) CHECK_THROWS_AS(generate_family(p, "all"), UnsupportedP);
    CHECK_THROWS_AS(generate_family(17, "nope"), std::invalid_argument);
    CHECK_THROWS_AS(track_patterns(15), UnsupportedP);
}

TEST_CASE("generated unions are conflict-free and well formed") {
    for (int p : {17, 18, 19, 20, 23, 29}) {
        INFO("p=" << p);
        std::vector<ConflictReport> conflicts;
        auto all = generate_family(p, "all");
        RuleTable t = build_table(p, all, &conflicts);
        CHECK(conflicts.empty());
        for (const auto& r : all) CHECK(static_cast<int>(r.context.size()) == p);
        for (const auto& f : rule_families()) CHECK_FALSE(generate_family(p, f).empty());
        CHECK(t.size() > 150);
    }
}

TEST_CASE("role words carry one long black block, so roles never collide") {
    const int p = 19;
    std::map<std::string, std::string> owner;  // canonical word -> role
    for (const auto& spec : role_specs()) {
        std::string seg(spec.slots.size(), 'W');
        Context c = RuleTemplate{State::W, role_pattern(spec, seg), State::W, ""}.context(p, role_spacer_a(spec, p), 1);
        CHECK(black_runs_at_least(c, 4) == 1);
        CHECK(c.substr(0, 4) == "BBBB");
        CHECK(canonical_form(c) == c);
        auto [it, fresh] = owner.emplace(c, spec.name);
        CHECK(fresh);
    }
    // segments cannot form a second block of four
    for (const auto& row : lifted_rows()) CHECK(std::string(row.segment).find("BBBB") == std::string::npos);
}

TEST_CASE("lifted rows are deterministic per role") {
    std::map<std::string, char> seen;
    for (const auto& row : lifted_rows()) {
        std::string key = std::string(row.role) + row.current + row.segment;
        auto [it, fresh] = seen.emplace(key, row.next);
        if (!fresh) CHECK(it->second == row.next);
        CHECK(std::string(row.segment).size() == role_spec(row.role).slots.size());
    }
}

TEST_CASE("track rules move a particle on the p=17 words") {
    RuleTable t = build_table(17, generate_track_rules(17));
    Context idle = RuleTemplate{State::W, "BWWBWWWBW^k", State::W, ""}.context(17);
    // particle in the entrance slot (index 2): the cell turns black
    Context arriving = idle;
    arriving[2] = 'B';
    CHECK(t.lookup(State::W, arriving) == State::B);
    CHECK(t.lookup(State::B, idle) == State::W);
    CHECK(t.lookup(State::W, idle) == State::W);
}
