#pragma once
// Rule tables: the shipped p=13 transcription and the parametric families
// for p >= 17 (track words, anchored role words for the other cells).

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/rulecore.hpp"

namespace hypca {

struct UnsupportedP : std::invalid_argument {
    int p;
    explicit UnsupportedP(int p_, const std::string& what = "")
        : std::invalid_argument("unsupported p=" + std::to_string(p_) + (what.empty() ? "" : ": " + what)), p(p_) {}
};

inline RuleTable load_p13_ruleset(std::istream& in) {
    RuleTable t = parse_rules(in);
    if (t.p() != 13) throw UnsupportedP(t.p(), "the transcribed table is for p=13");
    return t;
}

// A rule word with symbolic exponents: digits, k (= p-8), k' (= p-9), a, b.
struct RuleTemplate {
    State current = State::W;
    std::string pattern;
    State next = State::W;
    std::string provenance;

    static int exponent(const std::string& e, int p, int a, int b) {
        if (e == "k") return p - 8;
        if (e == "k'") return p - 9;
        if (e == "a") return a;
        if (e == "b") return b;
        return std::stoi(e);
    }

    Context context(int p, int a = 1, int b = 1) const {
        Context out;
        for (std::size_t i = 0; i < pattern.size();) {
            char c = pattern[i++];
            if (c != 'W' && c != 'B') throw std::invalid_argument("bad template '" + pattern + "'");
            if (i < pattern.size() && pattern[i] == '^') {
                std::size_t j = ++i;
                if (j < pattern.size() && std::isdigit(static_cast<unsigned char>(pattern[j]))) {
                    while (j < pattern.size() && std::isdigit(static_cast<unsigned char>(pattern[j]))) ++j;
                } else if (j < pattern.size() && std::string("kab").find(pattern[j]) != std::string::npos) {
                    ++j;
                    if (j < pattern.size() && pattern[j] == '\'') ++j;
                } else {
                    throw std::invalid_argument("bad exponent in '" + pattern + "'");
                }
                int n = exponent(pattern.substr(i, j - i), p, a, b);
                if (n < 0) throw std::invalid_argument("negative exponent in '" + pattern + "'");
                out.append(static_cast<std::size_t>(n), c);
                i = j;
            } else {
                out.push_back(c);
            }
        }
        if (static_cast<int>(out.size()) != p)
            throw std::logic_error("template '" + pattern + "' gives " + std::to_string(out.size()) + " symbols at p=" + std::to_string(p));
        return out;
    }

    Rule instantiate(int p, int a = 1, int b = 1) const { return Rule{current, context(p, a, b), next, provenance}; }
};

inline RuleTemplate tmpl(char cur, const char* pattern, char next, const char* prov) {
    return RuleTemplate{state_of(cur), pattern, state_of(next), prov};
}

// Track families (a)-(h). (a)/(b) are kept as listed even though (c)/(d)
// restate them in minimal form; canonicalization merges the duplicates.
inline const std::vector<RuleTemplate>& track_templates() {
    static const std::vector<RuleTemplate> v = {
        tmpl('W', "BWWBWWWBW^k", 'W', "a"), tmpl('W', "BWBBWWWBW^k", 'B', "a"), tmpl('B', "BWWBWWWBW^k", 'W', "a"),
        tmpl('W', "BWWBBWWBW^k", 'W', "a"), tmpl('W', "BBWBWWWBW^k", 'B', "a"), tmpl('W', "BBWWBWWBW^k", 'W', "a"),
        tmpl('W', "BWBWBWWBW^k", 'W', "a"),

        tmpl('W', "BWWBW^kBWWW", 'W', "b"), tmpl('W', "BBWBW^kBWWW", 'B', "b"), tmpl('B', "BWWBW^kBWWW", 'W', "b"),
        tmpl('W', "BWWBW^kBWWB", 'W', "b"), tmpl('W', "BWBBW^kBWWW", 'B', "b"), tmpl('W', "BWWBW^kBBWW", 'W', "b"),
        tmpl('W', "BWWBW^kBWBW", 'W', "b"),

        tmpl('W', "BWWBWWWBW^k", 'W', "c"), tmpl('W', "BBWWWBW^kBW", 'B', "c"), tmpl('B', "BWWBWWWBW^k", 'W', "c"),
        tmpl('W', "BBWWBW^kBWW", 'W', "c"), tmpl('W', "BBWBWWWBW^k", 'B', "c"), tmpl('W', "BBW^kBWWBWW", 'W', "c"),
        tmpl('W', "BWBWBW^kBWW", 'W', "c"),

        tmpl('W', "BWWBW^kBWWW", 'W', "d"), tmpl('W', "BBWBW^kBWWW", 'B', "d"), tmpl('B', "BWWBW^kBWWW", 'W', "d"),
        tmpl('W', "BBWWBW^kBWW", 'W', "d"), tmpl('W', "BBW^kBWWWBW", 'B', "d"), tmpl('W', "BBWWBWWBW^k", 'W', "d"),
        tmpl('W', "BWBWBWWBW^k", 'W', "d"),

        tmpl('W', "BBWWWBW^k'BWW", 'W', "e"), tmpl('W', "BBBWWWBW^k'BW", 'B', "e"), tmpl('B', "BBWWWBW^k'BWW", 'W', "e"),
        tmpl('W', "BBBWWBW^k'BWW", 'W', "e"),

        tmpl('W', "BBWWBW^k'BWWW", 'W', "f"), tmpl('W', "BBBWBW^k'BWWW", 'B', "f"), tmpl('B', "BBWWBW^k'BWWW", 'W', "f"),
        tmpl('W', "BBBWWBW^k'BWW", 'W', "f"),

        tmpl('B', "BBWWWBW^kBW", 'B', "g"), tmpl('B', "BBWWBW^kBWW", 'W', "g"), tmpl('B', "BBWBW^kBWWW", 'B', "g"),
        tmpl('B', "BBWWBW^kBWW", 'W', "g"),

        tmpl('B', "BBBWWWBW^k'BW", 'B', "h"), tmpl('B', "BBBWWBW^k'BWW", 'W', "h"), tmpl('B', "BBBWBW^k'BWWW", 'B', "h"),
        tmpl('B', "BBBWWBW^k'BWW", 'W', "h"),
    };
    return v;
}

// Idle words of the track cells with the slots (0-based) where the particle
// enters and leaves.
struct TrackPattern {
    const char* name;
    const char* pattern;
    int in, out;  // negative: counted from the end
};

inline const std::vector<TrackPattern>& track_patterns(int p) {
    static const std::vector<TrackPattern> p13 = {
        {"ordinary", "BBWBWBW^7", 4, 2},
        {"ordinary-reverse", "BBW^7BWBW", 10, 12},
        {"corner", "BBWBBWBW^6", 5, 2},
        {"corner-reverse", "BBWBBW^6BW", 12, 2},
    };
    static const std::vector<TrackPattern> big = {
        {"ordinary", "BWWBWWWBW^k", 2, 4},
        {"ordinary-reverse", "BWWBW^kBWWW", 1, -1},
        {"corner", "BBWWWBW^k'BWW", -1, 2},
        {"corner-reverse", "BBWWBW^k'BWWW", 2, -1},
    };
    if (p == 13) return p13;
    if (p >= 17) return big;
    throw UnsupportedP(p, "track patterns exist for p=13 and p>=17");
}

// ---------------------------------------------------------------------------
// Anchored role words. Every non-track cell reads
//     BBBB <situation:2> <type:3> W^b <segment> W^a
// where the segment lists, in the order of the p=13 cell, the states of the
// neighbours that can change. The single block of >= 4 blacks makes the word
// its own minimal rotation, so distinct roles never share a key. Situations:
// WW crossing, WB flip-flop / active memory, BW passive memory, BB fixed.
// ---------------------------------------------------------------------------
struct RoleSpec {
    const char* name;
    const char* situation;
    const char* type;
    std::vector<int> slots;  // p=13 neighbour indices feeding the segment
};

struct LiftedRow {
    const char* role;
    char current;
    const char* segment;
    char next;
};

inline const std::vector<RoleSpec>& role_specs() {
    static const std::vector<RoleSpec> v = {
        {"cr.B", "WW", "BWW", {1, 9, 10, 11, 12}},
        {"cr.BC", "WW", "BBW", {0, 1, 11, 12}},
        {"cr.BF", "WW", "WWB", {0, 1, 2, 3, 12}},
        {"cr.C", "WW", "WBW", {1, 2, 3, 4, 12}},
        {"cr.CE", "WW", "BWB", {0, 1, 2}},
        {"cr.E", "WW", "WWW", {0, 10, 11, 12}},
        {"fx.B", "BB", "WWB", {10, 12}},
        {"fx.O", "BB", "WBW", {2, 7, 9}},
        {"ma.D", "WB", "WBB", {0, 1, 2, 6, 11, 12}},
        {"mp.D1", "BW", "WBB", {10, 12}},
        {"mp.I", "BW", "WWB", {0, 1}},
        {"mp.J", "BW", "BWB", {0, 12}},
        {"mp.T", "BW", "WWW", {2, 7, 8, 9}},
        {"mp.X", "BW", "BWW", {0, 1, 2, 9}},
        {"mp.Y", "BW", "BBW", {0, 4, 11, 12}},
        {"mp.Z", "BW", "WBW", {0, 1, 2, 7, 11, 12}},
        {"mp.Z1", "BW", "BBB", {0, 9}},
        {"sw.B", "WB", "BWW", {2, 4, 5, 6}},
        {"sw.C", "WB", "BBW", {8, 9, 10, 12}},
        {"sw.D", "WB", "WBW", {0, 1, 2, 11, 12}},
        {"sw.H", "WB", "WWB", {0, 1}},
        {"sw.K", "WB", "BWB", {0, 12}},
        {"sw.O", "WB", "WWW", {1, 6, 8}},
    };
    return v;
}

inline const RoleSpec& role_spec(const std::string& name) {
    for (const auto& r : role_specs())
        if (name == r.name) return r;
    throw std::out_of_range("unknown role '" + name + "'");
}

// Spacers: b = 1, a takes the rest.
inline int role_spacer_a(const RoleSpec& r, int p) { return p - 10 - static_cast<int>(r.slots.size()); }

inline std::string role_pattern(const RoleSpec& r, const std::string& segment) {
    return std::string("BBBB") + r.situation + r.type + "W^b" + segment + "W^a";
}

// Offset of segment slot i inside an instantiated role word.
inline int role_slot_offset(const RoleSpec&, int i, int b = 1) { return 9 + b + i; }
// (role, current, segment states, next)
inline const std::vector<LiftedRow>& lifted_rows() {
    static const std::vector<LiftedRow> v = {
        {"cr.B", 'B', "BWBBW", 'B'},
        {"cr.B", 'B', "WBBBW", 'W'},
        {"cr.B", 'B', "WWBBW", 'W'},
        {"cr.B", 'W', "BWBBW", 'B'},
        {"cr.B", 'W', "WBBBW", 'W'},
        {"cr.B", 'W', "WBWBW", 'W'},
        {"cr.B", 'W', "WWBBB", 'W'},
        {"cr.B", 'W', "WWBBW", 'W'},
        {"cr.B", 'W', "WWBWW", 'W'},
        {"cr.B", 'W', "WWWBB", 'W'},
        {"cr.BC", 'B', "BBWW", 'B'},
        {"cr.BC", 'B', "WBBW", 'B'},
        {"cr.BC", 'B', "WBWB", 'B'},
        {"cr.BC", 'B', "WBWW", 'B'},
        {"cr.BC", 'B', "WWWB", 'B'},
        {"cr.BC", 'B', "WWWW", 'W'},
        {"cr.BC", 'W', "WBWW", 'B'},
        {"cr.BF", 'B', "BBWWB", 'W'},
        {"cr.BF", 'B', "BWWWB", 'B'},
        {"cr.BF", 'B', "WBWWB", 'B'},
        {"cr.BF", 'B', "WWBWB", 'B'},
        {"cr.BF", 'B', "WWWBB", 'B'},
        {"cr.BF", 'B', "WWWWB", 'B'},
        {"cr.BF", 'B', "WWWWW", 'W'},
        {"cr.BF", 'W', "WBBWB", 'B'},
        {"cr.BF", 'W', "WWWWB", 'B'},
        {"cr.C", 'B', "WBWBB", 'W'},
        {"cr.C", 'B', "WBWBW", 'W'},
        {"cr.C", 'B', "WBWWW", 'B'},
        {"cr.C", 'W', "BBWBW", 'W'},
        {"cr.C", 'W', "WBBBW", 'B'},
        {"cr.C", 'W', "WBWBB", 'W'},
        {"cr.C", 'W', "WBWBW", 'W'},
        {"cr.C", 'W', "WWWBW", 'B'},
        {"cr.CE", 'B', "BWW", 'B'},
        {"cr.CE", 'B', "WBW", 'W'},
        {"cr.CE", 'B', "WWB", 'B'},
        {"cr.CE", 'B', "WWW", 'B'},
        {"cr.CE", 'W', "BWW", 'B'},
        {"cr.E", 'B', "BWBW", 'W'},
        {"cr.E", 'W', "BBBW", 'B'},
        {"cr.E", 'W', "BWBB", 'W'},
        {"cr.E", 'W', "BWBW", 'W'},
        {"cr.E", 'W', "BWWB", 'W'},
        {"cr.E", 'W', "WWBW", 'W'},
        {"fx.B", 'B', "WW", 'W'},
        {"fx.B", 'W', "BW", 'B'},
        {"fx.B", 'W', "WB", 'W'},
        {"fx.B", 'W', "WW", 'W'},
        {"fx.O", 'B', "WWW", 'W'},
        {"fx.O", 'W', "BWW", 'W'},
        {"fx.O", 'W', "WBW", 'B'},
        {"fx.O", 'W', "WWB", 'B'},
        {"fx.O", 'W', "WWW", 'W'},
        {"ma.D", 'B', "BWBWWW", 'B'},
        {"ma.D", 'B', "BWWWBW", 'B'},
        {"ma.D", 'B', "WBWWBW", 'B'},
        {"ma.D", 'B', "WWBBWW", 'W'},
        {"ma.D", 'B', "WWBWWB", 'B'},
        {"ma.D", 'B', "WWBWWW", 'B'},
        {"ma.D", 'B', "WWWBBW", 'W'},
        {"ma.D", 'B', "WWWWBW", 'B'},
        {"ma.D", 'W', "WWBWWW", 'B'},
        {"ma.D", 'W', "WWWWBW", 'B'},
        {"mp.D1", 'B', "WB", 'W'},
        {"mp.D1", 'W', "BB", 'B'},
        {"mp.D1", 'W', "WB", 'W'},
        {"mp.D1", 'W', "WW", 'W'},
        {"mp.I", 'B', "BB", 'B'},
        {"mp.I", 'B', "WB", 'B'},
        {"mp.I", 'B', "WW", 'W'},
        {"mp.I", 'W', "BB", 'W'},
        {"mp.I", 'W', "WB", 'W'},
        {"mp.I", 'W', "WW", 'B'},
        {"mp.J", 'B', "BB", 'B'},
        {"mp.J", 'B', "WB", 'B'},
        {"mp.J", 'B', "WW", 'W'},
        {"mp.J", 'W', "BB", 'W'},
        {"mp.J", 'W', "WB", 'W'},
        {"mp.J", 'W', "WW", 'B'},
        {"mp.T", 'B', "WWBW", 'W'},
        {"mp.T", 'B', "WWWW", 'W'},
        {"mp.T", 'W', "BWBW", 'W'},
        {"mp.T", 'W', "WBBW", 'B'},
        {"mp.T", 'W', "WWBB", 'B'},
        {"mp.T", 'W', "WWBW", 'W'},
        {"mp.X", 'B', "WBBW", 'W'},
        {"mp.X", 'B', "WBWW", 'W'},
        {"mp.X", 'W', "BBBW", 'W'},
        {"mp.X", 'W', "BBWW", 'W'},
        {"mp.X", 'W', "BWBW", 'W'},
        {"mp.X", 'W', "BWWW", 'W'},
        {"mp.X", 'W', "WBBB", 'B'},
        {"mp.X", 'W', "WBBW", 'W'},
        {"mp.X", 'W', "WBWB", 'B'},
        {"mp.X", 'W', "WBWW", 'W'},
        {"mp.Y", 'B', "WWBB", 'W'},
        {"mp.Y", 'B', "WWWB", 'W'},
        {"mp.Y", 'W', "BWBB", 'W'},
        {"mp.Y", 'W', "BWBW", 'W'},
        {"mp.Y", 'W', "BWWB", 'W'},
        {"mp.Y", 'W', "BWWW", 'W'},
        {"mp.Y", 'W', "WBBB", 'B'},
        {"mp.Y", 'W', "WBWB", 'B'},
        {"mp.Y", 'W', "WWBB", 'W'},
        {"mp.Y", 'W', "WWWB", 'W'},
        {"mp.Z", 'B', "BWBWWW", 'B'},
        {"mp.Z", 'B', "BWWWBW", 'B'},
        {"mp.Z", 'B', "WBBWWW", 'W'},
        {"mp.Z", 'B', "WBWWBW", 'B'},
        {"mp.Z", 'B', "WWBBWW", 'B'},
        {"mp.Z", 'B', "WWBWWB", 'B'},
        {"mp.Z", 'B', "WWBWWW", 'B'},
        {"mp.Z", 'B', "WWWBBW", 'B'},
        {"mp.Z", 'B', "WWWWBB", 'W'},
        {"mp.Z", 'B', "WWWWBW", 'B'},
        {"mp.Z", 'W', "BWBWWW", 'B'},
        {"mp.Z", 'W', "BWWWBW", 'B'},
        {"mp.Z1", 'B', "BW", 'W'},
        {"mp.Z1", 'W', "BB", 'W'},
        {"mp.Z1", 'W', "BW", 'W'},
        {"mp.Z1", 'W', "WW", 'B'},
        {"sw.B", 'B', "WWBW", 'W'},
        {"sw.B", 'W', "BWBW", 'W'},
        {"sw.B", 'W', "BWWW", 'W'},
        {"sw.B", 'W', "WBBB", 'W'},
        {"sw.B", 'W', "WBBW", 'B'},
        {"sw.B", 'W', "WWBB", 'W'},
        {"sw.B", 'W', "WWBW", 'W'},
        {"sw.B", 'W', "WWWB", 'W'},
        {"sw.B", 'W', "WWWW", 'W'},
        {"sw.C", 'B', "WBWW", 'W'},
        {"sw.C", 'W', "BBBW", 'W'},
        {"sw.C", 'W', "BBWW", 'W'},
        {"sw.C", 'W', "BWWW", 'W'},
        {"sw.C", 'W', "WBBW", 'B'},
        {"sw.C", 'W', "WBWB", 'W'},
        {"sw.C", 'W', "WBWW", 'W'},
        {"sw.C", 'W', "WWWB", 'W'},
        {"sw.C", 'W', "WWWW", 'W'},
        {"sw.D", 'B', "BWBWW", 'B'},
        {"sw.D", 'B', "BWWBW", 'B'},
        {"sw.D", 'B', "WBWBW", 'W'},
        {"sw.D", 'B', "WWBWB", 'W'},
        {"sw.D", 'B', "WWBWW", 'B'},
        {"sw.D", 'B', "WWWBW", 'B'},
        {"sw.D", 'W', "WWBWW", 'B'},
        {"sw.D", 'W', "WWWBW", 'B'},
        {"sw.H", 'B', "WB", 'B'},
        {"sw.H", 'B', "WW", 'W'},
        {"sw.H", 'W', "BB", 'W'},
        {"sw.H", 'W', "WB", 'W'},
        {"sw.H", 'W', "WW", 'B'},
        {"sw.K", 'B', "WB", 'B'},
        {"sw.K", 'B', "WW", 'W'},
        {"sw.K", 'W', "BB", 'W'},
        {"sw.K", 'W', "WB", 'W'},
        {"sw.K", 'W', "WW", 'B'},
        {"sw.O", 'B', "WWW", 'W'},
        {"sw.O", 'W', "BWW", 'B'},
        {"sw.O", 'W', "WBW", 'W'},
        {"sw.O", 'W', "WWB", 'W'},
        {"sw.O", 'W', "WWW", 'W'},
    };
    return v;
}

// Track cells next to BF read BF in the slot of their middle milestone.
// When BF is white the cell must neither take nor pass the particle: these
// are the two special track rules of the round-about, both directions of use.
// Segment = (in, middle, out) in the ordinary word BW<in><mid><out>WWBW^k.
inline const std::vector<LiftedRow>& special_track_rows() {
    static const std::vector<LiftedRow> v = {
        {"cr.tr", 'B', "WWB", 'W'},
        {"cr.tr", 'B', "BWW", 'W'},
        {"cr.tr", 'W', "BWW", 'W'},
    };
    return v;
}

inline std::string ordinary_track_pattern(const std::string& in_mid_out) { return "BW" + in_mid_out + "WWBW^k"; }

namespace detail {
inline void require_generic(int p) {
    if (p < 17) throw UnsupportedP(p, "the parametric families need p >= 17");
}

inline std::vector<RuleTemplate> role_templates(const std::string& prefix_a, const std::string& prefix_b = "") {
    std::vector<RuleTemplate> out;
    for (const auto& row : lifted_rows()) {
        std::string role = row.role;
        auto fam = role.substr(0, role.find('.'));
        if (fam != prefix_a && fam != prefix_b) continue;
        const RoleSpec& r = role_spec(role);
        out.push_back(RuleTemplate{state_of(row.current), role_pattern(r, row.segment), state_of(row.next), role});
    }
    return out;
}

inline std::vector<Rule> instantiate_roles(const std::vector<RuleTemplate>& ts, int p) {
    std::vector<Rule> out;
    for (const auto& t : ts) out.push_back(t.instantiate(p, role_spacer_a(role_spec(t.provenance), p), 1));
    return out;
}
}  // namespace detail

inline std::vector<Rule> generate_track_rules(int p) {
    detail::require_generic(p);
    std::vector<Rule> out;
    for (const auto& t : track_templates()) {
        Rule r = t.instantiate(p);
        r.provenance = std::string("track (") + t.provenance + ")";
        out.push_back(r);
    }
    return out;
}

inline std::vector<RuleTemplate> crossing_templates() {
    auto v = detail::role_templates("cr");
    for (const auto& row : special_track_rows())
        v.push_back(RuleTemplate{state_of(row.current), ordinary_track_pattern(row.segment), state_of(row.next), "cr.tr"});
    return v;
}

inline std::vector<Rule> generate_crossing_rules(int p) {
    detail::require_generic(p);
    std::vector<Rule> out;
    for (const auto& t : crossing_templates()) {
        if (t.provenance == "cr.tr") out.push_back(t.instantiate(p));
        else out.push_back(t.instantiate(p, role_spacer_a(role_spec(t.provenance), p), 1));
    }
    return out;
}

inline std::vector<Rule> generate_fixed_switch_rules(int p) {
    detail::require_generic(p);
    return detail::instantiate_roles(detail::role_templates("fx"), p);
}

inline std::vector<Rule> generate_flipflop_rules(int p) {
    detail::require_generic(p);
    return detail::instantiate_roles(detail::role_templates("sw"), p);
}

// The active part reuses the flip-flop cells except D; the passive part is new.
inline std::vector<Rule> generate_memory_rules(int p) {
    detail::require_generic(p);
    auto out = detail::instantiate_roles(detail::role_templates("ma", "mp"), p);
    auto ff = generate_flipflop_rules(p);
    out.insert(out.end(), ff.begin(), ff.end());
    return out;
}

inline const std::vector<std::string>& rule_families() {
    static const std::vector<std::string> v = {"tracks", "crossing", "fixed", "flipflop", "memory"};
    return v;
}

inline std::vector<Rule> generate_family(int p, const std::string& family) {
    if (family == "tracks") return generate_track_rules(p);
    if (family == "crossing") return generate_crossing_rules(p);
    if (family == "fixed") return generate_fixed_switch_rules(p);
    if (family == "flipflop") return generate_flipflop_rules(p);
    if (family == "memory") return generate_memory_rules(p);
    if (family == "all") {
        std::vector<Rule> out;
        for (const auto& f : rule_families()) {
            auto v = generate_family(p, f);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown rule family '" + family + "'");
}

// Union with conflict reports instead of an exception.
inline RuleTable build_table(int p, const std::vector<Rule>& rules, std::vector<ConflictReport>* conflicts = nullptr) {
    RuleTable t(p);
    for (const auto& r : rules) {
        if (auto c = t.try_insert(r)) {
            if (!conflicts) throw RuleConflict(*c);
            conflicts->push_back(*c);
        }
    }
    return t;
}

inline RuleTable generate_table(int p) { return build_table(p, generate_family(p, "all")); }

// Longest circular run of B.
inline int longest_black_run(const Context& c) {
    const int n = static_cast<int>(c.size());
    if (count_black(c) == n) return n;
    int best = 0, run = 0;
    for (int i = 0; i < 2 * n; ++i) {
        run = c[i % n] == 'B' ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

inline int black_runs_at_least(const Context& c, int len) {
    const int n = static_cast<int>(c.size());
    int start = 0;
    while (start < n && c[start] == 'B') ++start;
    if (start == n) return 1;
    int runs = 0, run = 0;
    for (int i = 1; i <= n; ++i) {
        bool b = c[(start + i) % n] == 'B';
        if (b) ++run;
        if (!b || i == n) {
            if (run >= len) ++runs;
            run = 0;
        }
    }
    return runs;
}

}  // namespace hypca
