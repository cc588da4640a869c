#pragma once
// Circuit templates (tracks, round-abouts, switches), the scenario file
// format, the shipped p=13 catalog, and the lift of p=13 templates to p >= 17.

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/embedded_data.hpp"
#include "hypca/engine.hpp"
#include "hypca/genrules.hpp"

namespace hypca {

struct ScenarioSyntaxError : std::runtime_error {
    int line;
    ScenarioSyntaxError(int l, const std::string& m) : std::runtime_error("line " + std::to_string(l) + ": " + m), line(l) {}
};
struct UnknownRole : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DanglingRef : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PortInjection {
    int time = 1;
    std::string port;
    int count = 1;
    friend bool operator==(const PortInjection&, const PortInjection&) = default;
};

struct WatchSpec {
    std::string column, cell;
    friend bool operator==(const WatchSpec&, const WatchSpec&) = default;
};

struct Scenario {
    std::string name, title;
    int p = 13;
    TrackedRegion region;
    std::vector<PortInjection> inject;
    std::vector<WatchSpec> watch;
    int steps = 1;
    std::string expect_path;         // as written in the file
    std::optional<Trace> expected;
};

inline bool same_region(const TrackedRegion& a, const TrackedRegion& b) {
    if (a.p != b.p || a.cells.size() != b.cells.size() || a.states != b.states || a.stubs != b.stubs) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        if (a.cells[i].name != b.cells[i].name || a.cells[i].slots != b.cells[i].slots) return false;
    return true;
}

inline bool same_scenario(const Scenario& a, const Scenario& b) {
    return a.title == b.title && a.p == b.p && same_region(a.region, b.region) && a.inject == b.inject && a.watch == b.watch &&
           a.steps == b.steps && a.expect_path == b.expect_path;
}

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline std::map<std::string, std::string> fields(std::istringstream& ls, int no) {
    std::map<std::string, std::string> f;
    std::string tok;
    while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw ScenarioSyntaxError(no, "expected key=value, got '" + tok + "'");
        f[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return f;
}

inline int to_int(const std::string& s, int no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ScenarioSyntaxError(no, "expected an integer, got '" + s + "'");
    }
}
}  // namespace detail

// Grammar, one directive per line ('#' comments; the first comment is the title):
//   p=<int>
//   cell <name> state=<W|B> nbrs=<s1,...,sp>     slots: W, B, W^k, B^k, @name
//   stub <a> <b>                                   a refers to b one-sidedly
//   inject t=<int> port=<name> n=<1|2>
//   watch <col[=cell]>,...
//   steps <int>
//   expect <path>
inline Scenario parse_scenario(const std::string& text, const std::string& name = "") {
    Scenario sc;
    sc.name = name;
    struct RawCell {
        std::string name;
        State state;
        std::vector<std::string> slots;
        int line;
    };
    std::vector<RawCell> raw;
    std::vector<std::pair<std::string, std::string>> stubs;
    std::vector<std::pair<std::vector<std::string>, int>> watches;
    bool have_p = false, have_steps = false;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto h = line.find('#'); h != std::string::npos) {
            if (sc.title.empty() && raw.empty()) {
                auto t = line.substr(h + 1);
                auto b = t.find_first_not_of(' ');
                sc.title = b == std::string::npos ? "" : t.substr(b);
            }
            line.resize(h);
        }
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw.rfind("p=", 0) == 0) {
            if (have_p) throw ScenarioSyntaxError(no, "duplicate header");
            sc.p = detail::to_int(kw.substr(2), no);
            have_p = true;
            continue;
        }
        if (!have_p) throw ScenarioSyntaxError(no, "missing header p=<int>");
        if (kw == "cell") {
            std::string cname;
            if (!(ls >> cname) || cname.find_first_of(",=@") != std::string::npos)
                throw ScenarioSyntaxError(no, "expected 'cell <name> state=<S> nbrs=<...>'");
            auto f = detail::fields(ls, no);
            if (!f.count("state") || !f.count("nbrs") || f.size() != 2) throw ScenarioSyntaxError(no, "cell needs state= and nbrs=");
            if (f["state"] != "W" && f["state"] != "B") throw ScenarioSyntaxError(no, "bad state '" + f["state"] + "'");
            std::vector<std::string> slots;
            for (const auto& tok : detail::split(f["nbrs"], ',')) {
                if (tok.empty()) throw ScenarioSyntaxError(no, "empty slot");
                if (tok[0] == '@') {
                    if (tok.size() == 1) throw ScenarioSyntaxError(no, "empty reference");
                    slots.push_back(tok);
                    continue;
                }
                auto e = expand(tok);
                if (!e) throw ScenarioSyntaxError(no, "bad slot '" + tok + "'");
                for (char c : *e) slots.emplace_back(1, c);
            }
            if (static_cast<int>(slots.size()) != sc.p)
                throw ScenarioSyntaxError(no, "cell " + cname + " has " + std::to_string(slots.size()) + " slots, p=" + std::to_string(sc.p));
            for (const auto& r : raw)
                if (r.name == cname) throw ScenarioSyntaxError(no, "duplicate cell " + cname);
            raw.push_back({cname, state_of(f["state"][0]), std::move(slots), no});
        } else if (kw == "stub") {
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra)) throw ScenarioSyntaxError(no, "expected 'stub <a> <b>'");
            stubs.emplace_back(a, b);
        } else if (kw == "inject") {
            auto f = detail::fields(ls, no);
            if (!f.count("t") || !f.count("port")) throw ScenarioSyntaxError(no, "inject needs t= and port=");
            PortInjection pi{detail::to_int(f["t"], no), f["port"], f.count("n") ? detail::to_int(f["n"], no) : 1};
            if (pi.count < 1 || pi.count > 2) throw ScenarioSyntaxError(no, "n must be 1 or 2");
            if (pi.time < 1) throw ScenarioSyntaxError(no, "t must be >= 1");
            sc.inject.push_back(pi);
        } else if (kw == "watch") {
            std::string list, extra;
            if (!(ls >> list) || (ls >> extra)) throw ScenarioSyntaxError(no, "expected 'watch a,b,...'");
            watches.emplace_back(detail::split(list, ','), no);
        } else if (kw == "steps") {
            std::string v, extra;
            if (!(ls >> v) || (ls >> extra)) throw ScenarioSyntaxError(no, "expected 'steps <int>'");
            sc.steps = detail::to_int(v, no);
            if (sc.steps < 1) throw ScenarioSyntaxError(no, "steps must be >= 1");
            have_steps = true;
        } else if (kw == "expect") {
            std::string v, extra;
            if (!(ls >> v) || (ls >> extra)) throw ScenarioSyntaxError(no, "expected 'expect <path>'");
            sc.expect_path = v;
        } else {
            throw ScenarioSyntaxError(no, "unknown directive '" + kw + "'");
        }
    }
    if (!have_p) throw ScenarioSyntaxError(no, "missing header p=<int>");
    if (!have_steps) throw ScenarioSyntaxError(no, "missing 'steps'");
    if (raw.empty()) throw ScenarioSyntaxError(no, "no cells");

    TrackedRegion& r = sc.region;
    r.p = sc.p;
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < raw.size(); ++i) id[raw[i].name] = static_cast<int>(i);
    for (const auto& rc : raw) {
        TrackedCell c{rc.name, {}};
        for (const auto& s : rc.slots) {
            if (s[0] == '@') {
                auto it = id.find(s.substr(1));
                if (it == id.end()) throw DanglingRef("line " + std::to_string(rc.line) + ": cell " + rc.name + " refers to unknown cell '" + s.substr(1) + "'");
                c.slots.push_back(Slot::Ref(it->second));
            } else {
                c.slots.push_back(Slot::Env(state_of(s[0])));
            }
        }
        r.cells.push_back(std::move(c));
        r.states.push_back(rc.state);
    }
    auto need = [&](const std::string& n, const char* what) {
        auto it = id.find(n);
        if (it == id.end()) throw UnknownRole(std::string(what) + " names unknown cell '" + n + "'");
        return it->second;
    };
    for (const auto& [a, b] : stubs) r.stubs.insert({need(a, "stub"), need(b, "stub")});
    for (const auto& pi : sc.inject) need(pi.port, "inject");
    for (const auto& [list, line] : watches)
        for (const auto& w : list) {
            if (w.empty()) throw ScenarioSyntaxError(line, "empty watch entry");
            auto eq = w.find('=');
            WatchSpec ws = eq == std::string::npos ? WatchSpec{w, w} : WatchSpec{w.substr(0, eq), w.substr(eq + 1)};
            need(ws.cell, "watch");
            sc.watch.push_back(ws);
        }
    return sc;
}

inline std::string emit_scenario(const Scenario& sc) {
    std::ostringstream os;
    if (!sc.title.empty()) os << "# " << sc.title << '\n';
    os << "p=" << sc.p << '\n';
    const auto& r = sc.region;
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        os << "cell " << r.cells[i].name << " state=" << to_char(r.states[i]) << " nbrs=";
        const auto& sl = r.cells[i].slots;
        for (std::size_t j = 0; j < sl.size();) {
            if (j) os << ',';
            if (sl[j].ref) {
                os << '@' << r.cells[sl[j].id].name;
                ++j;
                continue;
            }
            std::size_t k = j;
            while (k < sl.size() && !sl[k].ref && sl[k].env == sl[j].env) ++k;
            std::size_t run = k - j;
            // runs of 8 and more are condensed; shorter ones stay readable
            if (run >= 8) {
                os << to_char(sl[j].env) << '^' << run;
                j = k;
            } else {
                os << to_char(sl[j].env);
                ++j;
            }
        }
        os << '\n';
    }
    for (const auto& [a, b] : r.stubs) os << "stub " << r.cells[a].name << ' ' << r.cells[b].name << '\n';
    for (const auto& pi : sc.inject) os << "inject t=" << pi.time << " port=" << pi.port << " n=" << pi.count << '\n';
    if (!sc.watch.empty()) {
        os << "watch ";
        for (std::size_t i = 0; i < sc.watch.size(); ++i) {
            if (i) os << ',';
            os << sc.watch[i].column;
            if (sc.watch[i].cell != sc.watch[i].column) os << '=' << sc.watch[i].cell;
        }
        os << '\n';
    }
    os << "steps " << sc.steps << '\n';
    if (!sc.expect_path.empty()) os << "expect " << sc.expect_path << '\n';
    return os.str();
}

inline std::vector<Watch> resolve_watch(const Scenario& sc) {
    std::vector<Watch> w;
    for (const auto& ws : sc.watch) w.push_back({ws.column, sc.region.at(ws.cell)});
    return w;
}

inline std::vector<Injection> resolve_inject(const Scenario& sc) {
    std::vector<Injection> v;
    for (const auto& pi : sc.inject) v.push_back({pi.time, sc.region.at(pi.port), pi.count});
    return v;
}

inline Trace run_scenario(const Scenario& sc, const RuleTable& table, int steps = -1) {
    if (table.p() != sc.p)
        throw std::invalid_argument("rule table is for p=" + std::to_string(table.p()) + ", scenario for p=" + std::to_string(sc.p));
    return run(sc.region, table, steps < 0 ? sc.steps : steps, resolve_watch(sc), resolve_inject(sc));
}

// ---------------------------------------------------------------------------
// Shipped data
// ---------------------------------------------------------------------------
inline std::string embedded_text(const std::string& path) {
    auto it = embedded_files().find(path);
    if (it == embedded_files().end()) throw std::out_of_range("no embedded file " + path);
    return std::string(it->second);
}

inline const RuleTable& p13_rules() {
    static const RuleTable t = [] {
        std::istringstream in(embedded_text("rules/p13.rules"));
        return load_p13_ruleset(in);
    }();
    return t;
}

struct CatalogGroup {
    std::string name;
    std::vector<std::string> members;
};

// The trace tables: crossings, fixed switch, flip-flop, active memory,
// passive memory entered from X and from Y.
inline const std::vector<CatalogGroup>& catalog_groups() {
    static const std::vector<CatalogGroup> g = {
        {"crossing", {"crossing"}},
        {"fixed", {"fixed_B", "fixed_C"}},
        {"tr_basc", {"flipflop_C", "flipflop_B"}},
        {"mma", {"mma_C", "mma_B"}},
        {"mmpX", {"mmpX_ns", "mmpX_s"}},
        {"mmpY", {"mmpY_ns", "mmpY_s"}},
    };
    return g;
}

inline Scenario load_embedded_scenario(const std::string& name) {
    std::string path = "scenarios/" + name + ".scn";
    Scenario sc = parse_scenario(embedded_text(path), name);
    if (!sc.expect_path.empty()) {
        auto rel = (std::filesystem::path("scenarios") / sc.expect_path).lexically_normal().generic_string();
        std::istringstream in(embedded_text(rel));
        sc.expected = parse_trace(in);
    }
    return sc;
}

inline const std::vector<Scenario>& scenario_catalog() {
    static const std::vector<Scenario> v = [] {
        std::vector<Scenario> out;
        for (const auto& g : catalog_groups())
            for (const auto& m : g.members) out.push_back(load_embedded_scenario(m));
        return out;
    }();
    return v;
}

inline const Scenario* find_scenario(const std::string& name) {
    for (const auto& s : scenario_catalog())
        if (s.name == name) return &s;
    return nullptr;
}

// Member names of a group, or the name itself when it is a single scenario.
inline std::vector<std::string> catalog_members(const std::string& name) {
    for (const auto& g : catalog_groups())
        if (g.name == name) return g.members;
    if (find_scenario(name)) return {name};
    return {};
}

// ---------------------------------------------------------------------------
// Templates
// ---------------------------------------------------------------------------
struct CircuitTemplate {
    std::string name;
    int p = 13;
    TrackedRegion region;
    std::vector<std::string> entries, exits;
    std::optional<std::string> selected;      // leg that an active passage takes
    std::map<std::string, std::string> roles;  // cell -> role ("track" for track cells)
};

inline void require_supported(int p) {
    if (p != 13 && p < 17) throw UnsupportedP(p, "circuits exist for p=13 and p>=17");
}

// p=13 cell of the tracks: B,B,<out>,<mid>,<in>,B,W^7 with each of out,
// mid, in a reference or a constant.
inline bool is_track_cell(const TrackedCell& c) {
    const auto& s = c.slots;
    if (s.size() != 13) return false;
    auto env = [&](int i, State v) { return !s[i].ref && s[i].env == v; };
    if (!env(0, State::B) || !env(1, State::B) || !env(5, State::B)) return false;
    for (int i = 6; i < 13; ++i)
        if (!env(i, State::W)) return false;
    return (s[2].ref || s[2].env == State::W) && (s[4].ref || s[4].env == State::W);
}

inline std::string base_name(const std::string& cell) {
    auto u = cell.find('_');
    return u == std::string::npos ? cell : cell.substr(0, u);
}

// Role of a non-track cell of a p=13 template, by circuit kind.
inline std::string role_of(const std::string& kind, const std::string& cell) {
    const std::string b = base_name(cell);
    if (kind == "crossing") return "cr." + b;
    if (kind == "fixed") return "fx." + b;
    if (kind == "flipflop") return "sw." + b;
    if (kind == "memory") {
        static const std::set<std::string> passive = {"T", "X", "Y", "Z", "I", "J", "Z1", "D1"};
        if (b == "D") return "ma.D";
        return (passive.count(b) ? "mp." : "sw.") + b;
    }
    throw std::invalid_argument("unknown circuit kind '" + kind + "'");
}

inline std::map<std::string, std::string> assign_roles(const TrackedRegion& r, const std::string& kind) {
    std::map<std::string, std::string> roles;
    for (const auto& c : r.cells) roles[c.name] = is_track_cell(c) ? "track" : role_of(kind, c.name);
    return roles;
}

inline CircuitTemplate template_from(const Scenario& sc, const std::string& name, const std::string& kind) {
    CircuitTemplate t;
    t.name = name;
    t.p = sc.p;
    t.region = sc.region;
    t.roles = assign_roles(sc.region, kind);
    return t;
}

// Rewrites a p=13 template for p >= 17. Track cells take the ordinary word
// BW<in><mid><out>WWBW^k; every other cell takes its anchored role word with
// the segment read from the same neighbours as at p=13. The wiring, and
// therefore the dynamics, are unchanged.
inline CircuitTemplate lift_template(const CircuitTemplate& t13, int p) {
    if (t13.p != 13) throw std::invalid_argument("lift_template expects a p=13 template");
    if (p < 17) throw UnsupportedP(p, "the lift targets p>=17");
    CircuitTemplate t = t13;
    t.p = p;
    t.region.p = p;
    const auto W = Slot::Env(State::W), B = Slot::Env(State::B);
    for (auto& c : t.region.cells) {
        const auto& s = c.slots;
        std::vector<Slot> ns;
        const std::string& role = t13.roles.at(c.name);
        if (role == "track") {
            ns = {B, W, s[4], s[3], s[2], W, W, B};
            ns.resize(p, W);
        } else {
            const RoleSpec& rs = role_spec(role);
            std::string head = std::string("BBBB") + rs.situation + rs.type;
            for (char ch : head) ns.push_back(Slot::Env(state_of(ch)));
            ns.push_back(W);  // b = 1
            for (int i : rs.slots) ns.push_back(s[i]);
            ns.resize(p, W);
            for (int i = 0; i < 13; ++i)
                if (s[i].ref && std::find(rs.slots.begin(), rs.slots.end(), i) == rs.slots.end())
                    throw std::logic_error("cell " + c.name + ": neighbour " + std::to_string(i) + " is outside role " + role);
        }
        c.slots = std::move(ns);
    }
    return t;
}

inline Scenario lift_scenario(const Scenario& sc13, const CircuitTemplate& lifted) {
    Scenario sc = sc13;
    sc.p = lifted.p;
    sc.region = lifted.region;
    sc.name = sc13.name + "@p" + std::to_string(lifted.p);
    return sc;
}

inline std::string circuit_kind_of(const std::string& scenario) {
    if (scenario.rfind("crossing", 0) == 0) return "crossing";
    if (scenario.rfind("fixed", 0) == 0) return "fixed";
    if (scenario.rfind("flipflop", 0) == 0) return "flipflop";
    return "memory";
}

// Catalog scenario re-expressed for p (p=13 returns it unchanged).
inline Scenario scenario_for(const std::string& name, int p) {
    const Scenario* s = find_scenario(name);
    if (!s) throw std::out_of_range("no catalog scenario '" + name + "'");
    require_supported(p);
    if (p == 13) return *s;
    return lift_scenario(*s, lift_template(template_from(*s, name, circuit_kind_of(name)), p));
}

inline CircuitTemplate maybe_lift(CircuitTemplate t, int p) {
    require_supported(p);
    return p == 13 ? t : lift_template(t, p);
}

inline CircuitTemplate build_fixed_switch(int p) {
    auto t = template_from(*find_scenario("fixed_B"), "fixed", "fixed");
    t.entries = {"bB", "bC"};
    t.exits = {"aA"};
    return maybe_lift(std::move(t), p);
}

enum class Leg { Left, Right };  // left: the particle goes through C

inline std::string leg_cell(Leg l) { return l == Leg::Left ? "C" : "B"; }

inline CircuitTemplate build_flipflop(int p, Leg selected) {
    std::string sel = leg_cell(selected);
    auto t = template_from(*find_scenario("flipflop_" + sel), "flipflop", "flipflop");
    t.entries = {"bA"};
    t.exits = {"aB", "aC"};
    t.selected = sel;
    return maybe_lift(std::move(t), p);
}

// Active part O,B,C,D,H,K; passive part T,X,Y,Z,V,I,J,Z1; the signal goes
// from Z1 to D1 along a path of five cells.
inline CircuitTemplate build_memory_switch(int p, Leg selected) {
    std::string sel = leg_cell(selected);
    auto t = template_from(*find_scenario("mma_" + sel), "memory", "memory");
    t.entries = {"bA", "bX", "bY"};
    t.exits = {"aB", "aC", "aV"};
    t.selected = sel;
    return maybe_lift(std::move(t), p);
}

// Round-about with branch_count copies of the branching around one ring:
// the cell A of branch k feeds the cell B of branch k+1.
inline CircuitTemplate build_roundabout(int p, int branch_count = 4) {
    require_supported(p);
    if (branch_count < 2) throw std::invalid_argument("a round-about needs at least 2 branchings");
    const Scenario& base = *find_scenario("crossing");
    const TrackedRegion& b = base.region;
    const int n = static_cast<int>(b.cells.size());
    const int iA = b.at("A"), iB = b.at("B");
    CircuitTemplate t;
    t.name = "roundabout";
    t.p = 13;
    t.region.p = 13;
    for (int k = 0; k < branch_count; ++k)
        for (int i = 0; i < n; ++i) {
            TrackedCell c{b.cells[i].name + "_" + std::to_string(k), {}};
            for (Slot s : b.cells[i].slots) {
                if (s.ref) {
                    int kk = k;
                    if (i == iA && s.id == iB) kk = (k + 1) % branch_count;
                    if (i == iB && s.id == iA) kk = (k + branch_count - 1) % branch_count;
                    s.id = kk * n + s.id;
                }
                c.slots.push_back(s);
            }
            t.region.cells.push_back(std::move(c));
            t.region.states.push_back(b.states[i]);
        }
    for (const auto& [x, y] : b.stubs)
        for (int k = 0; k < branch_count; ++k) t.region.stubs.insert({k * n + x, k * n + y});
    for (int k = 0; k < branch_count; ++k) {
        t.entries.push_back("trE_" + std::to_string(k));
        t.exits.push_back("F2_" + std::to_string(k));
    }
    t.roles = assign_roles(t.region, "crossing");
    return maybe_lift(std::move(t), p);
}

enum class TrackShape { Straight, WithCorners };
enum class Direction { Forward, Reverse };

// One-way track t1 -> tn. With corners, every third inner cell uses the
// corner pattern. Ends are quiescent stubs.
inline CircuitTemplate build_track(int p, int length, TrackShape shape = TrackShape::Straight,
                                   Direction dir = Direction::Forward) {
    require_supported(p);
    if (length < 3) throw std::invalid_argument("a track needs at least 3 cells");
    const auto& pats = track_patterns(p);
    auto pick = [&](bool corner) -> const TrackPattern& {
        std::string want = std::string(corner ? "corner" : "ordinary") + (dir == Direction::Reverse ? "-reverse" : "");
        for (const auto& tp : pats)
            if (want == tp.name) return tp;
        throw std::logic_error("missing track pattern " + want);
    };
    CircuitTemplate t;
    t.name = "track";
    t.p = p;
    t.region.p = p;
    for (int i = 0; i < length; ++i) {
        bool corner = shape == TrackShape::WithCorners && i > 0 && i + 1 < length && i % 3 == 1;
        const TrackPattern& tp = pick(corner);
        Context word = RuleTemplate{State::W, tp.pattern, State::W, ""}.context(p);
        std::vector<Slot> s;
        for (char ch : word) s.push_back(Slot::Env(state_of(ch)));
        int in = tp.in < 0 ? p + tp.in : tp.in, out = tp.out < 0 ? p + tp.out : tp.out;
        if (i > 0) s[in] = Slot::Ref(i - 1);
        if (i + 1 < length) s[out] = Slot::Ref(i + 1);
        std::string nm = "t" + std::to_string(i + 1);
        t.region.cells.push_back({nm, std::move(s)});
        t.region.states.push_back(State::W);
        t.roles[nm] = corner ? "corner" : "track";
    }
    t.entries = {"t1"};
    t.exits = {"t" + std::to_string(length)};
    return t;
}

// ---------------------------------------------------------------------------
// Behavioural laws
// ---------------------------------------------------------------------------
struct LawResult {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

inline LawResult fail(std::string why) { return {false, std::move(why)}; }

inline bool is_fixed_point(const TrackedRegion& r, const RuleTable& table) { return next_states(r, table) == r.states; }

// A particle entered at t1 moves one cell per step; exactly one track cell is
// black until it leaves the far end.
inline LawResult track_law(const CircuitTemplate& t, const RuleTable& table) {
    TrackedRegion r = t.region;
    if (!is_fixed_point(r, table)) return fail("idle track is not a fixed point");
    const int n = static_cast<int>(r.cells.size());
    r.states[0] = State::B;
    for (int step = 0; step < n; ++step) {
        int blacks = 0, pos = -1;
        for (int i = 0; i < n; ++i)
            if (r.states[i] == State::B) ++blacks, pos = i;
        if (blacks != 1) return fail("t=" + std::to_string(step) + ": " + std::to_string(blacks) + " black track cells");
        if (pos != step) return fail("t=" + std::to_string(step) + ": particle at t" + std::to_string(pos + 1));
        r.states = next_states(r, table, step);
    }
    for (auto s : r.states)
        if (s != State::W) return fail("particle did not leave the track");
    return {};
}

// Entering at branch e, the particle leaves at branch e+2, once; between the
// entry and the first branching two ring cells are black at the same time.
inline LawResult roundabout_law(const CircuitTemplate& t, const RuleTable& table, int entry, int steps = 30) {
    const int n4 = static_cast<int>(t.entries.size());
    TrackedRegion r = t.region;
    if (!is_fixed_point(r, table)) return fail("idle round-about is not a fixed point");
    std::vector<Watch> w;
    for (int k = 0; k < n4; ++k) w.push_back({"F2_" + std::to_string(k), r.at("F2_" + std::to_string(k))});
    std::vector<int> ring;
    for (const char* x : {"A", "B", "C", "D"})
        for (int k = 0; k < n4; ++k) ring.push_back(r.at(std::string(x) + "_" + std::to_string(k)));
    Trace tr;
    bool pair = false;
    TrackedRegion cur = r;
    std::vector<std::pair<int, int>> exits;
    for (int time = 1; time <= steps; ++time) {
        if (time == 2) cur.states[cur.at("trE_" + std::to_string(entry))] = State::B;
        int rb = 0;
        for (int i : ring) rb += cur.states[i] == State::B;
        if (rb >= 2) pair = true;
        for (int k = 0; k < n4; ++k)
            if (cur.states[w[k].cell] == State::B) exits.emplace_back(time, k);
        cur.states = next_states(cur, table, time);
    }
    if (exits.size() != 1) return fail(std::to_string(exits.size()) + " exit events");
    int want = (entry + 2) % n4;
    if (exits[0].second != want)
        return fail("entered at " + std::to_string(entry) + ", left at " + std::to_string(exits[0].second));
    if (!pair) return fail("no companion particle on the ring");
    if (cur.states != r.states) return fail("round-about did not return to idle");
    return {};
}

namespace detail {
// Runs a passage from `port`, returning the exit cells seen black.
inline std::set<std::string> passage(TrackedRegion& r, const RuleTable& table, const std::string& port,
                                     const std::vector<std::string>& exits, int steps) {
    std::set<std::string> seen;
    r.states[r.at(port)] = State::B;
    for (int t = 0; t < steps; ++t) {
        for (const auto& e : exits)
            if (r.states[r.at(e)] == State::B) seen.insert(e);
        r.states = next_states(r, table, t);
    }
    return seen;
}
}  // namespace detail

// Two passages leave by different legs and restore the marks H,K.
inline LawResult flipflop_law(const CircuitTemplate& t, const RuleTable& table) {
    TrackedRegion r = t.region;
    if (!is_fixed_point(r, table)) return fail("idle flip-flop is not a fixed point");
    const auto h0 = r.state("H"), k0 = r.state("K");
    const std::string first = "a" + *t.selected, second = *t.selected == "C" ? "aB" : "aC";
    auto s1 = detail::passage(r, table, "bA", {"aB", "aC"}, 12);
    if (s1 != std::set<std::string>{first}) return fail("first passage did not leave through " + first);
    if (r.state("H") == h0 || r.state("K") == k0) return fail("marks not toggled after the first passage");
    if (!is_fixed_point(r, table)) return fail("not idle after the first passage");
    auto s2 = detail::passage(r, table, "bA", {"aB", "aC"}, 12);
    if (s2 != std::set<std::string>{second}) return fail("second passage did not leave through " + second);
    if (r.states != t.region.states) return fail("double passage did not restore the idle configuration");
    return {};
}

// Passive passage through `leg` (X or Y). Through the non-selected leg the
// marks I,J and H,K swap; through the selected leg nothing changes. A later
// active passage follows the marks.
inline LawResult memory_law(const CircuitTemplate& t, const RuleTable& table, const std::string& leg) {
    TrackedRegion r = t.region;
    if (!is_fixed_point(r, table)) return fail("idle memory switch is not a fixed point");
    // X pairs with B, Y with C
    const std::string leg_sel = leg == "X" ? "B" : "C";
    const bool through_selected = leg_sel == *t.selected;
    const auto before = r.states;
    auto out = detail::passage(r, table, "b" + leg, {"aV"}, 20);
    if (out != std::set<std::string>{"aV"}) return fail("passive passage did not leave through V");
    const char* marks[] = {"H", "K", "I", "J"};
    for (const char* m : marks) {
        bool changed = r.state(m) != before[r.at(m)];
        if (changed == through_selected)
            return fail(std::string("mark ") + m + (changed ? " changed" : " unchanged") + " after passage through " + leg);
    }
    if (!is_fixed_point(r, table)) return fail("not idle after the passive passage");
    std::string now = through_selected ? *t.selected : (*t.selected == "C" ? "B" : "C");
    auto act = detail::passage(r, table, "bA", {"aB", "aC"}, 12);
    if (act != std::set<std::string>{"a" + now}) return fail("active passage did not follow the selection " + now);
    return {};
}

}  // namespace hypca
