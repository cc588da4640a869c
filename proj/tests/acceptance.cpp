// One line per acceptance criterion: PASS/FAIL, what was measured, time.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hypca/circuits.hpp"
#include "hypca/embed.hpp"
#include "hypca/render.hpp"

using namespace hypca;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && s > budget_s) {
        o.ok = false;
        o.detail += " (over the " + std::to_string(budget_s) + " s budget)";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %d %-28s %.3fs  %s\n", o.ok ? "PASS" : "FAIL", id, title, s, o.detail.c_str());
    std::fflush(stdout);
}

Outcome golden(const std::vector<std::string>& names) {
    int rows = 0;
    for (const auto& n : names) {
        const Scenario* sc = find_scenario(n);
        if (!sc || !sc->expected) return {false, "no scenario " + n};
        Trace tr = run_scenario(*sc, p13_rules());
        auto d = trace_diff(tr, *sc->expected);
        if (!d.empty()) return {false, n + ": " + std::to_string(d.size()) + " differing cells, first " + d[0].cell + " at t=" + std::to_string(d[0].time)};
        rows += static_cast<int>(tr.rows.size());
    }
    return {true, std::to_string(names.size()) + " runs, " + std::to_string(rows) + " rows bit-exact"};
}

template <class F>
bool law_fails(F&& f, std::string& why) {
    try {
        auto r = f();
        if (!r.ok) why = r.detail;
        return !r.ok;
    } catch (const StepError& e) {
        why = e.what();
        return true;
    }
}

Context brute_min(const Context& c) {
    Context best = c;
    for (std::size_t r = 1; r < c.size(); ++r) best = std::min(best, c.substr(r) + c.substr(0, r));
    return best;
}

bool rotations_agree(const RuleTable& t, State cur, const Context& c, State expect) {
    for (std::size_t k = 0; k < c.size(); ++k)
        if (t.lookup(cur, c.substr(k) + c.substr(0, k)) != expect) return false;
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance: 9 criteria\n");

    criterion(1, "crossing trace (p=13)", 1.0, [] {
        const Scenario* sc = find_scenario("crossing");
        if (sc->expected->rows.size() != 18 || sc->expected->columns.size() != 10) return Outcome{false, "reference table is not 18x10"};
        return golden({"crossing"});
    });

    criterion(2, "switch traces (p=13)", 1.0, [] {
        auto o = golden({"fixed_B", "fixed_C", "flipflop_C", "flipflop_B", "mma_C", "mma_B", "mmpX_ns", "mmpX_s", "mmpY_ns", "mmpY_s"});
        if (!o.ok) return o;
        auto col = [](const Trace& t, const char* n) {
            return static_cast<int>(std::find(t.columns.begin(), t.columns.end(), n) - t.columns.begin());
        };
        for (const char* n : {"flipflop_C", "flipflop_B"}) {
            const Trace& t = *find_scenario(n)->expected;
            int h = col(t, "H"), k = col(t, "K");
            if (t.rows.size() != 8 || t.rows[6][h] != t.rows[0][h] || t.rows[7][h] != t.rows[0][k] || t.rows[7][k] != t.rows[0][h])
                return Outcome{false, std::string(n) + ": H/K do not swap at row 8"};
        }
        for (const char* n : {"mma_C", "mma_B"}) {
            const Trace& t = *find_scenario(n)->expected;
            int h = col(t, "H"), k = col(t, "K");
            for (const auto& row : t.rows)
                if (row[h] != t.rows[0][h] || row[k] != t.rows[0][k]) return Outcome{false, std::string(n) + ": H/K changed"};
        }
        o.detail += "; flip-flop H/K swap at row 8, active memory H/K fixed";
        return o;
    });

    criterion(3, "p=13 rule set integrity", 0, [] {
        std::istringstream in(embedded_text("rules/p13.rules"));
        auto pr = parse_rule_lines(in);
        auto conflicts = check_rules(pr);
        if (!conflicts.empty()) return Outcome{false, std::to_string(conflicts.size()) + " conflicts, first " + conflicts[0].text()};
        int runs = 0;
        for (const auto& g : catalog_groups())
            for (const auto& m : g.members) {
                try {
                    run_scenario(*find_scenario(m), p13_rules());
                } catch (const StepError& e) {
                    return Outcome{false, m + ": " + e.what()};
                }
                ++runs;
            }
        return Outcome{true, std::to_string(pr.rules.size()) + " lines, " + std::to_string(p13_rules().size()) +
                                 " rotation classes, 0 conflicts, 0 missing rules over " + std::to_string(catalog_groups().size()) +
                                 " scenarios (" + std::to_string(runs) + " runs)"};
    });

    criterion(4, "neighbour arithmetic = ball", 10.0, [] {
        std::size_t tiles = 0;
        for (int p : {7, 13, 17}) {
            auto b = build_ball(p, 4);
            Navigator nav(p);
            for (std::size_t i = 0; i < b.cells.size(); ++i) {
                if (!b.interior(static_cast<int>(i))) continue;
                auto fast = nav.neighbors(b.cells[i].coord);
                const auto& adj = b.cells[i].adj;
                for (int j = 0; j < p; ++j)
                    if (!(fast[j] == b.cells[adj[j]].coord))
                        return Outcome{false, "p=" + std::to_string(p) + " tile " + b.name(static_cast<int>(i)) + " slot " + std::to_string(j)};
                ++tiles;
            }
        }
        return Outcome{true, std::to_string(tiles) + " interior tiles, p in {7,13,17}, radius 4, exact"};
    });

    criterion(5, "ring growth p=7", 0, [] {
        auto r = ring_sizes(build_ball(7, 4));
        std::vector<std::int64_t> want{1, 7, 21, 56, 147};
        std::ostringstream os;
        for (std::size_t i = 1; i < r.size(); ++i) os << (i > 1 ? "," : "") << r[i];
        return Outcome{r == want, "rings 1-4: " + os.str() + " (want 7,21,56,147)"};
    });

    criterion(6, "generic rules p=17,19", 5.0, [] {
        int laws = 0;
        for (int p : {17, 19}) {
            std::vector<ConflictReport> conflicts;
            RuleTable table = build_table(p, generate_family(p, "all"), &conflicts);
            const std::string at = "p=" + std::to_string(p) + " ";
            if (!conflicts.empty()) return Outcome{false, at + "conflict: " + conflicts[0].text()};
            std::string why;
            if (law_fails([&] { return track_law(build_track(p, 20), table); }, why)) return Outcome{false, at + "track: " + why};
            ++laws;
            auto ra = build_roundabout(p);
            for (int e = 0; e < 4; ++e, ++laws)
                if (law_fails([&] { return roundabout_law(ra, table, e); }, why))
                    return Outcome{false, at + "round-about entry " + std::to_string(e) + ": " + why};
            for (Leg l : {Leg::Left, Leg::Right}) {
                if (law_fails([&] { return flipflop_law(build_flipflop(p, l), table); }, why)) return Outcome{false, at + "flip-flop: " + why};
                ++laws;
                for (const char* leg : {"X", "Y"}) {
                    if (law_fails([&] { return memory_law(build_memory_switch(p, l), table, leg); }, why))
                        return Outcome{false, at + "memory " + leg + ": " + why};
                    ++laws;
                }
            }
        }
        return Outcome{true, "unions conflict-free; " + std::to_string(laws) + " law checks hold"};
    });

    criterion(7, "rotation invariance", 0, [] {
        std::mt19937 g(20261018);
        std::bernoulli_distribution coin(0.4);
        std::uniform_int_distribution<int> pick(7, 29);
        std::size_t checked = 0;
        for (int i = 0; i < 10000; ++i) {
            int p = pick(g);
            Context c;
            for (int k = 0; k < p; ++k) c.push_back(coin(g) ? 'B' : 'W');
            if (canonical_form(c) != brute_min(c)) return Outcome{false, "canonical form of " + c};
            State cur = coin(g) ? State::B : State::W, next = coin(g) ? State::B : State::W;
            RuleTable t(p);
            t.insert({cur, c, next, ""});
            if (!rotations_agree(t, cur, c, next)) return Outcome{false, "rotation of " + c};
            ++checked;
        }
        std::size_t stored = 0;
        std::vector<RuleTable> tables{p13_rules(), generate_table(17), generate_table(19)};
        for (const auto& t : tables)
            for (const auto& [key, e] : t.entries()) {
                if (!rotations_agree(t, e.rule.current, e.rule.context, e.rule.next)) return Outcome{false, "stored rule " + key};
                if (canonical_form(e.rule.context) != brute_min(e.rule.context)) return Outcome{false, "canonical form of " + key};
                ++stored;
            }
        return Outcome{true, std::to_string(checked) + " random pairs, " + std::to_string(stored) + " stored rules, all rotations"};
    });

    criterion(8, "sparse ball = tracked region", 0, [] {
        const Scenario& sc = *find_scenario("crossing");
        auto ball = build_ball(13, 4);
        try {
            Embedding e = embed_centered(sc.region, ball);
            std::vector<Watch> w;
            for (const auto& ws : sc.watch) w.push_back({ws.column, sc.region.at(ws.cell)});
            std::vector<Injection> in;
            for (const auto& pi : sc.inject) in.push_back({pi.time, sc.region.at(pi.port), pi.count});
            Trace sparse = run_embedded(sc.region, e, ball, p13_rules(), sc.steps, w, in);
            auto d = trace_diff(sparse, *sc.expected);
            return Outcome{d.empty(), std::to_string(d.size()) + " differing cells"};
        } catch (const EmbedFailure& f) {
            return Outcome{false, std::string("crossing does not embed in {13,3}: ") + f.what()};
        }
    });

    criterion(9, "renderer", 1.0, [] {
        double worst = 0;
        for (int p : {7, 13}) {
            auto ball = build_ball(p, 2);
            auto L = layout_ball(ball);
            worst = std::max(worst, check_layout(ball, L).tangency);
            std::string svg = render_svg(L);
            // tags close in order
            std::vector<std::string> stack;
            for (std::size_t i = 0; (i = svg.find('<', i)) != std::string::npos;) {
                std::size_t j = svg.find('>', i);
                if (j == std::string::npos) return Outcome{false, "unterminated tag"};
                std::string tag = svg.substr(i + 1, j - i - 1);
                i = j + 1;
                if (tag[0] == '?' || tag.back() == '/') continue;
                if (tag[0] == '/') {
                    if (stack.empty() || stack.back() != tag.substr(1)) return Outcome{false, "mismatched </" + tag.substr(1) + ">"};
                    stack.pop_back();
                } else {
                    stack.push_back(tag.substr(0, tag.find(' ')));
                }
            }
            if (!stack.empty()) return Outcome{false, "unclosed <" + stack.back() + ">"};
        }
        std::ostringstream os;
        os << "max tangency residual " << worst << " (< 1e-6), svg well formed";
        return Outcome{worst < 1e-6, os.str()};
    });

    std::printf("acceptance: %d of 9 failed\n", failures);
    return failures ? 1 : 0;
}
