// hypca: rule tables, scenarios and pictures for two-state CA on {p,3}.
// Exit codes: 0 ok, 1 domain failure, 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypca/circuits.hpp"
#include "hypca/embed.hpp"
#include "hypca/genrules.hpp"
#include "hypca/render.hpp"

namespace {

using namespace hypca;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

RuleTable load_rules_file(const std::string& path) {
    std::istringstream in(slurp(path));
    ParsedRules pr;
    try {
        pr = parse_rule_lines(in);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    auto conflicts = check_rules(pr);
    if (!conflicts.empty()) {
        for (const auto& c : conflicts) std::cerr << c.text() << '\n';
        throw DomainError(path + ": " + std::to_string(conflicts.size()) + " conflict(s)");
    }
    RuleTable t(pr.p);
    for (const auto& r : pr.rules) t.insert(r);
    return t;
}

// --rules, then HYPCA_RULES, then the built-in table for p.
RuleTable rules_for(const std::string& flag, int p) {
    std::string path = flag;
    if (path.empty())
        if (const char* env = std::getenv("HYPCA_RULES")) path = env;
    if (!path.empty()) {
        RuleTable t = load_rules_file(path);
        if (t.p() != p) throw UsageError(path + " is for p=" + std::to_string(t.p()) + ", scenario needs p=" + std::to_string(p));
        return t;
    }
    if (p == 13) return p13_rules();
    return generate_table(p);
}

int cmd_validate(const std::string& file) {
    std::istringstream in(slurp(file));
    ParsedRules pr;
    try {
        pr = parse_rule_lines(in);
    } catch (const std::exception& e) {
        throw UsageError(file + ": " + e.what());
    }
    std::vector<ConflictReport> conflicts;
    RuleTable t = build_table(pr.p, pr.rules, &conflicts);
    for (const auto& c : conflicts) std::cerr << c.text() << '\n';
    std::cerr << file << ": p=" << pr.p << ", " << pr.rules.size() << " rule lines, " << t.size() << " canonical rules, "
              << conflicts.size() << " conflict(s)\n";
    return conflicts.empty() ? 0 : 1;
}

int cmd_generate(int p, const std::string& family, const std::string& out) {
    std::vector<Rule> rules;
    if (p == 13) {
        if (family != "all") throw UsageError("p=13 rules are the shipped transcription; only --family all applies");
        std::istringstream in(embedded_text("rules/p13.rules"));
        rules = parse_rule_lines(in).rules;
    } else {
        rules = generate_family(p, family);
    }
    std::vector<ConflictReport> conflicts;
    build_table(p, rules, &conflicts);
    for (const auto& c : conflicts) std::cerr << c.text() << '\n';
    std::ostringstream os;
    write_rules(os, p, rules);
    emit(out, os.str());
    return conflicts.empty() ? 0 : 1;
}

std::vector<Scenario> scenarios_named(const std::string& spec) {
    std::vector<Scenario> out;
    for (const auto& m : catalog_members(spec)) out.push_back(*find_scenario(m));
    if (!out.empty()) return out;
    Scenario sc = parse_scenario(slurp(spec), std::filesystem::path(spec).stem().string());
    if (!sc.expect_path.empty()) {
        auto rel = std::filesystem::path(spec).parent_path() / sc.expect_path;
        sc.expected = read_trace(rel.string());
    }
    out.push_back(std::move(sc));
    return out;
}

int cmd_run(const std::string& spec, const std::string& rules, int steps, const std::string& trace_out, const std::string& expect) {
    auto scs = scenarios_named(spec);
    if (scs.size() > 1 && (!trace_out.empty() || !expect.empty()))
        throw UsageError("'" + spec + "' names a group; --trace and --expect take a single scenario");
    int failures = 0;
    for (const auto& sc : scs) {
        RuleTable table = rules_for(rules, sc.p);
        Trace tr;
        try {
            tr = run_scenario(sc, table, steps);
        } catch (const StepError& e) {
            throw DomainError(sc.name + ": " + e.what());
        }
        if (scs.size() == 1) emit(trace_out, tr.csv());
        std::optional<Trace> want;
        if (!expect.empty()) want = read_trace(expect);
        else if (steps < 0) want = sc.expected;
        if (!want) continue;
        auto d = trace_diff(tr, *want);
        if (d.empty()) {
            std::cerr << sc.name << ": trace matches (" << tr.rows.size() << " rows)\n";
        } else {
            std::cerr << sc.name << ": " << d.size() << " mismatch(es)\n" << format_diff(d);
            ++failures;
        }
    }
    return failures ? 1 : 0;
}

int cmd_trace_diff(const std::string& a, const std::string& b) {
    Trace ta = read_trace(a), tb = read_trace(b);
    std::vector<TraceDelta> d;
    try {
        d = trace_diff(ta, tb);
    } catch (const ColumnMismatch& e) {
        throw DomainError(e.what());
    }
    std::cout << format_diff(d);
    return d.empty() ? 0 : 1;
}

int cmd_neighbors(int p, const std::string& cell) {
    Navigator nav(p);
    CellCoord c = parse_cell(cell, nav.tree());
    std::ostringstream os;
    os << cell_name(c, nav.tree()) << ':';
    for (const auto& n : nav.neighbors(c)) os << ' ' << cell_name(n, nav.tree());
    os << '\n';
    emit("", os.str());
    return 0;
}

int cmd_render(int p, int radius, const std::string& scenario, const std::string& style, const std::string& out) {
    if (radius < 0 || radius > 5) throw UsageError("--radius must be in 0..5");
    TilingBall ball = build_ball(p, radius);
    DiskLayout L = layout_ball(ball, style == "polygons" ? RenderStyle::Polygons : RenderStyle::Circles);
    RenderOptions opt;
    if (!scenario.empty()) {
        auto scs = scenarios_named(scenario);
        const Scenario& sc = scs.front();
        if (sc.p != p) throw UsageError("scenario is for p=" + std::to_string(sc.p));
        Embedding e;
        try {
            e = embed_centered(sc.region, ball);
        } catch (const EmbedFailure& f) {
            throw DomainError(sc.name + " does not embed in {" + std::to_string(p) + ",3}: " + f.what());
        }
        for (const auto& [t, s] : e.constant) opt.states[t] = s;
        for (std::size_t i = 0; i < e.tile.size(); ++i) opt.states[e.tile[i]] = sc.region.states[i];
        for (const auto& w : sc.watch) opt.highlight.insert(e.tile[sc.region.at(w.cell)]);
    }
    emit(out, render_svg(L, opt));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypca: two-state cellular automata on hyperbolic {p,3} tilings"};
    app.require_subcommand(1, 1);

    std::string file, family = "all", out, scenario, rules, trace_out, expect, a, b, cell, style = "circles";
    int p = 13, steps = -1, radius = 2;

    auto* validate = app.add_subcommand("validate", "check a rule file for rotation/determinism conflicts");
    validate->add_option("rules-file", file, "rule file")->required();

    auto* generate = app.add_subcommand("generate", "write the rule table for p");
    generate->add_option("--p", p, "polygon size")->required();
    generate->add_option("--family", family, "all|tracks|crossing|fixed|flipflop|memory")
        ->check(CLI::IsMember({"all", "tracks", "crossing", "fixed", "flipflop", "memory"}));
    generate->add_option("-o", out, "output file (default stdout)");

    auto* runc = app.add_subcommand("run", "run a scenario and record its trace");
    runc->add_option("--scenario", scenario, "catalog name, group name, or .scn file")->required();
    runc->add_option("--rules", rules, "rule file (default HYPCA_RULES, then built-in)");
    runc->add_option("--steps", steps, "number of rows (default from the scenario)");
    runc->add_option("--trace", trace_out, "trace CSV output (default stdout)");
    runc->add_option("--expect", expect, "expected trace CSV");

    auto* diff = app.add_subcommand("trace-diff", "compare two trace CSV files");
    diff->add_option("a", a)->required();
    diff->add_option("b", b)->required();

    auto* nbrs = app.add_subcommand("neighbors", "list the neighbours of a tile, ccw from its father");
    nbrs->add_option("--p", p, "polygon size")->required();
    nbrs->add_option("--cell", cell, "C or s<sector>.<number>")->required();

    auto* render = app.add_subcommand("render", "draw a ball as SVG");
    render->add_option("--p", p, "polygon size")->required();
    render->add_option("--radius", radius, "ball radius (0..5)")->required();
    render->add_option("--scenario", scenario, "place a scenario's idle configuration on the ball");
    render->add_option("--style", style, "circles|polygons")->check(CLI::IsMember({"circles", "polygons"}));
    render->add_option("-o", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*generate) return cmd_generate(p, family, out);
        if (*runc) return cmd_run(scenario, rules, steps, trace_out, expect);
        if (*diff) return cmd_trace_diff(a, b);
        if (*nbrs) return cmd_neighbors(p, cell);
        if (*render) return cmd_render(p, radius, scenario, style, out);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const RuleConflict& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const StepError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const MissingRule& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
