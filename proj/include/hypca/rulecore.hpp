#pragma once
// Two-state rotation-invariant rules: canonical forms, tables, rule files.

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypca {

enum class State : char { W = 'W', B = 'B' };

inline char to_char(State s) { return static_cast<char>(s); }
inline State state_of(char c) {
    if (c == 'W') return State::W;
    if (c == 'B') return State::B;
    throw std::invalid_argument(std::string("not a state: ") + c);
}

// A context is a word over {B,W}; B < W matches plain char order.
using Context = std::string;

struct Rule {
    State current = State::W;
    Context context;
    State next = State::W;
    std::string provenance;
};

struct RuleSyntaxError : std::runtime_error {
    int line;
    RuleSyntaxError(int l, const std::string& m) : std::runtime_error("line " + std::to_string(l) + ": " + m), line(l) {}
};
struct RuleLengthError : std::runtime_error {
    int line;
    RuleLengthError(int l, const std::string& m) : std::runtime_error("line " + std::to_string(l) + ": " + m), line(l) {}
};

struct ConflictReport {
    std::string key;
    Rule existing, incoming;
    std::string text() const {
        return "CONFLICT " + key + " : " + to_char(existing.next) + " vs " + to_char(incoming.next) + " (" +
               existing.provenance + ", " + incoming.provenance + ")";
    }
};

struct RuleConflict : std::runtime_error {
    ConflictReport report;
    explicit RuleConflict(ConflictReport r) : std::runtime_error(r.text()), report(std::move(r)) {}
};

struct MissingRule : std::runtime_error {
    State current;
    Context canonical;
    MissingRule(State c, Context k, const std::string& where = "")
        : std::runtime_error("missing rule: " + std::string(1, to_char(c)) + " " + k + (where.empty() ? "" : " at " + where)),
          current(c), canonical(std::move(k)) {}
};

inline int count_black(const Context& c) { return static_cast<int>(std::count(c.begin(), c.end(), 'B')); }

// Least circular rotation (Booth).
inline Context canonical_form(const Context& s) {
    const int n = static_cast<int>(s.size());
    if (n == 0) return s;
    std::string ss = s + s;
    std::vector<int> f(2 * n, -1);
    int k = 0;
    for (int j = 1; j < 2 * n; ++j) {
        char sj = ss[j];
        int i = f[j - k - 1];
        while (i != -1 && sj != ss[k + i + 1]) {
            if (sj < ss[k + i + 1]) k = j - i - 1;
            i = f[i];
        }
        if (sj != ss[k + i + 1]) {
            if (sj < ss[k]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return ss.substr(k, n);
}

inline std::string rule_key(State current, const Context& ctx) {
    return std::string(1, to_char(current)) + canonical_form(ctx);
}

inline std::optional<State> default_next(State current, const Context& ctx) {
    if (count_black(ctx) <= 2) return current;
    return std::nullopt;
}

// Condensed notation: runs of length >= 3 become X^k.
inline std::string condense(const Context& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size();) {
        std::size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        std::size_t run = j - i;
        if (run >= 3) out += std::string(1, c[i]) + "^" + std::to_string(run);
        else out += std::string(run, c[i]);
        i = j;
    }
    return out;
}

inline std::string format_rule(const Rule& r) {
    return std::string(1, to_char(r.current)) + " " + condense(r.context) + " -> " + to_char(r.next);
}

// Expands "BBWBWBW^7"; returns nullopt on a syntax error.
inline std::optional<Context> expand(const std::string& word) {
    Context out;
    for (std::size_t i = 0; i < word.size();) {
        char c = word[i];
        if (c != 'W' && c != 'B') return std::nullopt;
        ++i;
        if (i < word.size() && word[i] == '^') {
            ++i;
            std::size_t j = i;
            while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
            if (j == i) return std::nullopt;
            int k = std::stoi(word.substr(i, j - i));
            if (k < 1) return std::nullopt;
            out.append(static_cast<std::size_t>(k), c);
            i = j;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

class RuleTable {
public:
    struct Entry {
        Rule rule;       // as first inserted
        State next;
    };

    explicit RuleTable(int p = 13) : p_(p) {}
    int p() const { return p_; }
    std::size_t size() const { return rules_.size(); }
    const std::map<std::string, Entry>& entries() const { return rules_; }

    // Stores under the canonical key; same-outcome duplicates are accepted.
    std::optional<ConflictReport> try_insert(const Rule& r) {
        if (static_cast<int>(r.context.size()) != p_)
            throw std::invalid_argument("context length " + std::to_string(r.context.size()) + " != p=" + std::to_string(p_));
        std::string key = rule_key(r.current, r.context);
        auto it = rules_.find(key);
        if (it == rules_.end()) {
            rules_.emplace(key, Entry{r, r.next});
            return std::nullopt;
        }
        if (it->second.next == r.next) return std::nullopt;
        return ConflictReport{key, it->second.rule, r};
    }

    void insert(const Rule& r) {
        if (auto c = try_insert(r)) throw RuleConflict(*c);
    }

    bool erase(State current, const Context& ctx) { return rules_.erase(rule_key(current, ctx)) > 0; }

    std::optional<State> find(State current, const Context& ctx) const {
        auto it = rules_.find(rule_key(current, ctx));
        if (it == rules_.end()) return std::nullopt;
        return it->second.next;
    }

    const Entry* entry(State current, const Context& ctx) const {
        auto it = rules_.find(rule_key(current, ctx));
        return it == rules_.end() ? nullptr : &it->second;
    }

    State lookup(State current, const Context& ctx) const {
        if (auto s = find(current, ctx)) return *s;
        if (auto d = default_next(current, ctx)) return *d;
        throw MissingRule(current, canonical_form(ctx));
    }

    // canonical dump, sorted by key
    void dump(std::ostream& os) const {
        os << "p=" << p_ << '\n';
        for (const auto& [key, e] : rules_) {
            Rule r{state_of(key[0]), key.substr(1), e.next, {}};
            os << format_rule(r);
            if (!e.rule.provenance.empty()) os << "  # " << e.rule.provenance;
            os << '\n';
        }
    }

private:
    int p_;
    std::map<std::string, Entry> rules_;
};

struct ParsedRules {
    int p = 0;
    std::vector<Rule> rules;
};

// Grammar only: header p=<int>, then "<S> <ctx> -> <S>" lines, '#' comments.
// A comment on a rule line becomes its provenance.
inline ParsedRules parse_rule_lines(std::istream& in) {
    ParsedRules out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string comment;
        if (auto h = line.find('#'); h != std::string::npos) {
            comment = line.substr(h + 1);
            line.resize(h);
        }
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a)) continue;
        if (a.rfind("p=", 0) == 0) {
            std::string rest;
            if (out.p != 0 || (ls >> rest)) throw RuleSyntaxError(no, "duplicate or malformed header");
            try {
                std::size_t used = 0;
                out.p = std::stoi(a.substr(2), &used);
                if (used != a.size() - 2 || out.p < 3) throw std::invalid_argument("p");
            } catch (const std::exception&) {
                throw RuleSyntaxError(no, "bad header '" + a + "'");
            }
            continue;
        }
        if (out.p == 0) throw RuleSyntaxError(no, "missing header p=<int>");
        std::string ctx, arrow, nx, extra;
        if (!(ls >> ctx >> arrow >> nx) || (ls >> extra) || arrow != "->" || a.size() != 1 || nx.size() != 1 ||
            (a[0] != 'W' && a[0] != 'B') || (nx[0] != 'W' && nx[0] != 'B'))
            throw RuleSyntaxError(no, "expected '<S> <ctx> -> <S>'");
        auto e = expand(ctx);
        if (!e) throw RuleSyntaxError(no, "bad context '" + ctx + "'");
        if (static_cast<int>(e->size()) != out.p)
            throw RuleLengthError(no, "context expands to " + std::to_string(e->size()) + " symbols, p=" + std::to_string(out.p));
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t"), en = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, en - b + 1);
        };
        std::string prov = trim(comment);
        if (prov.empty()) prov = "line " + std::to_string(no);
        out.rules.push_back(Rule{state_of(a[0]), *e, state_of(nx[0]), prov});
    }
    if (out.p == 0) throw RuleSyntaxError(no, "missing header p=<int>");
    return out;
}

inline RuleTable parse_rules(std::istream& in) {
    ParsedRules pr = parse_rule_lines(in);
    RuleTable t(pr.p);
    for (const auto& r : pr.rules) t.insert(r);
    return t;
}

inline RuleTable parse_rules(const std::string& text) {
    std::istringstream in(text);
    return parse_rules(in);
}

// All conflicts in a rule list (validate mode keeps going after the first).
inline std::vector<ConflictReport> check_rules(const ParsedRules& pr) {
    RuleTable t(pr.p);
    std::vector<ConflictReport> out;
    for (const auto& r : pr.rules)
        if (auto c = t.try_insert(r)) out.push_back(*c);
    return out;
}

inline void write_rules(std::ostream& os, int p, const std::vector<Rule>& rules) {
    os << "p=" << p << '\n';
    for (const auto& r : rules) {
        os << format_rule(r);
        if (!r.provenance.empty()) os << "  # " << r.provenance;
        os << '\n';
    }
}

}  // namespace hypca
