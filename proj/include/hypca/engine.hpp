#pragma once
// Synchronous update on tracked regions and on sparse ball configurations.

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypca/rulecore.hpp"
#include "hypca/tiling.hpp"

namespace hypca {

struct Slot {
    bool ref = false;
    State env = State::W;  // when !ref
    int id = -1;           // when ref

    static Slot Env(State s) { return {false, s, -1}; }
    static Slot Ref(int i) { return {true, State::W, i}; }
    friend bool operator==(const Slot&, const Slot&) = default;
};

struct TrackedCell {
    std::string name;
    std::vector<Slot> slots;  // neighbours 1..p, counterclockwise
};

struct StepError : std::runtime_error {
    std::string cell;
    int time;
    State current;
    Context canonical;
    StepError(const MissingRule& m, std::string c, int t)
        : std::runtime_error(std::string(m.what()) + " (cell " + c + ", t=" + std::to_string(t) + ")"),
          cell(std::move(c)), time(t), current(m.current), canonical(m.canonical) {}
};

struct TrackedRegion {
    int p = 13;
    std::vector<TrackedCell> cells;
    std::vector<State> states;
    std::set<std::pair<int, int>> stubs;  // (a, b): a refers to b, b does not refer back

    int find(const std::string& name) const {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].name == name) return static_cast<int>(i);
        return -1;
    }
    int at(const std::string& name) const {
        int i = find(name);
        if (i < 0) throw std::out_of_range("no cell named '" + name + "'");
        return i;
    }
    State state(const std::string& name) const { return states[at(name)]; }

    Context context(int i, const std::vector<State>& st) const {
        Context c;
        c.reserve(p);
        for (const Slot& s : cells[i].slots) c.push_back(to_char(s.ref ? st[s.id] : s.env));
        return c;
    }
    Context context(int i) const { return context(i, states); }

    // Ref pairs that are one-sided and not declared as stubs.
    std::vector<std::pair<int, int>> symmetry_violations() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t a = 0; a < cells.size(); ++a)
            for (const Slot& s : cells[a].slots) {
                if (!s.ref) continue;
                const auto& back = cells[s.id].slots;
                bool ok = std::any_of(back.begin(), back.end(), [&](const Slot& x) { return x.ref && x.id == static_cast<int>(a); });
                if (!ok && !stubs.count({static_cast<int>(a), s.id})) out.emplace_back(static_cast<int>(a), s.id);
            }
        return out;
    }
};

// One synchronous step; contexts read only the previous snapshot.
inline std::vector<State> next_states(const TrackedRegion& r, const RuleTable& table, int time = 0) {
    std::vector<State> nx(r.cells.size());
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
        try {
            nx[i] = table.lookup(r.states[i], r.context(static_cast<int>(i)));
        } catch (const MissingRule& m) {
            throw StepError(m, r.cells[i].name, time);
        }
    }
    return nx;
}

inline TrackedRegion step(TrackedRegion r, const RuleTable& table, int time = 0) {
    r.states = next_states(r, table, time);
    return r;
}

struct Trace {
    std::vector<std::string> columns;
    std::vector<std::vector<State>> rows;  // rows[0] is t = 1

    friend bool operator==(const Trace&, const Trace&) = default;

    std::string csv() const {
        std::ostringstream os;
        os << 't';
        for (const auto& c : columns) os << ',' << c;
        os << '\n';
        for (std::size_t t = 0; t < rows.size(); ++t) {
            os << t + 1;
            for (State s : rows[t]) os << ',' << to_char(s);
            os << '\n';
        }
        return os.str();
    }
};

struct TraceFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Trace parse_trace(std::istream& in) {
    Trace tr;
    std::string line;
    int no = 0;
    auto split = [](const std::string& s) {
        std::vector<std::string> f;
        std::string cur;
        std::istringstream ss(s);
        while (std::getline(ss, cur, ',')) {
            while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ')) cur.pop_back();
            f.push_back(cur);
        }
        return f;
    };
    while (std::getline(in, line)) {
        ++no;
        if (line.empty() || line == "\r") continue;
        auto f = split(line);
        if (tr.columns.empty()) {
            if (f.empty() || f[0] != "t") throw TraceFormatError("trace header must start with 't'");
            tr.columns.assign(f.begin() + 1, f.end());
            continue;
        }
        if (f.size() != tr.columns.size() + 1) throw TraceFormatError("line " + std::to_string(no) + ": wrong field count");
        if (f[0] != std::to_string(tr.rows.size() + 1)) throw TraceFormatError("line " + std::to_string(no) + ": times must run 1,2,...");
        std::vector<State> row;
        for (std::size_t k = 1; k < f.size(); ++k) {
            if (f[k] != "W" && f[k] != "B") throw TraceFormatError("line " + std::to_string(no) + ": bad state '" + f[k] + "'");
            row.push_back(state_of(f[k][0]));
        }
        tr.rows.push_back(std::move(row));
    }
    if (tr.columns.empty()) throw TraceFormatError("empty trace");
    return tr;
}

inline Trace read_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return parse_trace(in);
}

struct ColumnMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceDelta {
    int time;
    std::string cell;
    State expected, actual;
};

inline std::vector<TraceDelta> trace_diff(const Trace& actual, const Trace& expected) {
    if (actual.columns != expected.columns) throw ColumnMismatch("trace columns differ");
    std::vector<TraceDelta> out;
    std::size_t n = std::max(actual.rows.size(), expected.rows.size());
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t c = 0; c < actual.columns.size(); ++c) {
            bool ha = t < actual.rows.size(), he = t < expected.rows.size();
            if (ha && he && actual.rows[t][c] == expected.rows[t][c]) continue;
            // a missing row is reported against the opposite state
            State a = ha ? actual.rows[t][c] : (he && expected.rows[t][c] == State::W ? State::B : State::W);
            State e = he ? expected.rows[t][c] : (a == State::W ? State::B : State::W);
            out.push_back({static_cast<int>(t + 1), actual.columns[c], e, a});
        }
    }
    return out;
}

inline std::string format_diff(const std::vector<TraceDelta>& d) {
    std::ostringstream os;
    for (const auto& x : d) os << "t=" << x.time << " " << x.cell << ": expected " << to_char(x.expected) << ", got " << to_char(x.actual) << '\n';
    return os.str();
}

struct Injection {
    int time = 1;
    int cell = -1;
    int count = 1;  // particles entered on consecutive steps
};

struct Watch {
    std::string column;
    int cell;
};

// Row t holds the states before step t; an injection at time t is visible in row t.
inline Trace run(TrackedRegion r, const RuleTable& table, int steps, const std::vector<Watch>& watch,
                 const std::vector<Injection>& inject = {}) {
    Trace tr;
    for (const auto& w : watch) tr.columns.push_back(w.column);
    for (int t = 1; t <= steps; ++t) {
        for (const auto& in : inject)
            if (t >= in.time && t < in.time + in.count) r.states[in.cell] = State::B;
        std::vector<State> row;
        for (const auto& w : watch) row.push_back(r.states[w.cell]);
        tr.rows.push_back(std::move(row));
        if (t < steps) r.states = next_states(r, table, t);
    }
    return tr;
}

inline Trace run(const TrackedRegion& r, const RuleTable& table, int steps, const std::vector<std::string>& names) {
    std::vector<Watch> w;
    for (const auto& n : names) w.push_back({n, r.at(n)});
    return run(r, table, steps, w);
}

// ---------------------------------------------------------------------------
// Sparse configurations over a ball: only non-W tiles are stored.
// ---------------------------------------------------------------------------
using SparseConfig = std::map<CellCoord, State>;

struct SupportEscape : std::runtime_error {
    CellCoord cell;
    explicit SupportEscape(CellCoord c) : std::runtime_error("non-quiescent state reached the ball frontier"), cell(std::move(c)) {}
};

class SparseEngine {
public:
    SparseEngine(const TilingBall& ball, const RuleTable& table) : ball_(ball), table_(table) {}

    std::vector<State> dense(const SparseConfig& cfg) const {
        std::vector<State> st(ball_.cells.size(), State::W);
        for (const auto& [c, s] : cfg) {
            int i = ball_.find(c);
            if (i < 0) throw SupportEscape(c);
            st[i] = s;
        }
        return st;
    }

    // Only tiles that are black or touch a black tile can change (defaults keep
    // all-W neighbourhoods quiescent), so the update visits that set only.
    std::vector<State> step(const std::vector<State>& st, int time = 0) const {
        std::vector<State> nx = st;
        std::vector<char> seen(st.size(), 0);
        std::vector<int> todo;
        for (std::size_t i = 0; i < st.size(); ++i) {
            if (st[i] != State::B) continue;
            auto mark = [&](int j) {
                if (j >= 0 && !seen[j]) { seen[j] = 1; todo.push_back(j); }
            };
            mark(static_cast<int>(i));
            for (int j : ball_.cells[i].adj) mark(j);
        }
        for (int i : todo) {
            const auto& t = ball_.cells[i];
            if (!ball_.interior(i)) {
                // frontier tiles must stay quiescent
                Context c;
                for (int j : t.adj) c.push_back(j < 0 ? 'W' : to_char(st[j]));
                State s = st[i];
                if (auto f = table_.find(s, c)) s = *f;
                else if (auto d = default_next(s, c)) s = *d;
                else s = State::B;
                if (s != State::W) throw SupportEscape(t.coord);
                nx[i] = State::W;
                continue;
            }
            Context c;
            for (int j : t.adj) c.push_back(to_char(st[j]));
            try {
                nx[i] = table_.lookup(st[i], c);
            } catch (const MissingRule& m) {
                throw StepError(m, ball_.name(i), time);
            }
        }
        return nx;
    }

    SparseConfig sparse(const std::vector<State>& st) const {
        SparseConfig out;
        for (std::size_t i = 0; i < st.size(); ++i)
            if (st[i] != State::W) out.emplace(ball_.cells[i].coord, st[i]);
        return out;
    }

    const TilingBall& ball() const { return ball_; }

private:
    const TilingBall& ball_;
    const RuleTable& table_;
};

inline SparseConfig step_sparse(const SparseConfig& cfg, const RuleTable& table, const TilingBall& ball) {
    SparseEngine e(ball, table);
    return e.sparse(e.step(e.dense(cfg)));
}

}  // namespace hypca
