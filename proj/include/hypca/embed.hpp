#pragma once
// Placing a tracked region on the tiles of a ball. A cell sits on a tile with
// a rotation r: slot j of the cell is neighbour (j + r) mod p of the tile.
// References fix the neighbouring placements; constant slots become tiles
// that must hold that state for the whole run.

#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/engine.hpp"
#include "hypca/tiling.hpp"

namespace hypca {

struct EmbedFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Embedding {
    std::vector<int> tile;                 // per cell
    std::vector<int> rotation;             // per cell
    std::map<int, State> constant;         // tiles fixed by constant slots
    std::vector<std::string> notes;        // one-sided stubs that see a live tile

    SparseConfig initial(const TrackedRegion& r, const TilingBall& ball) const {
        SparseConfig cfg;
        for (const auto& [t, s] : constant)
            if (s == State::B) cfg[ball.cells[t].coord] = s;
        for (std::size_t i = 0; i < tile.size(); ++i)
            if (r.states[i] == State::B) cfg[ball.cells[tile[i]].coord] = State::B;
        return cfg;
    }
};

// Places `seed` on `seed_tile` with rotation `seed_rot` and propagates along
// references. Throws EmbedFailure naming the first contradiction.
inline Embedding embed_region(const TrackedRegion& r, const TilingBall& ball, int seed = 0, int seed_tile = 0, int seed_rot = 0) {
    const int p = r.p;
    if (ball.p != p) throw EmbedFailure("ball is for p=" + std::to_string(ball.p) + ", region for p=" + std::to_string(p));
    const int n = static_cast<int>(r.cells.size());
    Embedding e;
    e.tile.assign(n, -1);
    e.rotation.assign(n, 0);
    std::map<int, int> owner;  // tile -> cell
    std::map<int, std::string> claim;  // constant tile -> first reader
    auto name = [&](int c) { return r.cells[c].name; };
    auto place = [&](int c, int t, int rot) {
        if (t < 0) throw EmbedFailure("cell " + name(c) + " falls outside the ball");
        if (auto it = owner.find(t); it != owner.end() && it->second != c)
            throw EmbedFailure("cells " + name(it->second) + " and " + name(c) + " land on the same tile " + ball.name(t));
        e.tile[c] = t;
        e.rotation[c] = rot;
        owner[t] = c;
    };
    auto nb = [&](int c, int j) {
        int t = e.tile[c];
        const auto& adj = ball.cells[t].adj;
        return adj[(j + e.rotation[c]) % p];
    };

    std::queue<int> todo;
    place(seed, seed_tile, seed_rot);
    todo.push(seed);
    while (!todo.empty()) {
        int c = todo.front();
        todo.pop();
        const auto& sl = r.cells[c].slots;
        for (int j = 0; j < p; ++j) {
            if (!sl[j].ref) continue;
            int d = sl[j].id;
            int u = nb(c, j);
            if (u < 0) throw EmbedFailure("cell " + name(d) + " (seen by " + name(c) + ") falls outside the ball");
            // slot of d that sees c
            std::vector<int> back;
            for (int k = 0; k < p; ++k)
                if (r.cells[d].slots[k].ref && r.cells[d].slots[k].id == c) back.push_back(k);
            if (back.size() > 1) throw EmbedFailure("cell " + name(d) + " sees " + name(c) + " twice");
            if (back.empty()) {
                // one-sided reference: d must still sit on u
                if (e.tile[d] >= 0 && e.tile[d] != u)
                    throw EmbedFailure("cell " + name(d) + " must be on " + ball.name(u) + " (seen by " + name(c) + ") and on " + ball.name(e.tile[d]));
                if (e.tile[d] < 0) {
                    // rotation comes from another reference; place provisionally
                    owner[u] = d;
                    e.tile[d] = u;
                    e.rotation[d] = -1;
                }
                continue;
            }
            const auto& adj = ball.cells[u].adj;
            int pos = -1;
            for (int q = 0; q < p; ++q)
                if (adj[q] == e.tile[c]) pos = q;
            if (pos < 0) throw EmbedFailure("adjacency is not symmetric at " + ball.name(u));
            int rot = ((pos - back[0]) % p + p) % p;
            if (e.tile[d] >= 0 && e.rotation[d] >= 0) {
                if (e.tile[d] != u || e.rotation[d] != rot)
                    throw EmbedFailure("cell " + name(d) + " is placed on " + ball.name(e.tile[d]) + " but " + name(c) +
                                       " needs it on " + ball.name(u));
                continue;
            }
            if (e.tile[d] >= 0 && e.tile[d] != u)
                throw EmbedFailure("cell " + name(d) + " must be on " + ball.name(u) + " and on " + ball.name(e.tile[d]));
            place(d, u, rot);
            todo.push(d);
        }
    }
    for (int c = 0; c < n; ++c) {
        if (e.tile[c] < 0) throw EmbedFailure("cell " + name(c) + " is not connected to " + name(seed));
        if (e.rotation[c] < 0) throw EmbedFailure("cell " + name(c) + " has no reference fixing its rotation");
    }
    // constant slots
    for (int c = 0; c < n; ++c) {
        const auto& sl = r.cells[c].slots;
        for (int j = 0; j < p; ++j) {
            if (sl[j].ref) continue;
            int u = nb(c, j);
            if (u < 0) {
                if (sl[j].env == State::B) throw EmbedFailure("milestone of " + name(c) + " falls outside the ball");
                continue;
            }
            if (auto it = owner.find(u); it != owner.end()) {
                int d = it->second;
                if (r.stubs.count({d, c}))
                    e.notes.push_back(name(c) + " reads " + name(d) + " as constant " + to_char(sl[j].env));
                else
                    throw EmbedFailure("cell " + name(c) + " reads tile " + ball.name(u) + " as constant but cell " + name(d) + " is there");
                continue;
            }
            auto [it, fresh] = e.constant.emplace(u, sl[j].env);
            if (fresh) claim[u] = name(c);
            else if (it->second != sl[j].env)
                throw EmbedFailure("tile " + ball.name(u) + " is read as " + to_char(it->second) + " by " + claim[u] + " and as " +
                                   to_char(sl[j].env) + " by " + name(c));
        }
    }
    return e;
}

// Tries every rotation of `seed` on the central tile; rethrows the last failure.
inline Embedding embed_centered(const TrackedRegion& r, const TilingBall& ball, int seed = 0) {
    int centre = 0;
    for (std::size_t i = 0; i < ball.cells.size(); ++i)
        if (ball.cells[i].ring == 0) { centre = static_cast<int>(i); break; }
    std::string why;
    for (int rot = 0; rot < r.p; ++rot) {
        try {
            return embed_region(r, ball, seed, centre, rot);
        } catch (const EmbedFailure& f) {
            why = f.what();
        }
    }
    throw EmbedFailure(why);
}

// Runs an embedded region on the whole ball, recording the watched cells.
inline Trace run_embedded(const TrackedRegion& r, const Embedding& e, const TilingBall& ball, const RuleTable& table, int steps,
                          const std::vector<Watch>& watch, const std::vector<Injection>& inject = {}) {
    SparseEngine eng(ball, table);
    std::vector<State> st = eng.dense(e.initial(r, ball));
    Trace tr;
    for (const auto& w : watch) tr.columns.push_back(w.column);
    for (int t = 1; t <= steps; ++t) {
        for (const auto& in : inject)
            if (t >= in.time && t < in.time + in.count) st[e.tile[in.cell]] = State::B;
        std::vector<State> row;
        for (const auto& w : watch) row.push_back(st[e.tile[w.cell]]);
        tr.rows.push_back(std::move(row));
        if (t < steps) st = eng.step(st, t);
    }
    return tr;
}

}  // namespace hypca
