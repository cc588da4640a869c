#pragma once
// Sector trees of the tilings {p,3}: coordinates, colours, digit strings,
// neighbour arithmetic, and a brute-force ball used as adjacency ground truth.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypca {

struct TilingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TilingParams {
    int p = 7;
    explicit TilingParams(int p_) : p(p_) {
        if (p < 7) throw TilingError("tiling {p,3} needs p >= 7, got " + std::to_string(p));
    }
};

enum class NodeKind { White, Black };

inline int son_count(NodeKind k, int p) { return k == NodeKind::White ? p - 4 : p - 5; }

// Nodes on level n of one sector tree: w/b expansion of the son counts.
inline std::int64_t level_counts(int p, int n) {
    std::int64_t w = 1, b = 0;
    for (int i = 0; i < n; ++i) {
        std::int64_t w2 = (p - 5) * w + (p - 6) * b;
        std::int64_t b2 = w + b;
        w = w2;
        b = b2;
    }
    return w + b;
}

struct CellCoord {
    bool central = true;
    int sector = 0;             // 1..p
    std::vector<int> path;      // child indices from the sector root, 1-based

    static CellCoord center() { return {}; }
    static CellCoord root(int s) { return CellCoord{false, s, {}}; }
    int level() const { return central ? -1 : static_cast<int>(path.size()); }
    friend bool operator==(const CellCoord&, const CellCoord&) = default;
    friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

// Per-p numbering helpers. Levels are numbered from 0 (the sector root);
// breadth-first numbers are 1-based inside one sector.
class SectorTree {
public:
    explicit SectorTree(int p, int max_level = 12) : p_(TilingParams(p).p) {
        basis_.push_back(1);
        basis_.push_back(p - 4);
        while (static_cast<int>(basis_.size()) < max_level + 3)
            basis_.push_back((p - 4) * basis_.back() - basis_[basis_.size() - 2]);
        start_.push_back(1);
        for (int l = 0; l <= max_level + 1; ++l) start_.push_back(start_.back() + level_counts(p, l));
    }

    int p() const { return p_; }
    // digit weights: level counts, t_{k+2} = (p-4) t_{k+1} - t_k
    const std::vector<std::int64_t>& basis() const { return basis_; }
    std::int64_t level_start(int l) const { return start_.at(l); }
    std::int64_t level_end(int l) const { return start_.at(l + 1) - 1; }

    int level_of(std::int64_t n) const {
        if (n < 1) throw TilingError("node numbers start at 1");
        for (int l = 0; l + 1 < static_cast<int>(start_.size()); ++l)
            if (n < start_[l + 1]) return l;
        throw TilingError("node number beyond supported depth");
    }

    // Maximal-length representation; ties broken greedily (largest digit first).
    std::vector<int> digits(std::int64_t n) const {
        int top = 0;
        while (top + 1 < static_cast<int>(basis_.size()) && basis_[top + 1] <= n) ++top;
        std::vector<int> d;
        for (int i = top; i >= 0; --i) {
            std::int64_t k = std::min<std::int64_t>(p_ - 3, n / basis_[i]);
            d.push_back(static_cast<int>(k));
            n -= k * basis_[i];
        }
        if (n != 0) throw TilingError("number not representable");
        return d;
    }

    std::int64_t value(const std::vector<int>& d) const {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * basis_.at(d.size() - 1 - i);
        return v;
    }

    NodeKind kind(std::int64_t n) const {
        return digits(n).back() == 0 ? NodeKind::Black : NodeKind::White;
    }
    int sons(std::int64_t n) const { return son_count(kind(n), p_); }

    // appending 0 to the digits gives the black son, which is the penultimate one
    std::int64_t black_son(std::int64_t n) const {
        auto d = digits(n);
        d.push_back(0);
        return value(d);
    }
    std::int64_t first_son(std::int64_t n) const { return black_son(n) - (sons(n) - 2); }
    std::int64_t last_son(std::int64_t n) const { return black_son(n) + 1; }

    std::int64_t father(std::int64_t n) const {
        int l = level_of(n);
        if (l == 0) throw TilingError("sector root has no father in its sector");
        std::int64_t lo = level_start(l - 1), hi = level_end(l - 1);
        while (lo < hi) {  // last node whose first son is <= n
            std::int64_t mid = (lo + hi + 1) / 2;
            if (first_son(mid) <= n) lo = mid; else hi = mid - 1;
        }
        return lo;
    }

    std::int64_t number(const std::vector<int>& path) const {
        std::int64_t n = 1;
        for (int j : path) {
            if (j < 1 || j > sons(n)) throw TilingError("path index out of range");
            n = first_son(n) + (j - 1);
        }
        return n;
    }

    std::vector<int> path(std::int64_t n) const {
        std::vector<int> out;
        while (n != 1) {
            std::int64_t f = father(n);
            out.push_back(static_cast<int>(n - first_son(f) + 1));
            n = f;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    int p_;
    std::vector<std::int64_t> basis_;
    std::vector<std::int64_t> start_;
};

inline std::int64_t number_of(const CellCoord& c, const SectorTree& t) { return t.number(c.path); }
inline std::int64_t ordinal(const CellCoord& c, const SectorTree& t) {
    return t.number(c.path) - t.level_start(c.level()) + 1;
}

inline NodeKind node_kind(const CellCoord& c, int p) {
    if (c.central || c.path.empty()) return NodeKind::White;
    // walk down to learn the parent's colour
    NodeKind k = NodeKind::White;
    for (std::size_t i = 0; i < c.path.size(); ++i) {
        int s = son_count(k, p);
        if (c.path[i] < 1 || c.path[i] > s) throw TilingError("path index out of range");
        k = c.path[i] == s - 1 ? NodeKind::Black : NodeKind::White;
    }
    return k;
}

inline std::string digit_string(const std::vector<int>& d) {
    std::string s;
    for (int x : d) s.push_back(x < 10 ? char('0' + x) : char('a' + x - 10));
    return s;
}

inline std::string to_digits(const CellCoord& c, const SectorTree& t) {
    if (c.central) throw TilingError("central tile has no digits");
    return digit_string(t.digits(t.number(c.path)));
}

inline CellCoord father(const CellCoord& c) {
    if (c.central || c.path.empty()) throw TilingError("no father inside the sector");
    CellCoord f = c;
    f.path.pop_back();
    return f;
}

inline CellCoord coord_of(int sector, std::int64_t n, const SectorTree& t) {
    return CellCoord{false, sector, t.path(n)};
}

// "C" or "s<sector>.<number>"
inline std::string cell_name(const CellCoord& c, const SectorTree& t) {
    if (c.central) return "C";
    return "s" + std::to_string(c.sector) + "." + std::to_string(t.number(c.path));
}

inline CellCoord parse_cell(const std::string& spec, const SectorTree& t) {
    if (spec == "C") return CellCoord::center();
    int s = 0;
    long long n = 0;
    char dot = 0;
    std::istringstream in(spec.size() > 1 && spec[0] == 's' ? spec.substr(1) : std::string("?"));
    if (!(in >> s >> dot >> n) || dot != '.' || s < 1 || s > t.p() || n < 1 || !in.eof())
        throw TilingError("bad cell spec '" + spec + "' (expected C or s<sector>.<number>)");
    return coord_of(s, n, t);
}

// ---------------------------------------------------------------------------
// Neighbour arithmetic.
//
// Reading of the neighbour table used here (checked against build_ball):
//   ring order ccw from the father f:  f, [f-1], nu-1, [c1+1], sons(nu), [first son of nu+1], nu+1, [f+1]
// where c1+1 is the last son of nu-1 (c1 its black son) and the sons of nu run
// from c-(sons-2) to c+1 with c the black son.  nu-1 / nu+1 and f-1 / f+1 are
// taken on the same level, wrapping into the neighbouring sector at a border
// (the "circle" cases of the table).  The bracketed entries depend on the
// position class of nu:
//   - a black node (last digit 0) takes both c1+1 and the first son of nu+1;
//   - a white node touching only its father takes c1+1, except the last son of
//     its father and a sector root, which take the first son of nu+1 instead;
//   - a white node touching two upper tiles (a first son whose father kept c1+1,
//     or a last son whose father kept the first son of nu+1) takes neither and
//     has f-1 (first son) or f+1 (last son) as its second upper neighbour.
// ---------------------------------------------------------------------------
class Navigator {
public:
    explicit Navigator(int p, int max_level = 12) : tree_(p, max_level) {}
    const SectorTree& tree() const { return tree_; }
    int p() const { return tree_.p(); }

    struct Node {
        int sector;
        std::int64_t n;
    };

    std::vector<CellCoord> neighbors(const CellCoord& c) const {
        const int p = tree_.p();
        std::vector<CellCoord> out;
        if (c.central) {
            for (int s = 1; s <= p; ++s) out.push_back(CellCoord::root(s));
            return out;
        }
        Node v{c.sector, tree_.number(c.path)};
        for (const Node& x : neighbor_nodes(v))
            out.push_back(x.n == 0 ? CellCoord::center() : coord_of(x.sector, x.n, tree_));
        return out;
    }

    // n == 0 denotes the central tile
    std::vector<Node> neighbor_nodes(Node v) const {
        const int p = tree_.p();
        std::vector<Node> out;
        Shape sh = shape(v.n);
        bool root = v.n == 1;
        Node f = root ? Node{0, 0} : Node{v.sector, tree_.father(v.n)};
        out.push_back(f);
        if (sh.upper2 == -1) out.push_back(left(f));
        Node l = left(v), r = right(v);
        out.push_back(l);
        if (sh.gives_cw) out.push_back({l.sector, tree_.last_son(l.n)});
        std::int64_t s0 = tree_.first_son(v.n);
        for (int j = 0; j < tree_.sons(v.n); ++j) out.push_back({v.sector, s0 + j});
        if (sh.gives_ccw) out.push_back({r.sector, tree_.first_son(r.n)});
        out.push_back(r);
        if (sh.upper2 == +1) out.push_back(right(f));
        if (static_cast<int>(out.size()) != p) throw TilingError("neighbour arithmetic produced a wrong count");
        return out;
    }

private:
    struct Shape {
        int upper2 = 0;        // -1: second upper neighbour is f-1, +1: f+1
        bool gives_cw = false; // takes c1+1 (last son of nu-1)
        bool gives_ccw = false;// takes the first son of nu+1
    };

    Shape shape(std::int64_t n) const {
        if (n == 1) return {0, false, true};
        std::int64_t f = tree_.father(n);
        Shape fs = shape(f);
        bool first = n == tree_.first_son(f), last = n == tree_.last_son(f);
        Shape s;
        if (first && !fs.gives_cw) s.upper2 = -1;
        else if (last && !fs.gives_ccw) s.upper2 = +1;
        if (s.upper2 != 0) return s;
        if (tree_.kind(n) == NodeKind::Black) return {0, true, true};
        if (last) return {0, false, true};
        return {0, true, false};
    }

    Node left(Node v) const {
        if (v.n == 0) return v;
        int l = tree_.level_of(v.n);
        if (v.n > tree_.level_start(l)) return {v.sector, v.n - 1};
        int s = v.sector == 1 ? tree_.p() : v.sector - 1;
        return {s, tree_.level_end(l)};
    }
    Node right(Node v) const {
        if (v.n == 0) return v;
        int l = tree_.level_of(v.n);
        if (v.n < tree_.level_end(l)) return {v.sector, v.n + 1};
        int s = v.sector == tree_.p() ? 1 : v.sector + 1;
        return {s, tree_.level_start(l)};
    }

    SectorTree tree_;
};

inline std::vector<CellCoord> neighbors(const CellCoord& c, int p) { return Navigator(p).neighbors(c); }

// ---------------------------------------------------------------------------
// Combinatorial-map ball, built ring by ring.  Each ring is a ccw cycle; a
// tile X of ring k with P upper neighbours has p-P-2 tiles on ring k+1, the
// two extreme ones shared with the ring neighbours of X (corner tiles, which
// have two upper neighbours).  Every corner goes to exactly one of its two
// upper tiles; the split is fixed by the son counts (white p-4, black p-5,
// penultimate son black) and solved around the whole ring at once.
// ---------------------------------------------------------------------------
struct BallTile {
    CellCoord coord;
    int ring = 0;
    int upper = 0;             // number of neighbours on the previous ring
    NodeKind kind = NodeKind::White;
    std::int64_t number = 0;   // breadth-first number inside the sector
    std::vector<int> adj;      // ccw, starting at the father; -1 = Boundary
};

struct TilingBall {
    int p = 0;
    int radius = 0;
    std::vector<BallTile> cells;
    std::vector<std::vector<int>> rings;
    std::map<CellCoord, int> index;

    int find(const CellCoord& c) const {
        auto it = index.find(c);
        return it == index.end() ? -1 : it->second;
    }
    std::string name(int i) const {
        if (i < 0) return "-";
        const auto& t = cells[i];
        return t.coord.central ? "C" : "s" + std::to_string(t.coord.sector) + "." + std::to_string(t.number);
    }
    bool interior(int i) const { return cells[i].ring < radius; }

    void dump(std::ostream& os) const {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << name(static_cast<int>(i)) << ':';
            for (int j : cells[i].adj) os << ' ' << name(j);
            os << '\n';
        }
    }
};

inline TilingBall build_ball(int p, int radius) {
    TilingParams{p};
    if (radius < 0) throw TilingError("negative radius");
    TilingBall ball;
    ball.p = p;
    ball.radius = radius;
    auto& T = ball.cells;
    struct Work {
        std::vector<int> inner;
        int cw = -1, ccw = -1;
        std::vector<int> outer;
        std::vector<int> sons;
    };
    std::vector<Work> W;
    auto add = [&](BallTile t) {
        T.push_back(std::move(t));
        W.emplace_back();
        return static_cast<int>(T.size()) - 1;
    };
    add(BallTile{CellCoord::center(), 0, 0, NodeKind::White, 0, {}});
    ball.rings.push_back({0});
    if (radius == 0) {
        T[0].adj.assign(p, -1);
        ball.index[T[0].coord] = 0;
        return ball;
    }
    std::vector<int> ring;
    for (int s = 1; s <= p; ++s) {
        int id = add(BallTile{CellCoord::root(s), 1, 1, NodeKind::White, 1, {}});
        W[id].inner = {0};
        ring.push_back(id);
    }
    T[0].adj = ring;
    ball.rings.push_back(ring);

    for (int k = 1;; ++k) {
        const int n = static_cast<int>(ring.size());
        for (int i = 0; i < n; ++i) {
            W[ring[i]].cw = ring[(i + n - 1) % n];
            W[ring[i]].ccw = ring[(i + 1) % n];
        }
        if (k == radius) break;
        // corners given away: black tiles give both, white tiles with one upper
        // neighbour give one, white corner tiles give none
        std::vector<int> g(n), a(n), b(n);
        for (int i = 0; i < n; ++i) {
            const auto& t = T[ring[i]];
            g[i] = (t.upper == 1 ? 1 : 0) + (t.kind == NodeKind::Black ? 1 : 0);
        }
        a[0] = 0;  // the first tile keeps its cw corner
        for (int i = 0; i < n; ++i) {
            b[i] = g[i] - a[i];
            if (b[i] < 0 || b[i] > 1) throw TilingError("inconsistent corner split");
            if (i + 1 < n) a[i + 1] = 1 - b[i];
        }
        if (a[0] != 1 - b[n - 1]) throw TilingError("corner split does not close around the ring");

        // corner i sits between ring[i] and ring[i+1]
        std::vector<int> corner(n, -1);
        std::vector<int> next;
        for (int i = 0; i < n; ++i) {
            int x = ring[i];
            int m = p - T[x].upper - 2;
            std::vector<int> kept;  // positions in x's outer list
            for (int j = 0; j < m; ++j) {
                if (j == 0 && a[i]) continue;
                if (j == m - 1 && b[i]) continue;
                kept.push_back(j);
            }
            std::vector<int> outer(m, -1);
            const int ns = static_cast<int>(kept.size());
            for (int q = 0; q < ns; ++q) {
                int j = kept[q];
                BallTile t;
                t.ring = k + 1;
                t.upper = (j == 0 || j == m - 1) ? 2 : 1;
                t.kind = q == ns - 2 ? NodeKind::Black : NodeKind::White;
                t.coord = T[x].coord;
                t.coord.path.push_back(q + 1);
                int id = add(std::move(t));
                outer[j] = id;
                W[x].sons.push_back(id);
                if (j == 0) corner[(i + n - 1) % n] = id;
                if (j == m - 1) corner[i] = id;
            }
            W[x].outer = std::move(outer);
        }
        for (int i = 0; i < n; ++i) {
            auto& o = W[ring[i]].outer;
            o.front() = corner[(i + n - 1) % n];
            o.back() = corner[i];
            for (std::size_t j = 1; j + 1 < o.size(); ++j) W[o[j]].inner = {ring[i]};
            W[corner[i]].inner = {ring[(i + 1) % n], ring[i]};
        }
        // next ring, ccw, without repeating shared corners
        for (int i = 0; i < n; ++i) {
            const auto& o = W[ring[i]].outer;
            for (std::size_t j = 0; j + 1 < o.size(); ++j) next.push_back(o[j]);
        }
        ring = next;
        ball.rings.push_back(ring);
    }

    for (std::size_t id = 1; id < T.size(); ++id) {
        auto& w = W[id];
        std::vector<int> adj = w.inner;
        adj.push_back(w.cw);
        if (T[id].ring == radius) adj.insert(adj.end(), p - T[id].upper - 2, -1);
        else adj.insert(adj.end(), w.outer.begin(), w.outer.end());
        adj.push_back(w.ccw);
        // start at the father: for corner tiles the father may be the second upper tile
        int f = T[id].coord.path.empty() ? 0 : -2;
        if (f == -2) {
            CellCoord fc = father(T[id].coord);
            for (int u : w.inner)
                if (T[u].coord == fc) f = u;
        }
        auto it = std::find(adj.begin(), adj.end(), f);
        std::rotate(adj.begin(), it, adj.end());
        T[id].adj = std::move(adj);
    }

    // breadth-first numbers per sector
    for (int s = 1; s <= p; ++s) {
        std::vector<int> lvl{static_cast<int>(s)};
        std::int64_t num = 1;
        while (!lvl.empty()) {
            std::vector<int> nl;
            for (int x : lvl) {
                T[x].number = num++;
                nl.insert(nl.end(), W[x].sons.begin(), W[x].sons.end());
            }
            lvl = std::move(nl);
        }
    }
    for (std::size_t i = 0; i < T.size(); ++i) ball.index[T[i].coord] = static_cast<int>(i);
    return ball;
}

// Ring sizes of the ball (ring 0 is the central tile).
inline std::vector<std::int64_t> ring_sizes(const TilingBall& b) {
    std::vector<std::int64_t> out;
    for (const auto& r : b.rings) out.push_back(static_cast<std::int64_t>(r.size()));
    return out;
}

}  // namespace hypca
