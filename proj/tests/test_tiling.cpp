#include "catch_amalgamated.hpp"

#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <tuple>

#include "hypca/tiling.hpp"

using namespace hypca;

namespace {

// Tree expanded node by node: colours from "penultimate son is black".
struct Expanded {
    std::vector<std::vector<NodeKind>> levels;
};

Expanded expand_tree(int p, int depth) {
    Expanded e;
    e.levels.push_back({NodeKind::White});
    for (int l = 1; l <= depth; ++l) {
        std::vector<NodeKind> next;
        for (NodeKind k : e.levels.back()) {
            int s = k == NodeKind::White ? p - 4 : p - 5;
            for (int j = 1; j <= s; ++j) next.push_back(j == s - 1 ? NodeKind::Black : NodeKind::White);
        }
        e.levels.push_back(std::move(next));
    }
    return e;
}

// Tile centres generated geometrically, independently of any tree: a tile's
// neighbours sit at distance 2*inradius in the p directions of its frame.
struct GeoTile {
    std::complex<double> a, b;  // frame as [[a, b], [conj b, conj a]]
    int ring;
};

std::vector<std::int64_t> geometric_ring_sizes(int p, int radius) {
    using C = std::complex<double>;
    const double pi = std::numbers::pi;
    const double d = 2 * std::acosh(0.5 / std::sin(pi / p));
    auto mul = [](C a1, C b1, C a2, C b2) { return std::pair<C, C>{a1 * a2 + b1 * std::conj(b2), a1 * b2 + b1 * std::conj(a2)}; };
    std::vector<GeoTile> tiles{{1, 0, 0}};
    std::map<std::pair<long long, long long>, int> seen;
    auto key = [](C z) { return std::pair<long long, long long>{std::llround(z.real() * 1e7), std::llround(z.imag() * 1e7)}; };
    seen[key(0)] = 0;
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        if (tiles[i].ring == radius) continue;
        for (int j = 0; j < p; ++j) {
            auto [a1, b1] = mul(tiles[i].a, tiles[i].b, std::polar(1.0, pi * j / p), 0);
            auto [a2, b2] = mul(a1, b1, std::cosh(d / 2), std::sinh(d / 2));
            std::tie(a2, b2) = mul(a2, b2, std::polar(1.0, pi / 2), 0);  // slot 0 looks back
            C z = b2 / std::conj(a2);
            if (seen.count(key(z))) continue;
            seen[key(z)] = static_cast<int>(tiles.size());
            tiles.push_back({a2, b2, tiles[i].ring + 1});
        }
    }
    std::vector<std::int64_t> out(radius + 1, 0);
    for (const auto& t : tiles) ++out[t.ring];
    return out;
}

}  // namespace

TEST_CASE("level counts follow the white/black expansion") {
    for (int p : {7, 8, 13, 17}) {
        auto e = expand_tree(p, 5);
        for (int n = 0; n <= 5; ++n) CHECK(level_counts(p, n) == static_cast<std::int64_t>(e.levels[n].size()));
    }
    // heptagrid: odd-indexed Fibonacci numbers
    CHECK(level_counts(7, 0) == 1);
    CHECK(level_counts(7, 1) == 3);
    CHECK(level_counts(7, 2) == 8);
    CHECK(level_counts(7, 3) == 21);
    CHECK(level_counts(7, 4) == 55);
}

TEST_CASE("digit basis and greedy digits") {
    SectorTree t(13);
    const auto& b = t.basis();
    CHECK(b[0] == 1);
    CHECK(b[1] == 9);
    for (std::size_t i = 2; i < 8; ++i) CHECK(b[i] == 9 * b[i - 1] - b[i - 2]);
    for (std::int64_t n = 1; n < 3000; ++n) CHECK(t.value(t.digits(n)) == n);
}

TEST_CASE("colours from digits match the expanded tree") {
    for (int p : {7, 13, 17}) {
        SectorTree t(p);
        auto e = expand_tree(p, 4);
        std::int64_t n = 1;
        for (const auto& level : e.levels)
            for (NodeKind k : level) {
                INFO("p=" << p << " n=" << n);
                CHECK(t.kind(n) == k);
                ++n;
            }
    }
}

TEST_CASE("penultimate son is black, father/son round trip") {
    for (int p : {7, 13}) {
        SectorTree t(p);
        for (std::int64_t n = 1; n < 400; ++n) {
            CHECK(t.kind(t.black_son(n)) == NodeKind::Black);
            CHECK(t.black_son(n) == t.last_son(n) - 1);
            for (std::int64_t s = t.first_son(n); s <= t.last_son(n); ++s) CHECK(t.father(s) == n);
            if (n > 1) CHECK(t.number(t.path(n)) == n);
        }
    }
}

TEST_CASE("node_kind agrees with numbering") {
    SectorTree t(13);
    for (std::int64_t n = 1; n < 500; ++n) CHECK(node_kind(CellCoord{false, 1, t.path(n)}, 13) == t.kind(n));
}

TEST_CASE("cell names parse back") {
    SectorTree t(13);
    for (std::int64_t n : {1, 2, 10, 11, 97}) {
        CellCoord c = coord_of(5, n, t);
        CHECK(parse_cell(cell_name(c, t), t) == c);
    }
    CHECK(parse_cell("C", t).central);
    CHECK_THROWS_AS(parse_cell("s14.1", t), TilingError);
    CHECK_THROWS_AS(parse_cell("x", t), TilingError);
    CHECK_THROWS_AS(TilingParams(6), TilingError);
}

TEST_CASE("ball ring sizes at p=7") {
    auto b = build_ball(7, 4);
    auto r = ring_sizes(b);
    REQUIRE(r.size() == 5);
    CHECK(r[0] == 1);
    CHECK(r[1] == 7 * 1);
    CHECK(r[2] == 7 * 3);
    CHECK(r[3] == 7 * 8);
    CHECK(r[4] == 7 * 21);
}

TEST_CASE("ball rings match tiles generated by hyperbolic geometry") {
    for (auto [p, radius] : {std::pair{7, 4}, std::pair{8, 3}, std::pair{13, 3}}) {
        INFO("p=" << p);
        CHECK(ring_sizes(build_ball(p, radius)) == geometric_ring_sizes(p, radius));
    }
}

TEST_CASE("ball adjacency is symmetric and interior tiles are complete") {
    for (int p : {7, 13}) {
        auto b = build_ball(p, 3);
        for (std::size_t i = 0; i < b.cells.size(); ++i) {
            const auto& adj = b.cells[i].adj;
            REQUIRE(static_cast<int>(adj.size()) == p);
            std::set<int> distinct;
            for (int j : adj) {
                if (j < 0) {
                    CHECK_FALSE(b.interior(static_cast<int>(i)));
                    continue;
                }
                distinct.insert(j);
                const auto& back = b.cells[j].adj;
                CHECK(std::count(back.begin(), back.end(), static_cast<int>(i)) == 1);
            }
            if (b.interior(static_cast<int>(i))) CHECK(static_cast<int>(distinct.size()) == p);
        }
    }
}

TEST_CASE("neighbour arithmetic equals the combinatorial ball") {
    for (int p : {7, 13, 17}) {
        auto b = build_ball(p, 4);
        Navigator nav(p);
        std::size_t checked = 0;
        for (std::size_t i = 0; i < b.cells.size(); ++i) {
            if (!b.interior(static_cast<int>(i))) continue;
            auto fast = nav.neighbors(b.cells[i].coord);
            std::vector<CellCoord> ref;
            for (int j : b.cells[i].adj) ref.push_back(b.cells[j].coord);
            INFO("p=" << p << " tile " << b.name(static_cast<int>(i)));
            REQUIRE(fast == ref);
            ++checked;
        }
        CHECK(checked == b.cells.size() - b.rings.back().size());
    }
}

TEST_CASE("neighbours of a sector root start at the central tile") {
    Navigator nav(7);
    auto n = nav.neighbors(CellCoord::root(1));
    REQUIRE(n.size() == 7);
    CHECK(n[0].central);
    CHECK(nav.neighbors(CellCoord::center()).size() == 7);
}
