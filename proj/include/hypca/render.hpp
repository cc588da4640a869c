#pragma once
// SVG pictures of a ball in the Poincaré disk. Tile frames are disk
// isometries [[a, b], [conj b, conj a]] composed along the ball's adjacency:
// slot j of a tile points at angle 2*pi*j/p in its own frame.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypca/rulecore.hpp"
#include "hypca/tiling.hpp"

namespace hypca {

using cplx = std::complex<double>;

struct Mobius {
    cplx a{1, 0}, b{0, 0};  // z -> (a z + b) / (conj(b) z + conj(a))

    cplx apply(cplx z) const { return (a * z + b) / (std::conj(b) * z + std::conj(a)); }

    Mobius operator*(const Mobius& o) const {
        Mobius m{a * o.a + b * std::conj(o.b), a * o.b + b * std::conj(o.a)};
        double det = std::norm(m.a) - std::norm(m.b);
        double s = std::sqrt(det);
        return {m.a / s, m.b / s};
    }

    static Mobius rotation(double theta) { return {std::polar(1.0, theta / 2), 0}; }
    // moves 0 to tanh(d/2) along the real axis
    static Mobius translation(double d) { return {std::cosh(d / 2), std::sinh(d / 2)}; }
};

inline double disk_distance(cplx z, cplx w) { return 2 * std::atanh(std::abs(z - w) / std::abs(1.0 - std::conj(z) * w)); }

enum class RenderStyle { Circles, Polygons };

struct EuclidCircle {
    cplx centre;
    double radius;
};

struct DiskLayout {
    int p = 0;
    RenderStyle style = RenderStyle::Circles;
    std::vector<Mobius> frame;
    std::vector<cplx> centre;
    std::vector<double> orientation;  // angle of slot 0 at the centre
    double inradius = 0;              // hyperbolic
    double circumradius = 0;          // hyperbolic

    // image of the hyperbolic circle of radius `rho` about the tile centre
    EuclidCircle circle(int i, double rho) const {
        double t = std::tanh(rho / 2);
        cplx z = centre[i];
        double n = std::norm(z), den = 1 - t * t * n;
        return {z * (1 - t * t) / den, t * (1 - n) / den};
    }
    EuclidCircle inscribed(int i) const { return circle(i, inradius); }

    std::vector<cplx> vertices(int i) const {
        std::vector<cplx> v;
        double r = std::tanh(circumradius / 2);
        for (int j = 0; j < p; ++j) v.push_back(frame[i].apply(std::polar(r, 2 * std::numbers::pi * (j + 0.5) / p)));
        return v;
    }
};

// Distance between adjacent centres in {p,3}: twice the inradius.
inline double centre_distance(int p) { return 2 * std::acosh(std::cos(std::numbers::pi / 3) / std::sin(std::numbers::pi / p)); }

inline DiskLayout layout_ball(const TilingBall& ball, RenderStyle style = RenderStyle::Circles) {
    const int p = ball.p;
    const double pi = std::numbers::pi;
    DiskLayout L;
    L.p = p;
    L.style = style;
    L.inradius = centre_distance(p) / 2;
    L.circumradius = std::acosh(1 / (std::tan(pi / p) * std::tan(pi / 3)));
    const std::size_t n = ball.cells.size();
    L.frame.assign(n, Mobius{});
    std::vector<char> done(n, 0);
    const Mobius step = Mobius::translation(centre_distance(p)) * Mobius::rotation(pi);
    std::queue<int> q;
    if (n) {
        done[0] = 1;
        q.push(0);
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        const auto& adj = ball.cells[x].adj;
        for (int j = 0; j < p; ++j) {
            int y = adj[j];
            if (y < 0 || done[y]) continue;
            int k = 0;
            while (k < p && ball.cells[y].adj[k] != x) ++k;
            if (k == p) throw std::logic_error("ball adjacency is not symmetric");
            L.frame[y] = L.frame[x] * Mobius::rotation(2 * pi * j / p) * step * Mobius::rotation(-2 * pi * k / p);
            done[y] = 1;
            q.push(y);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        L.centre.push_back(L.frame[i].apply(0));
        L.orientation.push_back(2 * std::arg(L.frame[i].a));
    }
    return L;
}

struct LayoutCheck {
    double tangency = 0;  // max | |c1 - c2| - (r1 + r2) | over adjacent pairs
    double isometry = 0;  // max deviation of adjacent centre distance
    double vertex = 0;    // max gap between the two copies of a shared polygon corner
    std::size_t pairs = 0;
};

inline LayoutCheck check_layout(const TilingBall& ball, const DiskLayout& L) {
    LayoutCheck c;
    const double d = centre_distance(ball.p);
    for (std::size_t i = 0; i < ball.cells.size(); ++i)
        for (int j : ball.cells[i].adj) {
            if (j < 0 || j < static_cast<int>(i)) continue;
            auto a = L.inscribed(static_cast<int>(i)), b = L.inscribed(j);
            c.tangency = std::max(c.tangency, std::abs(std::abs(a.centre - b.centre) - (a.radius + b.radius)));
            c.isometry = std::max(c.isometry, std::abs(disk_distance(L.centre[i], L.centre[j]) - d));
            const auto& ai = ball.cells[i].adj;
            const auto& aj = ball.cells[j].adj;
            int s = static_cast<int>(std::find(ai.begin(), ai.end(), j) - ai.begin());
            int k = static_cast<int>(std::find(aj.begin(), aj.end(), static_cast<int>(i)) - aj.begin());
            auto vi = L.vertices(static_cast<int>(i)), vj = L.vertices(j);
            const int p = ball.p;
            c.vertex = std::max({c.vertex, std::abs(vi[s] - vj[(k + p - 1) % p]), std::abs(vi[(s + p - 1) % p] - vj[k])});
            ++c.pairs;
        }
    return c;
}

struct RenderOptions {
    std::map<int, State> states;  // tile -> state; absent means W
    std::set<int> highlight;
    int size = 800;
};

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << v;
    return os.str();
}

// SVG arc along the geodesic from u to w
inline std::string geodesic_to(cplx u, cplx w) {
    double cross = u.real() * w.imag() - u.imag() * w.real();
    if (std::abs(cross) < 1e-12) return "L" + fmt(w.real()) + "," + fmt(w.imag());
    // circle through u, w orthogonal to the unit circle: c.u = (|u|^2 + 1) / 2, same for w
    double d1 = (std::norm(u) + 1) / 2, d2 = (std::norm(w) + 1) / 2;
    cplx c{(d1 * w.imag() - d2 * u.imag()) / cross, (u.real() * d2 - w.real() * d1) / cross};
    double r = std::abs(u - c);
    cplx a = u - c, b = w - c;
    int sweep = a.real() * b.imag() - a.imag() * b.real() > 0 ? 1 : 0;
    return "A" + fmt(r) + "," + fmt(r) + " 0 0," + std::to_string(sweep) + " " + fmt(w.real()) + "," + fmt(w.imag());
}

}  // namespace detail

inline std::string render_svg(const DiskLayout& L, const RenderOptions& opt = {}) {
    using detail::fmt;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size << "\" height=\"" << opt.size
       << "\" viewBox=\"-1.02 -1.02 2.04 2.04\">\n";
    // flip y so that ccw in the disk is ccw on screen
    os << "<g transform=\"scale(1,-1)\">\n";
    os << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.004\"/>\n";
    for (std::size_t i = 0; i < L.centre.size(); ++i) {
        int t = static_cast<int>(i);
        auto it = opt.states.find(t);
        bool black = it != opt.states.end() && it->second == State::B;
        bool hi = opt.highlight.count(t) > 0;
        std::string style = std::string("fill=\"") + (black ? "#202020" : "#f2f2f2") + "\" stroke=\"" + (hi ? "#d02020" : "#707070") +
                            "\" stroke-width=\"" + (hi ? "0.006" : "0.002") + "\"";
        if (L.style == RenderStyle::Circles) {
            auto c = L.inscribed(t);
            if (c.radius < 1e-4) continue;
            os << "<circle cx=\"" << fmt(c.centre.real()) << "\" cy=\"" << fmt(c.centre.imag()) << "\" r=\"" << fmt(c.radius) << "\" "
               << style << "/>\n";
        } else {
            auto v = L.vertices(t);
            if (L.circle(t, L.circumradius).radius < 1e-4) continue;
            os << "<path d=\"M" << fmt(v[0].real()) << "," << fmt(v[0].imag());
            for (std::size_t j = 1; j <= v.size(); ++j) os << ' ' << detail::geodesic_to(v[j - 1], v[j % v.size()]);
            os << " Z\" " << style << "/>\n";
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace hypca
