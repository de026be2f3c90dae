#include "hitomezashi/loops.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include <fmt/format.h>

#include "hitomezashi/error.hpp"

namespace hitomezashi {

LatticeCycle::LatticeCycle(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 4) {
        throw Error(ErrorKind::kInvalidCycle, fmt::format("cycle has {} vertices", vertices_.size()));
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % vertices_.size()];
        if (std::abs(a.x - b.x) + std::abs(a.y - b.y) != 1) {
            throw Error(ErrorKind::kInvalidCycle,
                        fmt::format("edge ({},{})-({},{}) is not a unit step", a.x, a.y, b.x, b.y));
        }
    }
}

bool LatticeCycle::is_simple() const {
    std::vector<Point> sorted(vertices_);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::int64_t LatticeCycle::twice_signed_area() const {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % vertices_.size()];
        sum += static_cast<std::int64_t>(a.x) * b.y - static_cast<std::int64_t>(b.x) * a.y;
    }
    return sum;
}

namespace {

// Vertex-indexed adjacency for the present segments of one window.
class SegmentGraph {
public:
    explicit SegmentGraph(const StitchGrid &g) : g_(g), stride_(g.width() + 1) {}

    std::size_t vertex_count() const {
        return static_cast<std::size_t>(stride_) * static_cast<std::size_t>(g_.height() + 1);
    }
    std::size_t index(Point p) const {
        return static_cast<std::size_t>(p.y) * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(p.x);
    }
    Point point(std::size_t i) const {
        return {static_cast<int>(i % static_cast<std::size_t>(stride_)),
                static_cast<int>(i / static_cast<std::size_t>(stride_))};
    }

    // Neighbours in the order east, north, west, south.
    int neighbours(Point p, std::array<Point, 4> &out) const {
        int n = 0;
        if (p.x < g_.width() && g_.horizontal(p.x, p.y)) out[n++] = {p.x + 1, p.y};
        if (p.y < g_.height() && g_.vertical(p.x, p.y)) out[n++] = {p.x, p.y + 1};
        if (p.x > 0 && g_.horizontal(p.x - 1, p.y)) out[n++] = {p.x - 1, p.y};
        if (p.y > 0 && g_.vertical(p.x, p.y - 1)) out[n++] = {p.x, p.y - 1};
        return n;
    }

private:
    const StitchGrid &g_;
    int stride_;
};

// Follows the unique continuation from `from` through `cur` until `stop`
// returns true or the path ends.
template <typename Visit>
void walk(const SegmentGraph &graph, Point start, Point next, Visit &&visit) {
    Point prev = start;
    Point cur = next;
    std::array<Point, 4> nb{};
    while (true) {
        if (!visit(cur)) return;
        const int n = graph.neighbours(cur, nb);
        bool moved = false;
        for (int i = 0; i < n; ++i) {
            if (nb[i] != prev) {
                prev = cur;
                cur = nb[i];
                moved = true;
                break;
            }
        }
        if (!moved) return;
    }
}

} // namespace

Components extract_components(const StitchGrid &g) {
    const SegmentGraph graph(g);
    const std::size_t nv = graph.vertex_count();
    std::vector<std::uint8_t> degree(nv, 0);
    std::array<Point, 4> nb{};
    for (std::size_t i = 0; i < nv; ++i) {
        const Point p = graph.point(i);
        degree[i] = static_cast<std::uint8_t>(graph.neighbours(p, nb));
        if (degree[i] > 2) {
            throw Error(ErrorKind::kNotSimplePattern,
                        fmt::format("vertex ({}, {}) has degree {}", p.x, p.y, degree[i]));
        }
    }

    Components out;
    std::vector<std::uint8_t> seen(nv, 0);

    // Vertices in Point order (x-major), so every list is deterministic.
    std::vector<Point> order;
    order.reserve(nv);
    for (int x = 0; x <= g.width(); ++x)
        for (int y = 0; y <= g.height(); ++y) order.push_back({x, y});

    for (const Point p : order) {
        const auto i = graph.index(p);
        if (degree[i] != 1 || seen[i]) continue;
        OpenPath path{{p}};
        seen[i] = 1;
        graph.neighbours(p, nb);
        walk(graph, p, nb[0], [&](Point q) {
            path.vertices.push_back(q);
            seen[graph.index(q)] = 1;
            return true;
        });
        out.open_paths.push_back(std::move(path));
    }

    for (const Point p : order) {
        const auto i = graph.index(p);
        if (degree[i] != 2 || seen[i]) continue;
        // p is the lowest vertex of the leftmost column of its cycle, so its
        // neighbours are east and north; leaving east runs counterclockwise.
        std::vector<Point> vertices{p};
        seen[i] = 1;
        graph.neighbours(p, nb);
        walk(graph, p, nb[0], [&](Point q) {
            if (q == p) return false;
            vertices.push_back(q);
            seen[graph.index(q)] = 1;
            return true;
        });
        out.cycles.emplace_back(std::move(vertices));
    }
    return out;
}

Polyomino::Polyomino(std::vector<Point> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Polyomino::contains(Point cell) const {
    return std::binary_search(cells_.begin(), cells_.end(), cell);
}

CellBounds Polyomino::bounds() const {
    if (cells_.empty()) return {};
    CellBounds b{cells_.front().x, cells_.front().y, cells_.front().x, cells_.front().y};
    for (const Point c : cells_) {
        b.min_x = std::min(b.min_x, c.x);
        b.min_y = std::min(b.min_y, c.y);
        b.max_x = std::max(b.max_x, c.x);
        b.max_y = std::max(b.max_y, c.y);
    }
    return b;
}

bool Polyomino::is_connected() const {
    if (cells_.empty()) return true;
    std::set<Point> reached{cells_.front()};
    std::vector<Point> stack{cells_.front()};
    while (!stack.empty()) {
        const Point c = stack.back();
        stack.pop_back();
        for (const Point d : {Point{c.x + 1, c.y}, Point{c.x - 1, c.y}, Point{c.x, c.y + 1}, Point{c.x, c.y - 1}}) {
            if (contains(d) && reached.insert(d).second) stack.push_back(d);
        }
    }
    return reached.size() == cells_.size();
}

Polyomino Polyomino::transformed(int symmetry) const {
    std::vector<Point> out;
    out.reserve(cells_.size());
    for (Point c : cells_) {
        if (symmetry >= 4) c.x = -c.x;
        for (int r = 0; r < symmetry % 4; ++r) c = {-c.y, c.x};
        out.push_back(c);
    }
    return Polyomino(std::move(out));
}

Polyomino Polyomino::normalized() const {
    const CellBounds b = bounds();
    std::vector<Point> out;
    out.reserve(cells_.size());
    for (const Point c : cells_) out.push_back({c.x - b.min_x, c.y - b.min_y});
    return Polyomino(std::move(out));
}

Polyomino Polyomino::canonical_form() const {
    Polyomino best = normalized();
    for (int s = 1; s < 8; ++s) {
        Polyomino candidate = transformed(s).normalized();
        if (candidate < best) best = std::move(candidate);
    }
    return best;
}

std::string Polyomino::canonical_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::int32_t v) {
        auto u = static_cast<std::uint32_t>(v);
        for (int i = 0; i < 4; ++i) {
            h ^= (u >> (8 * i)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    const Polyomino form = canonical_form();
    for (const Point c : form.cells()) {
        mix(c.x);
        mix(c.y);
    }
    return fmt::format("{:016x}", h);
}

Polyomino cycle_to_polyomino(const LatticeCycle &c) {
    if (!c.is_simple()) throw Error(ErrorKind::kSelfIntersecting, "cycle revisits a vertex");
    // Vertical edges keyed by the row they cross.
    std::map<int, std::vector<int>> crossings;
    const auto &v = c.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        if (a.x == b.x) crossings[std::min(a.y, b.y)].push_back(a.x);
    }
    std::vector<Point> cells;
    for (auto &[y, xs] : crossings) {
        std::sort(xs.begin(), xs.end());
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
            for (int x = xs[k]; x < xs[k + 1]; ++x) cells.push_back({x, y});
        }
    }
    return Polyomino(std::move(cells));
}

LoopStats loop_stats(const Polyomino &p, const LatticeCycle &c) {
    const CellBounds b = p.bounds();
    return LoopStats{static_cast<int>(c.edge_count()), static_cast<int>(p.size()), b.height(), b.width()};
}

TheoremReport check_loop_theorems(const LoopStats &s) {
    return TheoremReport{
        s.area % 4 == 1,
        s.perimeter % 8 == 4,
        s.width % 2 == 1 && s.height % 2 == 1,
    };
}

std::vector<Loop> analyze_loops(const StitchGrid &g) {
    std::vector<Loop> loops;
    for (auto &cycle : extract_components(g).cycles) {
        Polyomino poly = cycle_to_polyomino(cycle);
        const LoopStats stats = loop_stats(poly, cycle);
        loops.push_back(Loop{std::move(cycle), std::move(poly), stats});
    }
    return loops;
}

std::optional<std::size_t> largest_index(std::span<const Loop> loops) {
    if (loops.empty()) return std::nullopt;
    std::size_t best = 0;
    Polyomino best_form = loops[0].polyomino.canonical_form();
    for (std::size_t i = 1; i < loops.size(); ++i) {
        const LoopStats &a = loops[i].stats;
        const LoopStats &b = loops[best].stats;
        if (a.area != b.area || a.perimeter != b.perimeter) {
            if (std::pair(a.area, a.perimeter) > std::pair(b.area, b.perimeter)) {
                best = i;
                best_form = loops[i].polyomino.canonical_form();
            }
            continue;
        }
        Polyomino form = loops[i].polyomino.canonical_form();
        if (form < best_form) {
            best = i;
            best_form = std::move(form);
        }
    }
    return best;
}

std::optional<Loop> largest_loop(const StitchGrid &g) {
    std::vector<Loop> loops = analyze_loops(g);
    const auto best = largest_index(loops);
    if (!best) return std::nullopt;
    return std::move(loops[*best]);
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Keep the smaller index as root so the outside node stays a root.
        if (a < b) std::swap(a, b);
        parent_[a] = b;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

TwoColoring two_color(const StitchGrid &g) {
    const auto w = static_cast<std::size_t>(g.width());
    const auto h = static_cast<std::size_t>(g.height());
    // Node 0 is the outside; cell (x, y) is node 1 + y*w + x.
    const std::size_t outside = 0;
    auto cell = [w](int x, int y) {
        return 1 + static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x);
    };

    struct Side {
        std::size_t a, b;
        bool present;
    };
    std::vector<Side> sides;
    sides.reserve((w + 1) * h + (h + 1) * w);
    for (int y = 0; y < g.height(); ++y) {
        for (int x = 0; x <= g.width(); ++x) {
            const std::size_t a = x > 0 ? cell(x - 1, y) : outside;
            const std::size_t b = x < g.width() ? cell(x, y) : outside;
            sides.push_back({a, b, g.vertical(x, y)});
        }
    }
    for (int x = 0; x < g.width(); ++x) {
        for (int y = 0; y <= g.height(); ++y) {
            const std::size_t a = y > 0 ? cell(x, y - 1) : outside;
            const std::size_t b = y < g.height() ? cell(x, y) : outside;
            sides.push_back({a, b, g.horizontal(x, y)});
        }
    }

    const std::size_t n = 1 + w * h;
    DisjointSets regions(n);
    for (const Side &s : sides) {
        if (!s.present) regions.unite(s.a, s.b);
    }

    std::vector<std::vector<std::size_t>> adjacent(n);
    for (const Side &s : sides) {
        if (!s.present) continue;
        const auto ra = regions.find(s.a);
        const auto rb = regions.find(s.b);
        if (ra == rb) continue;
        adjacent[ra].push_back(rb);
        adjacent[rb].push_back(ra);
    }

    constexpr std::uint8_t kUnset = 2;
    std::vector<std::uint8_t> region_color(n, kUnset);
    std::size_t region_count = 0;
    // The outside region goes first so that it receives color 0.
    std::vector<std::size_t> roots{regions.find(outside)};
    for (std::size_t i = 0; i < n; ++i) {
        if (regions.find(i) != i) continue;
        ++region_count;
        if (i != roots.front()) roots.push_back(i);
    }
    for (const std::size_t root : roots) {
        if (region_color[root] != kUnset) continue;
        region_color[root] = 0;
        std::queue<std::size_t> queue;
        queue.push(root);
        while (!queue.empty()) {
            const auto r = queue.front();
            queue.pop();
            for (const auto s : adjacent[r]) {
                if (region_color[s] == kUnset) {
                    region_color[s] = region_color[r] ^ 1u;
                    queue.push(s);
                } else if (region_color[s] == region_color[r]) {
                    throw Error(ErrorKind::kNotTwoColorable, "region adjacency graph has an odd cycle");
                }
            }
        }
    }

    TwoColoring out{g.width(), g.height(), std::vector<std::uint8_t>(w * h), region_count};
    for (int y = 0; y < g.height(); ++y) {
        for (int x = 0; x < g.width(); ++x) {
            out.colors[cell(x, y) - 1] = region_color[regions.find(cell(x, y))];
        }
    }
    return out;
}

bool centred_square_check(std::span<const std::int64_t> areas) {
    for (std::size_t k = 0; k < areas.size(); ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        if (areas[k] != 2 * kk * (kk + 1) + 1) return false;
    }
    return true;
}

} // namespace hitomezashi
