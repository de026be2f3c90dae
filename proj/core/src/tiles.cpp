#include "hitomezashi/tiles.hpp"

#include <algorithm>
#include <future>
#include <set>

#include <fmt/format.h>

#include "hitomezashi/error.hpp"

namespace hitomezashi {

void TurtleState::step() {
    switch (heading) {
    case Heading::kEast: ++position.x; break;
    case Heading::kNorth: ++position.y; break;
    case Heading::kWest: --position.x; break;
    case Heading::kSouth: --position.y; break;
    }
}

void TurtleState::turn(Turn t) {
    const int delta = t == Turn::kLeft ? 1 : 3;
    heading = static_cast<Heading>((static_cast<int>(heading) + delta) % 4);
}

LatticeCycle trace_turtle(const TurnWord &word) {
    TurtleState turtle;
    std::vector<Point> vertices{turtle.position};
    std::set<Point> visited{turtle.position};
    for (std::size_t i = 0; i < word.size(); ++i) {
        turtle.step();
        turtle.turn(turn_at(word, i));
        const bool last = i + 1 == word.size();
        if (last) break;
        if (!visited.insert(turtle.position).second) {
            throw Error(ErrorKind::kSelfIntersectingBoundary,
                        fmt::format("'{}' revisits ({}, {}) after {} steps", word.str(), turtle.position.x,
                                    turtle.position.y, i + 1));
        }
        vertices.push_back(turtle.position);
    }
    if (word.empty() || turtle.position != Point{0, 0}) {
        throw Error(ErrorKind::kOpenBoundary,
                    fmt::format("'{}' ends at ({}, {})", word.str(), turtle.position.x, turtle.position.y));
    }
    if (vertices.size() < 4) {
        throw Error(ErrorKind::kSelfIntersectingBoundary, fmt::format("'{}' is degenerate", word.str()));
    }
    return LatticeCycle(std::move(vertices));
}

SnowflakeOrder::SnowflakeOrder(int n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::kInvalidSpec, fmt::format("snowflake order {} < 1", n));
}

TurnWord snowflake_side_word(SnowflakeOrder order) {
    return fib_turtle_word(static_cast<unsigned>(3 * (order.value() - 1) + 1));
}

TurnWord snowflake_boundary_word(SnowflakeOrder order) { return repeat(snowflake_side_word(order), 4); }

Snowflake trace_snowflake(SnowflakeOrder order) {
    TurnWord boundary = snowflake_boundary_word(order);
    LatticeCycle cycle = trace_turtle(boundary);
    Polyomino cells = cycle_to_polyomino(cycle);
    const LoopStats stats = loop_stats(cells, cycle);
    return Snowflake{order.value(), std::move(boundary), std::move(cycle), std::move(cells), stats};
}

Polyomino snowflake(SnowflakeOrder order) { return trace_snowflake(order).polyomino; }

bool snowflake_width_check(SnowflakeOrder order) {
    const Polyomino p = snowflake(order);
    return static_cast<std::uint64_t>(p.bounds().width()) + 1 == 2 * pell(static_cast<unsigned>(order.value()));
}

bool has_fourfold_symmetry(const Polyomino &p) { return p.normalized() == p.transformed(1).normalized(); }

BinaryWord persimmon_word(int order) {
    if (order < 1) throw Error(ErrorKind::kInvalidSpec, fmt::format("persimmon order {} < 1", order));
    const BinaryWord u = pell_word(static_cast<unsigned>(order));
    return u + reverse(u);
}

PatternSpec persimmon_spec(int order, int periods) {
    if (periods < 1) throw Error(ErrorKind::kInvalidSpec, fmt::format("periods {} < 1", periods));
    const BinaryWord w = persimmon_word(order);
    const int side = periods * static_cast<int>(w.size());
    return PatternSpec{fmt::format("pell persimmon order {}", order), WordProgram::fill(w), WordProgram::fill(w),
                       side, side};
}

ConjectureResult check_conjecture(int order) {
    const PatternSpec spec = persimmon_spec(order, 2);
    const auto loop = largest_loop(build_grid(spec));
    if (!loop) {
        throw Error(ErrorKind::kWindowTooSmall,
                    fmt::format("{}x{} window of order {} holds no closed loop", spec.width, spec.height, order));
    }
    const Snowflake flake = trace_snowflake(SnowflakeOrder(order));
    ConjectureResult r;
    r.order = order;
    r.window = spec.width;
    r.pattern_loop = loop->stats;
    r.snowflake_stats = flake.stats;
    r.holds = loop->polyomino.canonical_form() == flake.polyomino.canonical_form();
    r.pattern_hash = loop->polyomino.canonical_hash();
    r.snowflake_hash = flake.polyomino.canonical_hash();
    return r;
}

bool verify_conjecture(int order) { return check_conjecture(order).holds; }

std::vector<ConjectureResult> verify_conjecture_up_to(int max_order) {
    std::vector<std::future<ConjectureResult>> jobs;
    for (int n = 1; n <= max_order; ++n) jobs.push_back(std::async(std::launch::async, check_conjecture, n));
    std::vector<ConjectureResult> results;
    results.reserve(jobs.size());
    for (auto &job : jobs) results.push_back(job.get());
    return results;
}

} // namespace hitomezashi
