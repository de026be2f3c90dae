#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/lattice.hpp"
#include "hitomezashi/loops.hpp"
#include "hitomezashi/words.hpp"

namespace hitomezashi {

enum class Heading : std::uint8_t { kEast = 0, kNorth = 1, kWest = 2, kSouth = 3 };

struct TurtleState {
    Point position{};
    Heading heading = Heading::kEast;

    void step();
    /// Left turns counterclockwise, right turns clockwise.
    void turn(Turn t);
};

/// Draws the word starting at the origin heading east: each letter is a
/// unit step followed by a quarter turn. Throws Error(kOpenBoundary) if the
/// path does not return to the origin and Error(kSelfIntersectingBoundary)
/// if it revisits a vertex.
LatticeCycle trace_turtle(const TurnWord &word);

/// Order of a Fibonacci snowflake; order 1 is the unit square.
class SnowflakeOrder {
public:
    /// Throws Error(kInvalidSpec) for n < 1.
    explicit SnowflakeOrder(int n);
    int value() const { return n_; }

private:
    int n_;
};

/// q_{3(n-1)+1}, one side of the order-n snowflake boundary.
TurnWord snowflake_side_word(SnowflakeOrder order);

/// The side word repeated four times.
TurnWord snowflake_boundary_word(SnowflakeOrder order);

struct Snowflake {
    int order = 1;
    TurnWord boundary;
    LatticeCycle cycle;
    Polyomino polyomino;
    LoopStats stats;
};

Snowflake trace_snowflake(SnowflakeOrder order);

/// Cells of the order-n snowflake.
Polyomino snowflake(SnowflakeOrder order);

/// Bounding-box cell width + 1 == 2 P_n.
bool snowflake_width_check(SnowflakeOrder order);

/// Invariance of the cell set under a quarter turn about its centre.
bool has_fourfold_symmetry(const Polyomino &p);

/// u_n followed by its reversal.
BinaryWord persimmon_word(int order);

/// Both families repeat persimmon_word(order); the window is
/// periods * 2 * P_n cells square. Throws Error(kInvalidSpec) for order < 1
/// or periods < 1.
PatternSpec persimmon_spec(int order, int periods);

struct ConjectureResult {
    int order = 1;
    int window = 0;
    bool holds = false;
    LoopStats pattern_loop;
    LoopStats snowflake_stats;
    std::string pattern_hash;
    std::string snowflake_hash;
};

/// Builds persimmon_spec(order, 2), takes its largest loop, and compares its
/// canonical form with the order-n snowflake. Throws Error(kWindowTooSmall)
/// if the window holds no closed loop.
ConjectureResult check_conjecture(int order);

bool verify_conjecture(int order);

/// Orders 1..max_order, checked concurrently; results are in order.
std::vector<ConjectureResult> verify_conjecture_up_to(int max_order);

} // namespace hitomezashi
