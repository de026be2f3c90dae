#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/lattice.hpp"

namespace hitomezashi {

/// A closed lattice path given by its vertices in order; the edge from the
/// last vertex back to the first is implied. Construction checks that every
/// edge has unit length and that there are at least four edges. Simplicity
/// is a separate query because imported cycles may violate it.
class LatticeCycle {
public:
    /// Throws Error(kInvalidCycle) on a non-unit edge or fewer than 4 vertices.
    explicit LatticeCycle(std::vector<Point> vertices);

    const std::vector<Point> &vertices() const { return vertices_; }
    std::size_t edge_count() const { return vertices_.size(); }

    bool is_simple() const;

    /// Twice the signed shoelace area; positive for counterclockwise order.
    std::int64_t twice_signed_area() const;

    friend bool operator==(const LatticeCycle &, const LatticeCycle &) = default;

private:
    std::vector<Point> vertices_;
};

struct OpenPath {
    std::vector<Point> vertices;
};

struct Components {
    std::vector<LatticeCycle> cycles;
    std::vector<OpenPath> open_paths;
};

/// Splits the present segments of g into closed cycles and open paths.
/// Cycles start at their smallest vertex and run counterclockwise; they are
/// listed in order of that starting vertex. Throws Error(kNotSimplePattern)
/// if some vertex has degree 3 or 4.
Components extract_components(const StitchGrid &g);

/// A finite set of unit cells, stored sorted.
class Polyomino {
public:
    Polyomino() = default;
    explicit Polyomino(std::vector<Point> cells);

    const std::vector<Point> &cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Point cell) const;

    CellBounds bounds() const;

    /// Edge-connectedness of the cell set.
    bool is_connected() const;

    /// Translated to the origin and minimised over the eight symmetries of
    /// the square; equal for all congruent cell sets.
    Polyomino canonical_form() const;

    /// Image under one of the eight lattice symmetries (0 is identity,
    /// 1..3 rotations by 90, 180, 270 degrees, 4..7 their reflections).
    Polyomino transformed(int symmetry) const;

    /// Translated so the bounding box starts at (0, 0).
    Polyomino normalized() const;

    /// 64-bit FNV-1a over the canonical cells, as 16 hex digits.
    std::string canonical_hash() const;

    friend bool operator==(const Polyomino &, const Polyomino &) = default;
    friend auto operator<=>(const Polyomino &, const Polyomino &) = default;

private:
    std::vector<Point> cells_;
};

/// Cells inside the cycle by the even-odd rule.
/// Throws Error(kSelfIntersecting) for a non-simple cycle.
Polyomino cycle_to_polyomino(const LatticeCycle &c);

struct LoopStats {
    int perimeter = 0; // edges
    int area = 0;      // cells
    int height = 0;    // cells
    int width = 0;     // cells

    /// Width measured in boundary stitches, one more than in cells.
    int stitch_width() const { return width + 1; }
    int stitch_height() const { return height + 1; }

    friend bool operator==(const LoopStats &, const LoopStats &) = default;
    friend auto operator<=>(const LoopStats &, const LoopStats &) = default;
};

LoopStats loop_stats(const Polyomino &p, const LatticeCycle &c);

struct TheoremReport {
    bool area_one_mod_four = false;
    bool perimeter_four_mod_eight = false;
    bool odd_width_and_height = false;

    bool all() const { return area_one_mod_four && perimeter_four_mod_eight && odd_width_and_height; }

    friend bool operator==(const TheoremReport &, const TheoremReport &) = default;
};

TheoremReport check_loop_theorems(const LoopStats &s);

struct Loop {
    LatticeCycle cycle;
    Polyomino polyomino;
    LoopStats stats;
};

/// Every closed loop of g with its polyomino and stats, in extraction order.
std::vector<Loop> analyze_loops(const StitchGrid &g);

/// Index of the loop of largest area; ties go to the larger perimeter, then
/// the lexicographically smaller canonical form, then the lower index.
std::optional<std::size_t> largest_index(std::span<const Loop> loops);

/// The loop of largest area; ties go to the larger perimeter, then the
/// lexicographically smaller canonical form, then extraction order.
std::optional<Loop> largest_loop(const StitchGrid &g);

/// Region coloring of a window. Regions are maximal sets of cells joined
/// across absent segments; everything outside the window is one more
/// region, which always receives color 0.
struct TwoColoring {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> colors; // row-major, row 0 first
    std::size_t region_count = 0;     // including the outside region

    std::uint8_t color(int x, int y) const {
        return colors[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                      static_cast<std::size_t>(x)];
    }
};

/// Throws Error(kNotTwoColorable) if the region adjacency graph has an odd
/// cycle.
TwoColoring two_color(const StitchGrid &g);

/// areas[k] == 2k(k+1) + 1 for every k.
bool centred_square_check(std::span<const std::int64_t> areas);

} // namespace hitomezashi
