#pragma once

#include <compare>

namespace hitomezashi {

/// A point of the integer lattice. Also used to name unit cells: the cell
/// (x, y) is the square with lower-left corner (x, y).
struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point &, const Point &) = default;
    friend auto operator<=>(const Point &, const Point &) = default;
};

/// Inclusive cell bounds of a finite cell set.
struct CellBounds {
    int min_x = 0;
    int min_y = 0;
    int max_x = 0;
    int max_y = 0;

    int width() const { return max_x - min_x + 1; }
    int height() const { return max_y - min_y + 1; }
};

} // namespace hitomezashi
