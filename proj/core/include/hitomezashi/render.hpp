#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/loops.hpp"

namespace hitomezashi {

struct Palette {
    std::string fill0 = "#ffffff";
    std::string fill1 = "#c9d7ee";
    std::string stroke = "#1f3a93";
    std::string highlight = "#d1495b";
};

struct RenderOptions {
    int cell_size = 20;
    double stroke_width = 2.0;
    bool show_grid = false;
    bool fill_two_coloring = false;
    Palette palette;

    /// Throws Error(kInvalidSpec) unless cell_size >= 1 and stroke_width > 0.
    void validate() const;
};

/// One text line per vertex row, top row first. Each line has 2W+1
/// characters: even columns hold `|` where the vertical segment from this
/// row upward is present (otherwise `+` with show_grid, else a space), odd
/// columns hold `_` where the horizontal segment on this row is present.
std::string render_ascii(const StitchGrid &g, bool show_grid = false);

/// An optional overlay drawn beneath the stitches.
using Overlay = std::variant<std::monostate, TwoColoring, LatticeCycle>;

/// SVG 1.1 document, viewBox (0, 0, W*cell, H*cell), one <line> per present
/// segment with row 0 at the bottom. A TwoColoring overlay (or
/// fill_two_coloring, which computes one) adds one <rect> per cell; a
/// LatticeCycle overlay adds a filled <polygon>.
std::string render_svg(const StitchGrid &g, const RenderOptions &opts = {}, const Overlay &overlay = {});

/// A lone closed boundary (e.g. a snowflake) as a filled outline, with the
/// cycle's bounding box as the viewBox.
std::string render_cycle_svg(const LatticeCycle &c, const RenderOptions &opts = {});

} // namespace hitomezashi
