#pragma once

// Document formats: JSON for machines, fixed-width text for people.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/loops.hpp"
#include "hitomezashi/registry.hpp"
#include "hitomezashi/tiles.hpp"

namespace hitomezashi {

/// {"name", "width", "height", "rows": [{"word": "01", "repeats": 2 | "fill"}...], "cols": [...]}.
/// An empty list is the unstitched family.
std::string spec_to_json(const PatternSpec &spec);

/// Throws Error(kParse) on a malformed document.
PatternSpec spec_from_json(std::string_view text);

struct LoopRecord {
    Point anchor; // first vertex of the cycle
    LoopStats stats;
    TheoremReport theorems;
    std::string canonical_hash;
};

struct AnalysisReport {
    std::string name;
    int width = 0;
    int height = 0;
    std::size_t present_segments = 0;
    std::size_t open_paths = 0;
    bool fully_packed = false;
    std::vector<LoopRecord> loops;
    std::optional<std::size_t> largest; // index into loops
    bool theorems_hold = true;          // over every loop
    std::optional<TwoColoring> coloring;
};

AnalysisReport analyze_grid(const StitchGrid &g, std::string name = {});

std::string report_json(const AnalysisReport &r);
std::string report_text(const AnalysisReport &r);

std::string entry_json(const PatternEntry &e);
std::string registry_json(std::span<const PatternEntry> entries);
std::string entry_text(const PatternEntry &e);
std::string registry_text(std::span<const PatternEntry> entries);

std::string table1_text(std::span<const Table1Row> rows);
std::string table1_json(std::span<const Table1Row> rows);

/// Cells (normalised to the bounding box), boundary word and stats.
std::string snowflake_json(const Snowflake &s);
std::string snowflake_text(const Snowflake &s);

std::string conjecture_json(std::span<const ConjectureResult> results);
std::string conjecture_text(std::span<const ConjectureResult> results);

} // namespace hitomezashi
