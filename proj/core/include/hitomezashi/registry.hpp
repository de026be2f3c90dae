#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hitomezashi/grid.hpp"
#include "hitomezashi/loops.hpp"

namespace hitomezashi {

/// A traditional pattern with the encoding words as catalogued.
struct PatternEntry {
    std::string key;
    std::string display_name;
    std::string meaning;
    WordProgram rows;
    WordProgram cols;
    bool self_dual = false;
    std::optional<LoopStats> expected_stats;      // largest loop, front
    std::optional<LoopStats> expected_dual_stats; // largest loop, reverse side
    std::optional<std::string> dual_key;
    int default_width = 1;
    int default_height = 1;
    /// Row and column programs switch from `01` to `10` at a chosen line
    /// (the yamagata family); the stored programs use the default peak.
    bool peaked_rows = false;
    bool peaked_cols = false;

    PatternSpec spec(int width, int height) const;
    PatternSpec default_spec() const { return spec(default_width, default_height); }
};

/// Yamagata-style program: `first` repeated `repeats` times, then `second`
/// as the fill.
WordProgram peaked_program(const BinaryWord &first, const BinaryWord &second, std::size_t repeats);

/// Number of `01` repeats that puts the switch at the midline of `lines`.
std::size_t midline_repeats(int lines);

/// Throws Error(kPatternNotFound) for an unknown key.
const PatternEntry &lookup(std::string_view key);

/// All entries in catalogue order.
std::span<const PatternEntry> list_all();

struct Table1Row {
    std::string name;
    LoopStats stats;
};

/// Largest-loop features of the six looped patterns, computed from the
/// registry encodings on their default windows.
std::vector<Table1Row> table1();

} // namespace hitomezashi
