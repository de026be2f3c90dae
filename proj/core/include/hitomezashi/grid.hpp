#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hitomezashi/words.hpp"

namespace hitomezashi {

using Bits = std::vector<std::uint8_t>;

/// One run of a word program: `word` repeated `repeats` times, or repeated
/// until the requested length is reached when `repeats` is empty ("fill").
struct ProgramSegment {
    BinaryWord word;
    std::optional<std::size_t> repeats;

    bool is_fill() const { return !repeats.has_value(); }

    friend bool operator==(const ProgramSegment &, const ProgramSegment &) = default;
};

/// Piecewise description of the phase bits of one family of stitch lines.
/// A program with no segments describes a family that is not stitched at all
/// (the empty encoding word).
class WordProgram {
public:
    WordProgram() = default;

    /// Throws Error(kInvalidProgram) for more than one fill segment, a fill
    /// segment that is not last, or a fixed segment with zero repeats.
    explicit WordProgram(std::vector<ProgramSegment> segments);

    static WordProgram fill(BinaryWord word);

    /// Grammar: `e` | segment (`,` segment)*, segment = word [`:` count].
    /// A segment without a count is the fill segment. Empty text and `e`
    /// both mean the unstitched family.
    static WordProgram parse(std::string_view text);

    bool absent() const { return segments_.empty(); }
    const std::vector<ProgramSegment> &segments() const { return segments_; }

    /// The fill word when the program is exactly one fill segment.
    std::optional<BinaryWord> periodic_word() const;

    std::string str() const;

    friend bool operator==(const WordProgram &, const WordProgram &) = default;

private:
    std::vector<ProgramSegment> segments_;
};

/// Exactly `count` bits: fixed segments in order, then the fill word cycled
/// and truncated. Throws kProgramUnderflow when the program runs out without
/// a fill segment, kEmptyFillWord when the fill word is empty.
Bits expand_program(const WordProgram &program, std::size_t count);

struct PatternSpec {
    std::string name;
    WordProgram rows; // horizontal lines, read bottom-up (word w)
    WordProgram cols; // vertical lines, read left to right (word v)
    int width = 1;    // cells
    int height = 1;   // cells

    /// Throws Error(kInvalidSpec) unless width, height >= 1.
    void validate() const;

    friend bool operator==(const PatternSpec &, const PatternSpec &) = default;
};

/// A W x H window of a hitomezashi pattern. Vertices run over 0..W x 0..H
/// with the origin at the bottom-left.
///
/// The horizontal segment (x,y)-(x+1,y) is present iff x + row_bits[y] is
/// odd; the vertical segment (x,y)-(x,y+1) is present iff y + col_bits[x]
/// is odd. A family without bits has no stitches at all.
class StitchGrid {
public:
    StitchGrid(int width, int height, std::optional<Bits> row_bits, std::optional<Bits> col_bits);

    int width() const { return width_; }
    int height() const { return height_; }

    bool has_rows() const { return row_bits_.has_value(); }
    bool has_cols() const { return col_bits_.has_value(); }
    const std::optional<Bits> &row_bits() const { return row_bits_; }
    const std::optional<Bits> &col_bits() const { return col_bits_; }

    /// Segment (x,y)-(x+1,y); requires 0 <= x < W, 0 <= y <= H.
    bool horizontal(int x, int y) const {
        return row_bits_ && ((x + (*row_bits_)[static_cast<std::size_t>(y)]) & 1);
    }
    /// Segment (x,y)-(x,y+1); requires 0 <= x <= W, 0 <= y < H.
    bool vertical(int x, int y) const {
        return col_bits_ && ((y + (*col_bits_)[static_cast<std::size_t>(x)]) & 1);
    }

    /// Bounds-checked variants; Error(kOutOfBounds) outside the window.
    bool horizontal_at(int x, int y) const;
    bool vertical_at(int x, int y) const;

    std::size_t present_segment_count() const;

    friend bool operator==(const StitchGrid &, const StitchGrid &) = default;

private:
    int width_;
    int height_;
    std::optional<Bits> row_bits_;
    std::optional<Bits> col_bits_;
};

StitchGrid build_grid(const PatternSpec &spec);

/// Complements both families on the same window (the reverse of the fabric).
StitchGrid dual(const StitchGrid &g);

struct Shift {
    int dx = 0;
    int dy = 0;

    friend bool operator==(const Shift &, const Shift &) = default;
};

/// Smallest (dy, dx) in row-major order with 0 <= dx < 2|col|, 0 <= dy < 2|row|
/// such that the dual of the bi-infinite pattern equals the pattern shifted by
/// (dx, dy). Throws Error(kEmptyEncoding) for an empty word.
std::optional<Shift> is_self_dual(const BinaryWord &row_word, const BinaryWord &col_word);

/// Self-duality of a whole spec. Periodic programs (one fill segment, or the
/// unstitched family) are decided exactly on the infinite pattern; piecewise
/// programs are decided on the spec's window, over shifts of at most half of
/// it.
std::optional<Shift> self_dual_shift(const PatternSpec &spec);

/// Number of present segments incident to (x,y); Error(kOutOfBounds) outside.
int vertex_degree(const StitchGrid &g, int x, int y);

/// Every interior vertex has degree exactly two.
bool is_fully_packed(const StitchGrid &g);

} // namespace hitomezashi
