#include "hitomezashi/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include <fmt/format.h>

#include "hitomezashi/error.hpp"

namespace hitomezashi {

WordProgram::WordProgram(std::vector<ProgramSegment> segments) : segments_(std::move(segments)) {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const auto &seg = segments_[i];
        if (seg.is_fill() && i + 1 != segments_.size()) {
            throw Error(ErrorKind::kInvalidProgram, "the fill segment must be the last segment");
        }
        if (!seg.is_fill() && *seg.repeats == 0) {
            throw Error(ErrorKind::kInvalidProgram,
                        fmt::format("segment {} ('{}') has zero repeats", i, seg.word.str()));
        }
    }
}

WordProgram WordProgram::fill(BinaryWord word) {
    return WordProgram({ProgramSegment{std::move(word), std::nullopt}});
}

WordProgram WordProgram::parse(std::string_view text) {
    if (text.empty() || text == "e" || text == "\xCE\xB5") return {}; // "ε"
    std::vector<ProgramSegment> segments;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto colon = item.find(':');
        ProgramSegment seg;
        seg.word = BinaryWord::parse(item.substr(0, colon));
        if (colon != std::string_view::npos) {
            const auto count = item.substr(colon + 1);
            std::size_t value = 0;
            const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), value);
            if (ec != std::errc{} || ptr != count.data() + count.size() || count.empty()) {
                throw Error(ErrorKind::kParse, fmt::format("bad repeat count '{}' in '{}'", count, text));
            }
            seg.repeats = value;
        }
        segments.push_back(std::move(seg));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return WordProgram(std::move(segments));
}

std::optional<BinaryWord> WordProgram::periodic_word() const {
    if (segments_.size() == 1 && segments_.front().is_fill()) return segments_.front().word;
    return std::nullopt;
}

std::string WordProgram::str() const {
    if (segments_.empty()) return "e";
    std::string out;
    for (const auto &seg : segments_) {
        if (!out.empty()) out += ',';
        out += seg.word.str();
        if (!seg.is_fill()) out += fmt::format(":{}", *seg.repeats);
    }
    return out;
}

Bits expand_program(const WordProgram &program, std::size_t count) {
    Bits out;
    out.reserve(count);
    for (const auto &seg : program.segments()) {
        if (out.size() == count) break;
        const auto &letters = seg.word.letters();
        if (seg.is_fill()) {
            if (letters.empty()) throw Error(ErrorKind::kEmptyFillWord, "fill segment word is empty");
            for (std::size_t i = 0; out.size() < count; ++i) out.push_back(letters[i % letters.size()]);
        } else {
            for (std::size_t r = 0; r < *seg.repeats && out.size() < count; ++r) {
                for (std::size_t i = 0; i < letters.size() && out.size() < count; ++i) out.push_back(letters[i]);
            }
        }
    }
    if (out.size() < count) {
        throw Error(ErrorKind::kProgramUnderflow,
                    fmt::format("program '{}' yields {} of {} bits", program.str(), out.size(), count));
    }
    return out;
}

void PatternSpec::validate() const {
    if (width < 1 || height < 1) {
        throw Error(ErrorKind::kInvalidSpec,
                    fmt::format("pattern '{}' has window {}x{}; both sides must be >= 1", name, width, height));
    }
}

StitchGrid::StitchGrid(int width, int height, std::optional<Bits> row_bits, std::optional<Bits> col_bits)
    : width_(width), height_(height), row_bits_(std::move(row_bits)), col_bits_(std::move(col_bits)) {
    if (width_ < 1 || height_ < 1) {
        throw Error(ErrorKind::kInvalidSpec, fmt::format("grid window {}x{} is empty", width_, height_));
    }
    auto check = [](const std::optional<Bits> &bits, int expected, std::string_view what) {
        if (!bits) return;
        if (bits->size() != static_cast<std::size_t>(expected)) {
            throw Error(ErrorKind::kInvalidSpec,
                        fmt::format("{} bits: expected {}, got {}", what, expected, bits->size()));
        }
        if (std::any_of(bits->begin(), bits->end(), [](std::uint8_t b) { return b > 1; })) {
            throw Error(ErrorKind::kInvalidSpec, fmt::format("{} bits must be 0 or 1", what));
        }
    };
    check(row_bits_, height_ + 1, "row");
    check(col_bits_, width_ + 1, "column");
}

bool StitchGrid::horizontal_at(int x, int y) const {
    if (x < 0 || x >= width_ || y < 0 || y > height_) {
        throw Error(ErrorKind::kOutOfBounds, fmt::format("horizontal segment ({}, {})", x, y));
    }
    return horizontal(x, y);
}

bool StitchGrid::vertical_at(int x, int y) const {
    if (x < 0 || x > width_ || y < 0 || y >= height_) {
        throw Error(ErrorKind::kOutOfBounds, fmt::format("vertical segment ({}, {})", x, y));
    }
    return vertical(x, y);
}

std::size_t StitchGrid::present_segment_count() const {
    std::size_t n = 0;
    for (int y = 0; y <= height_; ++y)
        for (int x = 0; x < width_; ++x) n += horizontal(x, y);
    for (int x = 0; x <= width_; ++x)
        for (int y = 0; y < height_; ++y) n += vertical(x, y);
    return n;
}

StitchGrid build_grid(const PatternSpec &spec) {
    spec.validate();
    std::optional<Bits> rows, cols;
    if (!spec.rows.absent()) rows = expand_program(spec.rows, static_cast<std::size_t>(spec.height) + 1);
    if (!spec.cols.absent()) cols = expand_program(spec.cols, static_cast<std::size_t>(spec.width) + 1);
    return StitchGrid(spec.width, spec.height, std::move(rows), std::move(cols));
}

StitchGrid dual(const StitchGrid &g) {
    auto flip = [](const std::optional<Bits> &bits) -> std::optional<Bits> {
        if (!bits) return std::nullopt;
        Bits out(*bits);
        for (auto &b : out) b ^= 1u;
        return out;
    };
    return StitchGrid(g.width(), g.height(), flip(g.row_bits()), flip(g.col_bits()));
}

namespace {

// ~word[i] == word[(i + shift) mod |word|] ^ parity for every i.
bool cyclic_match(const BinaryWord &word, int shift, int parity) {
    const auto n = word.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = (i + static_cast<std::size_t>(shift)) % n;
        if ((word[i] ^ 1u) != (word[j] ^ static_cast<unsigned>(parity))) return false;
    }
    return true;
}

// An absent word places no constraint on its axis.
std::optional<Shift> periodic_shift(const BinaryWord *row, const BinaryWord *col) {
    const int dx_range = col ? 2 * static_cast<int>(col->size()) : 2;
    const int dy_range = row ? 2 * static_cast<int>(row->size()) : 2;
    for (int dy = 0; dy < dy_range; ++dy) {
        for (int dx = 0; dx < dx_range; ++dx) {
            if (row && !cyclic_match(*row, dy, dx & 1)) continue;
            if (col && !cyclic_match(*col, dx, dy & 1)) continue;
            return Shift{dx, dy};
        }
    }
    return std::nullopt;
}

bool window_match(const std::optional<Bits> &bits, int shift, int parity) {
    if (!bits) return true;
    const int n = static_cast<int>(bits->size());
    for (int i = 0; i < n; ++i) {
        const int j = i + shift;
        if (j < 0 || j >= n) continue;
        if (((*bits)[static_cast<std::size_t>(i)] ^ 1u) !=
            ((*bits)[static_cast<std::size_t>(j)] ^ static_cast<unsigned>(parity))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<Shift> is_self_dual(const BinaryWord &row_word, const BinaryWord &col_word) {
    if (row_word.empty() || col_word.empty()) {
        throw Error(ErrorKind::kEmptyEncoding, "self-duality needs two nonempty encoding words");
    }
    return periodic_shift(&row_word, &col_word);
}

std::optional<Shift> self_dual_shift(const PatternSpec &spec) {
    spec.validate();
    const bool rows_periodic = spec.rows.absent() || spec.rows.periodic_word();
    const bool cols_periodic = spec.cols.absent() || spec.cols.periodic_word();
    if (rows_periodic && cols_periodic) {
        const auto row = spec.rows.periodic_word();
        const auto col = spec.cols.periodic_word();
        if ((row && row->empty()) || (col && col->empty())) {
            throw Error(ErrorKind::kEmptyEncoding, "fill word is empty");
        }
        return periodic_shift(row ? &*row : nullptr, col ? &*col : nullptr);
    }

    const StitchGrid g = build_grid(spec);
    // Search shifts by increasing size so the reported one is the smallest.
    std::optional<Shift> best;
    auto size = [](const Shift &s) { return std::abs(s.dx) + std::abs(s.dy); };
    for (int dy = -spec.height / 2; dy <= spec.height / 2; ++dy) {
        for (int dx = -spec.width / 2; dx <= spec.width / 2; ++dx) {
            if (!window_match(g.row_bits(), dy, dx & 1)) continue;
            if (!window_match(g.col_bits(), dx, dy & 1)) continue;
            const Shift s{dx, dy};
            if (!best || size(s) < size(*best)) best = s;
        }
    }
    return best;
}

int vertex_degree(const StitchGrid &g, int x, int y) {
    if (x < 0 || x > g.width() || y < 0 || y > g.height()) {
        throw Error(ErrorKind::kOutOfBounds,
                    fmt::format("vertex ({}, {}) outside {}x{} window", x, y, g.width(), g.height()));
    }
    int degree = 0;
    if (x > 0) degree += g.horizontal(x - 1, y);
    if (x < g.width()) degree += g.horizontal(x, y);
    if (y > 0) degree += g.vertical(x, y - 1);
    if (y < g.height()) degree += g.vertical(x, y);
    return degree;
}

bool is_fully_packed(const StitchGrid &g) {
    for (int y = 1; y < g.height(); ++y) {
        for (int x = 1; x < g.width(); ++x) {
            if (vertex_degree(g, x, y) != 2) return false;
        }
    }
    return true;
}

} // namespace hitomezashi
