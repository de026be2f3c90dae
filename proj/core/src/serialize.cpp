#include "hitomezashi/serialize.hpp"

#include <iterator>
#include <map>

#include <fmt/format.h>
#include <json.hpp>

#include "hitomezashi/error.hpp"

namespace hitomezashi {

using nlohmann::json;

namespace {

json program_to_json(const WordProgram &p) {
    json arr = json::array();
    for (const auto &seg : p.segments()) {
        json item{{"word", seg.word.str()}};
        if (seg.is_fill()) {
            item["repeats"] = "fill";
        } else {
            item["repeats"] = *seg.repeats;
        }
        arr.push_back(std::move(item));
    }
    return arr;
}

WordProgram program_from_json(const json &arr, std::string_view field) {
    if (!arr.is_array()) throw Error(ErrorKind::kParse, fmt::format("'{}' must be a list", field));
    std::vector<ProgramSegment> segments;
    for (const auto &item : arr) {
        if (!item.is_object() || !item.contains("word") || !item["word"].is_string()) {
            throw Error(ErrorKind::kParse, fmt::format("'{}' entries need a string 'word'", field));
        }
        ProgramSegment seg{BinaryWord::parse(item["word"].get<std::string>()), std::nullopt};
        const json reps = item.value("repeats", json("fill"));
        if (reps.is_number_unsigned()) {
            seg.repeats = reps.get<std::size_t>();
        } else if (!(reps.is_string() && reps.get<std::string>() == "fill")) {
            throw Error(ErrorKind::kParse,
                        fmt::format("'{}' repeats must be a positive integer or \"fill\"", field));
        }
        segments.push_back(std::move(seg));
    }
    return WordProgram(std::move(segments));
}

json stats_json(const LoopStats &s) {
    return json{{"perimeter", s.perimeter}, {"area", s.area}, {"height", s.height}, {"width", s.width}};
}

json theorems_json(const TheoremReport &t) {
    return json{{"area_1_mod_4", t.area_one_mod_four},
                {"perimeter_4_mod_8", t.perimeter_four_mod_eight},
                {"odd_width_and_height", t.odd_width_and_height}};
}

json entry_to_json(const PatternEntry &e) {
    json j{{"key", e.key},
           {"display_name", e.display_name},
           {"meaning", e.meaning},
           {"rows", program_to_json(e.rows)},
           {"cols", program_to_json(e.cols)},
           {"self_dual", e.self_dual},
           {"default_width", e.default_width},
           {"default_height", e.default_height}};
    j["expected_stats"] = e.expected_stats ? stats_json(*e.expected_stats) : json(nullptr);
    j["expected_dual_stats"] = e.expected_dual_stats ? stats_json(*e.expected_dual_stats) : json(nullptr);
    j["dual_key"] = e.dual_key ? json(*e.dual_key) : json(nullptr);
    return j;
}

std::string coloring_row(const TwoColoring &c, int y) {
    std::string row;
    for (int x = 0; x < c.width; ++x) row += c.color(x, y) ? '1' : '0';
    return row;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string stats_tuple(const LoopStats &s) {
    return fmt::format("({}, {}, {}, {})", s.perimeter, s.area, s.height, s.width);
}

} // namespace

std::string spec_to_json(const PatternSpec &spec) {
    const json j{{"name", spec.name},
                 {"width", spec.width},
                 {"height", spec.height},
                 {"rows", program_to_json(spec.rows)},
                 {"cols", program_to_json(spec.cols)}};
    return j.dump(2) + "\n";
}

PatternSpec spec_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::kParse, e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::kParse, "pattern spec must be an object");
    for (const char *field : {"width", "height"}) {
        if (!j.contains(field) || !j[field].is_number_integer()) {
            throw Error(ErrorKind::kParse, fmt::format("'{}' must be an integer", field));
        }
    }
    PatternSpec spec;
    spec.name = j.value("name", std::string{});
    spec.rows = program_from_json(j.value("rows", json::array()), "rows");
    spec.cols = program_from_json(j.value("cols", json::array()), "cols");
    spec.width = j["width"].get<int>();
    spec.height = j["height"].get<int>();
    spec.validate();
    return spec;
}

AnalysisReport analyze_grid(const StitchGrid &g, std::string name) {
    AnalysisReport r;
    r.name = std::move(name);
    r.width = g.width();
    r.height = g.height();
    r.present_segments = g.present_segment_count();
    r.fully_packed = is_fully_packed(g);
    r.open_paths = extract_components(g).open_paths.size();
    const std::vector<Loop> loops = analyze_loops(g);
    r.largest = largest_index(loops);
    for (const Loop &loop : loops) {
        LoopRecord rec{loop.cycle.vertices().front(), loop.stats, check_loop_theorems(loop.stats),
                       loop.polyomino.canonical_hash()};
        r.theorems_hold = r.theorems_hold && rec.theorems.all();
        r.loops.push_back(std::move(rec));
    }
    try {
        r.coloring = two_color(g);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::kNotTwoColorable) throw;
    }
    return r;
}

std::string report_json(const AnalysisReport &r) {
    json loops = json::array();
    for (const auto &l : r.loops) {
        json item = stats_json(l.stats);
        item["anchor"] = json::array({l.anchor.x, l.anchor.y});
        item["canonical_hash"] = l.canonical_hash;
        item["theorems"] = theorems_json(l.theorems);
        loops.push_back(std::move(item));
    }
    json j{{"name", r.name},
           {"width", r.width},
           {"height", r.height},
           {"present_segments", r.present_segments},
           {"open_paths", r.open_paths},
           {"fully_packed", r.fully_packed},
           {"loops", std::move(loops)},
           {"theorems_hold", r.theorems_hold}};
    j["largest"] = r.largest ? json(*r.largest) : json(nullptr);
    if (r.coloring) {
        json rows = json::array();
        for (int y = 0; y < r.coloring->height; ++y) rows.push_back(coloring_row(*r.coloring, y));
        j["two_coloring"] = json{{"regions", r.coloring->region_count}, {"rows", std::move(rows)}};
    } else {
        j["two_coloring"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string report_text(const AnalysisReport &r) {
    std::string out;
    auto put = std::back_inserter(out);
    if (!r.name.empty()) fmt::format_to(put, "pattern: {}\n", r.name);
    fmt::format_to(put, "window: {}x{}\n", r.width, r.height);
    fmt::format_to(put, "present segments: {}\n", r.present_segments);
    fmt::format_to(put, "fully packed: {}\n", yes_no(r.fully_packed));
    fmt::format_to(put, "open paths: {}\n", r.open_paths);

    // Loops grouped by motif (same stats and canonical form).
    std::map<std::pair<LoopStats, std::string>, std::size_t> motifs;
    for (const auto &l : r.loops) ++motifs[{l.stats, l.canonical_hash}];
    fmt::format_to(put, "closed loops: {} ({} distinct)\n", r.loops.size(), motifs.size());
    if (!motifs.empty()) {
        fmt::format_to(put, "{:>9} {:>6} {:>6} {:>5} {:>6}  {:<16}  {}\n", "perimeter", "area", "height", "width",
                       "count", "canonical", "theorems");
        for (auto it = motifs.rbegin(); it != motifs.rend(); ++it) {
            const auto &[key, count] = *it;
            const auto &s = key.first;
            fmt::format_to(put, "{:>9} {:>6} {:>6} {:>5} {:>6}  {:<16}  {}\n", s.perimeter, s.area, s.height,
                           s.width, count, key.second, check_loop_theorems(s).all() ? "ok" : "VIOLATED");
        }
    }
    if (r.largest) fmt::format_to(put, "largest loop: {}\n", stats_tuple(r.loops[*r.largest].stats));
    fmt::format_to(put, "loop theorems hold: {}\n", yes_no(r.theorems_hold));
    if (r.coloring) {
        fmt::format_to(put, "two-coloring ({} regions, top row first):\n", r.coloring->region_count);
        for (int y = r.coloring->height - 1; y >= 0; --y) out += coloring_row(*r.coloring, y) + "\n";
    } else {
        out += "two-coloring: none (regions are not two-colorable)\n";
    }
    return out;
}

std::string entry_json(const PatternEntry &e) { return entry_to_json(e).dump(2) + "\n"; }

std::string registry_json(std::span<const PatternEntry> entries) {
    json arr = json::array();
    for (const auto &e : entries) arr.push_back(entry_to_json(e));
    return arr.dump(2) + "\n";
}

std::string entry_text(const PatternEntry &e) {
    std::string out;
    auto put = std::back_inserter(out);
    fmt::format_to(put, "key: {}\n", e.key);
    fmt::format_to(put, "name: {}\n", e.display_name);
    fmt::format_to(put, "meaning: {}\n", e.meaning);
    fmt::format_to(put, "rows (w): {}\n", e.rows.str());
    fmt::format_to(put, "cols (v): {}\n", e.cols.str());
    fmt::format_to(put, "self-dual: {}\n", yes_no(e.self_dual));
    fmt::format_to(put, "dual: {}\n", e.dual_key.value_or("-"));
    fmt::format_to(put, "default window: {}x{}\n", e.default_width, e.default_height);
    if (e.expected_stats) fmt::format_to(put, "largest loop: {}\n", stats_tuple(*e.expected_stats));
    if (e.expected_dual_stats) fmt::format_to(put, "largest loop (reverse): {}\n", stats_tuple(*e.expected_dual_stats));
    return out;
}

std::string registry_text(std::span<const PatternEntry> entries) {
    std::string out;
    auto put = std::back_inserter(out);
    fmt::format_to(put, "{:<22} {:<16} {:<16} {}\n", "key", "rows (w)", "cols (v)", "self-dual");
    for (const auto &e : entries) {
        fmt::format_to(put, "{:<22} {:<16} {:<16} {}\n", e.key, e.rows.str(), e.cols.str(), yes_no(e.self_dual));
    }
    return out;
}

std::string table1_text(std::span<const Table1Row> rows) {
    std::string out;
    auto put = std::back_inserter(out);
    fmt::format_to(put, "{:<28} {:>9} {:>5} {:>6} {:>5}\n", "Pattern name", "Perimeter", "Area", "Height", "Width");
    for (const auto &r : rows) {
        fmt::format_to(put, "{:<28} {:>9} {:>5} {:>6} {:>5}\n", r.name, r.stats.perimeter, r.stats.area,
                       r.stats.height, r.stats.width);
    }
    return out;
}

std::string table1_json(std::span<const Table1Row> rows) {
    json arr = json::array();
    for (const auto &r : rows) {
        json item = stats_json(r.stats);
        item["name"] = r.name;
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

namespace {

json snowflake_to_json(const Snowflake &s) {
    json cells = json::array();
    const Polyomino shape = s.polyomino.normalized();
    for (const Point c : shape.cells()) cells.push_back(json::array({c.x, c.y}));
    json j = stats_json(s.stats);
    j["order"] = s.order;
    j["boundary"] = s.boundary.str();
    j["stitch_width"] = s.stats.stitch_width();
    j["cells"] = std::move(cells);
    return j;
}

} // namespace

std::string snowflake_json(const Snowflake &s) { return snowflake_to_json(s).dump(2) + "\n"; }

std::string snowflake_text(const Snowflake &s) {
    std::string out;
    auto put = std::back_inserter(out);
    const auto order = static_cast<unsigned>(s.order);
    fmt::format_to(put, "order: {}\n", s.order);
    fmt::format_to(put, "side word: {}\n", snowflake_side_word(SnowflakeOrder(s.order)).str());
    fmt::format_to(put, "perimeter: {}\n", s.stats.perimeter);
    fmt::format_to(put, "area: {} (P_{} = {})\n", s.stats.area, 2 * order - 1, pell(2 * order - 1));
    fmt::format_to(put, "width: {} cells, {} boundary stitches (2 P_{} = {})\n", s.stats.width,
                   s.stats.stitch_width(), order, 2 * pell(order));
    fmt::format_to(put, "height: {} cells\n", s.stats.height);
    const Polyomino cells = s.polyomino.normalized();
    const CellBounds b = cells.bounds();
    for (int y = b.max_y; y >= 0; --y) {
        std::string row;
        for (int x = 0; x <= b.max_x; ++x) row += cells.contains({x, y}) ? '#' : '.';
        out += row + "\n";
    }
    return out;
}

std::string conjecture_json(std::span<const ConjectureResult> results) {
    json arr = json::array();
    for (const auto &r : results) {
        arr.push_back(json{{"order", r.order},
                           {"window", r.window},
                           {"holds", r.holds},
                           {"pattern_loop", stats_json(r.pattern_loop)},
                           {"snowflake", stats_json(r.snowflake_stats)},
                           {"pattern_hash", r.pattern_hash},
                           {"snowflake_hash", r.snowflake_hash}});
    }
    return arr.dump(2) + "\n";
}

std::string conjecture_text(std::span<const ConjectureResult> results) {
    std::string out;
    auto put = std::back_inserter(out);
    fmt::format_to(put, "{:<5} {:>6}  {:<20} {:<20} {}\n", "order", "window", "largest loop", "snowflake", "verdict");
    for (const auto &r : results) {
        fmt::format_to(put, "{:<5} {:>6}  {:<20} {:<20} {}\n", r.order, r.window, stats_tuple(r.pattern_loop),
                       stats_tuple(r.snowflake_stats), yes_no(r.holds));
    }
    return out;
}

} // namespace hitomezashi
