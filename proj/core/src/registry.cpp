#include "hitomezashi/registry.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "hitomezashi/error.hpp"

namespace hitomezashi {

WordProgram peaked_program(const BinaryWord &first, const BinaryWord &second, std::size_t repeats) {
    return WordProgram({ProgramSegment{first, repeats}, ProgramSegment{second, std::nullopt}});
}

std::size_t midline_repeats(int lines) { return std::max<std::size_t>(1, static_cast<std::size_t>(lines) / 4); }

PatternSpec PatternEntry::spec(int width, int height) const {
    auto reshape = [](const WordProgram &p, bool peaked, int lines) {
        if (!peaked) return p;
        const auto &segs = p.segments();
        return peaked_program(segs.at(0).word, segs.at(1).word, midline_repeats(lines));
    };
    PatternSpec s{key, reshape(rows, peaked_rows, height + 1), reshape(cols, peaked_cols, width + 1), width, height};
    s.validate();
    return s;
}

namespace {

// Four lattice periods per axis; every motif then occurs fully inside.
int periods_window(const WordProgram &p) {
    const auto w = p.periodic_word();
    const int len = w ? std::max<int>(1, static_cast<int>(w->size())) : 1;
    return 4 * 2 * len;
}

PatternEntry periodic(std::string key, std::string display, std::string meaning, std::string_view w,
                      std::string_view v, bool self_dual) {
    PatternEntry e;
    e.key = std::move(key);
    e.display_name = std::move(display);
    e.meaning = std::move(meaning);
    e.rows = w.empty() ? WordProgram{} : WordProgram::fill(BinaryWord::parse(w));
    e.cols = v.empty() ? WordProgram{} : WordProgram::fill(BinaryWord::parse(v));
    e.self_dual = self_dual;
    e.default_width = periods_window(e.cols);
    e.default_height = periods_window(e.rows);
    if (self_dual) e.dual_key = e.key;
    return e;
}

std::string u_reversed(std::string_view u) {
    std::string s(u);
    s.append(u.rbegin(), u.rend());
    return s;
}

std::vector<PatternEntry> make_catalogue() {
    std::vector<PatternEntry> all;

    all.push_back(periodic("yokogushi", "yokogushi", "offset horizontal lines", "10", "", true));
    all.push_back(periodic("tategushi", "tategushi", "offset vertical lines", "", "10", true));
    all.push_back(periodic("dan_tsunagi_ne", "dan tsunagi", "linked steps, rising south-west to north-east",
                           "01", "10", true));
    all.push_back(periodic("dan_tsunagi_nw", "dan tsunagi", "linked steps, rising south-east to north-west",
                           "10", "10", true));

    auto kuchi = periodic("kuchizashi", "kuchizashi", "mouth stitch", "1", "1", true);
    kuchi.expected_stats = LoopStats{4, 1, 1, 1};
    all.push_back(std::move(kuchi));

    auto juji = periodic("jujizashi", "jūjizashi", "ten-cross stitch", "0110", "011", false);
    juji.expected_stats = LoopStats{12, 5, 3, 3};
    all.push_back(std::move(juji));

    all.push_back(periodic("hirayama_michi", "hirayama michi", "passes into the mountain", "10", "1", true));

    auto kawari = periodic("kawari_hirayama", "kawari hirayama michi", "variant passes into the mountain",
                           "0110", "1", false);
    kawari.dual_key = "kawari_kuchizashi";
    all.push_back(std::move(kawari));

    // Complement of kawari hirayama michi: the offset squares on its reverse.
    auto kawari_kuchi = periodic("kawari_kuchizashi", "kawari kuchizashi", "variant mouth stitch, offset squares",
                                 "1001", "0", false);
    kawari_kuchi.dual_key = "kawari_hirayama";
    all.push_back(std::move(kawari_kuchi));

    PatternEntry yama;
    yama.key = "yamagata";
    yama.display_name = "yamagata";
    yama.meaning = "mountain form";
    yama.rows = WordProgram::fill(BinaryWord::parse("01"));
    yama.default_width = 20;
    yama.default_height = 16;
    yama.cols = peaked_program(BinaryWord::parse("01"), BinaryWord::parse("10"), midline_repeats(21));
    yama.peaked_cols = true;
    yama.self_dual = true;
    yama.dual_key = yama.key;
    all.push_back(std::move(yama));

    all.push_back(periodic("niju_yamagata", "nijū yamagata", "double mountain form", "10", "10101", true));

    // Mountain forms radiating from a centre; each is the dual of the other.
    auto radiating = [](std::string key, std::string meaning, std::string_view first, std::string_view second,
                        std::string dual) {
        PatternEntry e;
        e.key = std::move(key);
        e.display_name = "yamagata (variant)";
        e.meaning = std::move(meaning);
        e.default_width = 20;
        e.default_height = 20;
        e.rows = peaked_program(BinaryWord::parse(first), BinaryWord::parse(second), midline_repeats(21));
        e.cols = e.rows;
        e.peaked_rows = true;
        e.peaked_cols = true;
        e.self_dual = false;
        e.dual_key = std::move(dual);
        return e;
    };
    all.push_back(radiating("yamagata_square", "mountain form radiating from a single square", "10", "01",
                            "yamagata_cross"));
    all.push_back(radiating("yamagata_cross", "mountain form radiating from a ten-cross", "01", "10",
                            "yamagata_square"));

    auto kaki = periodic("kakinohanazashi", "kakinohanazashi", "persimmon flower stitch", u_reversed("1010"), "010",
                         false);
    kaki.expected_stats = LoopStats{20, 13, 5, 5};
    all.push_back(std::move(kaki));

    auto sanju = periodic("sanju_kakinohanazashi", "sanjū kakinohanazashi", "triple persimmon flower stitch",
                          u_reversed("101010"), "01010", false);
    sanju.expected_stats = LoopStats{36, 41, 9, 9};
    sanju.expected_dual_stats = LoopStats{28, 25, 7, 7};
    all.push_back(std::move(sanju));

    // The well-kerb motif appears on the reverse of this encoding; the
    // front shows crosses and mouths.
    auto igeta = periodic("igetazashi", "igetazashi", "well-kerb stitch", u_reversed("100"), u_reversed("100"),
                          false);
    igeta.expected_dual_stats = LoopStats{28, 17, 5, 5};
    all.push_back(std::move(igeta));

    return all;
}

const std::vector<PatternEntry> &catalogue() {
    static const std::vector<PatternEntry> entries = make_catalogue();
    return entries;
}

} // namespace

const PatternEntry &lookup(std::string_view key) {
    const auto &all = catalogue();
    const auto it = std::find_if(all.begin(), all.end(), [key](const PatternEntry &e) { return e.key == key; });
    if (it == all.end()) throw Error(ErrorKind::kPatternNotFound, fmt::format("no pattern named '{}'", key));
    return *it;
}

std::span<const PatternEntry> list_all() { return catalogue(); }

std::vector<Table1Row> table1() {
    struct Source {
        const char *name;
        const char *key;
        bool reverse_side;
    };
    static constexpr Source kRows[] = {
        {"kuchizashi", "kuchizashi", false},
        {"jūjizashi", "jujizashi", false},
        {"kakinohanazashi", "kakinohanazashi", false},
        {"dual sanjū kakinohanazashi", "sanju_kakinohanazashi", true},
        {"sanjū kakinohanazashi", "sanju_kakinohanazashi", false},
        {"igetazashi", "igetazashi", true},
    };
    std::vector<Table1Row> rows;
    for (const Source &src : kRows) {
        StitchGrid g = build_grid(lookup(src.key).default_spec());
        if (src.reverse_side) g = dual(g);
        const auto loop = largest_loop(g);
        if (!loop) throw Error(ErrorKind::kWindowTooSmall, fmt::format("no loop found for {}", src.name));
        rows.push_back({src.name, loop->stats});
    }
    return rows;
}

} // namespace hitomezashi
