#include <doctest.h>

#include <set>

#include "hitomezashi/error.hpp"
#include "hitomezashi/registry.hpp"
#include "oracles.hpp"

using namespace hitomezashi;

namespace {

// Is the reverse of pattern (w1, v1) a translate of pattern (w2, v2)?
bool dual_translate(const std::string &w1, const std::string &v1, const std::string &w2, const std::string &v2) {
    const int py = 2 * static_cast<int>(w1.size() * w2.size());
    const int px = 2 * static_cast<int>(v1.size() * v2.size());
    for (int dy = 0; dy < py; ++dy) {
        for (int dx = 0; dx < px; ++dx) {
            bool ok = true;
            for (int y = 0; y < 2 * py && ok; ++y)
                for (int x = 0; x < 2 * px && ok; ++x)
                    ok = !oracle::inf_h(w1, x, y) == oracle::inf_h(w2, x + dx, y + dy) &&
                         !oracle::inf_v(v1, x, y) == oracle::inf_v(v2, x + dx, y + dy);
            if (ok) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("catalogue keys are unique and resolvable") {
    std::set<std::string> keys;
    for (const PatternEntry &e : list_all()) {
        CHECK(keys.insert(e.key).second);
        CHECK(&lookup(e.key) == &e);
        CHECK_NOTHROW(e.default_spec());
        if (e.dual_key) CHECK_NOTHROW(lookup(*e.dual_key));
    }
    CHECK(keys.size() == 16);
    try {
        lookup("nope");
        FAIL("expected a lookup failure");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::kPatternNotFound);
    }
}

TEST_CASE("catalogued encodings") {
    CHECK(lookup("jujizashi").rows.str() == "0110");
    CHECK(lookup("jujizashi").cols.str() == "011");
    CHECK(lookup("kakinohanazashi").rows.str() == "10100101");
    CHECK(lookup("sanju_kakinohanazashi").cols.str() == "01010");
    CHECK(lookup("igetazashi").rows.str() == "100001");
    CHECK(lookup("yokogushi").cols.absent());
    CHECK(lookup("tategushi").rows.absent());
    CHECK(lookup("yamagata").cols.str() == "01:5,10");
}

TEST_CASE("self-dual flags match the computed property") {
    for (const PatternEntry &e : list_all()) {
        INFO(e.key);
        CHECK(self_dual_shift(e.default_spec()).has_value() == e.self_dual);
    }
}

TEST_CASE("dual keys name the reverse side") {
    for (const PatternEntry &e : list_all()) {
        if (!e.dual_key || *e.dual_key == e.key) continue;
        INFO(e.key);
        const PatternEntry &other = lookup(*e.dual_key);
        CHECK(other.dual_key == e.key);
        if (e.rows.periodic_word() && e.cols.periodic_word()) {
            CHECK(dual_translate(e.rows.str(), e.cols.str(), other.rows.str(), other.cols.str()));
        } else {
            CHECK(dual(build_grid(e.default_spec())) == build_grid(other.default_spec()));
        }
    }
}

TEST_CASE("expected loop stats hold on the default windows") {
    for (const PatternEntry &e : list_all()) {
        INFO(e.key);
        const StitchGrid g = build_grid(e.default_spec());
        if (e.expected_stats) {
            const auto loop = largest_loop(g);
            REQUIRE(loop);
            CHECK(loop->stats == *e.expected_stats);
        }
        if (e.expected_dual_stats) {
            const auto loop = largest_loop(dual(g));
            REQUIRE(loop);
            CHECK(loop->stats == *e.expected_dual_stats);
        }
    }
}

TEST_CASE("peaked programs follow the window") {
    CHECK(midline_repeats(21) == 5);
    CHECK(midline_repeats(2) == 1);
    const PatternSpec s = lookup("yamagata_square").spec(40, 12);
    CHECK(s.cols.segments().front().repeats == 10u);
    CHECK(s.rows.segments().front().repeats == 3u);
    CHECK(s.width == 40);
}

TEST_CASE("mountain forms radiate from the centre") {
    auto smallest = [](std::string_view key) {
        std::set<int> areas;
        for (const Loop &l : analyze_loops(build_grid(lookup(key).spec(40, 40)))) areas.insert(l.stats.area);
        std::vector<int> out(areas.begin(), areas.end());
        out.resize(std::min<std::size_t>(out.size(), 3));
        return out;
    };
    // Alternate centred square numbers, starting from one square or one cross.
    CHECK(smallest("yamagata_square") == std::vector<int>{1, 13, 41});
    CHECK(smallest("yamagata_cross") == std::vector<int>{5, 25, 61});
}

TEST_CASE("table rows") {
    const auto rows = table1();
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].name == "kuchizashi");
    CHECK(rows[0].stats == LoopStats{4, 1, 1, 1});
    CHECK(rows[1].stats == LoopStats{12, 5, 3, 3});
    CHECK(rows[2].stats == LoopStats{20, 13, 5, 5});
    CHECK(rows[3].stats == LoopStats{28, 25, 7, 7});
    CHECK(rows[4].stats == LoopStats{36, 41, 9, 9});
    CHECK(rows[5].name == "igetazashi");
    CHECK(rows[5].stats == LoopStats{28, 17, 5, 5});
}
