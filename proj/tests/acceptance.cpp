// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hitomezashi/error.hpp"
#include "hitomezashi/grid.hpp"
#include "hitomezashi/loops.hpp"
#include "hitomezashi/registry.hpp"
#include "hitomezashi/serialize.hpp"
#include "hitomezashi/tiles.hpp"
#include "hitomezashi/words.hpp"
#include "oracles.hpp"

using namespace hitomezashi;

namespace {

// Wall-clock limits in seconds.
constexpr double kTable1Limit = 1.0;
constexpr double kPellWordLimit = 1.0;
constexpr double kSequenceLimit = 1.0;
constexpr double kLoopTheoremLimit = 30.0;
constexpr double kSnowflakeLimit = 5.0;
constexpr double kConjectureLimit = 60.0;
constexpr double kDualityLimit = 10.0;
constexpr double kCentredSquareLimit = 1.0;
constexpr double kTwoColoringLimit = 5.0;

// Property-suite sizes.
constexpr int kLoopTheoremPairs = 240;
constexpr int kMaxWordLength = 8;
constexpr int kMaxWindow = 40;
constexpr int kDualityGrids = 100;
constexpr int kMaxOrder = 5;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why) {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const char *title, double limit, const std::function<void(Outcome &)> &body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= limit) o.fail("too slow");
    if (!o.ok) ++failures;
    std::printf("[%s] %d. %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, limit,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

std::string stats_str(const LoopStats &s) {
    return "(" + std::to_string(s.perimeter) + "," + std::to_string(s.area) + "," + std::to_string(s.height) + "," +
           std::to_string(s.width) + ")";
}

bool proper(const StitchGrid &g, const TwoColoring &c) {
    const auto segs = oracle::segments(g.width(), g.height(), g.row_bits(), g.col_bits());
    return oracle::coloring_is_proper(g.width(), g.height(), segs, c.colors);
}

} // namespace

int main() {
    criterion(1, "table of largest loops", kTable1Limit, [](Outcome &o) {
        const char *expected =
            "Pattern name                 Perimeter  Area Height Width\n"
            "kuchizashi                           4     1      1     1\n"
            "jūjizashi                           12     5      3     3\n"
            "kakinohanazashi                     20    13      5     5\n"
            "dual sanjū kakinohanazashi          28    25      7     7\n"
            "sanjū kakinohanazashi               36    41      9     9\n"
            "igetazashi                          28    17      5     5\n";
        const auto rows = table1();
        const LoopStats want[] = {{4, 1, 1, 1}, {12, 5, 3, 3}, {20, 13, 5, 5},
                                  {28, 25, 7, 7}, {36, 41, 9, 9}, {28, 17, 5, 5}};
        if (rows.size() != 6) return o.fail("expected six rows");
        for (std::size_t i = 0; i < 6; ++i) {
            if (!(rows[i].stats == want[i])) o.fail(rows[i].name + " got " + stats_str(rows[i].stats));
        }
        if (table1_text(rows) != expected) o.fail("text differs from the documented table");
    });

    criterion(2, "Pell word goldens", kPellWordLimit, [](Outcome &o) {
        const char *golden[] = {"1", "01", "10001", "011100110001"};
        for (unsigned n = 1; n <= 4; ++n) {
            if (pell_word(n).str() != golden[n - 1]) o.fail("u_" + std::to_string(n) + " = " + pell_word(n).str());
        }
        for (unsigned n = 0; n <= 12; ++n) {
            if (pell_word(n).size() != oracle::pell(n)) o.fail("|u_" + std::to_string(n) + "| != P_n");
        }
    });

    criterion(3, "Pell and Fibonacci sequences", kSequenceLimit, [](Outcome &o) {
        const std::uint64_t p[] = {0, 1, 2, 5, 12, 29, 70};
        for (unsigned n = 0; n <= 6; ++n)
            if (pell(n) != p[n]) o.fail("P_" + std::to_string(n));
        if (fibonacci(0) != 1 || fibonacci(1) != 1) o.fail("seeding F_0 = F_1 = 1");
        for (unsigned n = 0; n <= 30; ++n)
            if (fibonacci(n) != oracle::fib(n)) o.fail("F_" + std::to_string(n));
        for (unsigned n = 0; n <= 10; ++n)
            if (fibonacci(3 * n + 1) % 2 != 1) o.fail("F_{3n+1} even at n=" + std::to_string(n));
        for (unsigned k = 0; k <= 10; ++k)
            if (pell(2 * k + 1) % 4 != 1) o.fail("P_{2k+1} mod 4 at k=" + std::to_string(k));
    });

    criterion(4, "loop theorems on random patterns", kLoopTheoremLimit, [](Outcome &o) {
        std::mt19937 rng(20240417);
        std::uniform_int_distribution<int> side(1, kMaxWindow);
        std::size_t loops = 0;
        for (int t = 0; t < kLoopTheoremPairs; ++t) {
            const auto w = BinaryWord::parse(oracle::random_word(rng, 1, kMaxWordLength));
            const auto v = BinaryWord::parse(oracle::random_word(rng, 1, kMaxWordLength));
            const PatternSpec spec{"", WordProgram::fill(w), WordProgram::fill(v), side(rng), side(rng)};
            for (const Loop &l : analyze_loops(build_grid(spec))) {
                ++loops;
                if (!check_loop_theorems(l.stats).all()) {
                    o.fail("w=" + w.str() + " v=" + v.str() + " loop " + stats_str(l.stats));
                }
            }
        }
        if (loops == 0) o.fail("no loops sampled");
        if (o.ok) o.detail = std::to_string(kLoopTheoremPairs) + " pairs, " + std::to_string(loops) + " loops";
    });

    criterion(5, "snowflake construction", kSnowflakeLimit, [](Outcome &o) {
        const std::size_t areas[] = {1, 5, 29, 169, 985};
        for (int n = 1; n <= kMaxOrder; ++n) {
            const std::string tag = "order " + std::to_string(n) + ": ";
            const Snowflake s = trace_snowflake(SnowflakeOrder(n)); // throws if open
            if (!s.cycle.is_simple()) o.fail(tag + "not simple");
            if (!has_fourfold_symmetry(s.polyomino)) o.fail(tag + "no four-fold symmetry");
            if (s.polyomino.size() != areas[n - 1] || s.polyomino.size() != oracle::pell(2 * n - 1))
                o.fail(tag + "area " + std::to_string(s.polyomino.size()));
            if (static_cast<std::uint64_t>(s.stats.stitch_width()) != 2 * oracle::pell(static_cast<unsigned>(n)))
                o.fail(tag + "stitch width " + std::to_string(s.stats.stitch_width()));
        }
    });

    criterion(6, "persimmon loops are snowflakes", kConjectureLimit, [](Outcome &o) {
        for (int n = 1; n <= kMaxOrder; ++n) {
            if (!verify_conjecture(n)) o.fail("order " + std::to_string(n));
        }
        if (o.ok) o.detail = "orders 1-" + std::to_string(kMaxOrder) + ", window 116 at order 5";
    });

    criterion(7, "duality", kDualityLimit, [](Outcome &o) {
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> side(1, kMaxWindow);
        for (int t = 0; t < kDualityGrids; ++t) {
            const int w = side(rng);
            const int h = side(rng);
            const StitchGrid g(w, h, oracle::random_bits(rng, h + 1), oracle::random_bits(rng, w + 1));
            const StitchGrid d = dual(g);
            if (!(dual(d) == g)) o.fail("dual of dual differs");
            for (int y = 0; y <= h; ++y)
                for (int x = 0; x < w; ++x)
                    if (d.horizontal(x, y) == g.horizontal(x, y)) o.fail("horizontal not complemented");
            for (int x = 0; x <= w; ++x)
                for (int y = 0; y < h; ++y)
                    if (d.vertical(x, y) == g.vertical(x, y)) o.fail("vertical not complemented");
        }
        for (const PatternEntry &e : list_all()) {
            if (self_dual_shift(e.default_spec()).has_value() != e.self_dual) o.fail("flag of " + e.key);
        }
        for (int n = 1; n <= kMaxOrder; ++n) {
            const BinaryWord p = persimmon_word(n);
            const auto shift = is_self_dual(p, p);
            const auto brute = oracle::self_dual_shift(p.str(), p.str());
            if (!shift || !brute) o.fail("persimmon order " + std::to_string(n) + " not self-dual");
        }
    });

    criterion(8, "centred square areas", kCentredSquareLimit, [](Outcome &o) {
        const std::vector<std::int64_t> literal{1, 5, 13, 25, 41};
        if (!centred_square_check(literal)) o.fail("literal sequence");
        // Mouth, cross, persimmon, dual triple persimmon, triple persimmon.
        const auto rows = table1();
        std::vector<std::int64_t> measured;
        for (std::size_t i = 0; i < 5; ++i) measured.push_back(rows[i].stats.area);
        if (measured != literal || !centred_square_check(measured)) o.fail("measured motif areas");
    });

    criterion(9, "two-coloring of catalogued patterns", kTwoColoringLimit, [](Outcome &o) {
        for (const PatternEntry &e : list_all()) {
            const StitchGrid g = build_grid(e.default_spec());
            for (const StitchGrid &side : {g, dual(g)}) {
                try {
                    if (!proper(side, two_color(side))) o.fail(e.key + " coloring not proper");
                } catch (const Error &err) {
                    o.fail(e.key + ": " + err.what());
                }
            }
        }
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
