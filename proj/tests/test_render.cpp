#include <doctest.h>

#include <random>
#include <regex>

#include "hitomezashi/error.hpp"
#include "hitomezashi/registry.hpp"
#include "hitomezashi/render.hpp"
#include "oracles.hpp"

using namespace hitomezashi;

namespace {

std::size_t count(const std::string &hay, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("ascii layout") {
    const StitchGrid g(2, 1, Bits{1, 0}, Bits{1, 0, 1});
    // Top line is vertex row 1, bottom line is row 0.
    CHECK(render_ascii(g) == "   _ \n|_  |\n");
    CHECK(render_ascii(g, true) == "+ +_+\n|_+ |\n");
}

TEST_CASE("ascii marks match the segments") {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const int w = 1 + static_cast<int>(rng() % 9);
        const int h = 1 + static_cast<int>(rng() % 9);
        const StitchGrid g(w, h, oracle::random_bits(rng, h + 1), oracle::random_bits(rng, w + 1));
        const std::string art = render_ascii(g);
        CHECK(count(art, "\n") == static_cast<std::size_t>(h + 1));
        CHECK(count(art, "_") + count(art, "|") == g.present_segment_count());
    }
}

TEST_CASE("svg has one line per stitch") {
    const StitchGrid g = build_grid(lookup("jujizashi").default_spec());
    const std::string svg = render_svg(g);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count(svg, "<line ") == g.present_segment_count());
    CHECK(count(svg, "<rect ") == 0);
    CHECK(svg.find("viewBox=\"0 0 480 640\"") != std::string::npos);

    RenderOptions opts;
    opts.fill_two_coloring = true;
    opts.show_grid = true;
    const std::string filled = render_svg(g, opts);
    CHECK(count(filled, "<rect ") == static_cast<std::size_t>(g.width() * g.height()));
    CHECK(count(filled, "<line ") == g.present_segment_count());
    CHECK(count(filled, "<path ") == 1);
}

TEST_CASE("svg flips the y axis") {
    const StitchGrid g(1, 1, Bits{1, 0}, std::nullopt);
    RenderOptions opts;
    opts.cell_size = 10;
    // Row 0 at the bottom of a 10 px tall image.
    CHECK(render_svg(g, opts).find("<line x1=\"0\" y1=\"10\" x2=\"10\" y2=\"10\"/>") != std::string::npos);
}

TEST_CASE("svg overlays") {
    const StitchGrid g = build_grid(lookup("kuchizashi").spec(3, 3));
    const auto loop = largest_loop(g);
    REQUIRE(loop);
    CHECK(count(render_svg(g, {}, loop->cycle), "<polygon ") == 1);
    CHECK(count(render_svg(g, {}, two_color(g)), "<rect ") == 9);

    const std::string outline = render_cycle_svg(loop->cycle);
    CHECK(count(outline, "<polygon ") == 1);
    CHECK(outline.find("viewBox=\"0 0 20 20\"") != std::string::npos);
}

TEST_CASE("render options are validated") {
    RenderOptions opts;
    opts.cell_size = 0;
    CHECK_THROWS_AS(render_svg(StitchGrid(1, 1, std::nullopt, std::nullopt), opts), Error);
    opts.cell_size = 4;
    opts.stroke_width = 0;
    CHECK_THROWS_AS(opts.validate(), Error);
}
