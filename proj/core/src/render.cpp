#include "hitomezashi/render.hpp"

#include <algorithm>
#include <iterator>

#include <fmt/format.h>

#include "hitomezashi/error.hpp"

namespace hitomezashi {

void RenderOptions::validate() const {
    if (cell_size < 1) throw Error(ErrorKind::kInvalidSpec, fmt::format("cell size {} < 1", cell_size));
    if (!(stroke_width > 0.0)) throw Error(ErrorKind::kInvalidSpec, fmt::format("stroke width {} <= 0", stroke_width));
}

std::string render_ascii(const StitchGrid &g, bool show_grid) {
    std::string out;
    const auto line_len = static_cast<std::size_t>(2 * g.width() + 1);
    out.reserve((line_len + 1) * static_cast<std::size_t>(g.height() + 1));
    for (int y = g.height(); y >= 0; --y) {
        for (int x = 0; x <= g.width(); ++x) {
            if (y < g.height() && g.vertical(x, y)) {
                out += '|';
            } else {
                out += show_grid ? '+' : ' ';
            }
            if (x < g.width()) out += g.horizontal(x, y) ? '_' : ' ';
        }
        out += '\n';
    }
    return out;
}

namespace {

void svg_header(std::string &out, int view_w, int view_h) {
    fmt::format_to(std::back_inserter(out),
                   "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
                   "viewBox=\"0 0 {} {}\">\n",
                   view_w, view_h, view_w, view_h);
}

} // namespace

std::string render_svg(const StitchGrid &g, const RenderOptions &opts, const Overlay &overlay) {
    opts.validate();
    const int cs = opts.cell_size;
    const int w = g.width() * cs;
    const int h = g.height() * cs;
    // Lattice y grows upward; SVG y grows downward.
    auto sx = [cs](int x) { return x * cs; };
    auto sy = [cs, &g](int y) { return (g.height() - y) * cs; };

    std::string out;
    auto put = std::back_inserter(out);
    svg_header(out, w, h);

    std::optional<TwoColoring> coloring;
    if (const auto *c = std::get_if<TwoColoring>(&overlay)) {
        coloring = *c;
    } else if (opts.fill_two_coloring) {
        coloring = two_color(g);
    }
    if (coloring) {
        out += "<g stroke=\"none\">\n";
        for (int y = 0; y < g.height(); ++y) {
            for (int x = 0; x < g.width(); ++x) {
                fmt::format_to(put, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n", sx(x),
                               sy(y + 1), cs, cs,
                               coloring->color(x, y) ? opts.palette.fill1 : opts.palette.fill0);
            }
        }
        out += "</g>\n";
    }

    if (const auto *cycle = std::get_if<LatticeCycle>(&overlay)) {
        out += "<polygon points=\"";
        bool first = true;
        for (const Point p : cycle->vertices()) {
            fmt::format_to(put, "{}{},{}", first ? "" : " ", sx(p.x), sy(p.y));
            first = false;
        }
        fmt::format_to(put, "\" fill=\"{}\" fill-opacity=\"0.35\" stroke=\"none\"/>\n", opts.palette.highlight);
    }

    if (opts.show_grid) {
        out += "<path stroke=\"#dddddd\" stroke-width=\"1\" fill=\"none\" d=\"";
        for (int x = 0; x <= g.width(); ++x) fmt::format_to(put, "M{} 0V{}", sx(x), h);
        for (int y = 0; y <= g.height(); ++y) fmt::format_to(put, "M0 {}H{}", sy(y), w);
        out += "\"/>\n";
    }

    fmt::format_to(put, "<g stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\">\n", opts.palette.stroke,
                   opts.stroke_width);
    for (int y = 0; y <= g.height(); ++y) {
        for (int x = 0; x < g.width(); ++x) {
            if (g.horizontal(x, y))
                fmt::format_to(put, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", sx(x), sy(y), sx(x + 1), sy(y));
        }
    }
    for (int x = 0; x <= g.width(); ++x) {
        for (int y = 0; y < g.height(); ++y) {
            if (g.vertical(x, y))
                fmt::format_to(put, "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", sx(x), sy(y), sx(x), sy(y + 1));
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_cycle_svg(const LatticeCycle &c, const RenderOptions &opts) {
    opts.validate();
    const auto &v = c.vertices();
    const auto [min_x, max_x] = std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.x < b.x; });
    const auto [min_y, max_y] = std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.y < b.y; });
    const int cs = opts.cell_size;
    const int w = (max_x->x - min_x->x) * cs;
    const int h = (max_y->y - min_y->y) * cs;

    std::string out;
    auto put = std::back_inserter(out);
    svg_header(out, w, h);
    out += "<polygon points=\"";
    bool first = true;
    for (const Point p : v) {
        fmt::format_to(put, "{}{},{}", first ? "" : " ", (p.x - min_x->x) * cs, (max_y->y - p.y) * cs);
        first = false;
    }
    fmt::format_to(put, "\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\"/>\n",
                   opts.palette.fill1, opts.palette.stroke, opts.stroke_width);
    out += "</svg>\n";
    return out;
}

} // namespace hitomezashi
