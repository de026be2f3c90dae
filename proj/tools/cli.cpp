#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hitomezashi/error.hpp"
#include "hitomezashi/grid.hpp"
#include "hitomezashi/loops.hpp"
#include "hitomezashi/registry.hpp"
#include "hitomezashi/render.hpp"
#include "hitomezashi/serialize.hpp"
#include "hitomezashi/tiles.hpp"

namespace hitomezashi::cli {

namespace {

// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PatternArgs {
    std::string rows;
    std::string cols;
    std::optional<int> width;
    std::optional<int> height;
    std::string pattern;
    std::string spec_file;
};

void add_pattern_flags(CLI::App *cmd, PatternArgs &a) {
    cmd->add_option("--rows", a.rows, "Row program: word or word:count segments, comma-separated; 'e' for none");
    cmd->add_option("--cols", a.cols, "Column program, same grammar as --rows");
    cmd->add_option("--width", a.width, "Window width in cells");
    cmd->add_option("--height", a.height, "Window height in cells");
    cmd->add_option("--pattern", a.pattern, "Registry key (see `registry`)");
    cmd->add_option("--spec", a.spec_file, "Pattern spec JSON file");
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::kParse, fmt::format("cannot read '{}'", path));
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw std::runtime_error(fmt::format("cannot write '{}'", path));
}

PatternSpec resolve_spec(const PatternArgs &a, int default_side) {
    const int sources = static_cast<int>(!a.pattern.empty()) + static_cast<int>(!a.spec_file.empty()) +
                        static_cast<int>(!a.rows.empty() || !a.cols.empty());
    if (sources != 1) throw UsageError("give exactly one of --pattern, --spec, or --rows/--cols");

    PatternSpec spec;
    if (!a.pattern.empty()) {
        const PatternEntry &e = lookup(a.pattern);
        spec = e.spec(a.width.value_or(e.default_width), a.height.value_or(e.default_height));
    } else if (!a.spec_file.empty()) {
        spec = spec_from_json(read_file(a.spec_file));
        if (a.width) spec.width = *a.width;
        if (a.height) spec.height = *a.height;
    } else {
        spec.rows = WordProgram::parse(a.rows);
        spec.cols = WordProgram::parse(a.cols);
        spec.width = a.width.value_or(default_side);
        spec.height = a.height.value_or(default_side);
    }
    spec.validate();
    return spec;
}

struct RenderArgs {
    std::string svg;
    bool ascii = false;
    bool grid = false;
    bool two_color = false;
    bool highlight = false;
    int cell_size = 20;
};

void add_render_flags(CLI::App *cmd, RenderArgs &r) {
    cmd->add_option("--svg", r.svg, "Write SVG to this file ('-' for stdout)");
    cmd->add_flag("--ascii", r.ascii, "Print ASCII art (the default without --svg)");
    cmd->add_flag("--grid", r.grid, "Show the underlying lattice");
    cmd->add_flag("--two-color", r.two_color, "Fill regions with a proper two-coloring (SVG)");
    cmd->add_flag("--highlight-largest", r.highlight, "Shade the largest closed loop (SVG)");
    cmd->add_option("--cell-size", r.cell_size, "SVG cell size in pixels");
}

void emit_grid(const StitchGrid &g, const RenderArgs &r, std::ostream &out) {
    if (!r.svg.empty()) {
        RenderOptions opts;
        opts.cell_size = r.cell_size;
        opts.show_grid = r.grid;
        opts.fill_two_coloring = r.two_color;
        Overlay overlay;
        if (r.highlight) {
            if (auto loop = largest_loop(g)) overlay = std::move(loop->cycle);
        }
        write_output(r.svg, render_svg(g, opts, overlay), out);
    }
    if (r.svg.empty() || r.ascii) out << render_ascii(g, r.grid);
}

std::string shift_text(const std::optional<Shift> &s) {
    return s ? fmt::format("({}, {})\n", s->dx, s->dy) : std::string("none\n");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generate, analyse and render hitomezashi stitch patterns.", "hitomezashi"};
    app.require_subcommand(1, 1);

    PatternArgs pat;
    RenderArgs ren;
    bool json = false;
    bool reverse_side = false;
    std::string out_file;
    std::string key;
    int order = 1;
    int periods = 2;
    int max_order = 5;

    auto *render_cmd = app.add_subcommand("render", "Render a pattern");
    add_pattern_flags(render_cmd, pat);
    add_render_flags(render_cmd, ren);

    auto *dual_cmd = app.add_subcommand("dual", "Render the reverse side of a pattern");
    add_pattern_flags(dual_cmd, pat);
    add_render_flags(dual_cmd, ren);

    auto *analyze_cmd = app.add_subcommand("analyze", "Loop report: stats, theorem checks, two-coloring");
    add_pattern_flags(analyze_cmd, pat);
    analyze_cmd->add_flag("--dual", reverse_side, "Analyse the reverse side");
    analyze_cmd->add_flag("--json", json, "Machine-readable output");
    analyze_cmd->add_option("--out", out_file, "Write the report to this file");

    auto *self_dual_cmd = app.add_subcommand("self-dual", "Print the self-duality shift or 'none'");
    add_pattern_flags(self_dual_cmd, pat);

    auto *registry_cmd = app.add_subcommand("registry", "List catalogue entries or show one");
    registry_cmd->add_option("key", key, "Entry key");
    registry_cmd->add_flag("--json", json, "Machine-readable output");

    auto *table1_cmd = app.add_subcommand("table1", "Largest loops of the looped traditional patterns");
    table1_cmd->add_flag("--json", json, "Machine-readable output");

    auto *snowflake_cmd = app.add_subcommand("snowflake", "Fibonacci snowflake of a given order");
    snowflake_cmd->add_option("--order", order, "Order, 1 or more")->required();
    snowflake_cmd->add_option("--svg", ren.svg, "Write SVG to this file ('-' for stdout)");
    snowflake_cmd->add_flag("--json", json, "Machine-readable output");

    auto *persimmon_cmd = app.add_subcommand("persimmon", "Pell persimmon pattern of a given order");
    persimmon_cmd->add_option("--order", order, "Order, 1 or more")->required();
    persimmon_cmd->add_option("--periods", periods, "Periods of the encoding word per window side");
    persimmon_cmd->add_option("--svg", ren.svg, "Write SVG to this file ('-' for stdout)");
    persimmon_cmd->add_flag("--two-color", ren.two_color, "Fill regions with a proper two-coloring (SVG)");
    persimmon_cmd->add_flag("--highlight-largest", ren.highlight, "Shade the largest closed loop (SVG)");

    auto *verify_cmd = app.add_subcommand("verify-conjecture", "Compare persimmon loops with snowflakes");
    verify_cmd->add_option("--max-order", max_order, "Check orders 1..n")->required()->check(CLI::Range(1, 12));
    verify_cmd->add_flag("--json", json, "Machine-readable output");

    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (render_cmd->parsed() || dual_cmd->parsed()) {
            StitchGrid g = build_grid(resolve_spec(pat, 16));
            if (dual_cmd->parsed()) g = dual(g);
            emit_grid(g, ren, out);
        } else if (analyze_cmd->parsed()) {
            const PatternSpec spec = resolve_spec(pat, 16);
            StitchGrid g = build_grid(spec);
            if (reverse_side) g = dual(g);
            const AnalysisReport report = analyze_grid(g, spec.name);
            const std::string text = json ? report_json(report) : report_text(report);
            write_output(out_file.empty() ? "-" : out_file, text, out);
        } else if (self_dual_cmd->parsed()) {
            out << shift_text(self_dual_shift(resolve_spec(pat, 16)));
        } else if (registry_cmd->parsed()) {
            if (key.empty()) {
                out << (json ? registry_json(list_all()) : registry_text(list_all()));
            } else {
                const PatternEntry &e = lookup(key);
                out << (json ? entry_json(e) : entry_text(e));
            }
        } else if (table1_cmd->parsed()) {
            const auto rows = table1();
            out << (json ? table1_json(rows) : table1_text(rows));
        } else if (snowflake_cmd->parsed()) {
            const Snowflake s = trace_snowflake(SnowflakeOrder(order));
            if (!ren.svg.empty()) write_output(ren.svg, render_cycle_svg(s.cycle), out);
            if (ren.svg != "-") out << (json ? snowflake_json(s) : snowflake_text(s));
        } else if (persimmon_cmd->parsed()) {
            PatternSpec spec = persimmon_spec(order, periods);
            if (!ren.svg.empty()) {
                emit_grid(build_grid(spec), ren, out);
            }
            if (ren.svg != "-") {
                out << spec_to_json(spec);
                if (ren.svg.empty()) out << render_ascii(build_grid(spec));
            }
        } else if (verify_cmd->parsed()) {
            const auto results = verify_conjecture_up_to(max_order);
            out << (json ? conjecture_json(results) : conjecture_text(results));
            const bool all = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.holds; });
            return all ? 0 : 1;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::kParse ? 2 : 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace hitomezashi::cli
