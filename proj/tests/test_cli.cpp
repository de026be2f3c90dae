#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hitomezashi::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string &name) {
    std::ifstream in(std::filesystem::path(HITOMEZASHI_GOLDEN_DIR) / name, std::ios::binary);
    REQUIRE_MESSAGE(in, "missing golden file " << name);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void check_golden(std::vector<std::string> args, const std::string &name) {
    const Result r = run(std::move(args));
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == golden(name));
}

} // namespace

TEST_CASE("golden outputs") {
    check_golden({"table1"}, "table1.txt");
    check_golden({"self-dual", "--rows", "0110", "--cols", "011"}, "self_dual_juji.txt");
    check_golden({"self-dual", "--pattern", "kuchizashi"}, "self_dual_kuchi.txt");
    check_golden({"registry"}, "registry.txt");
    check_golden({"registry", "sanju_kakinohanazashi"}, "registry_sanju.txt");
    check_golden({"render", "--pattern", "jujizashi", "--width", "8", "--height", "6"}, "render_juji.txt");
    check_golden({"dual", "--rows", "01:2,1", "--cols", "011", "--width", "6", "--height", "5"}, "dual_program.txt");
    check_golden({"analyze", "--pattern", "kakinohanazashi"}, "analyze_kaki.txt");
    check_golden({"analyze", "--rows", "1", "--cols", "1", "--width", "3", "--height", "3", "--json"},
                 "analyze_kuchi.json");
    check_golden({"snowflake", "--order", "3"}, "snowflake_3.txt");
    check_golden({"persimmon", "--order", "2", "--periods", "1"}, "persimmon_2.txt");
    check_golden({"verify-conjecture", "--max-order", "4"}, "verify_4.txt");
}

TEST_CASE("svg output goes to the named file") {
    const auto path = std::filesystem::temp_directory_path() / "hitomezashi_cli_test.svg";
    std::filesystem::remove(path);
    const Result r = run({"render", "--pattern", "kuchizashi", "--svg", path.string(), "--two-color"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const std::string svg{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<rect") != std::string::npos);
    std::filesystem::remove(path);

    const Result to_stdout = run({"snowflake", "--order", "2", "--svg", "-"});
    CHECK(to_stdout.code == 0);
    CHECK(to_stdout.out.find("<polygon") != std::string::npos);
    CHECK(to_stdout.out.find("order:") == std::string::npos);
}

TEST_CASE("spec files") {
    const auto path = std::filesystem::temp_directory_path() / "hitomezashi_cli_spec.json";
    {
        std::ofstream f(path);
        f << R"({"name": "x", "width": 4, "height": 4, "rows": [{"word": "1"}], "cols": [{"word": "1"}]})";
    }
    const Result r = run({"self-dual", "--spec", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "(1, 1)\n");
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"render", "--rows", "012", "--cols", "1"}).code == 2);
    CHECK(run({"render", "--rows", "01", "--pattern", "kuchizashi"}).code == 2);
    CHECK(run({"snowflake"}).code == 2);
    CHECK(run({"verify-conjecture", "--max-order", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const Result missing = run({"registry", "nope"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("no pattern named") != std::string::npos);
    CHECK(run({"snowflake", "--order", "0"}).code == 1);
    CHECK(run({"render", "--rows", "01:1", "--cols", "1", "--width", "4", "--height", "4"}).code == 1);
    CHECK(run({"render", "--rows", "1", "--cols", "1", "--width", "0"}).code == 1);
}
