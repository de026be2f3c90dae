#include <doctest.h>

#include <json.hpp>

#include "hitomezashi/error.hpp"
#include "hitomezashi/registry.hpp"
#include "hitomezashi/serialize.hpp"

using namespace hitomezashi;
using nlohmann::json;

TEST_CASE("spec json round trip") {
    for (const PatternEntry &e : list_all()) {
        const PatternSpec s = e.default_spec();
        CHECK(spec_from_json(spec_to_json(s)) == s);
    }
    const json j = json::parse(spec_to_json(lookup("yamagata").default_spec()));
    CHECK(j["cols"][0]["repeats"] == 5);
    CHECK(j["cols"][1]["repeats"] == "fill");
    CHECK(j["rows"][0]["word"] == "01");
}

TEST_CASE("spec json errors") {
    auto kind_of = [](std::string_view text) {
        try {
            spec_from_json(text);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::kOverflow;
    };
    CHECK(kind_of("{") == ErrorKind::kParse);
    CHECK(kind_of("[]") == ErrorKind::kParse);
    CHECK(kind_of(R"({"width": 2})") == ErrorKind::kParse);
    CHECK(kind_of(R"({"width": 2, "height": 2, "rows": [{"word": "2"}]})") == ErrorKind::kParse);
    CHECK(kind_of(R"({"width": 2, "height": 2, "rows": [{"word": "1", "repeats": -1}]})") == ErrorKind::kParse);
    CHECK(kind_of(R"({"width": 0, "height": 2})") == ErrorKind::kInvalidSpec);
    const PatternSpec bare = spec_from_json(R"({"width": 3, "height": 2})");
    CHECK(bare.rows.absent());
    CHECK(bare.cols.absent());
}

TEST_CASE("analysis report") {
    const StitchGrid g = build_grid(lookup("jujizashi").default_spec());
    const AnalysisReport r = analyze_grid(g, "jujizashi");
    REQUIRE(r.largest);
    CHECK(r.loops[*r.largest].stats == LoopStats{12, 5, 3, 3});
    CHECK(r.theorems_hold);
    CHECK(r.fully_packed);
    REQUIRE(r.coloring);

    const json j = json::parse(report_json(r));
    CHECK(j["name"] == "jujizashi");
    CHECK(j["loops"].size() == r.loops.size());
    CHECK(j["two_coloring"]["rows"].size() == static_cast<std::size_t>(g.height()));
    CHECK(j["largest"] == *r.largest);

    const std::string text = report_text(r);
    CHECK(text.find("pattern: jujizashi") != std::string::npos);
    CHECK(text.find("VIOLATED") == std::string::npos);
}

TEST_CASE("registry and table documents") {
    const json all = json::parse(registry_json(list_all()));
    CHECK(all.size() == list_all().size());
    const json one = json::parse(entry_json(lookup("sanju_kakinohanazashi")));
    CHECK(one["expected_dual_stats"]["area"] == 25);
    CHECK(one["self_dual"] == false);
    CHECK(entry_text(lookup("kuchizashi")).find("mouth stitch") != std::string::npos);

    const auto rows = table1();
    const json t = json::parse(table1_json(rows));
    REQUIRE(t.size() == 6);
    CHECK(t[3]["perimeter"] == 28);
    CHECK(t[3]["area"] == 25);
}

TEST_CASE("snowflake and conjecture documents") {
    const Snowflake s = trace_snowflake(SnowflakeOrder(2));
    const json j = json::parse(snowflake_json(s));
    CHECK(j["order"] == 2);
    CHECK(j["boundary"] == "RLLRLLRLLRLL");
    CHECK(j["cells"].size() == 5);
    CHECK(j["stitch_width"] == 4);

    const auto results = verify_conjecture_up_to(2);
    const json c = json::parse(conjecture_json(results));
    REQUIRE(c.size() == 2);
    CHECK(c[1]["holds"] == true);
    CHECK(conjecture_text(results).find("true") != std::string::npos);
}
