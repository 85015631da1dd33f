#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfwb/fixtures.hpp"
#include "hopfwb/workbench.hpp"

#include <fstream>
#include <sstream>

using namespace hopfwb;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string error_of(const std::string& text)
{
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("documents round-trip for every fixture")
{
    for (const auto& b : builtin_fixtures()) {
        CAPTURE(b.name());
        InputDocument doc = document_of(b, {{"regular", regular_module(b)}, {"unit", unit_module(b)}});
        std::string text = render_document(doc);
        InputDocument back = parse_document(text);
        CHECK(back == doc);
        CHECK(render_document(back) == text);
    }
}

TEST_CASE("shipped fixture documents match the compiled fixtures")
{
    for (const auto& b : builtin_fixtures()) {
        CAPTURE(b.name());
        std::string text = slurp(std::string(HOPFWB_SOURCE_DIR) + "/data/fixtures/" + b.name() + ".json");
        REQUIRE_FALSE(text.empty());
        CHECK(parse_document(text) == document_of(b));
    }
}

TEST_CASE("schema violations name the offending field")
{
    std::string good = render_document(document_of(fixture("C2F2")));
    auto edited = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        return s.replace(pos, from.size(), to);
    };
    // Fractions without an inverse in the field.
    std::string half = error_of(edited("\"unit\": [\"1\",\"0\"]", "\"unit\": [\"1/2\",\"0\"]"));
    CHECK(half.find("H.unit[0]") != std::string::npos);
    CHECK(half.find("F_2") != std::string::npos);
    // Out-of-range structure constant triple.
    std::string range = error_of(edited("[1,1,0,\"1\"]", "[1,7,0,\"1\"]"));
    CHECK(range.find("H.mul[3]") != std::string::npos);
    CHECK(range.find("(1, 7, 0)") != std::string::npos);
    CHECK(error_of(edited("hopfwb-bialgebroid/1", "v0")).find("format") != std::string::npos);
    CHECK(error_of(edited("\"F_2\"", "\"F_4\"")).find("field") != std::string::npos);
    CHECK(error_of(edited("[0,0,\"1\"]", "[0,0,1]")).find("strings") != std::string::npos);
    CHECK(error_of("{").find("syntax") != std::string::npos);
    CHECK(error_of("{\"format\": \"hopfwb-bialgebroid/1\"}").find("name") != std::string::npos);
}

TEST_CASE("report rendering")
{
    CheckReport empty = CheckReport::group("empty");
    std::string text = render_report(empty, ReportFormat::Text);
    CHECK(text == "# empty: pass (1 pass, 0 fail, 0 inapplicable)\n");

    auto r = CheckReport::group("root");
    r.add(CheckReport::pass("ok"));
    r.add(CheckReport::fail("bad", {{"matrix", Mat(Field::rationals(), 1, 2, {1, -1}).to_string()}}));
    r.children[0].millis = 12.5;
    nlohmann::json j = nlohmann::json::parse(render_report(r, ReportFormat::Json));
    CHECK(j["format"] == std::string(report_format));
    CHECK(j["report"]["verdict"] == "fail");
    CHECK(j["report"]["children"][1]["witness"].contains("matrix"));
    CHECK_FALSE(j.dump().find("millis") != std::string::npos);
    CHECK(render_report(r, ReportFormat::Text).find("fail  bad  {\"matrix\"") != std::string::npos);
}

TEST_CASE("exit codes")
{
    RunOptions opts;
    CHECK(run("check-hopf", document_of(fixture("C2Q")), opts).code == ExitPass);
    RunResult idem = run("check-hopf", document_of(fixture("IDEM")), opts);
    CHECK(idem.code == ExitFail);
    CHECK(idem.output.find("\"rank\":3") != std::string::npos);
    CHECK(idem.output.find("\"domain_dim\":4") != std::string::npos);
    CHECK(run("verify-thm1", document_of(fixture("IDEM")), opts).code == ExitInapplicable);

    // A document that parses but violates the axioms stops before the pipeline.
    Bialgebroid c2 = fixture("C2Q");
    Mat eps = c2.eps();
    eps.set(0, 1, 2);
    InputDocument bad = document_of(Bialgebroid("bad", c2.R(), c2.H(), c2.s(), c2.t(), c2.delta(), eps));
    CheckReport r = run_command("verify-thm1", bad, opts);
    CHECK(r.failed());
    CHECK(r.find("axioms"));
    CHECK_FALSE(r.find("thm1"));
}

TEST_CASE("json reports are deterministic")
{
    RunOptions opts;
    opts.format = ReportFormat::Json;
    opts.seed = 11;
    InputDocument doc = document_of(fixture("RE2"));
    for (const char* c : {"self-test", "verify-thm1", "dual"}) {
        CAPTURE(c);
        CHECK(run(c, doc, opts).output == run(c, doc, opts).output);
    }
    RunOptions other = opts;
    other.seed = 12;
    CHECK(run("self-test", doc, opts).output != run("self-test", doc, other).output);
}
