#include "hopfwb/fixtures.hpp"
#include "hopfwb/workbench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hopfwb;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact checks for bialgebroids over noncommutative bases and their weak centralizers"};
    std::string command, fixture_name, input, format = "text";
    RunOptions opts;
    std::vector<std::string> commands = report_commands();
    commands.insert(commands.end(), {"export", "list-fixtures"});
    app.add_option("command", command, "What to run")->required()->check(CLI::IsMember(commands));
    app.add_option("--fixture", fixture_name, "Builtin fixture name");
    app.add_option("--input", input, "Bialgebroid document (JSON)");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--test-grid", opts.test_grid, "Number of braided test objects")->check(CLI::Range(1, 16));
    app.add_option("--seed", opts.seed, "Seed for the mutation self-test");
    app.add_flag("--reconstruct-dual", opts.reconstruct_dual, "Search an algebra structure on the skew dual");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ExitPass : ExitInputError;
    }
    opts.format = format == "json" ? ReportFormat::Json : ReportFormat::Text;

    if (command == "list-fixtures") {
        for (const auto& fx : fixture_library())
            std::cout << fx.name << "  " << to_json(fx.expected).dump() << "\n";
        return ExitPass;
    }
    if (fixture_name.empty() == input.empty()) {
        std::cerr << "error: give exactly one of --fixture NAME or --input FILE\n";
        return ExitInputError;
    }
    std::optional<InputDocument> doc;
    try {
        if (!fixture_name.empty())
            doc = document_of(fixture(fixture_name));
        else
            doc = parse_document(read_file(input));
        doc->bialgebroid();
    } catch (const std::out_of_range&) {
        std::cerr << "error: unknown fixture " << fixture_name << "\n";
        return ExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ExitInputError;
    }
    if (command == "export") {
        std::cout << render_document(*doc);
        return ExitPass;
    }
    RunResult r = run(command, *doc, opts);
    std::cout << r.output;
    return r.code;
}
