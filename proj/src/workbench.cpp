#include "hopfwb/workbench.hpp"

#include "hopfwb/mutation.hpp"

namespace hopfwb {

const std::vector<std::string>& report_commands()
{
    static const std::vector<std::string> commands{"check-axioms", "check-hopf",  "check-anti-hopf",
                                                   "finiteness",   "dual",        "verify-thm1",
                                                   "verify-thm2",  "verify-thm3", "verify-all",
                                                   "self-test"};
    return commands;
}

namespace {

CheckReport axioms_report(const InputDocument& doc, const Bialgebroid& b)
{
    CheckReport r = check_bialgebroid(b);
    r.id = "axioms";
    for (const auto& m : doc.modules) {
        CheckReport mod = check_module(b.H(), m.module);
        mod.id = "module " + m.name;
        r.add(std::move(mod));
    }
    return r;
}

CheckReport finiteness_report(const Bialgebroid& b)
{
    auto r = CheckReport::group("finiteness");
    Finiteness fin = finiteness(b);
    auto leaf = [](std::string id, const ProjectivityResult& p) {
        if (p.projective())
            return CheckReport::pass(std::move(id), {{"dual_basis_size", p.basis->elements.size()}});
        return CheckReport::fail(std::move(id), {{"obstruction", p.obstruction}});
    };
    r.add(leaf("left_finite", fin.left));
    r.add(leaf("right_finite", fin.right));
    return r;
}

CheckReport dual_report(const Bialgebroid& b, const RunOptions& opts)
{
    auto r = CheckReport::group("dual");
    try {
        DualCarrier d = dual_space(b);
        r.add(CheckReport::pass("carrier", {{"dim", d.dim()}, {"dual_basis_size", d.basis_elements.size()}}));
        CheckReport bim = check_bimodule(b.R(), d.bim);
        bim.id = "carrier_bimodule";
        r.add(std::move(bim));
    } catch (const NotLeftFinite& e) {
        r.add(CheckReport::inapplicable("carrier", e.what()));
        return r;
    }
    if (!opts.reconstruct_dual)
        return r;
    Reconstruction rec = reconstruct_dual_algebra(b, opts.test_grid);
    if (!rec.resolved()) {
        CheckReport un = CheckReport::inapplicable("reconstruction", "no candidate convention validated");
        un.witness["candidates"] = rec.diagnostics;
        r.add(std::move(un));
        return r;
    }
    const Bialgebroid& c = std::get<Bialgebroid>(rec.result);
    auto g = CheckReport::group("reconstruction");
    g.add(CheckReport::pass("validated", {{"convention", rec.convention}, {"dim", c.dim_H()}}));
    FixtureFlags flags = compute_flags(b);
    bool anti = is_anti_hopf(c).hopf, hopf = is_hopf(c).hopf;
    if (flags.hopf && flags.left_finite)
        g.add(CheckReport::check("candidate_anti_hopf", anti));
    else
        g.add(CheckReport::inapplicable("candidate_anti_hopf", "B is not Hopf and left finite"));
    if (flags.hopf && flags.anti_hopf && flags.left_finite && flags.right_finite)
        g.add(CheckReport::check("candidate_hopf", hopf));
    else
        g.add(CheckReport::inapplicable("candidate_hopf", "candidate is only validated for Hopf and anti-Hopf inputs"));
    r.add(std::move(g));
    return r;
}

CheckReport body(const std::string& command, const InputDocument& doc, const Bialgebroid& b, const RunOptions& opts)
{
    PipelineOptions po;
    po.grid_size = opts.test_grid;
    if (command == "check-hopf")
        return hopf_report(is_hopf(b), "hopf");
    if (command == "check-anti-hopf")
        return hopf_report(is_anti_hopf(b), "anti_hopf");
    if (command == "finiteness")
        return finiteness_report(b);
    if (command == "dual")
        return dual_report(b, opts);
    if (command == "verify-thm1")
        return verify_thm1(b, po);
    if (command == "verify-thm2")
        return verify_thm2(b, po);
    if (command == "verify-thm3")
        return verify_thm3(b, po);
    if (command == "self-test")
        return mutation_self_test(b, opts.seed);
    if (command == "verify-all") {
        auto r = CheckReport::group("all");
        for (const char* c : {"check-hopf", "check-anti-hopf", "finiteness", "dual", "verify-thm1", "verify-thm2",
                              "verify-thm3"})
            r.add(body(c, doc, b, opts));
        return r;
    }
    throw std::invalid_argument("unknown command " + command);
}

} // namespace

CheckReport run_command(const std::string& command, const InputDocument& doc, const RunOptions& opts)
{
    auto report = CheckReport::group(command + " " + doc.name);
    Bialgebroid b = doc.bialgebroid();
    CheckReport axioms = axioms_report(doc, b);
    if (command == "check-axioms" || !axioms.passed()) {
        report.add(std::move(axioms));
        return report;
    }
    try {
        report.add(body(command, doc, b, opts));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        report.add(CheckReport::fail(command, {{"error", e.what()}}));
    }
    return report;
}

int exit_code(const CheckReport& r)
{
    switch (r.verdict) {
    case Verdict::Pass:
        return ExitPass;
    case Verdict::Fail:
        return ExitFail;
    case Verdict::Inapplicable:
        return ExitInapplicable;
    }
    return ExitFail;
}

RunResult run(const std::string& command, const InputDocument& doc, const RunOptions& opts)
{
    CheckReport r = run_command(command, doc, opts);
    return {exit_code(r), render_report(r, opts.format)};
}

} // namespace hopfwb
