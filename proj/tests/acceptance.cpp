// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "hopfwb/fixtures.hpp"
#include "hopfwb/mutation.hpp"
#include "hopfwb/workbench.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace hopfwb;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, double budget_seconds, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0 && secs > budget_seconds)
        o.require(false, "over time budget of " + std::to_string(static_cast<int>(budget_seconds)) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " (" << timing << ")";
    if (!o.detail.empty())
        std::cout << "  [" << o.detail << "]";
    std::cout << std::endl;
    failures += o.ok ? 0 : 1;
}

bool has_failing_witness(const CheckReport& r)
{
    if (r.children.empty())
        return r.failed() && !r.witness.is_null();
    for (const auto& c : r.children)
        if (has_failing_witness(c))
            return true;
    return false;
}

struct Shell {
    int code;
    std::string out;
};

Shell shell(const std::string& cmd)
{
    Shell s{-1, ""};
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p)
        return s;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        s.out.append(buf, n);
    int status = pclose(p);
    s.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return s;
}

std::string cli() { return HOPFWB_CLI; }

// Independent count of f : H -> R with f(t(a) e_g) = f(e_g) a.
std::size_t skew_dual_dim_oracle(const Bialgebroid& b)
{
    const std::size_t dr = b.dim_R(), dh = b.dim_H();
    Mat eqs(b.field(), dr * dh * dr, dr * dh);
    for (std::size_t a = 0; a < dr; ++a)
        for (std::size_t g = 0; g < dh; ++g) {
            Mat tg = b.H().product(b.t_of(a), b.H().basis(g));
            for (std::size_t out = 0; out < dr; ++out) {
                std::size_t row = (a * dh + g) * dr + out;
                for (std::size_t k = 0; k < dh; ++k)
                    eqs(row, out * dh + k) += tg(k, 0);
                for (std::size_t m = 0; m < dr; ++m)
                    eqs(row, m * dh + g) -= b.R().constant(m, a, out);
            }
        }
    return eqs.cols() - rank(eqs);
}

Outcome axiom_soundness()
{
    Outcome o;
    std::size_t detected = 0;
    for (const auto& b : builtin_fixtures()) {
        o.require(check_bialgebroid(b).passed(), b.name() + " axioms");
        std::size_t i = 0;
        for (const auto& m : seeded_mutations(b, 20240 + b.dim_H(), 20)) {
            bool caught = has_failing_witness(check_bialgebroid(mutate(b, m)));
            o.require(caught, b.name() + " mutation " + std::to_string(i) + " (" + m.part + ") undetected");
            detected += caught;
            ++i;
        }
    }
    o.detail = o.ok ? std::to_string(detected) + "/120 mutations detected" : o.detail;
    return o;
}

Outcome hopf_decisions()
{
    Outcome o;
    for (const char* name : {"C2Q", "C2F2", "H4Q", "RE2", "UT2E"}) {
        Bialgebroid b = fixture(name);
        HopfVerdict v = is_hopf(b);
        o.require(v.hopf && v.translation && check_translation_map(b, *v.translation).passed(),
                  std::string(name) + " Hopf with translation map");
    }
    HopfVerdict idem = is_hopf(fixture("IDEM"));
    o.require(!idem.hopf && idem.rank == 3 && idem.codomain_dim == 4, "IDEM Galois rank 3 of 4");
    for (const char* name : {"C2Q", "H4Q"})
        o.require(is_anti_hopf(fixture(name)).hopf, std::string(name) + " anti-Hopf");
    return o;
}

Outcome definition_equivalence()
{
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& b : builtin_fixtures()) {
        auto family = hom_test_family(b);
        bool all = true;
        for (const auto& x : family)
            for (const auto& y : family) {
                all &= check_hom_preservation(b, x, y, Side::Right).passed();
                ++pairs;
            }
        o.require(all == is_hopf(b).hopf, b.name() + " preservation disagrees with Galois verdict");
        if (b.name() == "IDEM")
            o.require(!all, "IDEM negative case");
    }
    if (o.ok)
        o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome hom_objects()
{
    Outcome o;
    std::size_t triples = 0;
    for (const char* name : {"C2Q", "H4Q", "RE2"}) {
        Bialgebroid b = fixture(name);
        Target t(b, FunctorKind::Restrict);
        RigidWitness reg = regular_witness(b);
        DualResult unit = left_dual_module(b, unit_module(b), DualScope::AllModules);
        o.require(unit.rigid(), std::string(name) + " unit dual");
        auto grid = braided_test_grid(t, 3);
        o.require(grid.size() >= 3, std::string(name) + " grid size");
        for (const auto& x : grid)
            for (const auto& y : grid) {
                std::string id = std::string(name) + " [" + x.label + "," + y.label + "]";
                HomObject h = hom_object_in_WLC(t, x, y, reg);
                CheckReport hb = check_half_braiding(t, h.obj);
                for (const char* leaf : {"hexagon", "equivariance", "unit_law"})
                    o.require(hb.find(leaf) && hb.find(leaf)->passed(), id + " " + leaf);
                o.require(verify_adjunction_morphisms(t, x, y, h, reg).passed(), id + " adjunction");
                InnerHom ih = inner_hom_bimod(b.R(), x.x.bim, y.x.bim, Side::Left);
                o.require(h.obj.x.bim == ih.carrier && h.hom.underlying == ih.maps.basis, id + " carrier");
                Mat at_unit = hom_half_braiding(t, x, y, h.hom, *unit.witness);
                o.require(at_unit == induce_component(t, h.obj, unit.witness->object), id + " T=unit");
                triples += 2;
            }
    }
    if (o.ok)
        o.detail = std::to_string(triples) + " triples";
    return o;
}

Outcome extension_to_trivial()
{
    Outcome o;
    Bialgebroid b = fixture("C2F2");
    Target t(b, FunctorKind::Restrict);
    HModule trivial = unit_module(b);
    o.require(!dual_basis(b.H(), trivial).projective(), "trivial module is not projective");
    auto grid = braided_test_grid(t, 3);
    std::vector<HalfBraidedObject> objects = grid;
    RigidWitness reg = regular_witness(b);
    for (const auto& x : grid)
        for (const auto& y : grid)
            objects.push_back(hom_object_in_WLC(t, x, y, reg).obj);
    for (const auto& obj : objects) {
        Extension e = extend_half_braiding(t, obj, trivial);
        for (const char* leaf :
             {"presentation_independent", "natural_from_regular", "natural_endomorphisms", "natural_to_unit"})
            o.require(e.report.find(leaf) && e.report.find(leaf)->passed(), obj.label + " " + leaf);
        // Generators 1 and 1 + 1 (the same vector written twice) against the default.
        Mat two(t.field(), 1, 2, {1, 1});
        o.require(induce_component_with(t, obj, trivial, two) == e.c, obj.label + " second presentation");
    }
    if (o.ok)
        o.detail = std::to_string(objects.size()) + " objects";
    return o;
}

Outcome pipelines()
{
    Outcome o;
    for (const char* name : {"C2Q", "H4Q", "RE2", "UT2E"})
        o.require(verify_thm1(fixture(name)).passed(), std::string("thm1 ") + name);
    for (const char* name : {"C2Q", "H4Q"}) {
        o.require(verify_thm2(fixture(name)).passed(), std::string("thm2 ") + name);
        CheckReport t3 = verify_thm3(fixture(name));
        const CheckReport* c1 = t3.find("left_inner_homs");
        const CheckReport* c2 = t3.find("right_inner_homs");
        o.require(c1 && c1->passed() && c2 && c2->passed(), std::string("thm3 ") + name);
    }
    Bialgebroid idem = fixture("IDEM");
    for (const CheckReport& r : {verify_thm1(idem), verify_thm2(idem), verify_thm3(idem)})
        o.require(r.verdict == Verdict::Inapplicable, "IDEM gated");
    return o;
}

Outcome rigidity()
{
    Outcome o;
    for (const auto& b : builtin_fixtures()) {
        if (!is_hopf(b).hopf)
            continue;
        DualResult d = left_dual_module(b, regular_module(b));
        o.require(d.rigid(), b.name() + " regular rigid");
        if (d.rigid())
            o.require(check_triangle_identities(b.R(), restrict(b, d.witness->object), restrict(b, d.witness->dual),
                                                d.witness->ev, d.witness->db)
                          .passed(),
                      b.name() + " triangles in bimodules");
    }
    Bialgebroid c2f = fixture("C2F2");
    DualResult proj = left_dual_module(c2f, unit_module(c2f));
    o.require(!proj.rigid(), "C2F2 trivial module NotRigid among projectives");
    o.require(left_dual_module(c2f, unit_module(c2f), DualScope::AllModules).rigid(),
              "C2F2 trivial module is the (self-dual) unit in all modules");
    return o;
}

Outcome dual_carrier()
{
    Outcome o;
    // Frozen from the constraint oracle.
    const std::map<std::string, std::size_t> golden{{"C2Q", 2}, {"C2F2", 2}, {"H4Q", 4},
                                                    {"RE2", 4}, {"UT2E", 9}, {"IDEM", 2}};
    std::string dims;
    for (const auto& b : builtin_fixtures()) {
        std::size_t d = dual_space(b).dim();
        o.require(d == golden.at(b.name()), b.name() + " dim " + std::to_string(d));
        o.require(skew_dual_dim_oracle(b) == golden.at(b.name()), b.name() + " oracle");
        dims += (dims.empty() ? "" : ", ") + b.name() + " " + std::to_string(d);
    }
    if (o.ok)
        o.detail = dims;
    return o;
}

Outcome reconstruction()
{
    Outcome o;
    Bialgebroid b = fixture("C2Q");
    Reconstruction rec = reconstruct_dual_algebra(b);
    if (!rec.resolved()) {
        o.require(false, "C2Q unresolved: " + rec.diagnostics.dump());
        return o;
    }
    const Bialgebroid& c = std::get<Bialgebroid>(rec.result);
    o.require(is_anti_hopf(c).hopf, "candidate anti-Hopf");
    // Classical dual of Q[C2]: functions on C2 in the basis dual to {e, g}.
    const Field q = b.field();
    DualCarrier d = dual_space(b);
    Mat m(q, 2, 2);
    for (std::size_t p = 0; p < 2; ++p)
        m.set_block(0, p, d.as_map(Mat::unit_vector(q, 2, p), 1, 2).transpose());
    Mat mi = invert(m);
    Mat fmul(q, 2, 4), fdelta(q, 4, 2);
    for (std::size_t x = 0; x < 2; ++x) {
        fmul.set(x, x * 2 + x, 1);
        for (std::size_t y = 0; y < 2; ++y)
            fdelta.set(y * 2 + (x + y) % 2, x, 1);
    }
    Mat delta = kron(m, m) * c.delta() * mi;
    o.require(m * c.H().mul() * kron(mi, mi) == fmul, "product");
    o.require(m * c.H().unit() == Mat(q, 2, 1, {1, 1}), "unit");
    o.require(delta == fdelta, "coproduct");
    o.require(c.eps() * mi == Mat(q, 1, 2, {1, 0}), "counit");
    for (const auto& other : builtin_fixtures()) {
        Reconstruction r = reconstruct_dual_algebra(other);
        o.require(r.diagnostics.size() == 16, other.name() + " diagnostics per candidate");
    }
    if (o.ok)
        o.detail = "C2Q resolved: " + rec.convention;
    return o;
}

Outcome cli_criteria()
{
    Outcome o;
    RunOptions opts;
    opts.format = ReportFormat::Json;
    for (const auto& b : builtin_fixtures()) {
        InputDocument doc = document_of(b, {{"regular", regular_module(b)}});
        o.require(parse_document(render_document(doc)) == doc, b.name() + " in-process round trip");

        Shell exported = shell(cli() + " export --fixture " + b.name());
        o.require(exported.code == ExitPass && parse_document(exported.out) == document_of(b), b.name() + " export");
        std::string path = "acceptance_" + b.name() + ".json";
        std::ofstream(path) << exported.out;
        Shell axioms = shell(cli() + " check-axioms --format json --input " + path);
        o.require(axioms.code == ExitPass, b.name() + " check-axioms via document");
        std::remove(path.c_str());

        FixtureFlags flags = compute_flags(b);
        o.require(shell(cli() + " check-hopf --fixture " + b.name()).code == (flags.hopf ? ExitPass : ExitFail),
                  b.name() + " check-hopf exit code");
        std::string self = cli() + " self-test --format json --seed 7 --fixture " + b.name();
        Shell s1 = shell(self), s2 = shell(self);
        o.require(s1.code == ExitPass && s1.out == s2.out && !s1.out.empty(), b.name() + " deterministic self-test");
        InputDocument small = document_of(b);
        o.require(run("dual", small, opts).output == run("dual", small, opts).output, b.name() + " deterministic dual");
    }
    Shell all = shell(cli() + " verify-all --format json --fixture C2Q");
    o.require(all.code == ExitPass, "verify-all C2Q exit 0");
    o.require(all.out == shell(cli() + " verify-all --format json --fixture C2Q").out, "verify-all deterministic");
    Shell idem = shell(cli() + " check-hopf --format json --fixture IDEM");
    o.require(idem.code == ExitFail && idem.out.find("\"rank\": 3") != std::string::npos, "check-hopf IDEM exit 1 rank 3");
    o.require(shell(cli() + " verify-thm1 --fixture IDEM").code == ExitInapplicable, "inapplicable exit 2");
    {
        std::ofstream("acceptance_malformed.json") << "{\"format\": \"hopfwb-bialgebroid/1\", \"name\": 3}";
    }
    o.require(shell(cli() + " check-axioms --input acceptance_malformed.json").code == ExitInputError, "malformed exit 3");
    std::remove("acceptance_malformed.json");
    o.require(shell(cli() + " check-axioms --fixture NOPE").code == ExitInputError, "unknown fixture exit 3");
    return o;
}

} // namespace

int main()
{
    criterion(1, "axiom soundness and seeded mutations", 10, axiom_soundness);
    criterion(2, "Hopf and anti-Hopf decisions", 10, hopf_decisions);
    criterion(3, "Galois verdict equals right hom preservation on the test family", 0, definition_equivalence);
    criterion(4, "hom objects in WLC(restrict): unique, half-braided, adjunction morphisms", 60, hom_objects);
    criterion(5, "extension to the non-projective trivial module over C2F2", 0, extension_to_trivial);
    criterion(6, "verify-thm1, verify-thm2, verify-thm3 pipelines", 180, pipelines);
    criterion(7, "rigidity of regular modules and the projective-scope NotRigid case", 0, rigidity);
    criterion(8, "skew dual carrier dimensions", 0, dual_carrier);
    criterion(9, "algebra-level reconstruction of the skew dual", 0, reconstruction);
    criterion(10, "CLI round trip, determinism and exit codes", 0, cli_criteria);
    return failures == 0 ? 0 : 1;
}
