#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfwb/fixtures.hpp"

using namespace hopfwb;

TEST_CASE("all builtin fixtures satisfy the axioms")
{
    for (const auto& b : builtin_fixtures()) {
        CAPTURE(b.name());
        auto rep = check_bialgebroid(b);
        CHECK(rep.passed());
        CHECK(rep.count(Verdict::Fail) == 0);
        CHECK(check_bialgebroid(coopposite(b)).passed());
    }
}

TEST_CASE("single-entry comultiplication mutations are detected")
{
    Bialgebroid re2 = fixture("RE2");
    const TensorProduct& hh = re2.hh();
    std::size_t tried = 0;
    for (std::size_t r = 0; r < re2.delta().rows(); r += 3)
        for (std::size_t c = 0; c < re2.delta().cols(); ++c) {
            Mat d = re2.delta();
            d(r, c) = re2.field().add(d(r, c), 1);
            // mutations that vanish in H (x)_R H change nothing
            if ((hh.proj() * (d - re2.delta())).is_zero())
                continue;
            ++tried;
            Bialgebroid bad("bad", re2.R(), re2.H(), re2.s(), re2.t(), d, re2.eps());
            auto rep = check_bialgebroid(bad);
            CAPTURE(r);
            CAPTURE(c);
            CHECK(rep.failed());
            bool structural = rep.find("takeuchi_centrality")->failed() || rep.find("coassociativity")->failed() ||
                              rep.find("comultiplication_bilinear")->failed() || rep.find("counit_left")->failed();
            CHECK(structural);
        }
    CHECK(tried > 0);
}

TEST_CASE("other mutations")
{
    Bialgebroid c2 = fixture("C2Q");
    Mat eps = c2.eps();
    eps(0, 1) = 2;
    Bialgebroid bad_eps("bad", c2.R(), c2.H(), c2.s(), c2.t(), c2.delta(), eps);
    CHECK(check_bialgebroid(bad_eps).failed());

    Bialgebroid ut = fixture("UT2E");
    Mat t = ut.t();
    Mat s = ut.s();
    Bialgebroid swapped("bad", ut.R(), ut.H(), t, s, ut.delta(), ut.eps());
    CHECK(check_bialgebroid(swapped).failed());
}

TEST_CASE("module tensor products")
{
    Bialgebroid c2 = fixture("C2Q");
    const Field q = c2.field();
    HModule sign{1, {Mat::identity(q, 1), Mat(q, 1, 1, {-1})}};
    CHECK(check_module(c2.H(), sign).passed());
    HTensor ss = module_tensor(c2, sign, sign);
    CHECK(ss.module.dim == 1);
    CHECK(ss.module.action[1] == Mat::identity(q, 1));

    Bialgebroid re2 = fixture("RE2");
    HModule reg = regular_module(re2);
    HTensor rr = module_tensor(re2, reg, reg);
    CHECK(rr.module.dim == 8);
    CHECK(check_module(re2.H(), rr.module).passed());

    for (const auto& b : builtin_fixtures()) {
        CAPTURE(b.name());
        HModule h = regular_module(b);
        HModule u = unit_module(b);
        CHECK(check_module(b.H(), u).passed());
        CHECK(check_monoidal(b, h, u, h).passed());
    }
    CHECK(check_monoidal(re2, reg, reg, unit_module(re2)).passed());
}

TEST_CASE("unit module actions")
{
    Bialgebroid c2 = fixture("C2Q");
    CHECK(unit_module(c2).action[1] == Mat::identity(c2.field(), 1));
    Bialgebroid idem = fixture("IDEM");
    CHECK(unit_module(idem).action[1] == Mat::identity(idem.field(), 1));

    Bialgebroid re2 = fixture("RE2");
    const Algebra& r = re2.R();
    HModule u = unit_module(re2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c) {
                Mat abc = r.product(r.product(r.basis(a), r.basis(b)), r.basis(c));
                CHECK(u.action[a * 2 + b].col(c) == abc);
            }
}

TEST_CASE("coopposite and restriction")
{
    for (const auto& b : builtin_fixtures()) {
        Bialgebroid cc = coopposite(coopposite(b));
        CHECK(cc.name() == b.name());
        CHECK(cc.R() == b.R());
        CHECK(cc.s() == b.s());
        CHECK(cc.t() == b.t());
        CHECK(cc.delta() == b.delta());
        CHECK(cc.eps() == b.eps());
        CHECK(restrict(b, unit_module(b)) == regular_bimodule(b.R()));
        CHECK(restrict(b, regular_module(b)) == b.h_bimodule());
    }
    Bialgebroid c2 = fixture("C2Q");
    CHECK(coopposite(c2).delta() == c2.delta());
    CHECK(coopposite(fixture("RE2")).R() == opposite(dual_numbers(Field::rationals())));
}
