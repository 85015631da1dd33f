#include "hopfwb/pipelines.hpp"

#include "hopfwb/fixtures.hpp"

#include <exception>

namespace hopfwb {

std::vector<Fixture> fixture_library()
{
    const FixtureFlags all{true, true, true, true};
    std::vector<Fixture> out;
    for (auto& b : builtin_fixtures()) {
        FixtureFlags flags = b.name() == "IDEM" ? FixtureFlags{false, false, true, true} : all;
        std::string name = b.name();
        out.push_back({std::move(name), std::move(b), flags});
    }
    return out;
}

FixtureFlags compute_flags(const Bialgebroid& b)
{
    Finiteness fin = finiteness(b);
    return {is_hopf(b).hopf, is_anti_hopf(b).hopf, fin.left.projective(), fin.right.projective()};
}

nlohmann::json to_json(const FixtureFlags& f)
{
    return {{"hopf", f.hopf}, {"anti_hopf", f.anti_hopf}, {"left_finite", f.left_finite}, {"right_finite", f.right_finite}};
}

Mat DualCarrier::as_map(const Mat& v, std::size_t dim_r, std::size_t dim_h) const
{
    return Mat::from_vec(maps.basis * v, dim_r, dim_h);
}

namespace {

// Operator f -> f * m on row-major vectorised (rows x m.rows()) matrices.
Mat precompose_vec(std::size_t rows, const Mat& m)
{
    return kron(Mat::identity(m.field(), rows), m.transpose());
}

} // namespace

DualCarrier dual_space(const Bialgebroid& b)
{
    Finiteness fin = finiteness(b);
    if (!fin.left.projective())
        throw NotLeftFinite("H is not finitely generated projective over t(R^op): " + fin.left.obstruction);
    const Algebra& r = b.R();
    const Algebra& h = b.H();
    DualCarrier d;
    std::vector<Mat> on_h, on_r;
    for (std::size_t a = 0; a < b.dim_R(); ++a) {
        on_h.push_back(b.left_t(a));
        on_r.push_back(r.right_mul(a));
    }
    d.maps = intertwiners(b.dim_H(), b.dim_R(), on_h, on_r);
    d.bim.dim = d.maps.dim();
    for (std::size_t a = 0; a < b.dim_R(); ++a) {
        Mat by_s = precompose_vec(b.dim_R(), h.right_mul_by(b.s_of(a)));
        Mat by_t = precompose_vec(b.dim_R(), h.right_mul_by(b.t_of(a)));
        d.bim.left.push_back(d.maps.coordinates(by_s * d.maps.basis));
        d.bim.right.push_back(d.maps.coordinates(by_t * d.maps.basis));
    }
    const DualBasis& db = *fin.left.basis;
    d.basis_elements = db.elements;
    std::vector<Mat> coords;
    for (const auto& phi : db.functionals)
        coords.push_back(d.maps.coordinates(phi.vec()));
    d.basis_functionals = coords.empty() ? Mat(b.field(), d.dim(), 0) : hstack(coords);
    return d;
}

CheckReport compare_carriers(std::string id, const Mat& maps_a, const std::vector<Mat>& actions_a, const Mat& maps_b,
                             const std::vector<Mat>& actions_b)
{
    auto report = CheckReport::group(std::move(id));
    std::size_t ra = rank(maps_a), rb = rank(maps_b);
    std::size_t joint = rank(hstack(std::vector<Mat>{maps_a, maps_b}));
    bool same = maps_a.cols() == maps_b.cols() && ra == maps_a.cols() && rb == maps_b.cols() && joint == ra;
    report.add(CheckReport::check("same_maps", same,
                                  {{"dim_a", maps_a.cols()}, {"dim_b", maps_b.cols()}, {"joint_rank", joint}}));
    if (!same)
        return report;
    Mat transport = solve_injective(maps_b, maps_a);
    for (std::size_t i = 0; i < actions_a.size(); ++i)
        if (transport * actions_a[i] != actions_b[i] * transport) {
            report.add(CheckReport::fail("actions_agree", {{"action", i}, {"transport", transport.to_string()}}));
            return report;
        }
    report.add(CheckReport::pass("actions_agree"));
    return report;
}

namespace {

std::vector<Mat> concat(const std::vector<Mat>& a, const std::vector<Mat>& c)
{
    std::vector<Mat> out = a;
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

CheckReport gated(std::string id, const FixtureFlags& flags, std::string reason)
{
    CheckReport r = CheckReport::inapplicable(std::move(id), std::move(reason));
    r.witness["hypotheses"] = to_json(flags);
    return r;
}

CheckReport hypotheses(const FixtureFlags& f, bool need_anti, bool need_right)
{
    auto r = CheckReport::group("hypotheses");
    r.add(CheckReport::check("hopf", f.hopf));
    if (need_anti)
        r.add(CheckReport::check("anti_hopf", f.anti_hopf));
    r.add(CheckReport::check("left_finite", f.left_finite));
    if (need_right)
        r.add(CheckReport::check("right_finite", f.right_finite));
    return r;
}

std::string triple_id(const HalfBraidedObject& x, const HalfBraidedObject& y, std::string_view t)
{
    return "X=" + x.label + " Y=" + y.label + " T=" + std::string(t);
}

CheckReport renamed(CheckReport r, std::string id)
{
    r.id = std::move(id);
    return r;
}

CheckReport error_leaf(std::string id, const std::exception& e)
{
    return CheckReport::fail(std::move(id), {{"error", e.what()}});
}

CheckReport bimodule_carrier_equal(const Algebra& r, const HomObject& h, const HalfBraidedObject& x,
                                   const HalfBraidedObject& y)
{
    InnerHom ih = inner_hom_bimod(r, x.x.bim, y.x.bim, Side::Left);
    bool ok = h.obj.x.bim == ih.carrier && h.hom.underlying == ih.maps.basis;
    return CheckReport::check("carrier_is_bimodule_hom", ok, {{"wlc_dim", h.obj.x.dim}, {"bimodule_dim", ih.carrier.dim}});
}

CheckReport hmodule_carrier_equal(const Bialgebroid& b, const HomObject& h, const HalfBraidedObject& x,
                                  const HalfBraidedObject& y)
{
    InnerHomH ih = inner_hom_H(b, x.x.h, y.x.h, Side::Left);
    bool ok = h.obj.x.h.dim == ih.carrier.dim && h.obj.x.h.action == ih.carrier.action;
    return CheckReport::check("carrier_is_H_inner_hom", ok, {{"wlc_dim", h.obj.x.dim}, {"hom_H_dim", ih.carrier.dim}});
}

// The checks shared by all pipelines at T = H for one pair.
CheckReport pair_at_regular(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y,
                            const RigidWitness& reg, const std::vector<HalfBraidedObject>& grid,
                            const PipelineOptions& opts, std::string id, std::optional<HomObject>& out)
{
    auto r = CheckReport::group(std::move(id));
    try {
        out = hom_object_in_WLC(t, x, y, reg, HomBraidingOptions{opts.zigzag_cross_check});
    } catch (const std::exception& e) {
        r.add(error_leaf("unique_solution", e));
        return r;
    }
    r.add(CheckReport::pass("unique_solution", {{"carrier_dim", out->obj.x.dim}}));
    r.add(renamed(check_half_braiding(t, out->obj), "half_braiding"));
    r.add(renamed(verify_adjunction_morphisms(t, x, y, *out, reg), "adjunction_morphisms"));
    if (opts.wlc_adjunction)
        r.add(renamed(check_wlc_adjunction(t, x, y, *out, grid), "wlc_adjunction"));
    return r;
}

// Component at the unit module from its (non-projective-scope) dual, against
// the component induced from T = H.
CheckReport pair_at_unit(const Target& t, const HalfBraidedObject& x, const HalfBraidedObject& y, const HomObject& h,
                         const RigidWitness& unit_dual, const PipelineOptions& opts, std::string id)
{
    auto r = CheckReport::group(std::move(id));
    Mat c;
    try {
        c = hom_half_braiding(t, x, y, h.hom, unit_dual, HomBraidingOptions{opts.zigzag_cross_check});
    } catch (const std::exception& e) {
        r.add(error_leaf("unique_solution", e));
        return r;
    }
    r.add(CheckReport::pass("unique_solution"));
    Mat induced = induce_component(t, h.obj, unit_dual.object);
    r.add(CheckReport::check("agrees_with_induced", c == induced,
                             {{"solved", c.to_string()}, {"induced", induced.to_string()}}));
    return r;
}

} // namespace

CheckReport verify_thm1(const Bialgebroid& b, const PipelineOptions& opts)
{
    FixtureFlags flags = compute_flags(b);
    if (!flags.hopf || !flags.left_finite)
        return gated("thm1", flags, "requires a Hopf, left finite bialgebroid");
    auto report = CheckReport::group("thm1");
    report.add(hypotheses(flags, false, false));
    Target t(b, FunctorKind::Restrict);
    RigidWitness reg = regular_witness(b);
    DualResult unit_dual = left_dual_module(b, unit_module(b), DualScope::AllModules);
    auto grid = braided_test_grid(t, opts.grid_size);
    for (const auto& x : grid)
        for (const auto& y : grid) {
            std::optional<HomObject> h;
            CheckReport at_h = pair_at_regular(t, x, y, reg, grid, opts, triple_id(x, y, "H"), h);
            if (h)
                at_h.add(bimodule_carrier_equal(b.R(), *h, x, y));
            report.add(std::move(at_h));
            if (h && unit_dual.rigid())
                report.add(pair_at_unit(t, x, y, *h, *unit_dual.witness, opts, triple_id(x, y, "unit")));
        }
    return report;
}

namespace {

// Mirrors the grid into the coopposite target and checks the round trip.
std::vector<HalfBraidedObject> mirrored_grid(const Target& t, const Target& cop,
                                             const std::vector<HalfBraidedObject>& grid, CheckReport& report)
{
    auto r = CheckReport::group("mirror");
    std::vector<HalfBraidedObject> out;
    for (const auto& x : grid) {
        try {
            HalfBraidedObject m = mirror_object(t, cop, x);
            r.add(renamed(check_half_braiding(cop, m), x.label + "_half_braiding"));
            HalfBraidedObject back = mirror_object(cop, t, m);
            r.add(CheckReport::check(x.label + "_round_trip", back.c == x.c && back.x.bim == x.x.bim));
            out.push_back(std::move(m));
        } catch (const std::exception& e) {
            r.add(error_leaf(x.label + "_invertible", e));
        }
    }
    report.add(std::move(r));
    return out;
}

} // namespace

CheckReport verify_thm2(const Bialgebroid& b, const PipelineOptions& opts)
{
    FixtureFlags flags = compute_flags(b);
    if (!flags.hopf || !flags.anti_hopf || !flags.left_finite || !flags.right_finite)
        return gated("thm2", flags, "requires a Hopf and anti-Hopf bialgebroid, finite on both sides");
    auto report = CheckReport::group("thm2");
    report.add(hypotheses(flags, true, true));
    Target t(b, FunctorKind::Restrict);
    Target cop = coopposite_target(t);
    const Bialgebroid& bc = cop.bialgebroid();
    RigidWitness reg = regular_witness(b);
    RigidWitness reg_cop = regular_witness(bc);
    auto family = hom_test_family(b);
    auto family_cop = hom_test_family(bc);
    auto grid = braided_test_grid(t, opts.grid_size);

    // Left and right centers agree on the grid.
    auto center = CheckReport::group("left_equals_right_center");
    for (const auto& x : grid) {
        center.add(renamed(is_central(t, x, family), x.label + "_central"));
        try {
            Mat inv = invert_braiding_at_dual(t, x, reg);
            Mat direct = invert(induce_component(t, x, reg.dual));
            center.add(CheckReport::check(x.label + "_inverse_at_dual", inv == direct,
                                          {{"zigzag", inv.to_string()}, {"direct", direct.to_string()}}));
        } catch (const std::exception& e) {
            center.add(error_leaf(x.label + "_inverse_at_dual", e));
        }
    }
    report.add(std::move(center));
    auto mirrored = mirrored_grid(t, cop, grid, report);
    if (mirrored.size() != grid.size())
        return report;

    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const auto &x = grid[i], &y = grid[j];
            const auto &mx = mirrored[i], &my = mirrored[j];
            std::optional<HomObject> h;
            CheckReport r = pair_at_regular(cop, mx, my, reg_cop, mirrored, opts, triple_id(x, y, "H"), h);
            if (h) {
                r.add(bimodule_carrier_equal(bc.R(), *h, mx, my));
                // Right inner hom of B: cop left actions are B right actions.
                InnerHom ih = inner_hom_bimod(b.R(), x.x.bim, y.x.bim, Side::Right);
                r.add(compare_carriers("is_right_inner_hom", h->hom.underlying,
                                       concat(h->obj.x.bim.left, h->obj.x.bim.right), ih.maps.basis,
                                       concat(ih.carrier.right, ih.carrier.left)));
                r.add(renamed(is_central(cop, h->obj, family_cop), "hom_central"));
            }
            report.add(std::move(r));
        }
    return report;
}

namespace {

CheckReport thm3_clause1(const Bialgebroid& b, const PipelineOptions& opts)
{
    auto report = CheckReport::group("left_inner_homs");
    Target t(b, FunctorKind::Identity);
    RigidWitness reg = regular_witness(b);
    auto grid = braided_test_grid(t, opts.grid_size);
    for (const auto& x : grid)
        for (const auto& y : grid) {
            std::optional<HomObject> h;
            CheckReport r = pair_at_regular(t, x, y, reg, grid, opts, triple_id(x, y, "H"), h);
            if (h)
                r.add(hmodule_carrier_equal(b, *h, x, y));
            r.add(renamed(check_hom_preservation(b, x.x.h, y.x.h, Side::Left), "preserved_to_bimodules"));
            report.add(std::move(r));
        }
    return report;
}

CheckReport thm3_clause2(const Bialgebroid& b, const PipelineOptions& opts)
{
    auto report = CheckReport::group("right_inner_homs");
    Target t(b, FunctorKind::Identity);
    Target cop = coopposite_target(t);
    const Bialgebroid& bc = cop.bialgebroid();
    RigidWitness reg_cop = regular_witness(bc);
    auto grid = braided_test_grid(t, opts.grid_size);
    auto mirrored = mirrored_grid(t, cop, grid, report);
    if (mirrored.size() != grid.size())
        return report;
    const Field& f = b.field();
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const auto &x = grid[i], &y = grid[j];
            const auto &mx = mirrored[i], &my = mirrored[j];
            std::optional<HomObject> h;
            CheckReport r = pair_at_regular(cop, mx, my, reg_cop, mirrored, opts, triple_id(x, y, "H"), h);
            if (h) {
                r.add(hmodule_carrier_equal(bc, *h, mx, my));
                InnerHomH ih = inner_hom_H(b, x.x.h, y.x.h, Side::Right);
                std::vector<Mat> maps;
                for (std::size_t k = 0; k < ih.carrier.dim; ++k)
                    maps.push_back(ih.underlying(b, Mat::unit_vector(f, ih.carrier.dim, k)).vec());
                Mat basis = maps.empty() ? Mat(f, x.x.dim * y.x.dim, 0) : hstack(maps);
                r.add(compare_carriers("is_right_inner_hom", h->hom.underlying, h->obj.x.h.action, basis,
                                       ih.carrier.action));
            }
            r.add(renamed(check_hom_preservation(b, x.x.h, y.x.h, Side::Right), "preserved_to_bimodules"));
            report.add(std::move(r));
        }
    return report;
}

} // namespace

CheckReport verify_thm3(const Bialgebroid& b, const PipelineOptions& opts)
{
    FixtureFlags flags = compute_flags(b);
    if (!flags.hopf || !flags.anti_hopf || !flags.left_finite)
        return gated("thm3", flags, "requires a Hopf and anti-Hopf, left finite bialgebroid");
    auto report = CheckReport::group("thm3");
    report.add(hypotheses(flags, true, false));
    report.add(thm3_clause1(b, opts));
    if (flags.right_finite)
        report.add(thm3_clause2(b, opts));
    else
        report.add(CheckReport::inapplicable("right_inner_homs", "H is not right finite"));
    return report;
}

namespace {

// (phi * psi)(h) = outer(ins(inner(h_a)) h_b) or outer(h_b ins(inner(h_a)))
// summed over Delta(h) = h_(1) (x) h_(2), with {a, b} = {1, 2}.
struct Convention {
    bool inner_is_first = true; // inner functional is phi
    bool inner_leg_first = true; // inner functional sees h_(1)
    bool insert_s = false;
    bool multiply_left = true;

    std::string name() const
    {
        return std::string("inner=") + (inner_is_first ? "phi" : "psi") + " leg=" + (inner_leg_first ? "1" : "2") +
               " insert=" + (insert_s ? "s" : "t") + " side=" + (multiply_left ? "left" : "right");
    }
};

struct Candidate {
    const Bialgebroid& b;
    const DualCarrier& d;
    Convention conv;
    std::vector<Mat> functionals; // dim R x dim H

    // The pairing of f_p (x) f_q with H (x)_k H, as a dim R x dim H^2 matrix.
    Mat pairing(const Convention& k, std::size_t p, std::size_t q) const
    {
        const Algebra& h = b.H();
        const std::size_t n = b.dim_H();
        const Mat& inner = functionals[k.inner_is_first ? p : q];
        const Mat& outer = functionals[k.inner_is_first ? q : p];
        const Mat& ins = k.insert_s ? b.s() : b.t();
        Mat out(b.field(), b.dim_R(), n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t a = k.inner_leg_first ? i : j, o = k.inner_leg_first ? j : i;
                Mat v = ins * inner.col(a);
                Mat w = k.multiply_left ? h.product(v, h.basis(o)) : h.product(h.basis(o), v);
                out.set_block(0, i * n + j, outer * w);
            }
        return out;
    }
};

struct Attempt {
    std::optional<Bialgebroid> result;
    nlohmann::json diagnostics;
};

Mat carrier_vector(const DualCarrier& d, const Mat& map)
{
    return d.maps.coordinates(map.vec());
}

// rho(f_p) : X -> X, x -> f_p(h_i) . x_i where c(x (x) 1) = h_i (x) x_i.
std::vector<Mat> module_of(const Target& t, const HalfBraidedObject& x, const std::vector<Mat>& functionals)
{
    const Bialgebroid& b = t.bialgebroid();
    const Field& f = t.field();
    TObject fh = t.regular();
    TTensor xh = t.tensor(x.x, fh), hx = t.tensor(fh, x.x);
    Mat ins = xh.carrier.proj() * kron(Mat::identity(f, x.x.dim), b.H().unit());
    Mat core = hx.carrier.sec() * x.c * ins;
    std::vector<Mat> out;
    for (const auto& phi : functionals) {
        Mat e(f, x.x.dim, b.dim_H() * x.x.dim);
        for (std::size_t hb = 0; hb < b.dim_H(); ++hb) {
            Mat block(f, x.x.dim, x.x.dim);
            for (std::size_t r = 0; r < b.dim_R(); ++r)
                if (phi(r, hb) != 0)
                    block += scale(x.x.bim.left[r], phi(r, hb));
            e.set_block(0, hb * x.x.dim, block);
        }
        out.push_back(e * core);
    }
    return out;
}

Mat combine(const std::vector<Mat>& rho, const Mat& coords)
{
    Mat out(rho[0].field(), rho[0].rows(), rho[0].cols());
    for (std::size_t k = 0; k < rho.size(); ++k)
        if (coords(k, 0) != 0)
            out += scale(rho[k], coords(k, 0));
    return out;
}

nlohmann::json match_grid(const Target& t, const std::vector<HalfBraidedObject>& grid, const Bialgebroid& cand,
                          const std::vector<Mat>& functionals)
{
    const Field& f = t.field();
    const std::size_t n = functionals.size();
    std::vector<std::vector<Mat>> rhos;
    for (const auto& x : grid) {
        std::vector<Mat> rho = module_of(t, x, functionals);
        if (combine(rho, cand.H().unit()) != Mat::identity(f, x.x.dim))
            return {{"object", x.label}, {"failed", "unit acts as identity"}};
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (rho[p] * rho[q] != combine(rho, cand.H().mul().col(p * n + q)))
                    return {{"object", x.label}, {"failed", "action is multiplicative"}, {"p", p}, {"q", q}};
        for (std::size_t a = 0; a < t.bialgebroid().dim_R(); ++a)
            if (combine(rho, cand.s().col(a)) != x.x.bim.left[a] || combine(rho, cand.t().col(a)) != x.x.bim.right[a])
                return {{"object", x.label}, {"failed", "underlying bimodule"}};
        rhos.push_back(std::move(rho));
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j) {
            std::size_t wlc = wlc_morphisms(t, grid[i], grid[j]).dim();
            std::size_t mod = intertwiners(grid[i].x.dim, grid[j].x.dim, rhos[i], rhos[j]).dim();
            if (wlc != mod)
                return {{"failed", "morphisms"}, {"x", grid[i].label}, {"y", grid[j].label}, {"wlc", wlc}, {"modules", mod}};
        }
    return nullptr;
}

Attempt try_candidate(const Target& t, const std::vector<HalfBraidedObject>& grid, const Candidate& c)
{
    const Bialgebroid& b = c.b;
    const DualCarrier& d = c.d;
    const Field& f = b.field();
    const std::size_t n = d.dim(), dr = b.dim_R(), dh = b.dim_H();
    auto fail = [&](std::string stage, nlohmann::json detail = nullptr) {
        return Attempt{std::nullopt, {{"convention", c.conv.name()}, {"failed", stage}, {"detail", detail}}};
    };

    Mat mul(f, n, n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Mat pair = c.pairing(c.conv, p, q);
            if (!b.hh().pres.kills_relations(pair))
                return fail("product well defined", {{"p", p}, {"q", q}});
            Mat prod = pair * b.delta();
            if (!d.maps.contains(prod.vec()))
                return fail("product lands in the carrier", {{"p", p}, {"q", q}});
            mul.set_block(0, p * n + q, carrier_vector(d, prod));
        }

    // Two-sided unit: sum_p u_p m(p, q) = e_q = sum_p u_p m(q, p).
    Mat lhs(f, 2 * n * n, n), rhs(f, 2 * n * n, 1);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t k = 0; k < n; ++k) {
                lhs.set(q * n + k, p, mul(k, p * n + q));
                lhs.set(n * n + q * n + k, p, mul(k, q * n + p));
            }
    for (std::size_t q = 0; q < n; ++q) {
        rhs.set(q * n + q, 0, 1);
        rhs.set(n * n + q * n + q, 0, 1);
    }
    auto unit = try_solve(lhs, rhs);
    if (!unit)
        return fail("unit");
    Algebra alg(unit->particular, mul);
    CheckReport ar = check_algebra(alg);
    if (!ar.passed())
        return fail("associative algebra");

    // Source and target candidates a.eps, eps(- s(a)), eps(- t(a)).
    const Mat& eps = b.eps();
    const char* insertion_names[] = {"a.eps", "eps(-s(a))", "eps(-t(a))"};
    std::vector<std::optional<Mat>> insertions;
    for (int kind = 0; kind < 3; ++kind) {
        Mat m(f, n, dr);
        bool ok = true;
        for (std::size_t a = 0; a < dr && ok; ++a) {
            Mat map = kind == 0 ? eps * b.left_s(a) : eps * b.H().right_mul_by(kind == 1 ? b.s_of(a) : b.t_of(a));
            ok = d.maps.contains(map.vec());
            if (ok)
                m.set_block(0, a, carrier_vector(d, map));
        }
        insertions.push_back(ok ? std::optional<Mat>(m) : std::nullopt);
    }
    const Algebra& r = b.R();
    auto algebra_map = [&](const Mat& m, bool anti) {
        if (m * r.unit() != alg.unit())
            return false;
        for (std::size_t x = 0; x < dr; ++x)
            for (std::size_t y = 0; y < dr; ++y) {
                Mat xy = anti ? r.product(r.basis(y), r.basis(x)) : r.product(r.basis(x), r.basis(y));
                if (alg.product(m.col(x), m.col(y)) != m * xy)
                    return false;
            }
        return true;
    };
    Mat eps_hat(f, dr, n);
    for (std::size_t p = 0; p < n; ++p)
        eps_hat.set_block(0, p, c.functionals[p] * b.H().unit());

    // <Delta(phi), g (x) k> = phi(g k); the pairing convention is searched
    // independently of the product.
    Mat target(f, dh * dh * dr, n);
    for (std::size_t p = 0; p < n; ++p) {
        Mat values = c.functionals[p] * b.H().mul();
        for (std::size_t col = 0; col < dh * dh; ++col)
            for (std::size_t r = 0; r < dr; ++r)
                target.set(col * dr + r, p, values(r, col));
    }
    std::vector<std::pair<std::string, Mat>> coproducts;
    nlohmann::json tried = nlohmann::json::array();
    for (int mask = 0; mask < 16; ++mask) {
        Convention k{(mask & 1) == 0, (mask & 2) == 0, (mask & 4) != 0, (mask & 8) == 0};
        Mat pmat(f, dh * dh * dr, n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                Mat pair = c.pairing(k, p, q);
                for (std::size_t col = 0; col < dh * dh; ++col)
                    for (std::size_t r = 0; r < dr; ++r)
                        pmat.set(col * dr + r, p * n + q, pair(r, col));
            }
        if (auto delta = try_solve(pmat, target))
            coproducts.emplace_back(k.name(), delta->particular);
        else
            tried.push_back({{"pairing", k.name()}, {"failed", "comultiplication dual to the product"}});
    }

    for (int si = 0; si < 3; ++si)
        for (int ti = 0; ti < 3; ++ti) {
            if (si == ti)
                continue;
            std::string st = std::string("source=") + insertion_names[si] + " target=" + insertion_names[ti];
            if (!insertions[si] || !insertions[ti]) {
                tried.push_back({{"base", st}, {"failed", "source and target land in the carrier"}});
                continue;
            }
            const Mat &s_hat = *insertions[si], &t_hat = *insertions[ti];
            if (!algebra_map(s_hat, false) || !algebra_map(t_hat, true)) {
                tried.push_back({{"base", st}, {"failed", "source and target are algebra maps"}});
                continue;
            }
            for (const auto& [pname, delta] : coproducts) {
                auto note = [&](std::string stage, nlohmann::json detail = nullptr) {
                    tried.push_back({{"base", st}, {"pairing", pname}, {"failed", std::move(stage)}, {"detail", std::move(detail)}});
                };
                std::optional<Bialgebroid> cand;
                try {
                    cand.emplace("dual(" + b.name() + ")", r, alg, s_hat, t_hat, delta, eps_hat);
                } catch (const std::exception& e) {
                    note("bialgebroid data", e.what());
                    continue;
                }
                CheckReport br = check_bialgebroid(*cand);
                if (!br.passed()) {
                    std::vector<std::string> failing;
                    for (const auto& leaf : br.children)
                        if (leaf.failed())
                            failing.push_back(leaf.id);
                    note("bialgebroid axioms", failing);
                    continue;
                }
                nlohmann::json matching = match_grid(t, grid, *cand, c.functionals);
                if (!matching.is_null()) {
                    note("modules match half-braided objects", matching);
                    continue;
                }
                return Attempt{std::move(cand), {{"convention", c.conv.name()}, {"base", st}, {"pairing", pname}, {"failed", nullptr}}};
            }
        }
    return fail("structure maps", tried);
}

} // namespace

Reconstruction reconstruct_dual_algebra(const Bialgebroid& b, std::size_t grid_size)
{
    DualCarrier d = dual_space(b);
    std::vector<Mat> functionals;
    for (std::size_t p = 0; p < d.dim(); ++p)
        functionals.push_back(d.as_map(Mat::unit_vector(b.field(), d.dim(), p), b.dim_R(), b.dim_H()));
    Target t(b, FunctorKind::Restrict);
    auto grid = braided_test_grid(t, grid_size);

    Reconstruction out{Unresolved{}, "", nlohmann::json::array()};
    for (int mask = 0; mask < 16; ++mask) {
        Convention conv{(mask & 1) == 0, (mask & 2) == 0, (mask & 4) != 0, (mask & 8) == 0};
        Attempt a = try_candidate(t, grid, Candidate{b, d, conv, functionals});
        out.diagnostics.push_back(a.diagnostics);
        if (a.result && !out.resolved()) {
            out.result = std::move(*a.result);
            out.convention = conv.name() + "; " + a.diagnostics["base"].get<std::string>() + "; pairing " +
                             a.diagnostics["pairing"].get<std::string>();
        }
    }
    if (!out.resolved())
        std::get<Unresolved>(out.result).diagnostics = out.diagnostics;
    return out;
}

} // namespace hopfwb
