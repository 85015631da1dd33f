#include "hopfwb/centralizer.hpp"

namespace hopfwb {

std::string_view to_string(FunctorKind k)
{
    return k == FunctorKind::Restrict ? "restrict" : "identity";
}

std::string Target::name() const
{
    return b_.name() + "/" + std::string(to_string(kind_));
}

TObject Target::apply(const HModule& v) const
{
    TObject o;
    o.dim = v.dim;
    o.bim = restrict(b_, v);
    if (kind_ == FunctorKind::Identity)
        o.h = v;
    return o;
}

TTensor Target::tensor(const TObject& a, const TObject& c) const
{
    TTensor t;
    if (kind_ == FunctorKind::Identity) {
        HTensor ht = module_tensor(b_, a.h, c.h);
        t.carrier = std::move(ht.carrier);
        t.obj.h = std::move(ht.module);
    } else {
        t.carrier = tensor_over_R(b_.R(), a.bim, c.bim);
    }
    t.obj.dim = t.carrier.dim();
    t.obj.bim = t.carrier.result;
    return t;
}

Subspace Target::morphisms(const TObject& a, const TObject& c) const
{
    if (kind_ == FunctorKind::Identity)
        return h_linear_maps(b_, a.h, c.h);
    return bimodule_maps(b_.R(), a.bim, c.bim);
}

bool Target::is_morphism(const TObject& a, const TObject& c, const Mat& f) const
{
    if (f.rows() != c.dim || f.cols() != a.dim)
        return false;
    if (kind_ == FunctorKind::Identity)
        return is_h_linear(b_, a.h, c.h, f);
    for (auto g : b_.R().generators())
        if (f * a.bim.left[g] != c.bim.left[g] * f || f * a.bim.right[g] != c.bim.right[g] * f)
            return false;
    return true;
}

TObject Target::quotient(const TObject& a, const Subquotient& q) const
{
    auto push = [&](const Mat& act) {
        Mat image = q.proj() * act;
        if (!q.kills_relations(image))
            throw AlgebraError("quotient by a subspace that is not a subobject");
        return image * q.sec();
    };
    TObject o;
    o.dim = q.dim();
    o.bim.dim = q.dim();
    for (std::size_t i = 0; i < a.bim.left.size(); ++i) {
        o.bim.left.push_back(push(a.bim.left[i]));
        o.bim.right.push_back(push(a.bim.right[i]));
    }
    if (kind_ == FunctorKind::Identity) {
        o.h.dim = q.dim();
        for (const auto& act : a.h.action)
            o.h.action.push_back(push(act));
    }
    return o;
}

Subspace Target::generated(const TObject& a, const Mat& v) const
{
    std::vector<Mat> ops;
    if (kind_ == FunctorKind::Identity) {
        for (auto g : b_.H().generators())
            ops.push_back(a.h.action[g]);
    } else {
        for (auto g : b_.R().generators()) {
            ops.push_back(a.bim.left[g]);
            ops.push_back(a.bim.right[g]);
        }
    }
    Subspace s = span_of(v);
    while (true) {
        std::vector<Mat> cols{s.basis};
        for (const auto& op : ops)
            cols.push_back(op * s.basis);
        Subspace next = span_of(hstack(cols));
        if (next.dim() == s.dim())
            return next;
        s = std::move(next);
    }
}

Mat Target::left_unitor(const TObject& x, const TTensor& ix) const
{
    return hopfwb::left_unitor(b_.R(), x.bim, ix.carrier);
}

Mat Target::right_unitor(const TObject& x, const TTensor& xi) const
{
    return hopfwb::right_unitor(b_.R(), x.bim, xi.carrier);
}

Mat Target::left_action(const TObject& x) const
{
    const std::size_t dr = b_.dim_R();
    Mat m(field(), x.dim, dr * x.dim);
    for (std::size_t a = 0; a < dr; ++a)
        m.set_block(0, a * x.dim, x.bim.left[a]);
    return m;
}

TInnerHom Target::inner_hom(const TObject& x, const TObject& y) const
{
    TInnerHom out;
    if (kind_ == FunctorKind::Restrict) {
        InnerHom ih = inner_hom_bimod(b_.R(), x.bim, y.bim, Side::Left);
        out.carrier.dim = ih.carrier.dim;
        out.carrier.bim = ih.carrier;
        out.underlying = ih.maps.basis;
        out.eval_domain = ih.eval_domain;
        out.hev = ih.eval;
        out.bim = std::move(ih);
    } else {
        InnerHomH ih = inner_hom_H(b_, x.h, y.h, Side::Left);
        out.carrier = apply(ih.carrier);
        std::vector<Mat> cols;
        for (std::size_t j = 0; j < ih.carrier.dim; ++j)
            cols.push_back(ih.underlying(b_, Mat::unit_vector(field(), ih.carrier.dim, j)).vec());
        out.underlying = cols.empty() ? Mat(field(), x.dim * y.dim, 0) : hstack(cols);
        out.eval_domain = ih.eval_domain.carrier;
        out.hev = ih.eval;
        out.hmod = std::move(ih);
    }
    return out;
}

Mat Target::hcoev(const TObject& x, const TObject& y, const TTensor& xy, const TInnerHom& hom) const
{
    if (kind_ == FunctorKind::Identity)
        return hopfwb::hcoev(b_, x.h, y.h, HTensor{xy.carrier, xy.obj.h}, *hom.hmod);
    Mat out(field(), hom.carrier.dim, y.dim);
    Mat ix = Mat::identity(field(), x.dim);
    for (std::size_t yi = 0; yi < y.dim; ++yi) {
        Mat map = xy.carrier.proj() * kron(ix, Mat::unit_vector(field(), y.dim, yi));
        out.set_block(0, yi, hom.bim->coordinates_of(map));
    }
    return out;
}

Mat solve_through_epi(const Mat& a, const Mat& rhs)
{
    auto sol = try_solve(a.transpose(), rhs.transpose());
    if (!sol)
        throw IllDefinedAction("induced map does not descend along the epimorphism");
    return sol->particular.transpose();
}

namespace {

// Pieces shared by the checks on one object.
struct Frame {
    TObject fh;
    TTensor xh;
    TTensor hx;
};

Frame frame(const Target& t, const TObject& x)
{
    Frame f;
    f.fh = t.regular();
    f.xh = t.tensor(x, f.fh);
    f.hx = t.tensor(f.fh, x);
    return f;
}

} // namespace

Mat induce_component_with(const Target& t, const HalfBraidedObject& obj, const HModule& v, const Mat& generators)
{
    const Field& f = t.field();
    const Bialgebroid& b = t.bialgebroid();
    Frame fr = frame(t, obj.x);
    TObject fv = t.apply(v);
    TTensor xv = t.tensor(obj.x, fv);
    TTensor vx = t.tensor(fv, obj.x);
    Mat ix = Mat::identity(f, obj.x.dim);
    std::vector<Mat> as, bs;
    for (std::size_t i = 0; i < generators.cols(); ++i) {
        Mat pi(f, v.dim, b.dim_H());
        Mat g = generators.col(i);
        for (std::size_t h = 0; h < b.dim_H(); ++h)
            pi.set_block(0, h, v.action[h] * g);
        as.push_back(tensor_maps(fr.xh.carrier, xv.carrier, ix, pi));
        bs.push_back(tensor_maps(fr.hx.carrier, vx.carrier, pi, ix) * obj.c);
    }
    if (as.empty()) {
        if (xv.obj.dim != 0)
            throw IllDefinedAction("empty generating set for a nonzero module");
        return Mat(f, vx.obj.dim, 0);
    }
    Mat a = hstack(as);
    if (rank(a) != xv.obj.dim)
        throw IllDefinedAction("generators do not give an epimorphism onto the module");
    return solve_through_epi(a, hstack(bs));
}

Mat induce_component(const Target& t, const HalfBraidedObject& obj, const HModule& v)
{
    const Algebra& H = t.bialgebroid().H();
    Mat g1 = module_generators(H, v);
    Mat g2 = hstack(std::vector<Mat>{Mat::identity(t.field(), v.dim), g1});
    Mat c1 = induce_component_with(t, obj, v, g1);
    Mat c2 = induce_component_with(t, obj, v, g2);
    if (c1 != c2)
        throw IllDefinedAction("induced component depends on the presentation");
    return c1;
}

CheckReport check_half_braiding(const Target& t, const HalfBraidedObject& obj)
{
    auto report = CheckReport::group("half_braiding");
    const Field& f = t.field();
    const Bialgebroid& b = t.bialgebroid();
    const Algebra& H = b.H();
    Frame fr = frame(t, obj.x);
    const Mat& c = obj.c;
    if (c.rows() != fr.hx.obj.dim || c.cols() != fr.xh.obj.dim) {
        report.add(CheckReport::fail("shape", {{"rows", c.rows()}, {"cols", c.cols()}}));
        return report;
    }
    report.add(CheckReport::check("morphism", t.is_morphism(fr.xh.obj, fr.hx.obj, c)));

    Mat ix = Mat::identity(f, obj.x.dim);
    bool equivariant = true;
    nlohmann::json w;
    for (auto g : H.generators()) {
        Mat lhs = c * tensor_maps(fr.xh.carrier, fr.xh.carrier, ix, H.right_mul(g));
        Mat rhs = tensor_maps(fr.hx.carrier, fr.hx.carrier, H.right_mul(g), ix) * c;
        if (lhs != rhs) {
            equivariant = false;
            w = {{"right_multiplication_by", g}};
        }
    }
    report.add(CheckReport::check("equivariance", equivariant, w));

    // A candidate for c_{X,V} is the induced component iff it is natural along
    // every generator map H -> V; no solve is needed.
    auto natural = [&](const HModule& v, const TTensor& xv, const TTensor& vx, const Mat& candidate) -> nlohmann::json {
        Mat ix = Mat::identity(f, obj.x.dim);
        Mat gens = module_generators(H, v);
        for (std::size_t i = 0; i < gens.cols(); ++i) {
            Mat pi(f, v.dim, H.dim());
            Mat g = gens.col(i);
            for (std::size_t h = 0; h < H.dim(); ++h)
                pi.set_block(0, h, v.action[h] * g);
            if (candidate * tensor_maps(fr.xh.carrier, xv.carrier, ix, pi) !=
                tensor_maps(fr.hx.carrier, vx.carrier, pi, ix) * c)
                return {{"generator", i}, {"generator_vector", g.to_string()}};
        }
        return nullptr;
    };

    {
        const TObject& fh = fr.fh;
        Mat ih = Mat::identity(f, fh.dim);
        TTensor hh = t.tensor(fh, fh);
        HTensor hh_mod = module_tensor(b, regular_module(b), regular_module(b));
        TTensor x_hh = t.tensor(obj.x, hh.obj);
        TTensor xh_h = t.tensor(fr.xh.obj, fh);
        TTensor hx_h = t.tensor(fr.hx.obj, fh);
        TTensor h_xh = t.tensor(fh, fr.xh.obj);
        TTensor h_hx = t.tensor(fh, fr.hx.obj);
        TTensor hh_x = t.tensor(hh.obj, obj.x);
        Mat a1_inv = invert(associator(fr.xh.carrier, xh_h.carrier, hh.carrier, x_hh.carrier));
        Mat a2 = associator(fr.hx.carrier, hx_h.carrier, fr.xh.carrier, h_xh.carrier);
        Mat a3_inv = invert(associator(hh.carrier, hh_x.carrier, fr.hx.carrier, h_hx.carrier));
        Mat rhs = a3_inv * tensor_maps(h_xh.carrier, h_hx.carrier, ih, c) * a2 *
                  tensor_maps(xh_h.carrier, hx_h.carrier, c, ih) * a1_inv;
        nlohmann::json w = natural(hh_mod.module, x_hh, hh_x, rhs);
        report.add(CheckReport::check("hexagon", w.is_null(), w));
    }

    {
        TObject unit = t.unit();
        TTensor xi = t.tensor(obj.x, unit);
        TTensor ix_t = t.tensor(unit, obj.x);
        Mat candidate = invert(t.left_unitor(obj.x, ix_t)) * t.right_unitor(obj.x, xi);
        nlohmann::json w = natural(unit_module(b), xi, ix_t, candidate);
        report.add(CheckReport::check("unit_law", w.is_null(), w));
    }
    return report;
}

} // namespace hopfwb

namespace hopfwb {

HalfBraidedObject tensor_braided(const Target& t, const HalfBraidedObject& a, const HalfBraidedObject& c)
{
    const Field& f = t.field();
    TObject fh = t.regular();
    TTensor xy = t.tensor(a.x, c.x);
    TTensor xy_h = t.tensor(xy.obj, fh);
    TTensor yh = t.tensor(c.x, fh);
    TTensor hy = t.tensor(fh, c.x);
    TTensor x_yh = t.tensor(a.x, yh.obj);
    TTensor x_hy = t.tensor(a.x, hy.obj);
    TTensor xh = t.tensor(a.x, fh);
    TTensor hx = t.tensor(fh, a.x);
    TTensor xh_y = t.tensor(xh.obj, c.x);
    TTensor hx_y = t.tensor(hx.obj, c.x);
    TTensor h_xy = t.tensor(fh, xy.obj);
    Mat step1 = associator(xy.carrier, xy_h.carrier, yh.carrier, x_yh.carrier);
    Mat step2 = tensor_maps(x_yh.carrier, x_hy.carrier, Mat::identity(f, a.x.dim), c.c);
    Mat step3 = invert(associator(xh.carrier, xh_y.carrier, hy.carrier, x_hy.carrier));
    Mat step4 = tensor_maps(xh_y.carrier, hx_y.carrier, a.c, Mat::identity(f, c.x.dim));
    Mat step5 = associator(hx.carrier, hx_y.carrier, xy.carrier, h_xy.carrier);
    return {a.label + "*" + c.label, xy.obj, step5 * step4 * step3 * step2 * step1};
}

Mat invert_braiding_at_dual(const Target& t, const HalfBraidedObject& obj, const RigidWitness& w)
{
    const Field& f = t.field();
    const Bialgebroid& b = t.bialgebroid();
    TObject u = t.apply(w.object);
    TObject l = t.apply(w.dual);
    const TObject& x = obj.x;
    Mat c_xl = induce_component(t, obj, w.dual);
    Mat c_xu = induce_component(t, obj, w.object);
    TTensor lx = t.tensor(l, x);
    TTensor xl = t.tensor(x, l);
    TTensor ux = t.tensor(u, x);
    TTensor xu = t.tensor(x, u);
    TTensor lu = t.tensor(l, u);
    TTensor ul = t.tensor(u, l);

    // l (x) x  ->  l (x) x (x) u (x) l  ->  l (x) u (x) x (x) l  ->  x (x) l
    Mat il = Mat::identity(f, l.dim);
    Mat ix = Mat::identity(f, x.dim);
    Mat db = ul.carrier.sec() * w.db * b.R().unit();
    Mat v = kron(lx.carrier.sec(), db);
    Mat braid = ux.carrier.sec() * c_xu * xu.carrier.proj();
    v = kron_apply(std::vector<Mat>{il, braid, il}, v);
    Mat ev = w.ev * lu.carrier.proj();
    v = kron_apply(std::vector<Mat>{ev, ix, il}, v);
    v = kron_apply(std::vector<Mat>{t.left_action(x), il}, v);
    Mat inv = xl.carrier.proj() * v;

    if (inv * c_xl != Mat::identity(f, xl.obj.dim) || c_xl * inv != Mat::identity(f, lx.obj.dim))
        throw Singular("zig-zag candidate is not inverse to the braiding at the dual");
    return inv;
}

CheckReport is_central(const Target& t, const HalfBraidedObject& obj, const std::vector<HModule>& family)
{
    auto report = CheckReport::group("central");
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::string id = "member_" + std::to_string(i);
        try {
            Mat c = induce_component(t, obj, family[i]);
            bool ok = c.rows() == c.cols() && rank(c) == c.rows();
            report.add(CheckReport::check(id, ok, {{"dim", c.cols()}, {"rank", rank(c)}}));
        } catch (const IllDefinedAction& e) {
            report.add(CheckReport::fail(id, {{"reason", e.what()}}));
        }
    }
    if (family.empty())
        report.add(CheckReport::inapplicable("members", "empty family"));
    report.aggregate();
    return report;
}

Subspace wlc_morphisms(const Target& t, const HalfBraidedObject& a, const HalfBraidedObject& c)
{
    const Field& f = t.field();
    Subspace d = t.morphisms(a.x, c.x);
    if (d.dim() == 0)
        return d;
    TObject fh = t.regular();
    TTensor ah = t.tensor(a.x, fh);
    TTensor ha = t.tensor(fh, a.x);
    TTensor ch = t.tensor(c.x, fh);
    TTensor hc = t.tensor(fh, c.x);
    Mat ih = Mat::identity(f, fh.dim);
    std::vector<Mat> defects;
    for (std::size_t k = 0; k < d.dim(); ++k) {
        Mat fk = Mat::from_vec(d.basis.col(k), c.x.dim, a.x.dim);
        Mat lhs = c.c * tensor_maps(ah.carrier, ch.carrier, fk, ih);
        Mat rhs = tensor_maps(ha.carrier, hc.carrier, ih, fk) * a.c;
        defects.push_back((lhs - rhs).vec());
    }
    Subspace coeffs = kernel(hstack(defects));
    return span_of(d.basis * coeffs.basis);
}

HalfBraidedObject unit_object(const Target& t)
{
    TObject unit = t.unit();
    TObject fh = t.regular();
    TTensor ih = t.tensor(unit, fh);
    TTensor hi = t.tensor(fh, unit);
    Mat c = invert(t.right_unitor(fh, hi)) * t.left_unitor(fh, ih);
    return {"unit", unit, c};
}

HalfBraidedObject coaction_object(const Target& t, std::string label, const TObject& x, const Mat& coaction)
{
    const Field& f = t.field();
    const Algebra& H = t.bialgebroid().H();
    const std::size_t dh = H.dim();
    const std::size_t dx = x.dim;
    if (coaction.rows() != dh * dx || coaction.cols() != dx)
        throw AlgebraError("coaction has the wrong shape");
    // Ambient X (x)_k H -> H (x)_k X.
    Mat amb(f, dh * dx, dx * dh);
    for (std::size_t xi = 0; xi < dx; ++xi)
        for (std::size_t h = 0; h < dh; ++h)
            for (std::size_t xp = 0; xp < dx; ++xp) {
                const Scalar& coef = coaction(h * dx + xp, xi);
                if (coef == 0)
                    continue;
                const Mat& lh = H.left_mul(h);
                for (std::size_t v = 0; v < dh; ++v)
                    for (std::size_t k = 0; k < dh; ++k) {
                        const Scalar& e = lh(k, v);
                        if (e != 0)
                            amb.set(k * dx + xp, xi * dh + v, amb(k * dx + xp, xi * dh + v) + coef * e);
                    }
            }
    Frame fr = frame(t, x);
    Mat through = fr.hx.carrier.proj() * amb;
    if (!fr.xh.carrier.pres.kills_relations(through))
        throw IllDefinedAction("coaction does not descend to the balanced tensor product");
    return {std::move(label), x, through * fr.xh.carrier.sec()};
}

HalfBraidedObject regular_comodule_object(const Target& t)
{
    const Bialgebroid& b = t.bialgebroid();
    if (t.kind() != FunctorKind::Restrict)
        throw AlgebraError("regular comodule object is defined for the restriction functor");
    TObject x;
    x.dim = b.dim_H();
    x.bim.dim = b.dim_H();
    for (std::size_t a = 0; a < b.dim_R(); ++a) {
        x.bim.left.push_back(b.left_s(a));
        x.bim.right.push_back(b.H().right_mul_by(b.s_of(a)));
    }
    return coaction_object(t, "regular", x, b.delta());
}

std::optional<HalfBraidedObject> coadjoint_object(const Target& t)
{
    const Bialgebroid& b = t.bialgebroid();
    HopfVerdict hv = is_hopf(b);
    if (!hv.translation)
        return std::nullopt;
    const Algebra& H = b.H();
    const Field& f = t.field();
    const std::size_t n = H.dim();
    const Mat& delta = b.delta();
    Mat coaction(f, n * n, n);
    for (std::size_t x = 0; x < n; ++x) {
        const Mat& lift = hv.translation->lifts[x];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& tij = lift(i * n + j, 0);
                if (tij == 0)
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        const Scalar& dkl = delta(k * n + l, i);
                        if (dkl == 0)
                            continue;
                        for (std::size_t p = 0; p < n; ++p) {
                            const Scalar& m = H.constant(k, j, p);
                            if (m != 0)
                                coaction.set(p * n + l, x, coaction(p * n + l, x) + tij * dkl * m);
                        }
                    }
            }
    }
    try {
        HalfBraidedObject obj = coaction_object(t, "coadjoint", t.regular(), coaction);
        Frame fr = frame(t, obj.x);
        if (!t.is_morphism(fr.xh.obj, fr.hx.obj, obj.c) || !check_half_braiding(t, obj).passed())
            return std::nullopt;
        return obj;
    } catch (const IllDefinedAction&) {
        return std::nullopt;
    }
}

std::optional<HalfBraidedObject> quotient_object(const Target& t, const HalfBraidedObject& obj, const Mat& v)
{
    const Field& f = t.field();
    const std::size_t dx = obj.x.dim;
    Frame fr = frame(t, obj.x);
    const std::size_t dh = fr.fh.dim;
    Mat ih = Mat::identity(f, dh);
    Mat through = fr.hx.carrier.sec() * obj.c * fr.xh.carrier.proj();
    Subspace s = t.generated(obj.x, v);
    while (s.dim() > 0) {
        Mat images = through * kron(s.basis, ih);
        std::vector<Mat> cols{s.basis};
        for (std::size_t c = 0; c < images.cols(); ++c)
            for (std::size_t h = 0; h < dh; ++h) {
                Mat slice = images.rows_range(h * dx, dx).col(c);
                if (!slice.is_zero())
                    cols.push_back(slice);
            }
        Subspace next = t.generated(obj.x, hstack(cols));
        if (next.dim() == s.dim())
            break;
        s = std::move(next);
    }
    if (s.dim() == 0 || s.dim() == dx)
        return std::nullopt;
    Mat image = obj.c * fr.xh.carrier.proj() * kron(s.basis, ih);
    Subspace target = span_of(fr.hx.carrier.proj() * kron(ih, s.basis));
    for (std::size_t c = 0; c < image.cols(); ++c)
        if (!target.contains(image.col(c)))
            return std::nullopt;
    Subquotient q = quotient_by(s.basis);
    TObject qx = t.quotient(obj.x, q);
    TTensor qh = t.tensor(qx, fr.fh);
    TTensor hq = t.tensor(fr.fh, qx);
    Mat a = tensor_maps(fr.xh.carrier, qh.carrier, q.proj(), ih);
    Mat rhs = tensor_maps(fr.hx.carrier, hq.carrier, ih, q.proj()) * obj.c;
    try {
        return HalfBraidedObject{obj.label + "/" + std::to_string(s.dim()), qx, solve_through_epi(a, rhs)};
    } catch (const IllDefinedAction&) {
        return std::nullopt;
    }
}

std::optional<HalfBraidedObject> adjoint_regular_object(const Target& t)
{
    const Bialgebroid& b = t.bialgebroid();
    if (t.kind() != FunctorKind::Identity)
        return std::nullopt;
    HopfVerdict hv = is_hopf(b);
    if (!hv.translation)
        return std::nullopt;
    const Algebra& H = b.H();
    const std::size_t n = H.dim();
    HModule adj;
    adj.dim = n;
    for (std::size_t h = 0; h < n; ++h) {
        Mat act(t.field(), n, n);
        const Mat& lift = hv.translation->lifts[h];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (lift(i * n + j, 0) != 0)
                    act += scale(H.left_mul(i) * H.right_mul(j), lift(i * n + j, 0));
        adj.action.push_back(std::move(act));
    }
    // The formula ignores the choice of lift only in good cases.
    if (!check_module(H, adj).passed())
        return std::nullopt;
    try {
        HalfBraidedObject obj = coaction_object(t, "adjoint", t.apply(adj), b.delta());
        if (!check_half_braiding(t, obj).passed())
            return std::nullopt;
        return obj;
    } catch (const IllDefinedAction&) {
        return std::nullopt;
    }
}

HalfBraidedObject direct_sum_object(const Target& t, const HalfBraidedObject& a, const HalfBraidedObject& c)
{
    const Field& f = t.field();
    const std::size_t da = a.x.dim, dc = c.x.dim;
    TObject x;
    x.dim = da + dc;
    x.bim.dim = x.dim;
    for (std::size_t i = 0; i < a.x.bim.left.size(); ++i) {
        x.bim.left.push_back(block_diag(std::vector<Mat>{a.x.bim.left[i], c.x.bim.left[i]}));
        x.bim.right.push_back(block_diag(std::vector<Mat>{a.x.bim.right[i], c.x.bim.right[i]}));
    }
    if (t.kind() == FunctorKind::Identity) {
        x.h.dim = x.dim;
        for (std::size_t i = 0; i < a.x.h.action.size(); ++i)
            x.h.action.push_back(block_diag(std::vector<Mat>{a.x.h.action[i], c.x.h.action[i]}));
    }
    Mat inc_a = vstack(std::vector<Mat>{Mat::identity(f, da), Mat(f, dc, da)});
    Mat inc_c = vstack(std::vector<Mat>{Mat(f, da, dc), Mat::identity(f, dc)});
    Frame fs = frame(t, x);
    Frame fa = frame(t, a.x);
    Frame fc = frame(t, c.x);
    Mat ih = Mat::identity(f, fs.fh.dim);
    Mat sum = tensor_maps(fa.hx.carrier, fs.hx.carrier, ih, inc_a) * a.c *
              tensor_maps(fs.xh.carrier, fa.xh.carrier, inc_a.transpose(), ih);
    sum += tensor_maps(fc.hx.carrier, fs.hx.carrier, ih, inc_c) * c.c *
           tensor_maps(fs.xh.carrier, fc.xh.carrier, inc_c.transpose(), ih);
    return {a.label + "+" + c.label, x, sum};
}

std::vector<HalfBraidedObject> braided_test_grid(const Target& t, std::size_t size)
{
    std::vector<HalfBraidedObject> grid;
    auto same = [](const HalfBraidedObject& a, const HalfBraidedObject& c) {
        return a.x.dim == c.x.dim && a.c == c.c && a.x.bim.left == c.x.bim.left && a.x.bim.right == c.x.bim.right &&
               a.x.h.action == c.x.h.action;
    };
    auto keep = [&](HalfBraidedObject o) {
        if (grid.size() >= size)
            return;
        for (const auto& g : grid)
            if (same(g, o))
                return;
        if (check_half_braiding(t, o).passed())
            grid.push_back(std::move(o));
    };
    auto quotients = [&](const HalfBraidedObject& r) {
        const std::size_t n = r.x.dim;
        const Field& f = t.field();
        for (std::size_t i = 0; i < n && grid.size() < size; ++i)
            if (auto q = quotient_object(t, r, Mat::unit_vector(f, n, i)))
                keep(std::move(*q));
        for (std::size_t i = 0; i < n && grid.size() < size; ++i)
            for (std::size_t j = i + 1; j < n && grid.size() < size; ++j)
                for (int sign : {1, -1}) {
                    Mat v = Mat::unit_vector(f, n, i) + scale(Mat::unit_vector(f, n, j), sign);
                    if (auto q = quotient_object(t, r, v))
                        keep(std::move(*q));
                }
    };
    keep(unit_object(t));
    std::vector<HalfBraidedObject> regulars;
    if (t.kind() == FunctorKind::Restrict) {
        try {
            regulars.push_back(regular_comodule_object(t));
        } catch (const IllDefinedAction&) {
        }
    } else if (auto adj = adjoint_regular_object(t)) {
        regulars.push_back(*adj);
    }
    if (auto co = coadjoint_object(t))
        regulars.push_back(*co);
    for (const auto& r : regulars) {
        keep(r);
        quotients(r);
    }
    // Sums keep the grid nontrivial when few indecomposables are available.
    for (std::size_t i = 0; grid.size() < size && i < grid.size(); ++i)
        keep(direct_sum_object(t, grid[0], grid[i]));
    return grid;
}

Target coopposite_target(const Target& t)
{
    return Target(coopposite(t.bialgebroid()), t.kind());
}

HalfBraidedObject mirror_object(const Target& t, const Target& cop, const HalfBraidedObject& obj)
{
    const Field& f = t.field();
    Mat inverse = invert(obj.c);
    TObject x;
    x.dim = obj.x.dim;
    x.bim = swap_sides(obj.x.bim);
    x.h = obj.x.h;
    TObject fh = t.regular();
    TObject fh_cop = cop.regular();
    TTensor xh = t.tensor(obj.x, fh);
    TTensor hx = t.tensor(fh, obj.x);
    TTensor xh_cop = cop.tensor(x, fh_cop);
    TTensor hx_cop = cop.tensor(fh_cop, x);
    Mat to_hx = hx.carrier.proj() * flip_matrix(f, x.dim, fh.dim) * xh_cop.carrier.sec();
    Mat to_hx_cop = hx_cop.carrier.proj() * flip_matrix(f, x.dim, fh.dim) * xh.carrier.sec();
    return {obj.label + "'", x, to_hx_cop * inverse * to_hx};
}

} // namespace hopfwb
