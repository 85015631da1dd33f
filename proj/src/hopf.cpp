#include "hopfwb/hopf.hpp"

namespace hopfwb {

namespace {

Mat apply2(const Mat& f, const Mat& g, const Mat& v)
{
    std::vector<Mat> fs{f, g};
    return kron_apply(fs, v);
}

Mat first_missing_unit_vector(const Mat& image_span, std::size_t n)
{
    Subspace s = span_of(image_span);
    for (std::size_t i = 0; i < n; ++i) {
        Mat e = Mat::unit_vector(image_span.field(), n, i);
        if (!s.contains(e))
            return e;
    }
    return Mat();
}

} // namespace

GaloisMap galois_map(const Bialgebroid& b)
{
    const Field& f = b.field();
    const Algebra& H = b.H();
    const std::size_t n = H.dim();
    std::vector<Mat> right_t, left_t;
    for (auto a : b.R().generators()) {
        right_t.push_back(H.right_mul_by(b.t_of(a)));
        left_t.push_back(b.left_t(a));
    }
    GaloisMap g;
    g.domain = balanced_tensor(f, n, n, right_t, left_t);
    Mat idH = Mat::identity(f, n);
    g.ambient = apply2(idH, H.mul(), apply2(b.delta(), idH, Mat::identity(f, n * n)));
    const TensorProduct& hh = b.hh();
    Mat rel = g.domain.relation_basis();
    if (rel.cols() > 0 && !(hh.proj() * (g.ambient * rel)).is_zero())
        throw IllDefinedAction("Galois map does not descend to the balanced tensor product");
    g.matrix = hh.proj() * (g.ambient * g.domain.sec());
    return g;
}

HopfVerdict is_hopf(const Bialgebroid& b)
{
    GaloisMap g = galois_map(b);
    HopfVerdict v;
    v.domain_dim = g.matrix.cols();
    v.codomain_dim = g.matrix.rows();
    v.rank = rank(g.matrix);
    v.hopf = v.domain_dim == v.codomain_dim && v.rank == v.domain_dim;
    if (!v.hopf) {
        Subspace k = kernel(g.matrix);
        if (k.dim() > 0)
            v.kernel_witness = k.basis.col(0);
        v.cokernel_witness = first_missing_unit_vector(g.matrix, v.codomain_dim);
        return v;
    }
    const Field& f = b.field();
    const std::size_t n = b.dim_H();
    Mat inv = invert(g.matrix);
    Mat targets = b.hh().proj() * kron(Mat::identity(f, n), b.H().unit());
    Mat lifts = g.domain.sec() * (inv * targets);
    TranslationMap tm;
    for (std::size_t h = 0; h < n; ++h)
        tm.lifts.push_back(lifts.col(h));
    v.translation = std::move(tm);
    return v;
}

HopfVerdict is_anti_hopf(const Bialgebroid& b)
{
    return is_hopf(coopposite(b));
}

CheckReport check_translation_map(const Bialgebroid& b, const TranslationMap& tm)
{
    auto report = CheckReport::group("translation_map");
    const Field& f = b.field();
    const Algebra& H = b.H();
    const std::size_t n = H.dim();
    GaloisMap g = galois_map(b);
    const TensorProduct& hh = b.hh();
    bool first = true, second = true;
    nlohmann::json w1, w2;
    for (std::size_t h = 0; h < n; ++h) {
        Mat h1 = kron(H.basis(h), H.unit());
        if (hh.proj() * (g.ambient * tm.lifts[h]) != hh.proj() * h1) {
            first = false;
            w1 = {{"h", h}};
        }
        Mat acc(f, n * n, 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = b.delta()(i * n + j, h);
                if (sgn(c) != 0)
                    acc += scale(apply2(Mat::identity(f, n), H.right_mul(j), tm.lifts[i]), c);
            }
        if (g.domain.proj() * acc != g.domain.proj() * h1) {
            second = false;
            w2 = {{"h", h}};
        }
    }
    report.add(CheckReport::check("beta_of_translation", first, w1));
    report.add(CheckReport::check("translation_of_coproduct", second, w2));
    return report;
}

CheckReport hopf_report(const HopfVerdict& v, std::string id)
{
    nlohmann::json w = {{"rank", v.rank}, {"domain_dim", v.domain_dim}, {"codomain_dim", v.codomain_dim}};
    if (!v.hopf && v.cokernel_witness.rows() > 0)
        w["cokernel_vector"] = v.cokernel_witness.transpose().to_string();
    return CheckReport::check(std::move(id), v.hopf, w);
}

Finiteness finiteness(const Bialgebroid& b)
{
    ModuleObject via_t, via_s;
    via_t.dim = via_s.dim = b.dim_H();
    for (std::size_t a = 0; a < b.dim_R(); ++a) {
        via_t.action.push_back(b.left_t(a));
        via_s.action.push_back(b.left_s(a));
    }
    return Finiteness{dual_basis(opposite(b.R()), via_t), dual_basis(b.R(), via_s)};
}

Mat InnerHomH::as_map(const Mat& v) const
{
    return Mat::from_vec(maps.basis * v, y_dim, with_regular.module.dim);
}

Mat InnerHomH::coordinates_of(const Mat& map) const
{
    return maps.coordinates(map.vec());
}

namespace {

// x -> x (x) 1 (left) or 1 (x) x (right) into the tensor with H.
Mat unit_insertion(const Bialgebroid& b, const InnerHomH& hom)
{
    const Field& f = b.field();
    Mat ix = Mat::identity(f, hom.x_dim);
    Mat amb = hom.side == Side::Left ? kron(ix, b.H().unit()) : kron(b.H().unit(), ix);
    return hom.with_regular.carrier.proj() * amb;
}

} // namespace

Mat InnerHomH::underlying(const Bialgebroid& b, const Mat& v) const
{
    return as_map(v) * unit_insertion(b, *this);
}

InnerHomH inner_hom_H(const Bialgebroid& b, const HModule& x, const HModule& y, Side side)
{
    const Field& f = b.field();
    const Algebra& H = b.H();
    HModule reg = regular_module(b);
    InnerHomH hom;
    hom.side = side;
    hom.x_dim = x.dim;
    hom.y_dim = y.dim;
    hom.with_regular = side == Side::Left ? module_tensor(b, x, reg) : module_tensor(b, reg, x);
    hom.maps = h_linear_maps(b, hom.with_regular.module, y);
    const std::size_t d = hom.maps.dim();
    const TensorProduct& tp = hom.with_regular.carrier;
    Mat ix = Mat::identity(f, x.dim), iy = Mat::identity(f, y.dim);
    hom.carrier.dim = d;
    for (std::size_t h = 0; h < H.dim(); ++h) {
        Mat a = side == Side::Left ? tensor_maps(tp, tp, ix, H.right_mul(h)) : tensor_maps(tp, tp, H.right_mul(h), ix);
        Mat op = kron(iy, a.transpose());
        hom.carrier.action.push_back(hom.maps.coordinates(op * hom.maps.basis));
    }
    Mat u = unit_insertion(b, hom);
    Mat amb(f, y.dim, x.dim * d);
    for (std::size_t j = 0; j < d; ++j) {
        Mat phi = hom.as_map(Mat::unit_vector(f, d, j)) * u; // y x x
        for (std::size_t xi = 0; xi < x.dim; ++xi) {
            std::size_t c = side == Side::Left ? xi * d + j : j * x.dim + xi;
            amb.set_block(0, c, phi.col(xi));
        }
    }
    hom.eval_domain = side == Side::Left ? module_tensor(b, x, hom.carrier) : module_tensor(b, hom.carrier, x);
    hom.eval = amb * hom.eval_domain.carrier.sec();
    return hom;
}

namespace {

// Column h is h.y for the basis vector y.
Mat orbit_map(const Bialgebroid& b, const HModule& y, std::size_t yi)
{
    Mat a(b.field(), y.dim, b.dim_H());
    for (std::size_t h = 0; h < b.dim_H(); ++h)
        a.set_block(0, h, y.action[h].col(yi));
    return a;
}

} // namespace

Mat hcoev(const Bialgebroid& b, const HModule& x, const HModule& y, const HTensor& xy, const InnerHomH& hom)
{
    Mat out(b.field(), hom.carrier.dim, y.dim);
    Mat ix = Mat::identity(b.field(), x.dim);
    for (std::size_t yi = 0; yi < y.dim; ++yi) {
        Mat phi = xy.carrier.proj() * kron(ix, orbit_map(b, y, yi)) * hom.with_regular.carrier.sec();
        out.set_block(0, yi, hom.coordinates_of(phi));
    }
    return out;
}

Mat coev(const Bialgebroid& b, const HModule& x, const HModule& y, const HTensor& yx, const InnerHomH& hom)
{
    Mat out(b.field(), hom.carrier.dim, y.dim);
    Mat ix = Mat::identity(b.field(), x.dim);
    for (std::size_t yi = 0; yi < y.dim; ++yi) {
        Mat phi = yx.carrier.proj() * kron(orbit_map(b, y, yi), ix) * hom.with_regular.carrier.sec();
        out.set_block(0, yi, hom.coordinates_of(phi));
    }
    return out;
}

CheckReport check_hom_adjunction_H(const Bialgebroid& b, const HModule& x, const HModule& y, const HModule& w, Side side)
{
    const Field& f = b.field();
    auto report = CheckReport::group(std::string("hom_adjunction_H_") + std::string(to_string(side)));
    InnerHomH hom = inner_hom_H(b, x, y, side);
    report.add(CheckReport::check("carrier_is_module", check_module(b.H(), hom.carrier).passed()));
    HTensor xw = side == Side::Left ? module_tensor(b, x, w) : module_tensor(b, w, x);
    Subspace lhs = h_linear_maps(b, xw.module, y);
    Subspace rhs = h_linear_maps(b, w, hom.carrier);
    report.add(CheckReport::check("dimension", lhs.dim() == rhs.dim(), {{"lhs", lhs.dim()}, {"rhs", rhs.dim()}}));
    Mat ix = Mat::identity(f, x.dim);
    std::vector<Mat> images;
    bool linear = true;
    for (std::size_t k = 0; k < rhs.dim(); ++k) {
        Mat fw = Mat::from_vec(rhs.basis.col(k), hom.carrier.dim, w.dim);
        Mat lifted = side == Side::Left ? tensor_maps(xw.carrier, hom.eval_domain.carrier, ix, fw)
                                        : tensor_maps(xw.carrier, hom.eval_domain.carrier, fw, ix);
        Mat g = hom.eval * lifted;
        linear &= is_h_linear(b, xw.module, y, g);
        images.push_back(g.vec());
    }
    report.add(CheckReport::check("uncurry_is_H_linear", linear));
    std::size_t r = images.empty() ? 0 : rank(hstack(images));
    report.add(CheckReport::check("uncurry_bijective", r == rhs.dim() && r == lhs.dim(), {{"rank", r}}));
    return report;
}

CheckReport check_hom_preservation(const Bialgebroid& b, const HModule& x, const HModule& y, Side side)
{
    auto report = CheckReport::group(std::string("hom_preservation_") + std::string(to_string(side)));
    const Field& f = b.field();
    InnerHomH hom = inner_hom_H(b, x, y, side);
    Bimodule rx = restrict(b, x), ry = restrict(b, y);
    InnerHom bh = inner_hom_bimod(b.R(), rx, ry, side);
    Mat xi(f, bh.carrier.dim, hom.carrier.dim);
    bool lands = true;
    for (std::size_t j = 0; j < hom.carrier.dim && lands; ++j) {
        Mat m = hom.underlying(b, Mat::unit_vector(f, hom.carrier.dim, j));
        if (!bh.maps.contains(m.vec())) {
            lands = false;
            report.add(CheckReport::fail("lands_in_bimodule_hom", {{"carrier_basis", j}}));
            return report;
        }
        xi.set_block(0, j, bh.coordinates_of(m));
    }
    report.add(CheckReport::pass("lands_in_bimodule_hom"));
    Bimodule rc = restrict(b, hom.carrier);
    bool linear = true;
    for (std::size_t a = 0; a < b.dim_R(); ++a)
        linear &= xi * rc.left[a] == bh.carrier.left[a] * xi && xi * rc.right[a] == bh.carrier.right[a] * xi;
    report.add(CheckReport::check("bimodule_linear", linear));
    std::size_t r = rank(xi);
    report.add(CheckReport::check("bijective", xi.rows() == xi.cols() && r == xi.rows(),
                                  {{"rank", r}, {"hom_H_dim", hom.carrier.dim}, {"hom_bimodule_dim", bh.carrier.dim}}));
    return report;
}

std::vector<HModule> hom_test_family(const Bialgebroid& b, std::size_t max_members)
{
    const Field& f = b.field();
    const std::size_t n = b.dim_H();
    HModule reg = regular_module(b);
    std::vector<HModule> family{reg, unit_module(b)};
    std::vector<Mat> seen;
    std::vector<Mat> candidates;
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(Mat::unit_vector(f, n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            candidates.push_back(Mat::unit_vector(f, n, i) + Mat::unit_vector(f, n, j));
            candidates.push_back(Mat::unit_vector(f, n, i) - Mat::unit_vector(f, n, j));
        }
    for (const auto& v : candidates) {
        if (family.size() >= max_members)
            break;
        Subspace sub = generated_submodule(b.H(), reg, v);
        if (sub.dim() == 0 || sub.dim() == n)
            continue;
        bool dup = false;
        for (const auto& s : seen)
            dup |= s == sub.basis;
        if (dup)
            continue;
        seen.push_back(sub.basis);
        family.push_back(quotient_module(reg, quotient_by(sub.basis)));
    }
    return family;
}

namespace {

// Both zig-zag composites for a candidate left dual L of P in R-bimodules.
struct ZigZag {
    const Algebra& r;
    Bimodule P, L, R;
    TensorProduct RP, PL, PL_P, LP, P_LP, PR, LR, L_PL, LP_L, RL;
    Mat head_P; // P (x) (L (x) P) -> P after ev is inserted: r_P o (P (x) ev) o alpha
    Mat lP_inv, rP, rL_inv, lL, alpha1, alpha2_inv;

    ZigZag(const Algebra& ring, Bimodule p, Bimodule l) : r(ring), P(std::move(p)), L(std::move(l)), R(regular_bimodule(ring))
    {
        RP = tensor_over_R(r, R, P);
        PL = tensor_over_R(r, P, L);
        PL_P = tensor_over_R(r, PL.result, P);
        LP = tensor_over_R(r, L, P);
        P_LP = tensor_over_R(r, P, LP.result);
        PR = tensor_over_R(r, P, R);
        LR = tensor_over_R(r, L, R);
        L_PL = tensor_over_R(r, L, PL.result);
        LP_L = tensor_over_R(r, LP.result, L);
        RL = tensor_over_R(r, R, L);
        lP_inv = invert(left_unitor(r, P, RP));
        rP = right_unitor(r, P, PR);
        rL_inv = invert(right_unitor(r, L, LR));
        lL = left_unitor(r, L, RL);
        alpha1 = associator(PL, PL_P, LP, P_LP);
        alpha2_inv = invert(associator(LP, LP_L, PL, L_PL));
    }

    Mat on_P(const Mat& ev, const Mat& db) const
    {
        const Field& f = ev.field();
        Mat ip = Mat::identity(f, P.dim);
        return rP * tensor_maps(P_LP, PR, ip, ev) * alpha1 * tensor_maps(RP, PL_P, db, ip) * lP_inv;
    }

    Mat on_L(const Mat& ev, const Mat& db) const
    {
        const Field& f = ev.field();
        Mat il = Mat::identity(f, L.dim);
        return lL * tensor_maps(LP_L, RL, ev, il) * alpha2_inv * tensor_maps(LR, L_PL, il, db) * rL_inv;
    }
};

} // namespace

CheckReport check_triangle_identities(const Algebra& r, const Bimodule& p, const Bimodule& dual, const Mat& ev, const Mat& db)
{
    auto report = CheckReport::group("triangle_identities");
    ZigZag z(r, p, dual);
    const Field& f = r.field();
    report.add(CheckReport::check("object", z.on_P(ev, db) == Mat::identity(f, p.dim)));
    report.add(CheckReport::check("dual", z.on_L(ev, db) == Mat::identity(f, dual.dim)));
    return report;
}

DualResult left_dual_module(const Bialgebroid& b, const HModule& p, DualScope scope)
{
    const Field& f = b.field();
    DualResult res;
    if (scope == DualScope::Projective) {
        ProjectivityResult proj = dual_basis(b.H(), p);
        if (!proj.projective()) {
            res.reason = "not finitely generated projective over H: " + proj.obstruction;
            return res;
        }
    }
    HModule unit = unit_module(b);
    InnerHomH hom = inner_hom_H(b, p, unit, Side::Right);
    const HModule& l = hom.carrier;
    HTensor pl = module_tensor(b, p, l);
    Subspace dbs = h_linear_maps(b, unit, pl.module);
    if (dbs.dim() == 0) {
        res.reason = "no nonzero H-linear map from the unit into P (x) hom_r(P, I)";
        if (p.dim != 0)
            return res;
    }
    ZigZag z(b.R(), restrict(b, p), restrict(b, l));
    std::vector<Mat> cols;
    for (std::size_t k = 0; k < dbs.dim(); ++k) {
        Mat d = Mat::from_vec(dbs.basis.col(k), pl.module.dim, unit.dim);
        cols.push_back(vstack(std::vector<Mat>{z.on_P(hom.eval, d).vec(), z.on_L(hom.eval, d).vec()}));
    }
    Mat target = vstack(std::vector<Mat>{Mat::identity(f, p.dim).vec(), Mat::identity(f, l.dim).vec()});
    Mat db(f, pl.module.dim, unit.dim);
    if (!cols.empty()) {
        auto sol = try_solve(hstack(cols), target);
        if (!sol) {
            res.reason = "triangle identities have no solution among " + std::to_string(dbs.dim()) + " candidate coevaluations";
            return res;
        }
        db = Mat::from_vec(dbs.basis * sol->particular, pl.module.dim, unit.dim);
    } else if (!target.is_zero()) {
        return res;
    }
    res.witness = RigidWitness{p, l, hom.eval, db};
    return res;
}

} // namespace hopfwb
