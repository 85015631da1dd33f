#include "hopfwb/algebra.hpp"

#include <algorithm>
#include <map>

namespace hopfwb {

namespace {

nlohmann::json triple(std::size_t i, std::size_t j, std::size_t k)
{
    return nlohmann::json::array({i, j, k});
}

// Column index of the first column where a and b differ, or npos.
std::size_t first_diff_col(const Mat& a, const Mat& b)
{
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != b(r, c))
                return c;
    return std::string::npos;
}

Mat stack_vectors(const Field& f, std::size_t n, const std::vector<Mat>& cols)
{
    if (cols.empty())
        return Mat(f, n, 0);
    return hstack(cols);
}

} // namespace

Algebra::Algebra(Mat unit, Mat mul) : unit_(std::move(unit)), mul_(std::move(mul))
{
    const std::size_t n = unit_.rows();
    if (n == 0)
        throw AlgebraError("an algebra must have positive dimension (a unit must exist)");
    if (unit_.cols() != 1 || mul_.rows() != n || mul_.cols() != n * n)
        throw AlgebraError("inconsistent structure-constant shapes");
    for (std::size_t i = 0; i < n; ++i) {
        left_.push_back(mul_.cols_range(i * n, n));
        Mat r(field(), n, n);
        for (std::size_t j = 0; j < n; ++j)
            r.set_block(0, j, mul_.col(j * n + i));
        right_.push_back(std::move(r));
    }
}

Mat Algebra::product(const Mat& a, const Mat& b) const
{
    return mul_ * kron(a, b);
}

Mat Algebra::left_mul_by(const Mat& a) const
{
    Mat m(field(), dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (sgn(a(i, 0)) != 0)
            m += scale(left_[i], a(i, 0));
    return m;
}

Mat Algebra::right_mul_by(const Mat& a) const
{
    Mat m(field(), dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (sgn(a(i, 0)) != 0)
            m += scale(right_[i], a(i, 0));
    return m;
}

const std::vector<std::size_t>& Algebra::generators() const
{
    if (generators_)
        return *generators_;
    std::vector<std::size_t> gens;
    auto closure = [&]() {
        Mat span = span_of(unit_).basis;
        while (true) {
            std::vector<Mat> cols{span};
            for (auto g : gens)
                cols.push_back(left_[g] * span);
            Subspace s = span_of(hstack(cols));
            if (s.dim() == span.cols())
                return s;
            span = s.basis;
        }
    };
    Subspace sub = closure();
    for (std::size_t i = 0; i < dim() && sub.dim() < dim(); ++i) {
        if (sub.contains(basis(i)))
            continue;
        gens.push_back(i);
        sub = closure();
    }
    generators_ = gens;
    return *generators_;
}

Algebra opposite(const Algebra& a)
{
    const std::size_t n = a.dim();
    Mat mul(a.field(), n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul.set_block(0, i * n + j, a.mul().col(j * n + i));
    return Algebra(a.unit(), mul);
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b)
{
    const std::size_t n = a.dim(), m = b.dim();
    // (a_i b_j)(a_k b_l) -> index ((i m + j), (k m + l)); reorder to (i k)(j l).
    Mat mul(a.field(), n * m, n * m * n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    mul.set_block(0, (i * m + j) * n * m + (k * m + l), kron(a.mul().col(i * n + k), b.mul().col(j * m + l)));
    return Algebra(kron(a.unit(), b.unit()), mul);
}

Algebra enveloping(const Algebra& r)
{
    return tensor_algebra(r, opposite(r));
}

CheckReport check_algebra(const Algebra& a)
{
    const std::size_t n = a.dim();
    const Field& f = a.field();
    auto report = CheckReport::group("algebra");
    Mat id = Mat::identity(f, n);
    Mat lhs = a.mul() * kron(a.mul(), id); // (e_i e_j) e_k
    Mat rhs = a.mul() * kron(id, a.mul()); // e_i (e_j e_k)
    std::size_t c = first_diff_col(lhs, rhs);
    if (c == std::string::npos)
        report.add(CheckReport::pass("associativity"));
    else
        report.add(CheckReport::fail("associativity", {{"triple", triple(c / (n * n), (c / n) % n, c % n)},
                                                       {"lhs", lhs.col(c).transpose().to_string()},
                                                       {"rhs", rhs.col(c).transpose().to_string()}}));
    Mat left_unit = a.mul() * kron(a.unit(), id);
    Mat right_unit = a.mul() * kron(id, a.unit());
    std::size_t cl = first_diff_col(left_unit, id), cr = first_diff_col(right_unit, id);
    if (cl == std::string::npos && cr == std::string::npos)
        report.add(CheckReport::pass("unit"));
    else
        report.add(CheckReport::fail("unit", {{"basis_element", cl == std::string::npos ? cr : cl},
                                              {"side", cl == std::string::npos ? "right" : "left"}}));
    return report;
}

CheckReport check_algebra_map(const Algebra& source, const Algebra& target, const AlgebraMap& fm, std::string id)
{
    auto report = CheckReport::group(std::move(id));
    const Mat& f = fm.matrix;
    if (f.rows() != target.dim() || f.cols() != source.dim()) {
        report.add(CheckReport::fail("shape", {{"rows", f.rows()}, {"cols", f.cols()}}));
        return report;
    }
    report.add(CheckReport::check("unital", f * source.unit() == target.unit(), {{"image_of_unit", (f * source.unit()).transpose().to_string()}}));
    Mat lhs = f * source.mul();
    Mat rhs = target.mul() * kron(f, f);
    std::size_t c = first_diff_col(lhs, rhs);
    const std::size_t n = source.dim();
    report.add(CheckReport::check("multiplicative", c == std::string::npos,
                                  {{"pair", c == std::string::npos ? nlohmann::json() : nlohmann::json::array({c / n, c % n})}}));
    return report;
}

Mat ModuleObject::act(const Algebra& a, const Mat& element) const
{
    Mat m(a.field(), dim, dim);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (sgn(element(i, 0)) != 0)
            m += scale(action[i], element(i, 0));
    return m;
}

ModuleObject regular_module(const Algebra& a)
{
    ModuleObject m;
    m.dim = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        m.action.push_back(a.left_mul(i));
    return m;
}

CheckReport check_module(const Algebra& a, const ModuleObject& m)
{
    auto report = CheckReport::group("module");
    const Field& f = a.field();
    report.add(CheckReport::check("unital", m.act(a, a.unit()) == Mat::identity(f, m.dim)));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.act(a, a.product(a.basis(i), a.basis(j))) != m.action[i] * m.action[j]) {
                report.add(CheckReport::fail("associative", {{"pair", nlohmann::json::array({i, j})}}));
                return report;
            }
    report.add(CheckReport::pass("associative"));
    return report;
}

Subspace generated_submodule(const Algebra& a, const ModuleObject& m, const Mat& v)
{
    Subspace s = span_of(v);
    while (true) {
        std::vector<Mat> cols{s.basis};
        for (auto g : a.generators())
            cols.push_back(m.action[g] * s.basis);
        Subspace next = span_of(hstack(cols));
        if (next.dim() == s.dim())
            return next;
        s = std::move(next);
    }
}

Mat module_generators(const Algebra& a, const ModuleObject& m)
{
    const Field& f = a.field();
    std::vector<Mat> gens;
    Subspace sub = span_of(Mat(f, m.dim, 0));
    for (std::size_t i = 0; i < m.dim && sub.dim() < m.dim; ++i) {
        Mat e = Mat::unit_vector(f, m.dim, i);
        if (sub.dim() > 0 && sub.contains(e))
            continue;
        gens.push_back(e);
        sub = generated_submodule(a, m, hstack(gens));
    }
    return stack_vectors(f, m.dim, gens);
}

ModuleObject quotient_module(const ModuleObject& m, const Subquotient& q)
{
    ModuleObject out;
    out.dim = q.dim();
    for (const auto& act : m.action)
        out.action.push_back(q.proj() * act * q.sec());
    return out;
}

Bimodule regular_bimodule(const Algebra& r)
{
    Bimodule b;
    b.dim = r.dim();
    for (std::size_t i = 0; i < r.dim(); ++i) {
        b.left.push_back(r.left_mul(i));
        b.right.push_back(r.right_mul(i));
    }
    return b;
}

CheckReport check_bimodule(const Algebra& r, const Bimodule& m)
{
    auto report = CheckReport::group("bimodule");
    const Field& f = r.field();
    auto act = [&](const std::vector<Mat>& ops, const Mat& el) {
        Mat out(f, m.dim, m.dim);
        for (std::size_t i = 0; i < r.dim(); ++i)
            if (sgn(el(i, 0)) != 0)
                out += scale(ops[i], el(i, 0));
        return out;
    };
    Mat id = Mat::identity(f, m.dim);
    report.add(CheckReport::check("unital", act(m.left, r.unit()) == id && act(m.right, r.unit()) == id));
    bool left_ok = true, right_ok = true, commute = true;
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
            Mat ab = r.product(r.basis(i), r.basis(j));
            left_ok &= act(m.left, ab) == m.left[i] * m.left[j];
            right_ok &= act(m.right, ab) == m.right[j] * m.right[i];
            commute &= m.left[i] * m.right[j] == m.right[j] * m.left[i];
        }
    report.add(CheckReport::check("left_module", left_ok));
    report.add(CheckReport::check("right_module", right_ok));
    report.add(CheckReport::check("actions_commute", commute));
    return report;
}

ModuleObject as_enveloping_module(const Algebra& r, const Bimodule& m)
{
    ModuleObject out;
    out.dim = m.dim;
    for (std::size_t a = 0; a < r.dim(); ++a)
        for (std::size_t b = 0; b < r.dim(); ++b)
            out.action.push_back(m.left[a] * m.right[b]);
    return out;
}

Bimodule from_enveloping_module(const Algebra& r, const ModuleObject& m)
{
    const Field& f = r.field();
    const std::size_t n = r.dim();
    Bimodule b;
    b.dim = m.dim;
    for (std::size_t a = 0; a < n; ++a) {
        Mat l(f, m.dim, m.dim), rt(f, m.dim, m.dim);
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(r.unit()(k, 0)) == 0)
                continue;
            l += scale(m.action[a * n + k], r.unit()(k, 0));
            rt += scale(m.action[k * n + a], r.unit()(k, 0));
        }
        b.left.push_back(std::move(l));
        b.right.push_back(std::move(rt));
    }
    return b;
}

Bimodule swap_sides(const Bimodule& m)
{
    return Bimodule{m.dim, m.right, m.left};
}

Subspace intertwiners(std::size_t dim_x, std::size_t dim_y, const std::vector<Mat>& on_x, const std::vector<Mat>& on_y)
{
    if (on_x.empty())
        return kernel(Mat(Field::rationals(), 0, dim_x * dim_y));
    const Field& f = on_x.front().field();
    Mat ix = Mat::identity(f, dim_x), iy = Mat::identity(f, dim_y);
    std::vector<Mat> blocks;
    for (std::size_t i = 0; i < on_x.size(); ++i)
        blocks.push_back(kron(iy, on_x[i].transpose()) - kron(on_y[i], ix));
    return kernel(vstack(blocks));
}

Subspace bimodule_maps(const Algebra& r, const Bimodule& x, const Bimodule& y)
{
    std::vector<Mat> ax, ay;
    for (auto g : r.generators()) {
        ax.push_back(x.left[g]);
        ay.push_back(y.left[g]);
        ax.push_back(x.right[g]);
        ay.push_back(y.right[g]);
    }
    if (ax.empty()) {
        Subspace all = kernel(Mat(r.field(), 0, x.dim * y.dim));
        return all;
    }
    return intertwiners(x.dim, y.dim, ax, ay);
}

Subquotient balanced_tensor(const Field& f, std::size_t dm, std::size_t dn, const std::vector<Mat>& right_on_m,
                            const std::vector<Mat>& left_on_n)
{
    std::vector<SparseRow> rows;
    for (std::size_t g = 0; g < right_on_m.size(); ++g) {
        const Mat& rt = right_on_m[g];
        const Mat& lt = left_on_n[g];
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                std::map<std::uint32_t, Scalar> acc;
                for (std::size_t k = 0; k < dm; ++k)
                    if (sgn(rt(k, i)) != 0) {
                        auto c = static_cast<std::uint32_t>(k * dn + j);
                        acc[c] = f.add(acc[c], rt(k, i));
                    }
                for (std::size_t l = 0; l < dn; ++l)
                    if (sgn(lt(l, j)) != 0) {
                        auto c = static_cast<std::uint32_t>(i * dn + l);
                        acc[c] = f.sub(acc[c], lt(l, j));
                    }
                SparseRow row;
                for (auto& [c, v] : acc)
                    if (sgn(v) != 0)
                        row.emplace_back(c, v);
                if (!row.empty())
                    rows.push_back(std::move(row));
            }
    }
    return quotient_by_rows(f, dm * dn, std::move(rows));
}

TensorProduct tensor_over_R(const Algebra& r, const Bimodule& m, const Bimodule& n)
{
    const Field& f = r.field();
    const std::size_t dm = m.dim, dn = n.dim;
    std::vector<Mat> rts, lts;
    for (auto g : r.generators()) {
        rts.push_back(m.right[g]);
        lts.push_back(n.left[g]);
    }
    TensorProduct t;
    t.left_dim = dm;
    t.right_dim = dn;
    t.pres = balanced_tensor(f, dm, dn, rts, lts);
    t.result.dim = t.pres.dim();
    Mat im = Mat::identity(f, dm), in = Mat::identity(f, dn);
    for (std::size_t a = 0; a < r.dim(); ++a) {
        std::vector<Mat> lf{m.left[a], in};
        std::vector<Mat> rf{im, n.right[a]};
        t.result.left.push_back(t.proj() * kron_apply(lf, t.sec()));
        t.result.right.push_back(t.proj() * kron_apply(rf, t.sec()));
    }
    return t;
}

Mat tensor_maps(const TensorProduct& src, const TensorProduct& tgt, const Mat& f, const Mat& g)
{
    std::vector<Mat> factors{f, g};
    return tgt.proj() * kron_apply(factors, src.sec());
}

Mat induced(const TensorProduct& src, const TensorProduct& tgt, const Mat& ambient_map)
{
    return tgt.proj() * (ambient_map * src.sec());
}

Mat left_unitor(const Algebra& r, const Bimodule& m, const TensorProduct& rm)
{
    Mat amb(r.field(), m.dim, r.dim() * m.dim);
    for (std::size_t a = 0; a < r.dim(); ++a)
        amb.set_block(0, a * m.dim, m.left[a]);
    return amb * rm.sec();
}

Mat right_unitor(const Algebra& r, const Bimodule& m, const TensorProduct& mr)
{
    Mat amb(r.field(), m.dim, m.dim * r.dim());
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t a = 0; a < r.dim(); ++a)
            amb.set_block(0, i * r.dim() + a, m.right[a].col(i));
    return amb * mr.sec();
}

Mat associator(const TensorProduct& ab, const TensorProduct& ab_c, const TensorProduct& bc, const TensorProduct& a_bc)
{
    const Field& f = ab_c.proj().field();
    std::vector<Mat> first{ab.sec(), Mat::identity(f, ab_c.right_dim)};
    Mat flat = kron_apply(first, ab_c.sec());
    std::vector<Mat> second{Mat::identity(f, ab.left_dim), bc.proj()};
    return a_bc.proj() * kron_apply(second, flat);
}

std::string_view to_string(Side s)
{
    return s == Side::Left ? "left" : "right";
}

Mat InnerHom::as_map(const Mat& v) const
{
    return Mat::from_vec(maps.basis * v, y_dim, x_dim);
}

Mat InnerHom::coordinates_of(const Mat& map) const
{
    return maps.coordinates(map.vec());
}

void rebuild_eval(const Algebra& r, const Bimodule& x, InnerHom& hom)
{
    const Field& f = r.field();
    const std::size_t dx = x.dim, dy = hom.y_dim, d = hom.carrier.dim;
    if (hom.side == Side::Left) {
        hom.eval_domain = tensor_over_R(r, x, hom.carrier);
        Mat amb(f, dy, dx * d);
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t y = 0; y < dy; ++y)
                    amb(y, i * d + j) = hom.maps.basis(y * dx + i, j);
        hom.eval = amb * hom.eval_domain.sec();
    } else {
        hom.eval_domain = tensor_over_R(r, hom.carrier, x);
        Mat amb(f, dy, d * dx);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < dx; ++i)
                for (std::size_t y = 0; y < dy; ++y)
                    amb(y, j * dx + i) = hom.maps.basis(y * dx + i, j);
        hom.eval = amb * hom.eval_domain.sec();
    }
}

InnerHom inner_hom_bimod(const Algebra& r, const Bimodule& x, const Bimodule& y, Side side)
{
    const Field& f = r.field();
    const std::size_t dx = x.dim, dy = y.dim;
    InnerHom hom;
    hom.side = side;
    hom.x_dim = dx;
    hom.y_dim = dy;
    std::vector<Mat> ax, ay;
    for (auto g : r.generators()) {
        ax.push_back(side == Side::Left ? x.left[g] : x.right[g]);
        ay.push_back(side == Side::Left ? y.left[g] : y.right[g]);
    }
    hom.maps = ax.empty() ? kernel(Mat(f, 0, dx * dy)) : intertwiners(dx, dy, ax, ay);
    const std::size_t d = hom.maps.dim();
    hom.carrier.dim = d;
    Mat ix = Mat::identity(f, dx), iy = Mat::identity(f, dy);
    for (std::size_t a = 0; a < r.dim(); ++a) {
        Mat lop, rop;
        if (side == Side::Left) {
            lop = kron(iy, x.right[a].transpose()); // f -> f o (. a)
            rop = kron(y.right[a], ix);             // f -> (. a) o f
        } else {
            lop = kron(y.left[a], ix);              // f -> a . f
            rop = kron(iy, x.left[a].transpose());  // f -> f o (a .)
        }
        hom.carrier.left.push_back(hom.maps.coordinates(lop * hom.maps.basis));
        hom.carrier.right.push_back(hom.maps.coordinates(rop * hom.maps.basis));
    }
    rebuild_eval(r, x, hom);
    return hom;
}

Mat curry(const InnerHom& hom, const TensorProduct& xz, std::size_t z_dim, const Mat& g)
{
    const Field& f = g.field();
    const std::size_t dx = hom.x_dim, dy = hom.y_dim;
    Mat flat = g * xz.proj();
    Mat out(f, hom.carrier.dim, z_dim);
    for (std::size_t z = 0; z < z_dim; ++z) {
        Mat m(f, dy, dx);
        for (std::size_t y = 0; y < dy; ++y)
            for (std::size_t x = 0; x < dx; ++x)
                m(y, x) = hom.side == Side::Left ? flat(y, x * z_dim + z) : flat(y, z * dx + x);
        out.set_block(0, z, hom.coordinates_of(m));
    }
    return out;
}

CheckReport hom_adjunction_check(const Algebra& r, const Bimodule& x, const Bimodule& y, const Bimodule& z, Side side)
{
    return hom_adjunction_check(r, x, y, z, inner_hom_bimod(r, x, y, side));
}

CheckReport hom_adjunction_check(const Algebra& r, const Bimodule& x, const Bimodule& y, const Bimodule& z, const InnerHom& hom)
{
    const Field& f = r.field();
    auto report = CheckReport::group(std::string("hom_adjunction_") + std::string(to_string(hom.side)));
    const bool left = hom.side == Side::Left;
    TensorProduct xz = left ? tensor_over_R(r, x, z) : tensor_over_R(r, z, x);
    Subspace lhs = bimodule_maps(r, xz.result, y);
    Subspace rhs = bimodule_maps(r, z, hom.carrier);
    report.add(CheckReport::check("dimension", lhs.dim() == rhs.dim(), {{"lhs", lhs.dim()}, {"rhs", rhs.dim()}}));

    auto curry_of = [&](const Mat& gvec) {
        Mat g = Mat::from_vec(gvec, y.dim, xz.dim());
        try {
            return curry(hom, xz, z.dim, g);
        } catch (const NoSolution&) {
            return Mat();
        }
    };
    auto uncurry = [&](const Mat& fz) {
        Mat ix = Mat::identity(f, x.dim);
        Mat lifted = left ? tensor_maps(xz, hom.eval_domain, ix, fz) : tensor_maps(xz, hom.eval_domain, fz, ix);
        return hom.eval * lifted;
    };

    bool lands = true, inverse = true, natural = true;
    nlohmann::json witness;
    Subspace endo = bimodule_maps(r, z, z);
    for (std::size_t k = 0; k < lhs.dim() && lands; ++k) {
        Mat gk = lhs.basis.col(k);
        Mat c = curry_of(gk);
        if (c.rows() == 0 || !rhs.contains(c.vec())) {
            lands = false;
            witness = {{"morphism", k}};
            break;
        }
        if (uncurry(c).vec() != gk) {
            inverse = false;
            witness = {{"morphism", k}};
        }
        Mat g = Mat::from_vec(gk, y.dim, xz.dim());
        for (std::size_t e = 0; e < endo.dim(); ++e) {
            Mat u = Mat::from_vec(endo.basis.col(e), z.dim, z.dim);
            Mat ix = Mat::identity(f, x.dim);
            Mat xu = left ? tensor_maps(xz, xz, ix, u) : tensor_maps(xz, xz, u, ix);
            Mat c2 = curry_of((g * xu).vec());
            if (c2.rows() == 0 || c2 != c * u) {
                natural = false;
                witness = {{"morphism", k}, {"endomorphism", e}};
            }
        }
    }
    for (std::size_t k = 0; k < rhs.dim() && lands; ++k) {
        Mat fz = Mat::from_vec(rhs.basis.col(k), hom.carrier.dim, z.dim);
        Mat back = curry_of(uncurry(fz).vec());
        if (back.rows() == 0 || back != fz)
            inverse = false;
    }
    report.add(CheckReport::check("curry_lands_in_morphisms", lands, witness));
    report.add(CheckReport::check("mutually_inverse", lands && inverse, witness));
    report.add(CheckReport::check("naturality", lands && natural, witness));
    return report;
}

ProjectivityResult dual_basis(const Algebra& a, const ModuleObject& p)
{
    const Field& f = a.field();
    ProjectivityResult res;
    Mat gens = module_generators(a, p);
    const std::size_t m = gens.cols(), da = a.dim();
    Mat epi(f, p.dim, m * da);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < da; ++k)
            epi.set_block(0, i * da + k, p.action[k] * gens.col(i));
    res.epimorphism = epi;
    if (p.dim == 0) {
        res.basis = DualBasis{};
        return res;
    }
    std::vector<Mat> on_p, on_free;
    for (auto g : a.generators()) {
        on_p.push_back(p.action[g]);
        std::vector<Mat> blocks(m, a.left_mul(g));
        on_free.push_back(block_diag(blocks));
    }
    Subspace homs = on_p.empty() ? kernel(Mat(f, 0, p.dim * m * da)) : intertwiners(p.dim, m * da, on_p, on_free);
    std::vector<Mat> cols;
    for (std::size_t j = 0; j < homs.dim(); ++j)
        cols.push_back((epi * Mat::from_vec(homs.basis.col(j), m * da, p.dim)).vec());
    Mat target = Mat::identity(f, p.dim).vec();
    std::optional<Solution> sol;
    if (!cols.empty())
        sol = try_solve(hstack(cols), target);
    if (!sol) {
        res.obstruction = "free cover of rank " + std::to_string(m) + " does not split: no module section among " +
                          std::to_string(homs.dim()) + " homomorphisms P -> A^" + std::to_string(m);
        return res;
    }
    Mat sigma = Mat::from_vec(homs.basis * sol->particular, m * da, p.dim);
    DualBasis db;
    for (std::size_t i = 0; i < m; ++i) {
        db.elements.push_back(gens.col(i));
        db.functionals.push_back(sigma.rows_range(i * da, da));
    }
    res.basis = std::move(db);
    return res;
}

bool verify_dual_basis(const Algebra& a, const ModuleObject& p, const DualBasis& db)
{
    const Field& f = a.field();
    for (std::size_t k = 0; k < p.dim; ++k) {
        Mat e = Mat::unit_vector(f, p.dim, k);
        Mat sum(f, p.dim, 1);
        for (std::size_t i = 0; i < db.elements.size(); ++i)
            sum += p.act(a, db.functionals[i] * e) * db.elements[i];
        if (sum != e)
            return false;
        for (std::size_t i = 0; i < db.functionals.size(); ++i)
            for (std::size_t g = 0; g < a.dim(); ++g)
                if (db.functionals[i] * p.action[g] != a.left_mul(g) * db.functionals[i])
                    return false;
    }
    return true;
}

} // namespace hopfwb
