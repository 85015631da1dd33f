#include "hopfwb/bialgebroid.hpp"

#include <mutex>
#include <optional>

namespace hopfwb {

struct Bialgebroid::Cache {
    std::mutex mu;
    std::vector<Mat> left_s;
    std::vector<Mat> left_t;
    std::optional<Bimodule> hbim;
    std::optional<TensorProduct> hh;
};

Bialgebroid::Bialgebroid(std::string name, Algebra r, Algebra h, Mat s, Mat t, Mat delta, Mat eps)
    : name_(std::move(name)), r_(std::move(r)), h_(std::move(h)), s_(std::move(s)), t_(std::move(t)),
      delta_(std::move(delta)), eps_(std::move(eps)), cache_(std::make_shared<Cache>())
{
    const std::size_t n = h_.dim(), m = r_.dim();
    if (!(r_.field() == h_.field()))
        throw AlgebraError("base and total algebra over different fields");
    if (s_.rows() != n || s_.cols() != m || t_.rows() != n || t_.cols() != m)
        throw AlgebraError("source/target maps must be dim H x dim R");
    if (delta_.rows() != n * n || delta_.cols() != n)
        throw AlgebraError("comultiplication must be dim H^2 x dim H");
    if (eps_.rows() != m || eps_.cols() != n)
        throw AlgebraError("counit must be dim R x dim H");
    for (std::size_t a = 0; a < m; ++a) {
        cache_->left_s.push_back(h_.left_mul_by(s_.col(a)));
        cache_->left_t.push_back(h_.left_mul_by(t_.col(a)));
    }
}

const Mat& Bialgebroid::left_s(std::size_t a) const { return cache_->left_s[a]; }
const Mat& Bialgebroid::left_t(std::size_t a) const { return cache_->left_t[a]; }

const Bimodule& Bialgebroid::h_bimodule() const
{
    std::lock_guard lock(cache_->mu);
    if (!cache_->hbim)
        cache_->hbim = Bimodule{dim_H(), cache_->left_s, cache_->left_t};
    return *cache_->hbim;
}

const TensorProduct& Bialgebroid::hh() const
{
    const Bimodule& hb = h_bimodule();
    std::lock_guard lock(cache_->mu);
    if (!cache_->hh)
        cache_->hh = tensor_over_R(r_, hb, hb);
    return *cache_->hh;
}

Bialgebroid Bialgebroid::with_name(std::string name) const
{
    Bialgebroid copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

namespace {

// First column where a and b differ, or npos.
std::size_t mismatch(const Mat& a, const Mat& b)
{
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != b(r, c))
                return c;
    return std::string::npos;
}

constexpr std::size_t none = std::string::npos;

CheckReport leaf(std::string id, std::size_t bad, nlohmann::json witness)
{
    if (bad == none)
        return CheckReport::pass(std::move(id));
    return CheckReport::fail(std::move(id), std::move(witness));
}

Mat apply2(const Mat& f, const Mat& g, const Mat& v)
{
    std::vector<Mat> fs{f, g};
    return kron_apply(fs, v);
}

} // namespace

CheckReport check_bialgebroid(const Bialgebroid& b)
{
    auto report = CheckReport::group("bialgebroid");
    const Algebra& R = b.R();
    const Algebra& H = b.H();
    const Field& f = b.field();
    const std::size_t n = H.dim(), m = R.dim();
    const Mat idH = Mat::identity(f, n);
    const Mat& delta = b.delta();
    const Mat& eps = b.eps();

    auto rbase = check_algebra(R);
    rbase.id = "base_algebra";
    auto htot = check_algebra(H);
    htot.id = "total_algebra";
    report.add(rbase);
    report.add(htot);
    if (rbase.failed() || htot.failed())
        return report;

    report.add(check_algebra_map(R, H, AlgebraMap{b.s()}, "source_algebra_map"));
    report.add(check_algebra_map(opposite(R), H, AlgebraMap{b.t()}, "target_algebra_map"));

    {
        std::size_t bad = none;
        nlohmann::json w;
        for (std::size_t a = 0; a < m && bad == none; ++a)
            for (std::size_t c = 0; c < m && bad == none; ++c)
                if (b.left_s(a) * b.left_t(c) != b.left_t(c) * b.left_s(a)) {
                    bad = a;
                    w = {{"a", a}, {"b", c}};
                }
        report.add(leaf("source_target_commute", bad, w));
    }

    const TensorProduct& hh = b.hh();
    const Mat pdelta = hh.proj() * delta;

    {
        std::size_t bad = none;
        nlohmann::json w;
        for (std::size_t a = 0; a < m && bad == none; ++a)
            for (std::size_t c = 0; c < m && bad == none; ++c) {
                Mat lhs = pdelta * (b.left_s(a) * b.left_t(c));
                Mat rhs = hh.proj() * apply2(b.left_s(a), b.left_t(c), delta);
                std::size_t col = mismatch(lhs, rhs);
                if (col != none) {
                    bad = col;
                    w = {{"a", a}, {"b", c}, {"h", col}};
                }
            }
        report.add(leaf("comultiplication_bilinear", bad, w));
    }

    {
        std::size_t bad = none;
        nlohmann::json w;
        for (std::size_t a = 0; a < m && bad == none; ++a) {
            Mat lhs = hh.proj() * apply2(H.right_mul_by(b.t_of(a)), idH, delta);
            Mat rhs = hh.proj() * apply2(idH, H.right_mul_by(b.s_of(a)), delta);
            std::size_t col = mismatch(lhs, rhs);
            if (col != none) {
                bad = col;
                w = {{"h", col}, {"a", a}};
            }
        }
        report.add(leaf("takeuchi_centrality", bad, w));
    }

    {
        TensorProduct hhh = tensor_over_R(R, hh.result, b.h_bimodule());
        std::vector<Mat> to_quot{hh.proj(), idH};
        auto project3 = [&](const Mat& amb) { return hhh.proj() * kron_apply(to_quot, amb); };
        Mat lhs = project3(apply2(delta, idH, delta));
        Mat rhs = project3(apply2(idH, delta, delta));
        std::size_t col = mismatch(lhs, rhs);
        report.add(leaf("coassociativity", col, {{"h", col}}));
    }

    {
        Mat lhs(f, hh.dim(), n * n);
        Mat rhs(f, hh.dim(), n * n);
        std::size_t bad = none;
        nlohmann::json w;
        for (std::size_t g = 0; g < n && bad == none; ++g) {
            Mat prod(f, n * n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar& c = delta(i * n + j, g);
                    if (sgn(c) != 0)
                        prod += scale(apply2(H.left_mul(i), H.left_mul(j), delta), c);
                }
            Mat l = hh.proj() * prod;
            Mat r = pdelta * H.left_mul(g);
            std::size_t col = mismatch(l, r);
            if (col != none) {
                bad = col;
                w = {{"g", g}, {"h", col}};
            }
        }
        report.add(leaf("comultiplication_multiplicative", bad, w));
        Mat one = hh.proj() * kron(H.unit(), H.unit());
        report.add(CheckReport::check("comultiplication_unital", pdelta * H.unit() == one));
    }

    report.add(CheckReport::check("counit_unital", eps * H.unit() == R.unit()));
    {
        std::size_t bad = none;
        nlohmann::json w;
        for (std::size_t a = 0; a < m && bad == none; ++a)
            for (std::size_t c = 0; c < m && bad == none; ++c) {
                Mat lhs = eps * b.left_s(a) * b.left_t(c);
                Mat rhs = R.left_mul(a) * R.right_mul(c) * eps;
                std::size_t col = mismatch(lhs, rhs);
                if (col != none) {
                    bad = col;
                    w = {{"a", a}, {"b", c}, {"h", col}};
                }
            }
        report.add(leaf("counit_bilinear", bad, w));
    }

    {
        Mat cl = H.mul() * kron(b.s() * eps, idH);
        Mat cr = H.mul() * kron(b.t() * eps, idH) * flip_matrix(f, n, n);
        report.add(CheckReport::check("counit_maps_descend", hh.pres.kills_relations(cl) && hh.pres.kills_relations(cr)));
        Mat lifted = hh.sec() * pdelta;
        std::size_t l = mismatch(cl * lifted, idH);
        std::size_t r = mismatch(cr * lifted, idH);
        report.add(leaf("counit_left", l, {{"h", l}}));
        report.add(leaf("counit_right", r, {{"h", r}}));
    }

    {
        Mat e_gh = eps * H.mul();
        Mat e_gs = eps * H.mul() * kron(idH, b.s() * eps);
        Mat e_gt = eps * H.mul() * kron(idH, b.t() * eps);
        std::size_t s_bad = mismatch(e_gs, e_gh);
        std::size_t t_bad = mismatch(e_gt, e_gh);
        report.add(leaf("counit_source_multiplicative", s_bad, {{"g", s_bad / n}, {"h", s_bad % n}}));
        report.add(leaf("counit_target_multiplicative", t_bad, {{"g", t_bad / n}, {"h", t_bad % n}}));
    }
    return report;
}

Bimodule restrict(const Bialgebroid& b, const HModule& m)
{
    Bimodule out;
    out.dim = m.dim;
    for (std::size_t a = 0; a < b.dim_R(); ++a) {
        out.left.push_back(m.act(b.H(), b.s_of(a)));
        out.right.push_back(m.act(b.H(), b.t_of(a)));
    }
    return out;
}

namespace {

using SparseCol = std::vector<std::pair<std::size_t, Scalar>>;

std::vector<SparseCol> sparse_cols(const Mat& a)
{
    std::vector<SparseCol> cols(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0)
                cols[c].emplace_back(r, a(r, c));
    return cols;
}

} // namespace

HTensor module_tensor(const Bialgebroid& b, const HModule& m, const HModule& n)
{
    const Field& f = b.field();
    const std::size_t dh = b.dim_H();
    HTensor out;
    out.carrier = tensor_over_R(b.R(), restrict(b, m), restrict(b, n));
    const std::size_t q = out.carrier.dim();
    const std::size_t ambient = m.dim * n.dim;
    // Everything here is very sparse, so the diagonal action is applied to
    // sparse columns of sec and of the relations, then projected.
    std::vector<SparseCol> probe = sparse_cols(out.carrier.sec());
    for (auto& col : sparse_cols(out.carrier.pres.relation_basis()))
        probe.push_back(std::move(col));
    std::vector<SparseCol> proj = sparse_cols(out.carrier.proj());
    std::vector<std::vector<SparseCol>> left(dh);
    for (std::size_t i = 0; i < dh; ++i)
        left[i] = sparse_cols(m.action[i]);

    std::vector<Scalar> amb(ambient);
    std::vector<char> touched(ambient, 0);
    std::vector<std::size_t> touched_list;
    Scalar tmp;
    out.module.dim = q;
    for (std::size_t h = 0; h < dh; ++h) {
        std::vector<std::pair<std::size_t, std::vector<SparseCol>>> terms;
        for (std::size_t i = 0; i < dh; ++i) {
            Mat second(f, n.dim, n.dim);
            bool any = false;
            for (std::size_t j = 0; j < dh; ++j) {
                const Scalar& c = b.delta()(i * dh + j, h);
                if (sgn(c) != 0) {
                    second += scale(n.action[j], c);
                    any = true;
                }
            }
            if (any)
                terms.emplace_back(i, sparse_cols(second));
        }
        Mat image(f, q, probe.size());
        for (std::size_t k = 0; k < probe.size(); ++k) {
            for (const auto& [idx, coef] : probe[k]) {
                const std::size_t x = idx / n.dim, y = idx % n.dim;
                for (const auto& [i, second] : terms)
                    for (const auto& [xr, a] : left[i][x]) {
                        tmp = f.mul(coef, a);
                        for (const auto& [yr, bv] : second[y]) {
                            const std::size_t at = xr * n.dim + yr;
                            f.add_mul_to(amb[at], tmp, bv);
                            if (!touched[at]) {
                                touched[at] = 1;
                                touched_list.push_back(at);
                            }
                        }
                    }
            }
            for (std::size_t at : touched_list) {
                if (sgn(amb[at]) != 0)
                    for (const auto& [r, pv] : proj[at])
                        f.add_mul_to(image(r, k), amb[at], pv);
                amb[at] = 0;
                touched[at] = 0;
            }
            touched_list.clear();
        }
        if (!image.cols_range(q, probe.size() - q).is_zero())
            throw IllDefinedAction("diagonal action of basis element " + std::to_string(h) + " does not descend to the tensor product over R");
        out.module.action.push_back(image.cols_range(0, q));
    }
    return out;
}

HModule unit_module(const Bialgebroid& b)
{
    HModule u;
    u.dim = b.dim_R();
    for (std::size_t h = 0; h < b.dim_H(); ++h)
        u.action.push_back(b.eps() * b.H().left_mul(h) * b.s());
    return u;
}

HModule regular_module(const Bialgebroid& b)
{
    return regular_module(b.H());
}

Bialgebroid coopposite(const Bialgebroid& b)
{
    const std::size_t n = b.dim_H();
    std::string name = b.name();
    const std::string suffix = "^cop";
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
        name.resize(name.size() - suffix.size());
    else
        name += suffix;
    return Bialgebroid(name, opposite(b.R()), b.H(), b.t(), b.s(), flip_matrix(b.field(), n, n) * b.delta(), b.eps());
}

Subspace h_linear_maps(const Bialgebroid& b, const HModule& x, const HModule& y)
{
    std::vector<Mat> ax, ay;
    for (auto g : b.H().generators()) {
        ax.push_back(x.action[g]);
        ay.push_back(y.action[g]);
    }
    if (ax.empty())
        return kernel(Mat(b.field(), 0, x.dim * y.dim));
    return intertwiners(x.dim, y.dim, ax, ay);
}

bool is_h_linear(const Bialgebroid& b, const HModule& x, const HModule& y, const Mat& f)
{
    for (auto g : b.H().generators())
        if (f * x.action[g] != y.action[g] * f)
            return false;
    return true;
}

CheckReport check_monoidal(const Bialgebroid& b, const HModule& m, const HModule& n, const HModule& p)
{
    auto report = CheckReport::group("monoidal");
    const Algebra& R = b.R();
    HModule unit = unit_module(b);
    report.add(CheckReport::check("unit_restricts_to_base", restrict(b, unit) == regular_bimodule(R)));

    HTensor um = module_tensor(b, unit, m);
    HTensor mu = module_tensor(b, m, unit);
    Mat l = left_unitor(R, restrict(b, m), um.carrier);
    Mat r = right_unitor(R, restrict(b, m), mu.carrier);
    report.add(CheckReport::check("left_unitor", is_h_linear(b, um.module, m, l) && l.rows() == l.cols() && rank(l) == m.dim));
    report.add(CheckReport::check("right_unitor", is_h_linear(b, mu.module, m, r) && r.rows() == r.cols() && rank(r) == m.dim));

    HTensor mn = module_tensor(b, m, n);
    HTensor mn_p = module_tensor(b, mn.module, p);
    HTensor np = module_tensor(b, n, p);
    HTensor m_np = module_tensor(b, m, np.module);
    Mat a = associator(mn.carrier, mn_p.carrier, np.carrier, m_np.carrier);
    bool iso = a.rows() == a.cols() && rank(a) == a.rows();
    report.add(CheckReport::check("associator", iso && is_h_linear(b, mn_p.module, m_np.module, a), {{"dim", a.rows()}}));
    report.add(CheckReport::check("restriction_strict", restrict(b, mn.module) == mn.carrier.result &&
                                                            restrict(b, mn_p.module) == mn_p.carrier.result));
    return report;
}

} // namespace hopfwb
